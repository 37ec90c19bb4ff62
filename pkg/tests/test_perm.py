import pickle

import pytest
from hypothesis import given, strategies as st

from diffschub.errors import MalformedWord, NotGrassmannian
from diffschub.perm import (
    IDENTITY, GrassCode, PermutationZ, count_reduced_words, from_lehmer_code, grass_decode,
    grass_encode, is_grassmannian, lehmer_code, left_s, parse_perm, reduced_words, right_s,
    shift_tau, simple, window_permutations,
)
from diffschub.young import Partition, partitions_up_to


@st.composite
def perms(draw, max_width=6):
    width = draw(st.integers(0, max_width))
    start = draw(st.integers(-3, 3))
    word = draw(st.permutations(list(range(start, start + width))))
    return PermutationZ(word, start)


def test_parse_and_print():
    w = parse_perm("3,2,7,1,5,4,6")
    assert w.length == 8 and str(w) == "3,2,7,1,5,4,6@1"
    assert parse_perm("id") == IDENTITY == parse_perm("") == parse_perm("1,2,3")
    assert str(IDENTITY) == "id"
    # fixed ends are trimmed
    assert parse_perm("1,3,2,4") == parse_perm("3,2@2")
    with pytest.raises(MalformedWord):
        parse_perm("1,1,2")
    with pytest.raises(MalformedWord):
        parse_perm("2,3@0")
    with pytest.raises(MalformedWord):
        parse_perm("a,b")


def test_reduced_word_count_example():
    w = parse_perm("3,2,7,1,5,4,6")
    assert count_reduced_words(w) == 315
    assert len(reduced_words(w)) == 315
    assert reduced_words(parse_perm("3,2,1")) == [(1, 2, 1), (2, 1, 2)]


def test_composition_convention():
    s1, s2 = simple(1), simple(2)
    # (s1 s2)(i) = s1(s2(i))
    assert (s1 * s2).images(1, 3) == [2, 3, 1]
    w = parse_perm("3,1,2")
    assert right_s(1, w) == (parse_perm("1,3,2"), -1)  # swap positions
    assert left_s(1, w) == (parse_perm("3,2,1"), 1)  # swap values
    for h in reduced_words(parse_perm("2,4,1,3")):
        prod = IDENTITY
        for k in h:
            prod = prod * simple(k)
        assert prod == parse_perm("2,4,1,3")


@given(perms(), perms())
def test_group_laws(u, v):
    assert u * u.inverse() == IDENTITY
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * v).length <= u.length + v.length
    assert u.inverse().length == u.length


@given(perms())
def test_descent_moves(w):
    for d in w.descents():
        shorter, change = right_s(d, w)
        assert change == -1 and shorter.length == w.length - 1


@given(perms(), st.integers(-4, 4))
def test_shift(w, n):
    t = shift_tau(w, n)
    assert t.length == w.length
    assert {d + n for d in w.descents()} == t.descents()
    assert shift_tau(t, -n) == w
    assert all(t(i + n) == w(i) + n for i in range(-6, 8))


@given(perms())
def test_lehmer_roundtrip(w):
    code = lehmer_code(w)
    assert sum(code) == w.length
    if w.word:
        assert from_lehmer_code(code, w.start) == w


def test_grassmannian_codec():
    assert grass_decode(parse_perm("2,5,7,1,3,4,6")) == GrassCode(3, Partition((4, 3, 1)))
    assert str(grass_encode((0, Partition((1,))))) == "1,0@0"
    assert grass_decode(IDENTITY) == (0, Partition())
    with pytest.raises(NotGrassmannian):
        grass_decode(parse_perm("3,2,1"))
    for lam in partitions_up_to(7):
        for k in (-2, 0, 1, 4):
            w = grass_encode((k, lam))
            assert is_grassmannian(w)
            assert w.length == lam.size
            if lam:
                assert grass_decode(w) == (k, lam)


def test_window_enumeration():
    assert sum(1 for _ in window_permutations(4)) == 24
    assert all(w.length <= 2 for w in window_permutations(4, start=-1, max_length=2))
    assert sum(1 for _ in window_permutations(4, max_length=2)) == 1 + 3 + 5


def test_pickle_and_hash():
    w = parse_perm("0,2,-1,1@-1")
    assert pickle.loads(pickle.dumps(w)) == w
    assert len({w, parse_perm("0,2,-1,1@-1")}) == 1
    assert sorted([parse_perm("2,1"), parse_perm("0,-1@-1")])[0].start == -1
