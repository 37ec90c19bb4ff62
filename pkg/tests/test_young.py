import pytest

from diffschub.young import (
    Box, Partition, addable_corners, border_strip, border_strips_addable, border_strips_removable,
    conjugate, contains, frobenius_coordinates, hook_shape, hook_syt_count, lex_compare,
    parse_partition, partitions, partitions_up_to, rectangle_complement, removable_corners,
)

P = Partition


def test_partition_invariants():
    assert P((3, 1, 0, 0)) == P((3, 1))
    with pytest.raises(ValueError):
        P((1, 2))
    assert str(P(())) == "0" and str(P((4, 3, 1))) == "4,3,1"
    assert parse_partition("0") == P(()) == parse_partition("")
    assert parse_partition("(4, 3, 1)") == P((4, 3, 1))
    assert Box(3, 1).content == -2


def test_removable_corners_example():
    got = removable_corners(P((4, 3, 1)))
    assert got == [(Box(1, 4), P((3, 3, 1))), (Box(2, 3), P((4, 2, 1))), (Box(3, 1), P((4, 3)))]
    assert removable_corners(P(())) == []
    assert removable_corners(P((1,))) == [(Box(1, 1), P(()))]


def test_addable_corners_examples():
    assert addable_corners(P(())) == [(Box(1, 1), P((1,)))]
    assert [b for b, _ in addable_corners(P((2, 1)))] == [Box(1, 3), Box(2, 2), Box(3, 1)]
    assert [b for b, _ in addable_corners(P((2, 2)))] == [Box(1, 3), Box(3, 1)]


def test_corner_reciprocity():
    for lam in partitions_up_to(8):
        assert len(addable_corners(lam)) == len(set(lam)) + 1
        for b, low in removable_corners(lam):
            assert (b, lam) in addable_corners(low)


def test_border_strip_examples():
    assert border_strips_removable(P((2,)), 2) == ((P(()), 1),)
    assert border_strips_removable(P((1, 1)), 2) == ((P(()), 2),)
    assert border_strips_removable(P((2, 1)), 2) == ()


def test_border_strips_are_valid():
    for lam in partitions_up_to(9):
        for k in range(1, lam.size + 1):
            found = border_strips_removable(lam, k)
            for mu, ht in found:
                s = border_strip(lam, mu)
                assert s.is_valid() and s.height == ht and len(s.boxes) == k
            # brute force: every mu of the right size whose skew shape is a strip
            brute = {mu for mu in partitions(lam.size - k) if contains(lam, mu) and border_strip(lam, mu).is_valid()}
            assert brute == {mu for mu, _ in found}


def test_addable_strips_match_removable():
    for lam in partitions_up_to(6):
        for k in range(1, 5):
            for nu, ht in border_strips_addable(lam, k):
                assert (lam, ht) in border_strips_removable(nu, k)


def test_hook_lengths():
    assert hook_syt_count(P((2, 1))) == 2
    assert hook_syt_count(P((2, 2))) == 2
    assert hook_syt_count(P((5,))) == 1 and hook_syt_count(P(())) == 1
    for lam in partitions_up_to(10):
        if lam:
            assert hook_syt_count(lam) == sum(hook_syt_count(low) for _, low in removable_corners(lam))


def test_conjugate_and_order():
    assert conjugate(P((4, 3, 1))) == P((3, 2, 2, 1))
    for lam in partitions_up_to(12):
        assert conjugate(conjugate(lam)) == lam
    assert lex_compare(P((3,)), P((2, 1))) == 1
    assert lex_compare(P((1, 1)), P((3,))) == -1
    assert contains(P((4, 3, 1)), P((2, 2)))
    assert not contains(P((2, 2)), P((3,)))


def test_partition_enumeration():
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(4) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]


def test_frobenius_and_complement():
    arms, legs = frobenius_coordinates(P((4, 3, 1)))
    assert arms == (3, 1) and legs == (2, 0)
    assert hook_shape(2, 1) == P((3, 1))
    assert rectangle_complement(P((2, 1)), 3, 3) == P((3, 2, 1))
    assert rectangle_complement(P(()), 2, 2) == P((2, 2))
