import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from diffschub import product
from diffschub.errors import CacheIOError, ConflictError, VersionMismatch
from diffschub.exact import FormalSum
from diffschub.oracle import monk_rule, schur_schubert_product
from diffschub.perm import IDENTITY, PermutationZ, grass_encode, parse_perm, shift_tau, window_permutations
from diffschub.young import Partition, partitions, partitions_up_to

P = Partition


def fs(*pairs):
    return FormalSum((parse_perm(k), c) for k, c in pairs)


def test_examples():
    assert product.schur_times_schubert(P((1,)), IDENTITY) == fs(("1,0@0", 1))
    assert product.schur_times_schubert(P(()), parse_perm("2,1")) == fs(("2,1", 1))
    # worked example: s_1 times S of a 2-shift of 0,2,3,1,4
    w = shift_tau(parse_perm("0,2,3,1,4@0"), -2)
    want = FormalSum({shift_tau(parse_perm("1,2,3,0,4@0"), -2): 1, shift_tau(parse_perm("0,2,4,1,3@0"), -2): 1})
    assert product.schur_times_schubert(P((1,)), w) == want
    # Schur times Schur stays Grassmannian and reproduces Littlewood-Richardson
    got = product.schur_times_schubert(P((1,)), grass_encode((0, P((1,)))))
    assert got == FormalSum({grass_encode((0, P((2,)))): 1, grass_encode((0, P((1, 1)))): 1})


def test_monk_back_stable():
    s1 = parse_perm("2,1")
    assert monk_rule(1, s1) == fs(("3,1,2", 1), ("1,2,0@0", 1))
    for w in window_permutations(4, -1, max_length=4):
        assert product.schur_times_schubert(P((1,)), w) == monk_rule(0, w)


def test_against_oracle_small():
    for w in window_permutations(3):
        for lam in partitions_up_to(3):
            assert product.schur_times_schubert(lam, w) == schur_schubert_product(lam, w)


@settings(max_examples=20, deadline=None)
@given(st.permutations(list(range(-1, 4))), st.sampled_from(partitions_up_to(3)))
def test_term_invariants(word, lam):
    w = PermutationZ(word, -1)
    got = product.schur_times_schubert(lam, w)
    assert got.is_nonnegative() and got.is_integral()
    degree = lam.size + w.length
    assert all(v.length == degree for v in got.raw())
    allowed = w.descents() | {0}
    assert all(v.descents() <= allowed for v in got.raw())


def test_verify_accepts_and_detects_mutation():
    rng = random.Random(5)
    w = parse_perm("2,4,1,3")
    lam = P((2, 1))
    got = product.schur_times_schubert(lam, w)
    rep = product.verify_product(lam, w, got)
    assert rep.passed and set(rep.checks) == {"divided_differences", "leibniz", "reduced_words", "positivity"}
    terms = list(got.raw())
    v = rng.choice(terms)
    bumped = got + FormalSum({v: 1})
    assert not product.verify_product(lam, w, bumped).passed
    dropped = got - FormalSum({v: got.coeff(v)})
    assert not product.verify_product(lam, w, dropped).passed
    stray = got + FormalSum({parse_perm("2,1"): 1})
    rep = product.verify_product(lam, w, stray)
    assert not rep.checks["positivity"]
    assert any("FAIL" in line for line in rep.lines())
    assert json.dumps(rep.to_json_obj())


def test_cache_roundtrip(tmp_path):
    cache = product.ProductCache()
    product.schur_times_schubert(P((2,)), parse_perm("1,3,2"), cache)
    assert len(cache) > 0
    path = tmp_path / "c.json"
    product.cache_save(path, cache)
    again = product.cache_load(path, product.ProductCache())
    assert again == cache
    # cached values are served as-is
    assert product.schur_times_schubert(P((2,)), parse_perm("1,3,2"), again) == \
        product.schur_times_schubert(P((2,)), parse_perm("1,3,2"))


def test_cache_merge_and_conflict():
    a, b = product.ProductCache(), product.ProductCache()
    product.schur_times_schubert(P((1,)), parse_perm("2,1"), a)
    product.schur_times_schubert(P((1, 1)), parse_perm("2,1"), b)
    before = len(a)
    added = a.merge(b)
    assert added == len(a) - before and added > 0
    assert a.merge(b) == 0
    c = product.ProductCache()
    c.put(P((1,)), IDENTITY, fs(("2,1", 1)))
    with pytest.raises(ConflictError):
        a.merge(c)


def test_cache_errors(tmp_path):
    with pytest.raises(CacheIOError):
        product.cache_load(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(CacheIOError):
        product.cache_load(bad)
    old = tmp_path / "old.json"
    obj = product.ProductCache().to_json_obj()
    obj["version"] = 0
    old.write_text(json.dumps(obj))
    with pytest.raises(VersionMismatch):
        product.cache_load(old)


def test_schur_as_schubert():
    for n in range(5):
        for lam in partitions(n):
            w = product.schur_as_schubert(lam)
            assert w == grass_encode((0, lam)) and w.length == n
