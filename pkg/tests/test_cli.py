import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diffschub import cli
from diffschub.errors import ParseError
from diffschub.opexpr import (
    Commutator, Nabla, Product, Rho, Sum, Xi, XiLambda, evaluate, parse_element, parse_op, print_op,
)
from diffschub.exact import FormalSum
from diffschub.young import Partition

P = Partition


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply_nabla_example(capsys):
    code, out, _ = run(capsys, "apply", "--basis", "partition", "--op", "nabla", "--elem", "1*4,3,1")
    assert code == 0
    assert out.splitlines() == ["-2 * 4,3", "1 * 4,2,1", "3 * 3,3,1"]


def test_lr_verify_example(capsys):
    code, out, _ = run(capsys, "lr", "2,1", "2,1", "--verify")
    assert code == 0 and "3,2,1: 2" in out.splitlines()


def test_identity_example(capsys):
    for which in ("jt-h", "jt-e", "giambelli"):
        code, out, _ = run(capsys, "identity", which, "3,2")
        assert (code, out) == (0, "pass\n")


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "apply", "--op", "xi(", "--elem", "1")
    assert code == 2 and "offset 3" in err
    code, _, err = run(capsys, "apply", "--op", "xi", "--elem", "1*2,3")
    assert code == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["lr", "2,x", "1"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cli.main([])
    assert e.value.code == 2


def test_verify_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli.oracle, "lr_count", lambda lam, mu, nu: 0)
    code, out, _ = run(capsys, "lr", "1", "1", "--verify")
    assert code == 1 and "mismatch:" in out
    code, out, _ = run(capsys, "--json", "lr", "1", "1", "--verify")
    obj = json.loads(out)
    assert code == 1 and not obj["verified"] and {d["key"] for d in obj["diff"]} == {"2", "1,1"}


def test_mult_ss_verify_and_cache(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cache.json"
    monkeypatch.setenv(cli.CACHE_ENV, str(path))
    code, out, _ = run(capsys, "mult-ss", "--partition", "1", "--perm", "2,1", "--verify")
    assert code == 0
    assert out.splitlines()[:2] == ["1 * 1,2,0@0", "1 * 2,0,1@0"]
    assert "check oracle: pass" in out
    assert path.exists() and json.loads(path.read_text())["entries"]
    code, again, _ = run(capsys, "mult-ss", "--partition", "1", "--perm", "2,1", "--verify")
    assert (code, again) == (0, out)


def test_mult_ss_negative_window(capsys):
    code, out, _ = run(capsys, "mult-ss", "--partition", "1", "--perm=0,-1@-1")
    assert code == 0 and out.strip()


def test_stanley_json(capsys):
    code, out, _ = run(capsys, "stanley", "--perm", "3,2,1", "--verify", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["verified"]
    assert obj["expansion"]["terms"] == [{"key": "2,1", "coeff": "1"}]


def test_apply_permutation_basis(capsys):
    code, out, _ = run(capsys, "apply", "--basis", "permutation", "--op", "xi", "--elem", "3,1,2")
    assert (code, out) == (0, "1 * 2,1@1\n")
    code, out, _ = run(capsys, "apply", "--basis", "permutation", "--op", "xi", "--elem", "1,0@0")
    assert (code, out) == (0, "1 * id\n")


def test_output_is_deterministic(capsys):
    argv = ("apply", "--op", "[xi,nabla] + 1/2 * xiL(2)", "--elem", "2*3,2,1 + 4,1")
    first = run(capsys, *argv)
    assert first == run(capsys, *argv) and first[0] == 0


def test_suite_subset(capsys):
    code, out, _ = run(capsys, "suite", "--only", "1", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "suite: PASS" and len(lines) == 3


def test_bench_csv(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, out, _ = run(capsys, "bench", "lr", "--max-size", "3", "--csv", str(path))
    assert code == 0 and "growth:" in out
    assert path.read_text().splitlines()[0].startswith("size")


# -- expression grammar -------------------------------------------------------


def test_parse_examples():
    assert parse_op("[xi,nabla]") == Commutator(Xi(), Nabla())
    tree = parse_op("1/2 * (xi xi + rho(2))")
    assert isinstance(tree, Product) and tree.coeff == Fraction(1, 2)
    assert parse_op("-xi + nabla") == Sum(((-1, Xi()), (1, Nabla())))
    assert parse_op(" xi  nabla ") == parse_op("xi nabla")
    with pytest.raises(ParseError) as e:
        parse_op("xi(")
    assert e.value.position == 3


def test_commutator_is_rho2():
    x = parse_element("4,3,1 + 2*3,3")
    assert evaluate(parse_op("[xi,nabla]"), x) == evaluate(parse_op("rho(2)"), x)
    # rho(3) = [rho(2), nabla] / 2
    assert evaluate(parse_op("1/2 * [rho(2), nabla]"), x) == evaluate(parse_op("rho(3)"), x)
    # xi^(2) = (xi^2 + rho(2)) / 2 on a single diagram
    assert evaluate(parse_op("1/2 * (xi xi + rho(2))"), x) == evaluate(parse_op("xiL(2)"), x)


def test_rightmost_applies_first():
    x = parse_element("2,1")
    assert evaluate(parse_op("xi nabla"), x) == evaluate(Xi(), evaluate(Nabla(), x))


def _atoms():
    return st.one_of(
        st.just(Xi()), st.just(Nabla()), st.integers(1, 5).map(Rho),
        st.sampled_from([P((1,)), P((2, 1)), P((3,))]).map(XiLambda),
    )


def _exprs():
    def extend(children):
        prods = st.tuples(
            st.one_of(st.none(), st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)),
            st.lists(children, min_size=1, max_size=3),
        ).map(lambda t: Product(t[0], tuple(t[1])))
        sums = st.lists(st.tuples(st.sampled_from([1, -1]), children), min_size=2, max_size=3).map(
            lambda ts: Sum(tuple(ts)))
        comms = st.tuples(children, children).map(lambda t: Commutator(*t))
        return st.one_of(prods, sums, comms)
    return st.recursive(_atoms(), extend, max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(_exprs())
def test_print_parse_roundtrip(e):
    tree = parse_op(print_op(e))
    assert parse_op(print_op(tree)) == tree
    x = FormalSum({P((3, 1)): 1, P((2, 2)): 2})
    assert evaluate(tree, x) == evaluate(e, x)
