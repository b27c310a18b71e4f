import pytest

import twogroups as tg


def test_make_group_and_arithmetic():
    g = tg.make_group("Q1", 4, 2)
    assert g.order == 64
    assert g.name == "Q1(4,2)"
    assert g.commutator(g.a, g.b) == g.c
    assert g.mul(g.a, g.inv(g.a)) == g.identity
    assert g.pow(g.a, 16) == g.identity
    assert g.element_order(g.a) == 16
    assert len(g.elements()) == 64
    assert g.normalize((16, 0, 0)) == tg.Elem(0, 0, 0)


def test_bad_parameters():
    with pytest.raises(ValueError, match="2r <= n"):
        tg.make_group("Q1", 1, 1)
    with pytest.raises(ValueError):
        tg.make_group("R3", 2, 1)
    with pytest.raises(ValueError):
        tg.make_group("Q9", 2, 1)


def test_structure():
    g = tg.make_group("Q1", 4, 2)
    z = tg.center(g)
    assert z.order == 4 and tg.is_cyclic(z)
    assert tg.frattini(g).order == 16
    assert tg.d(g) == 2
    assert g.c in tg.derived_subgroup(g)


def test_automorphisms():
    d8 = tg.make_group("Q1", 2, 1)
    alpha = tg.validate(d8, (3, 0, 0), (1, 1, 0))
    assert alpha is not None
    assert alpha.order() == 2
    assert alpha.fixes_frattini()
    assert not alpha.is_inner()
    assert alpha.is_inner_criterion() == alpha.is_inner()
    assert tg.validate(d8, (1, 0, 0), (1, 0, 0)) is None
    assert "relation" in tg.why_invalid(d8, (1, 0, 0), (1, 0, 0))
    assert "not-surjective" in tg.why_invalid(d8, (0, 0, 0), (0, 0, 0))
    invs = tg.enumerate_phi_fixing_involutions(d8)
    assert len(invs) == 5
    assert invs == tg.enumerate_phi_fixing_involutions(d8, mode="brute")
    rep = tg.star_condition(d8)
    assert rep["star"] is False and rep["inner"] == 3


def test_witness_and_constructions():
    r1 = tg.make_group("R3", 1)
    assert tg.applicable_cases(r1) == ["3i"]
    assert tg.check_witness("3i", r1)["passed"]
    d8 = tg.make_group("Q1", 2, 1)
    assert tg.phi_f(d8, (2, 0, 0), (0, 0, 0)) == tg.inner_from(d8.b, d8)
    assert tg.extend(d8, (1, 1, 0), (0, 0, 0)) is None
    assert len(tg.varphi_kernel(d8)) == 4


def test_sweep_and_info():
    report = tg.sweep(["Q1"], max_order=256, timing=False)
    assert report["summary"]["consistent"]
    for row in report["rows"]:
        assert row["star"] == (row["r"] >= 2)
    assert tg.sweep(["Q1"], 256, jobs=2, timing=False) == report
    assert tg.info(tg.make_group("Q1", 2, 1))["center_order"] == 2
    with pytest.raises(ValueError):
        tg.sweep([], 64)


def test_oracle():
    assert tg.oracle(max_order=64)["passed"]
