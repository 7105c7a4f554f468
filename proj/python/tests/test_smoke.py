"""Smoke tests for the wintgenpy extension module."""

import math

import wintgenpy as wg


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_expression_jets():
    f = wg.parse("sqrt(cos(2*v))")
    j = f.eval_jet(0.0, 0.0)
    approx(j.value, 1.0)
    approx(j.dv, 0.0)
    approx(j.dvv, -2.0)
    assert str(wg.parse("u*v + sin(v)")) == "u*v+sin(v)"

    try:
        wg.parse("cos(")
    except ValueError as e:
        assert "offset 4" in str(e)
    else:
        raise AssertionError("expected a parse error")

    try:
        wg.parse("sqrt(u)").eval(-1.0, 0.0)
    except ArithmeticError:
        pass
    else:
        raise AssertionError("expected a domain error")


def test_first_kind_point():
    patch = wg.family_patch("first-kind", 1.0, 0.0)
    assert patch.ambient_dim == 4
    rep = wg.evaluate_point(patch, 0.0, 0.0)
    approx(rep["K"], 2.0)
    approx(rep["KN"], 2.0)
    approx(rep["KN_signed"], 2.0)
    approx(rep["H2"], 4.0)
    approx(rep["defect"], 0.0)
    assert rep["kind"] == "first"
    assert "wintgen_ideal" in rep["flags"]
    assert "semiparallel" not in rep["flags"]


def test_sphere_grid():
    reports = wg.evaluate_grid(wg.unit_sphere(), 4, 4)
    assert len(reports) == 16
    for rep in reports:
        approx(rep["K"], 1.0)
        assert abs(rep["defect"]) < 1e-9
        assert "totally_umbilical" in rep["flags"]
        assert rep["KN_signed"] is None  # ambient dim 3


def test_profile_oracle():
    p = wg.profile_functions("sqrt(cos(2*v))", 0.0)
    approx(p["a"], 1.0)
    approx(p["b"], 3.0)
    closed = wg.closed_form_invariants("exp(0.1*v)", 0.7)
    approx(closed["K"], 0.0)
    approx(wg.ode_residual_first("sqrt(cos(2*v))", 0.0), 0.0)
    approx(wg.ode_residual_second("1/sqrt(cos(2*v))", 0.0), 0.0)


def test_patch_json_round_trip():
    patch = wg.family_patch("exponential", 1.0, 0.1)
    again = wg.patch_from_json(patch.to_json())
    assert again.ambient_dim == patch.ambient_dim
    a = wg.evaluate_point(patch, 0.3, 0.2)
    b = wg.evaluate_point(again, 0.3, 0.2)
    approx(a["K"], b["K"], 1e-15)
    assert "semiparallel" in a["flags"]


def test_verification_suite():
    suites = wg.run_suite("lemma41", seed=7, count=500)
    assert len(suites) == 1
    assert suites[0]["pass"]
    for check in suites[0]["checks"]:
        assert check["pass"], check


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
