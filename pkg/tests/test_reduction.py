"""Weak head reduction."""

import pytest
from hypothesis import given

from lfkit.errors import FuelExhaustedError
from lfkit.reduction import Fuel, whnf, whr_step
from lfkit.syntax import App, Const, FamConst, Lam, Var, alpha_equal

from test_syntax import objects

A = FamConst("a")


def test_beta_step():
    m = App(Lam("x", A, Var("x")), Const("c"))
    assert whr_step(m) == Const("c")


def test_congruence_then_beta():
    # ((\x. \y. x) c) d steps inside the function position first
    inner = App(Lam("x", A, Lam("y", A, Var("x"))), Const("c"))
    m = App(inner, Const("d"))
    stepped = whr_step(m)
    assert alpha_equal(stepped, App(Lam("y", A, Const("c")), Const("d")))
    assert whr_step(stepped) == Const("c")


def test_variable_head_is_normal():
    assert whr_step(App(Var("x"), Const("c"))) is None
    assert whr_step(Var("x")) is None
    assert whr_step(Const("c")) is None
    assert whr_step(Lam("x", A, App(Lam("y", A, Var("y")), Var("x")))) is None


def test_whnf_already_normal():
    assert whnf(Const("c")) == Const("c")


def test_whnf_iterates_through_the_head():
    m = App(Lam("x", A, Var("x")), App(Lam("y", A, Var("y")), Const("c")))
    assert whnf(m) == Const("c")


def test_whnf_fuel_exhausts_on_self_application():
    omega = Lam("x", A, App(Var("x"), Var("x")))
    with pytest.raises(FuelExhaustedError):
        whnf(App(omega, omega), 100)


def test_fuel_must_be_positive():
    with pytest.raises(ValueError):
        Fuel(0)


def _beta_applicable(m):
    return isinstance(m, App) and isinstance(m.fun, Lam)


def _congruence_applicable(m):
    return isinstance(m, App) and not isinstance(m.fun, Lam) and whr_step(m.fun) is not None


@given(objects)
def test_step_rule_dispatch_is_exclusive(m):
    # at most one rule applies, so the step function is deterministic
    assert not (_beta_applicable(m) and _congruence_applicable(m))
    if not _beta_applicable(m) and not _congruence_applicable(m):
        assert whr_step(m) is None
    else:
        assert whr_step(m) is not None


@given(objects)
def test_whnf_result_is_normal(m):
    try:
        r = whnf(m, 500)
    except FuelExhaustedError:
        return
    assert whr_step(r) is None


def test_fuel_is_shared_across_calls():
    fuel = Fuel(3)
    m = App(Lam("x", A, Var("x")), Const("c"))
    whnf(m, fuel)
    whnf(m, fuel)
    whnf(m, fuel)
    with pytest.raises(FuelExhaustedError):
        whnf(m, fuel)
