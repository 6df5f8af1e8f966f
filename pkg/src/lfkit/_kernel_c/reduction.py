"""Weak head reduction: a single-step partial function and a fuel-bounded
iterated reducer."""

from .terms import App, Lam, subst_single
from lfkit.errors import FuelExhaustedError

DEFAULT_FUEL = 10**6


class Fuel:
    """A mutable step budget shared across one query.

    Only reduction steps consume fuel; the structural parts of the equality
    and typing algorithms terminate on their own.
    """

    __slots__ = ("steps", "budget")

    def __init__(self, steps=DEFAULT_FUEL):
        if steps <= 0:
            raise ValueError("fuel must be positive")
        self.steps = steps
        self.budget = steps

    def spend(self):
        self.steps -= 1
        if self.steps < 0:
            raise FuelExhaustedError(self.budget)


def as_fuel(fuel):
    if fuel is None:
        return Fuel()
    if isinstance(fuel, Fuel):
        return fuel
    return Fuel(fuel)


def whr_step(m):
    """The unique weak head reduct of ``m``, or None if the head is not
    reducible.  At most one rule ever applies: a beta step when the head of
    an application is an abstraction, otherwise a step inside the function
    position."""
    if isinstance(m, App):
        f = m.fun
        if isinstance(f, Lam):
            return subst_single(f.body, f.var, m.arg)
        f2 = whr_step(f)
        if f2 is not None:
            return App(f2, m.arg)
    return None


def whnf(m, fuel=None):
    """Iterate ``whr_step`` to weak head-normal form.

    Well-typed terms always get there; the budget guards against ill-typed
    input such as the classic self-application loop.
    """
    fuel = as_fuel(fuel)
    while True:
        m2 = whr_step(m)
        if m2 is None:
            return m
        fuel.spend()
        m = m2
