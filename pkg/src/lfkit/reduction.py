"""Weak head reduction."""

from lfkit._backend import reduction as _r

DEFAULT_FUEL = _r.DEFAULT_FUEL
Fuel = _r.Fuel
as_fuel = _r.as_fuel
whr_step = _r.whr_step
whnf = _r.whnf

__all__ = ["DEFAULT_FUEL", "Fuel", "as_fuel", "whr_step", "whnf"]
