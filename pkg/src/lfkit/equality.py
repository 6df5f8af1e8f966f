"""Algorithmic equality for objects, families, and kinds.

The judgments consult an ambient signature for the erased classifiers of
constants; any of a ``Signature``, a ``typecheck.CheckedSignature``, or a
prebuilt ``ErasedSignature`` is accepted.
"""

from lfkit._backend import equate as _e
from lfkit._backend import simple as _s
from lfkit.reduction import as_fuel

EqOutcome = _e.EqOutcome
Mismatch = _e.Mismatch
QAVar = _e.QAVar
QAConst = _e.QAConst
QAApp = _e.QAApp
QCAtom = _e.QCAtom
QCLam = _e.QCLam
qc_alpha_equal = _e.qc_alpha_equal


def _erased(sig):
    if isinstance(sig, _s.ErasedSignature):
        return sig
    erased = getattr(sig, "erased", None)
    if callable(erased):
        return erased()
    return _s.erase_signature(sig)


def obj_eq(sig, d, m, n, t, fuel=None):
    """Type-directed object equality at simple type ``t``."""
    return _e.obj_eq(_erased(sig), d, m, n, t, as_fuel(fuel))


def obj_eq_structural(sig, d, m, n, fuel=None):
    """Structural object equality; the outcome carries the synthesized
    simple type."""
    return _e.obj_eq_structural(_erased(sig), d, m, n, as_fuel(fuel))


def fam_eq(sig, d, a, b, k, fuel=None):
    """Kind-directed family equality at simple kind ``k``."""
    return _e.fam_eq(_erased(sig), d, a, b, k, as_fuel(fuel))


def fam_eq_structural(sig, d, a, b, fuel=None):
    """Structural family equality; the outcome carries the synthesized
    simple kind."""
    return _e.fam_eq_structural(_erased(sig), d, a, b, as_fuel(fuel))


def kind_eq(sig, d, k, l, fuel=None):
    """Algorithmic kind equality."""
    return _e.kind_eq(_erased(sig), d, k, l, as_fuel(fuel))


__all__ = [
    "EqOutcome", "Mismatch",
    "QAVar", "QAConst", "QAApp", "QCAtom", "QCLam", "qc_alpha_equal",
    "obj_eq", "obj_eq_structural", "fam_eq", "fam_eq_structural", "kind_eq",
]
