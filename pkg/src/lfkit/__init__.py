"""lfkit: a logical-framework kernel.

A library and CLI for a dependently typed lambda calculus with three
levels (objects, type families, kinds): signature validation, bottom-up
type synthesis, a type-directed decision procedure for definitional
equality driven by dependency-erased simple types, extraction of
quasi-canonical forms, and a worked first-order-logic encoding.

The hot kernel (substitution, reduction, equality) optionally runs as a
Cython-compiled extension; ``lfkit.BACKEND`` reports which one is active.
"""

from lfkit._backend import BACKEND
from lfkit.errors import (
    CheckError,
    Diagnostic,
    FuelExhaustedError,
    LfError,
    NotEqualError,
    ParseError,
    ScopeError,
    UnboundVariableError,
)
from lfkit.syntax import (
    TYPE,
    App,
    Const,
    Context,
    FamApp,
    FamConst,
    Lam,
    Pi,
    PiK,
    Signature,
    Substitution,
    TypeKind,
    Var,
    alpha_equal,
    free_vars,
    identity_subst,
    subst_simul,
    subst_single,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "__version__",
    "Var", "Const", "Lam", "App",
    "FamConst", "FamApp", "Pi", "TypeKind", "PiK", "TYPE",
    "Signature", "Context", "Substitution",
    "alpha_equal", "free_vars", "subst_single", "subst_simul", "identity_subst",
    "LfError", "CheckError", "Diagnostic", "NotEqualError",
    "ParseError", "ScopeError", "FuelExhaustedError", "UnboundVariableError",
]
