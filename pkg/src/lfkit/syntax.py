"""Term syntax: objects, families, kinds, signatures, contexts, and
substitution.  Thin facade over the selected kernel backend."""

from lfkit._backend import terms as _t

Var = _t.Var
Const = _t.Const
Lam = _t.Lam
App = _t.App
FamConst = _t.FamConst
FamApp = _t.FamApp
Pi = _t.Pi
TypeKind = _t.TypeKind
PiK = _t.PiK
TYPE = _t.TYPE

Signature = _t.Signature
Context = _t.Context
Substitution = _t.Substitution

alpha_equal = _t.alpha_equal
free_vars = _t.free_vars
const_names = _t.const_names
subst_single = _t.subst_single
subst_simul = _t.subst_simul
identity_subst = _t.identity_subst
fresh = _t.fresh
level_of = _t.level_of

__all__ = [
    "Var", "Const", "Lam", "App",
    "FamConst", "FamApp", "Pi",
    "TypeKind", "PiK", "TYPE",
    "Signature", "Context", "Substitution",
    "alpha_equal", "free_vars", "const_names",
    "subst_single", "subst_simul", "identity_subst",
    "fresh", "level_of",
]
