"""Type-directed equality over erased simple types.

The object judgment is directed by the simple type: at an arrow both sides
are applied to a shared fresh variable (extensionality), at a base type
both sides are reduced to weak head-normal form and compared structurally,
head first, arguments at the head's domain types.  Families are compared
under the same scheme directed by simple kinds, and kinds structurally.

The object judgments are instrumented: a successful comparison also yields
the common quasi-canonical form of the two terms, at no extra cost.
Failure is eager and carries the path from the root to the first mismatch.
"""

from dataclasses import dataclass

from .reduction import as_fuel, whnf
from .simple import TYPE_MINUS, Arrow, ArrowK, TypeMinus, erase_family
from .terms import (
    App,
    Const,
    FamApp,
    FamConst,
    Lam,
    Pi,
    TypeKind,
    Var,
    fresh,
    subst_single,
)

# ---------------------------------------------------------------------------
# quasi-canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QAVar:
    name: str


@dataclass(frozen=True)
class QAConst:
    name: str


@dataclass(frozen=True)
class QAApp:
    fun: object  # QuasiAtomic
    arg: object  # QuasiCanonical


@dataclass(frozen=True)
class QCAtom:
    atom: object  # QuasiAtomic


@dataclass(frozen=True)
class QCLam:
    var: str
    body: object  # QuasiCanonical


def qc_alpha_equal(q1, q2):
    """Alpha-insensitive comparison of quasi-canonical or quasi-atomic
    forms."""
    return _qc_alpha(q1, q2, {}, {}, 0)


def _qc_alpha(a, b, la, lb, depth):
    if type(a) is not type(b):
        return False
    if isinstance(a, QAVar):
        ia = la.get(a.name)
        ib = lb.get(b.name)
        if ia is None and ib is None:
            return a.name == b.name
        return ia == ib and ia is not None
    if isinstance(a, QAConst):
        return a.name == b.name
    if isinstance(a, QAApp):
        return _qc_alpha(a.fun, b.fun, la, lb, depth) and _qc_alpha(
            a.arg, b.arg, la, lb, depth
        )
    if isinstance(a, QCAtom):
        return _qc_alpha(a.atom, b.atom, la, lb, depth)
    if isinstance(a, QCLam):
        la2 = dict(la)
        la2[a.var] = depth
        lb2 = dict(lb)
        lb2[b.var] = depth
        return _qc_alpha(a.body, b.body, la2, lb2, depth + 1)
    raise TypeError("not a quasi-canonical form: %r" % (a,))


# ---------------------------------------------------------------------------
# outcomes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    """Where and why a comparison failed; the path records argument
    positions and binder descents from the root."""

    path: tuple
    reason: str

    def __str__(self):
        if not self.path:
            return self.reason
        return "%s (at %s)" % (self.reason, ".".join(self.path))


@dataclass(frozen=True)
class EqOutcome:
    """Result of one equality judgment.

    On success a structural judgment carries the computed simple classifier
    and the object judgments carry the extracted quasi-canonical (or
    quasi-atomic) form.  On failure only ``mismatch`` is populated.
    """

    ok: bool
    classifier: object = None
    mismatch: object = None
    canonical: object = None

    def __bool__(self):
        return self.ok


def _fail(path, reason):
    return EqOutcome(False, mismatch=Mismatch(tuple(path), reason))


def _describe(t):
    if isinstance(t, Var):
        return "variable %s" % t.name
    if isinstance(t, Const):
        return "constant %s" % t.name
    if isinstance(t, Lam):
        return "abstraction"
    if isinstance(t, App):
        return "application"
    if isinstance(t, FamConst):
        return "family constant %s" % t.name
    if isinstance(t, FamApp):
        return "family application"
    if isinstance(t, Pi):
        return "dependent function family"
    if isinstance(t, TypeKind):
        return "kind type"
    return "kind"


# ---------------------------------------------------------------------------
# object equality
# ---------------------------------------------------------------------------


def obj_eq(esig, delta, m, n, tau, fuel=None, path=()):
    """Decide whether two objects are equal at simple type ``tau``.

    Both objects are expected to be well-typed at a common family whose
    erasure is ``tau``; on such inputs success coincides with definitional
    equality.
    """
    fuel = as_fuel(fuel)
    if isinstance(tau, Arrow):
        hint = m.var if isinstance(m, Lam) else (n.var if isinstance(n, Lam) else "x")
        x = fresh(hint)
        r = obj_eq(
            esig,
            delta.extended(x, tau.dom),
            App(m, Var(x)),
            App(n, Var(x)),
            tau.cod,
            fuel,
            path + ("body",),
        )
        if not r.ok:
            return r
        return EqOutcome(True, canonical=QCLam(x, r.canonical))
    m = whnf(m, fuel)
    n = whnf(n, fuel)
    r = obj_eq_structural(esig, delta, m, n, fuel, path)
    if not r.ok:
        return r
    if r.classifier != tau:
        return _fail(path, "heads agree but at a different type than expected")
    return EqOutcome(True, canonical=QCAtom(r.canonical))


def obj_eq_structural(esig, delta, m, n, fuel=None, path=()):
    """Head-and-spine comparison of weak head-normal objects, synthesizing
    the erased classifier of both sides."""
    fuel = as_fuel(fuel)
    if isinstance(m, Var) and isinstance(n, Var):
        if m.name != n.name:
            return _fail(path, "distinct variables %s and %s" % (m.name, n.name))
        tau = delta.lookup(m.name)
        if tau is None:
            return _fail(path, "unbound variable %s" % m.name)
        return EqOutcome(True, classifier=tau, canonical=QAVar(m.name))
    if isinstance(m, Const) and isinstance(n, Const):
        if m.name != n.name:
            return _fail(path, "distinct constants %s and %s" % (m.name, n.name))
        tau = esig.obj_type(m.name)
        if tau is None:
            return _fail(path, "undeclared constant %s" % m.name)
        return EqOutcome(True, classifier=tau, canonical=QAConst(m.name))
    if isinstance(m, App) and isinstance(n, App):
        rf = obj_eq_structural(esig, delta, m.fun, n.fun, fuel, path + ("fun",))
        if not rf.ok:
            return rf
        if not isinstance(rf.classifier, Arrow):
            return _fail(path, "head is applied beyond its type")
        ra = obj_eq(esig, delta, m.arg, n.arg, rf.classifier.dom, fuel, path + ("arg",))
        if not ra.ok:
            return ra
        return EqOutcome(
            True,
            classifier=rf.classifier.cod,
            canonical=QAApp(rf.canonical, ra.canonical),
        )
    if isinstance(m, Lam) or isinstance(n, Lam):
        # Weak head-normal operands can only show an abstraction here when
        # the inputs were ill-typed for the announced simple type.
        return _fail(path, "abstraction compared at a base type")
    return _fail(path, "%s does not match %s" % (_describe(m), _describe(n)))


# ---------------------------------------------------------------------------
# family and kind equality
# ---------------------------------------------------------------------------


def fam_eq(esig, delta, a, b, kappa, fuel=None, path=()):
    """Decide whether two families are equal at simple kind ``kappa``."""
    fuel = as_fuel(fuel)
    if isinstance(kappa, ArrowK):
        x = fresh("x")
        return fam_eq(
            esig,
            delta.extended(x, kappa.dom),
            FamApp(a, Var(x)),
            FamApp(b, Var(x)),
            kappa.cod,
            fuel,
            path + ("body",),
        )
    if isinstance(a, Pi) and isinstance(b, Pi):
        rd = fam_eq(esig, delta, a.dom, b.dom, TYPE_MINUS, fuel, path + ("dom",))
        if not rd.ok:
            return rd
        x = fresh(a.var)
        delta2 = delta.extended(x, erase_family(a.dom))
        cod_a = subst_single(a.cod, a.var, Var(x))
        cod_b = subst_single(b.cod, b.var, Var(x))
        r = fam_eq(esig, delta2, cod_a, cod_b, TYPE_MINUS, fuel, path + ("cod",))
        return EqOutcome(True) if r.ok else r
    if isinstance(a, Pi) or isinstance(b, Pi):
        return _fail(path, "%s does not match %s" % (_describe(a), _describe(b)))
    r = fam_eq_structural(esig, delta, a, b, fuel, path)
    if not r.ok:
        return r
    if not isinstance(r.classifier, TypeMinus):
        return _fail(path, "family is not fully applied")
    return EqOutcome(True)


def fam_eq_structural(esig, delta, a, b, fuel=None, path=()):
    """Head-and-spine comparison of atomic families, synthesizing the
    erased kind of both sides."""
    fuel = as_fuel(fuel)
    if isinstance(a, FamConst) and isinstance(b, FamConst):
        if a.name != b.name:
            return _fail(path, "distinct family constants %s and %s" % (a.name, b.name))
        kappa = esig.fam_kind(a.name)
        if kappa is None:
            return _fail(path, "undeclared family constant %s" % a.name)
        return EqOutcome(True, classifier=kappa)
    if isinstance(a, FamApp) and isinstance(b, FamApp):
        rf = fam_eq_structural(esig, delta, a.fam, b.fam, fuel, path + ("fun",))
        if not rf.ok:
            return rf
        if not isinstance(rf.classifier, ArrowK):
            return _fail(path, "family is applied beyond its kind")
        ra = obj_eq(esig, delta, a.arg, b.arg, rf.classifier.dom, fuel, path + ("arg",))
        if not ra.ok:
            return ra
        return EqOutcome(True, classifier=rf.classifier.cod)
    return _fail(path, "%s does not match %s" % (_describe(a), _describe(b)))


def kind_eq(esig, delta, k, l, fuel=None, path=()):
    """Decide whether two kinds are equal."""
    fuel = as_fuel(fuel)
    if isinstance(k, TypeKind) and isinstance(l, TypeKind):
        return EqOutcome(True)
    if isinstance(k, TypeKind) or isinstance(l, TypeKind):
        return _fail(path, "%s does not match %s" % (_describe(k), _describe(l)))
    rd = fam_eq(esig, delta, k.dom, l.dom, TYPE_MINUS, fuel, path + ("dom",))
    if not rd.ok:
        return rd
    x = fresh(k.var)
    delta2 = delta.extended(x, erase_family(k.dom))
    cod_k = subst_single(k.cod, k.var, Var(x))
    cod_l = subst_single(l.cod, l.var, Var(x))
    return kind_eq(esig, delta2, cod_k, cod_l, fuel, path + ("cod",))
