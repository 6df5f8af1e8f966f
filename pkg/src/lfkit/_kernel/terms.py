"""The three-level term language: objects, families, and kinds.

Terms are immutable trees over named variables.  Freshness is provided by a
session-wide monotone counter, so a renamed binder can never collide with
any other name generated in the same process.  ``alpha_equal`` is the
semantic comparison; the structural ``==`` of the dataclasses is
intentionally name-sensitive.
"""

import itertools
from dataclasses import dataclass

from lfkit.errors import UnboundVariableError

# ---------------------------------------------------------------------------
# objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Lam:
    var: str
    ann: object  # Family
    body: object  # Object


@dataclass(frozen=True)
class App:
    fun: object  # Object
    arg: object  # Object


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamConst:
    name: str


@dataclass(frozen=True)
class FamApp:
    fam: object  # Family
    arg: object  # Object


@dataclass(frozen=True)
class Pi:
    var: str
    dom: object  # Family
    cod: object  # Family


# ---------------------------------------------------------------------------
# kinds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TypeKind:
    pass


@dataclass(frozen=True)
class PiK:
    var: str
    dom: object  # Family
    cod: object  # Kind


TYPE = TypeKind()

_OBJECTS = (Var, Const, Lam, App)
_FAMILIES = (FamConst, FamApp, Pi)
_KINDS = (TypeKind, PiK)
_LEAVES = (Const, FamConst, TypeKind)
_BINDERS = (Lam, Pi, PiK)


def level_of(t):
    """Return "object", "family", or "kind" for a term node."""
    if isinstance(t, _OBJECTS):
        return "object"
    if isinstance(t, _FAMILIES):
        return "family"
    if isinstance(t, _KINDS):
        return "kind"
    raise TypeError("not a term: %r" % (t,))


# ---------------------------------------------------------------------------
# signatures, contexts, substitutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    """Ordered constant declarations; names may repeat only in ill-formed
    input, which ``typecheck.check_signature`` rejects with a diagnostic."""

    decls: tuple = ()  # of (name, Family | Kind)

    def lookup(self, name):
        for n, classifier in self.decls:
            if n == name:
                return classifier
        return None

    def declares(self, name):
        return self.lookup(name) is not None

    def extended(self, name, classifier):
        return Signature(self.decls + ((name, classifier),))

    def __len__(self):
        return len(self.decls)

    def __iter__(self):
        return iter(self.decls)


@dataclass(frozen=True)
class Context:
    """Ordered variable typings.  Each variable is declared at most once;
    callers rename before insertion (see ``fresh``)."""

    entries: tuple = ()  # of (name, Family)

    def lookup(self, name):
        for n, fam in self.entries:
            if n == name:
                return fam
        return None

    def declares(self, name):
        return self.lookup(name) is not None

    def extended(self, name, fam):
        if self.declares(name):
            raise ValueError("variable '%s' already declared" % name)
        return Context(self.entries + ((name, fam),))

    def names(self):
        return tuple(n for n, _ in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Substitution:
    """A simultaneous map from variables to objects with an explicit,
    ordered domain."""

    entries: tuple = ()  # of (name, Object)

    def __post_init__(self):
        names = [n for n, _ in self.entries]
        if len(names) != len(set(names)):
            raise ValueError("substitution binds a variable twice")

    @property
    def domain(self):
        return tuple(n for n, _ in self.entries)

    def lookup(self, name):
        for n, obj in self.entries:
            if n == name:
                return obj
        return None

    def extended(self, name, obj):
        return Substitution(self.entries + ((name, obj),))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def identity_subst(g):
    """The identity substitution on a context, in declaration order."""
    return Substitution(tuple((n, Var(n)) for n, _ in g.entries))


# ---------------------------------------------------------------------------
# fresh names
# ---------------------------------------------------------------------------

# next() on itertools.count is atomic under the GIL, so sharing the counter
# between threads is safe; ids are never reused within a session.
_fresh_ids = itertools.count(1)


def fresh(hint="x"):
    """A variable name unused anywhere in this session.

    The display base of ``hint`` is kept so printed output stays readable;
    the prime suffix keeps the result inside the identifier grammar.
    """
    base = hint.split("'", 1)[0] or "x"
    return "%s'%d" % (base, next(_fresh_ids))


# ---------------------------------------------------------------------------
# free variables and constants
# ---------------------------------------------------------------------------


def free_vars(t):
    """The free variables of a term at any level."""
    out = set()
    _free_into(t, frozenset(), out)
    return frozenset(out)


def _free_into(t, bound, out):
    if isinstance(t, Var):
        if t.name not in bound:
            out.add(t.name)
    elif isinstance(t, _LEAVES):
        pass
    elif isinstance(t, App):
        _free_into(t.fun, bound, out)
        _free_into(t.arg, bound, out)
    elif isinstance(t, FamApp):
        _free_into(t.fam, bound, out)
        _free_into(t.arg, bound, out)
    elif isinstance(t, Lam):
        _free_into(t.ann, bound, out)
        _free_into(t.body, bound | {t.var}, out)
    elif isinstance(t, (Pi, PiK)):
        _free_into(t.dom, bound, out)
        _free_into(t.cod, bound | {t.var}, out)
    else:
        raise TypeError("not a term: %r" % (t,))


def const_names(t):
    """All constant names occurring in a term (both levels)."""
    out = set()
    _consts_into(t, out)
    return frozenset(out)


def _consts_into(t, out):
    if isinstance(t, (Const, FamConst)):
        out.add(t.name)
    elif isinstance(t, (Var, TypeKind)):
        pass
    elif isinstance(t, App):
        _consts_into(t.fun, out)
        _consts_into(t.arg, out)
    elif isinstance(t, FamApp):
        _consts_into(t.fam, out)
        _consts_into(t.arg, out)
    elif isinstance(t, Lam):
        _consts_into(t.ann, out)
        _consts_into(t.body, out)
    elif isinstance(t, (Pi, PiK)):
        _consts_into(t.dom, out)
        _consts_into(t.cod, out)
    else:
        raise TypeError("not a term: %r" % (t,))


# ---------------------------------------------------------------------------
# alpha-equivalence
# ---------------------------------------------------------------------------


def alpha_equal(t1, t2):
    """True iff the terms differ at most in the names of bound variables."""
    return _alpha(t1, t2, {}, {}, 0)


def _alpha(a, b, la, lb, depth):
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        ia = la.get(a.name)
        ib = lb.get(b.name)
        if ia is None and ib is None:
            return a.name == b.name  # both free
        return ia == ib and ia is not None
    if isinstance(a, (Const, FamConst)):
        return a.name == b.name
    if isinstance(a, TypeKind):
        return True
    if isinstance(a, App):
        return _alpha(a.fun, b.fun, la, lb, depth) and _alpha(a.arg, b.arg, la, lb, depth)
    if isinstance(a, FamApp):
        return _alpha(a.fam, b.fam, la, lb, depth) and _alpha(a.arg, b.arg, la, lb, depth)
    if isinstance(a, Lam):
        if not _alpha(a.ann, b.ann, la, lb, depth):
            return False
        la2 = dict(la)
        la2[a.var] = depth
        lb2 = dict(lb)
        lb2[b.var] = depth
        return _alpha(a.body, b.body, la2, lb2, depth + 1)
    if isinstance(a, (Pi, PiK)):
        if not _alpha(a.dom, b.dom, la, lb, depth):
            return False
        la2 = dict(la)
        la2[a.var] = depth
        lb2 = dict(lb)
        lb2[b.var] = depth
        return _alpha(a.cod, b.cod, la2, lb2, depth + 1)
    raise TypeError("not a term: %r" % (a,))


# ---------------------------------------------------------------------------
# substitution
# ---------------------------------------------------------------------------


def subst_single(t, x, n):
    """Capture-avoiding substitution of the object ``n`` for ``x`` in ``t``.

    Total: variables other than ``x`` are left alone.  Binders whose name
    occurs free in ``n`` are renamed before descending.
    """
    return _subst1(t, x, n, free_vars(n))


def _subst1(t, x, n, nfv):
    if isinstance(t, Var):
        return n if t.name == x else t
    if isinstance(t, _LEAVES):
        return t
    if isinstance(t, App):
        return App(_subst1(t.fun, x, n, nfv), _subst1(t.arg, x, n, nfv))
    if isinstance(t, FamApp):
        return FamApp(_subst1(t.fam, x, n, nfv), _subst1(t.arg, x, n, nfv))
    if isinstance(t, Lam):
        ann = _subst1(t.ann, x, n, nfv)
        if t.var == x:
            return Lam(t.var, ann, t.body)  # shadowed
        v, body = _avoid_capture(t.var, t.body, nfv)
        return Lam(v, ann, _subst1(body, x, n, nfv))
    if isinstance(t, Pi):
        dom = _subst1(t.dom, x, n, nfv)
        if t.var == x:
            return Pi(t.var, dom, t.cod)
        v, cod = _avoid_capture(t.var, t.cod, nfv)
        return Pi(v, dom, _subst1(cod, x, n, nfv))
    if isinstance(t, PiK):
        dom = _subst1(t.dom, x, n, nfv)
        if t.var == x:
            return PiK(t.var, dom, t.cod)
        v, cod = _avoid_capture(t.var, t.cod, nfv)
        return PiK(v, dom, _subst1(cod, x, n, nfv))
    raise TypeError("not a term: %r" % (t,))


def _avoid_capture(v, body, nfv):
    if v in nfv:
        v2 = fresh(v)
        return v2, _subst1(body, v, Var(v2), frozenset((v2,)))
    return v, body


def subst_simul(t, s):
    """Apply a simultaneous substitution.

    Every free variable of ``t`` must lie in the domain of ``s``; a stray
    variable raises ``UnboundVariableError``, since the callers that own
    this invariant treat a violation as a kernel bug.
    """
    m = dict(s.entries)
    fvr = set()
    for _, obj in s.entries:
        fvr |= free_vars(obj)
    return _substm(t, m, fvr)


def _substm(t, m, fvr):
    if isinstance(t, Var):
        try:
            return m[t.name]
        except KeyError:
            raise UnboundVariableError(t.name) from None
    if isinstance(t, _LEAVES):
        return t
    if isinstance(t, App):
        return App(_substm(t.fun, m, fvr), _substm(t.arg, m, fvr))
    if isinstance(t, FamApp):
        return FamApp(_substm(t.fam, m, fvr), _substm(t.arg, m, fvr))
    if isinstance(t, Lam):
        ann = _substm(t.ann, m, fvr)
        v, body, m2, fvr2 = _extend_for_binder(t.var, t.body, m, fvr)
        return Lam(v, ann, _substm(body, m2, fvr2))
    if isinstance(t, Pi):
        dom = _substm(t.dom, m, fvr)
        v, cod, m2, fvr2 = _extend_for_binder(t.var, t.cod, m, fvr)
        return Pi(v, dom, _substm(cod, m2, fvr2))
    if isinstance(t, PiK):
        dom = _substm(t.dom, m, fvr)
        v, cod, m2, fvr2 = _extend_for_binder(t.var, t.cod, m, fvr)
        return PiK(v, dom, _substm(cod, m2, fvr2))
    raise TypeError("not a term: %r" % (t,))


def _extend_for_binder(v, body, m, fvr):
    # Extend the substitution with the identity on the binder, renaming the
    # binder first if it would clash with the domain or the range.
    if v in m or v in fvr:
        v2 = fresh(v)
        body = _subst1(body, v, Var(v2), frozenset((v2,)))
        v = v2
    m2 = dict(m)
    m2[v] = Var(v)
    return v, body, m2, fvr | {v}
