"""Quasi-canonical forms: extraction, label stripping, and re-elaboration.

A quasi-canonical form is beta-normal, eta-long relative to its simple
type, and carries no annotations.  Extraction rides on the instrumented
equality judgment; elaboration reads the missing abstraction labels off the
dependent function families of the classifying type.
"""

from dataclasses import dataclass

from lfkit import equality as eq
from lfkit import erasure as er
from lfkit import syntax as syn
from lfkit import typecheck as tc
from lfkit.errors import CheckError, Diagnostic, NotEqualError
from lfkit.frontend.printer import print_term
from lfkit.reduction import as_fuel

QAVar = eq.QAVar
QAConst = eq.QAConst
QAApp = eq.QAApp
QCAtom = eq.QCAtom
QCLam = eq.QCLam
qc_alpha_equal = eq.qc_alpha_equal

__all__ = [
    "QAVar", "QAConst", "QAApp", "QCAtom", "QCLam", "qc_alpha_equal",
    "BVar", "BConst", "BLam", "BApp", "bare_alpha_equal",
    "qc_extract", "canonicalize", "strip_labels", "qc_to_bare",
    "elaborate_qc", "tidy_names",
]


# ---------------------------------------------------------------------------
# label-free object trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BVar:
    name: str


@dataclass(frozen=True)
class BConst:
    name: str


@dataclass(frozen=True)
class BLam:
    var: str
    body: object


@dataclass(frozen=True)
class BApp:
    fun: object
    arg: object


def strip_labels(m):
    """Erase the annotations from an object, keeping everything else."""
    if isinstance(m, syn.Var):
        return BVar(m.name)
    if isinstance(m, syn.Const):
        return BConst(m.name)
    if isinstance(m, syn.Lam):
        return BLam(m.var, strip_labels(m.body))
    if isinstance(m, syn.App):
        return BApp(strip_labels(m.fun), strip_labels(m.arg))
    raise TypeError("not an object: %r" % (m,))


def qc_to_bare(q):
    """Embed a quasi-canonical or quasi-atomic form into the label-free
    object grammar."""
    if isinstance(q, QCAtom):
        return qc_to_bare(q.atom)
    if isinstance(q, QCLam):
        return BLam(q.var, qc_to_bare(q.body))
    if isinstance(q, QAVar):
        return BVar(q.name)
    if isinstance(q, QAConst):
        return BConst(q.name)
    if isinstance(q, QAApp):
        return BApp(qc_to_bare(q.fun), qc_to_bare(q.arg))
    raise TypeError("not a quasi-canonical form: %r" % (q,))


def bare_alpha_equal(a, b):
    return _bare_alpha(a, b, {}, {}, 0)


def _bare_alpha(a, b, la, lb, depth):
    if type(a) is not type(b):
        return False
    if isinstance(a, BVar):
        ia = la.get(a.name)
        ib = lb.get(b.name)
        if ia is None and ib is None:
            return a.name == b.name
        return ia == ib and ia is not None
    if isinstance(a, BConst):
        return a.name == b.name
    if isinstance(a, BApp):
        return _bare_alpha(a.fun, b.fun, la, lb, depth) and _bare_alpha(
            a.arg, b.arg, la, lb, depth
        )
    la2 = dict(la)
    la2[a.var] = depth
    lb2 = dict(lb)
    lb2[b.var] = depth
    return _bare_alpha(a.body, b.body, la2, lb2, depth + 1)


# ---------------------------------------------------------------------------
# extraction
# ---------------------------------------------------------------------------


def qc_extract(sig, d, m, n, t, fuel=None):
    """The common quasi-canonical form of two equal objects at simple type
    ``t``; raises NotEqualError when the comparison fails."""
    r = eq.obj_eq(sig, d, m, n, t, as_fuel(fuel))
    if not r.ok:
        raise NotEqualError(r.mismatch)
    return r.canonical


def canonicalize(sig, g, m, a, fuel=None):
    """The quasi-canonical form of a well-typed object at family ``a``.

    The object is checked against ``a`` first, after which extraction by
    self-comparison cannot fail.  Binder names are tidied for display.
    """
    fuel = as_fuel(fuel)
    tc.check_object(sig, g, m, a, fuel)
    q = qc_extract(sig, er.erase_context(g), m, m, er.erase_family(a), fuel)
    return tidy_names(q)


# ---------------------------------------------------------------------------
# display names
# ---------------------------------------------------------------------------


def tidy_names(q):
    """Deterministically rename binders to their display bases.

    Extraction introduces session-fresh binder names; this keeps each one's
    base (``x'17`` becomes ``x``) unless doing so would capture a variable
    or constant mentioned beneath the binder.
    """
    return _tidy(q, {})


def _tidy(q, rename):
    if isinstance(q, QCAtom):
        return QCAtom(_tidy(q.atom, rename))
    if isinstance(q, QAVar):
        return QAVar(rename.get(q.name, q.name))
    if isinstance(q, QAConst):
        return q
    if isinstance(q, QAApp):
        return QAApp(_tidy(q.fun, rename), _tidy(q.arg, rename))
    if isinstance(q, QCLam):
        avoid = set()
        _qc_visible_names(q.body, frozenset((q.var,)), rename, avoid)
        base = q.var.split("'", 1)[0] or "x"
        disp = base
        k = 0
        while disp in avoid:
            k += 1
            disp = "%s'%d" % (base, k)
        rename2 = dict(rename)
        rename2[q.var] = disp
        return QCLam(disp, _tidy(q.body, rename2))
    raise TypeError("not a quasi-canonical form: %r" % (q,))


def _qc_visible_names(q, bound, rename, out):
    if isinstance(q, QAVar):
        if q.name not in bound:
            out.add(rename.get(q.name, q.name))
    elif isinstance(q, QAConst):
        out.add(q.name)
    elif isinstance(q, QAApp):
        _qc_visible_names(q.fun, bound, rename, out)
        _qc_visible_names(q.arg, bound, rename, out)
    elif isinstance(q, QCAtom):
        _qc_visible_names(q.atom, bound, rename, out)
    elif isinstance(q, QCLam):
        _qc_visible_names(q.body, bound | {q.var}, rename, out)
    else:
        raise TypeError("not a quasi-canonical form: %r" % (q,))


# ---------------------------------------------------------------------------
# elaboration
# ---------------------------------------------------------------------------


def _shape_error(reason, expected=None, found=None):
    raise CheckError(Diagnostic("qc-elaboration", reason, expected, found))


def elaborate_qc(sig, g, q, a, fuel=None):
    """Rebuild a labelled object from a quasi-canonical form at family
    ``a``: abstraction labels are read off the dependent function families,
    spine heads are looked up and their argument types propagated.

    The result strips back to ``q`` and checks against ``a``.
    """
    fuel = as_fuel(fuel)
    tc.synth_family(sig, g, a, fuel)
    return _elab(sig, g, q, a, {}, fuel)


def _elab(sig, g, q, a, varmap, fuel):
    if isinstance(q, QCLam):
        if not isinstance(a, syn.Pi):
            _shape_error(
                "abstraction does not fit an atomic family",
                expected=print_term(a),
                found="[%s] ..." % q.var,
            )
        x = q.var if not g.declares(q.var) else syn.fresh(q.var)
        g2 = g.extended(x, a.dom)
        cod = syn.subst_single(a.cod, a.var, syn.Var(x))
        varmap2 = dict(varmap)
        varmap2[q.var] = x
        return syn.Lam(x, a.dom, _elab(sig, g2, q.body, cod, varmap2, fuel))
    if isinstance(q, QCAtom):
        if isinstance(er.erase_family(a), er.Arrow):
            _shape_error(
                "atomic form at a function family is not eta-long",
                expected=print_term(a),
            )
        obj, spine_fam = _elab_spine(sig, g, q.atom, varmap, fuel)
        r = eq.fam_eq(sig, er.erase_context(g), spine_fam, a, er.TYPE_MINUS, fuel)
        if not r.ok:
            _shape_error(
                "atomic form does not fit the expected family: %s" % r.mismatch,
                expected=print_term(a),
                found=print_term(spine_fam),
            )
        return obj
    raise TypeError("not a quasi-canonical form: %r" % (q,))


def _elab_spine(sig, g, qa, varmap, fuel):
    if isinstance(qa, QAVar):
        name = varmap.get(qa.name, qa.name)
        fam = g.lookup(name)
        if fam is None:
            _shape_error("unbound variable %s" % qa.name)
        return syn.Var(name), fam
    if isinstance(qa, QAConst):
        fam = sig.obj_family(qa.name)
        if fam is None:
            _shape_error("undeclared constant %s" % qa.name)
        return syn.Const(qa.name), fam
    if isinstance(qa, QAApp):
        fun, fam = _elab_spine(sig, g, qa.fun, varmap, fuel)
        if not isinstance(fam, syn.Pi):
            _shape_error(
                "spine head applied beyond its family",
                found=print_term(fam),
            )
        arg = _elab(sig, g, qa.arg, fam.dom, varmap, fuel)
        return syn.App(fun, arg), syn.subst_single(fam.cod, fam.var, arg)
    raise TypeError("not a quasi-atomic form: %r" % (qa,))
