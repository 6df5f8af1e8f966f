"""Pretty-printing of terms and quasi-canonical forms.

Output uses the same grammar the parser reads, with minimal parentheses:
application binds tightest and associates left, ``->`` associates right,
binders extend as far right as possible.  A dependent function whose
variable is unused prints with the arrow sugar.

Binders are displayed under their base name (session-freshness primes are
dropped) unless that would capture a free variable or a constant mentioned
beneath them, so ``parse(print(t))`` is always alpha-equal to ``t``.
"""

from lfkit import equality as eq
from lfkit import syntax as syn

_ATOM = 2
_APP = 1
_TERM = 0


def print_term(t):
    """Render an object, family, kind, or quasi-canonical form."""
    return _fmt(t, _TERM, {})


def print_signature(sig):
    lines = []
    for name, classifier in sig:
        lines.append("%s : %s." % (name, print_term(classifier)))
    return "\n".join(lines) + ("\n" if lines else "")


def print_context(g):
    return ", ".join("%s:%s" % (n, print_term(fam)) for n, fam in g)


def _fmt(t, prec, rename):
    if isinstance(t, (syn.Var, eq.QAVar)):
        return rename.get(t.name, t.name)
    if isinstance(t, (syn.Const, syn.FamConst, eq.QAConst)):
        return t.name
    if isinstance(t, syn.TypeKind):
        return "type"
    if isinstance(t, (syn.App, syn.FamApp, eq.QAApp)):
        fun = t.fun if not isinstance(t, syn.FamApp) else t.fam
        s = "%s %s" % (_fmt(fun, _APP, rename), _fmt(t.arg, _ATOM, rename))
        return _wrap(s, prec > _APP)
    if isinstance(t, eq.QCAtom):
        return _fmt(t.atom, prec, rename)
    if isinstance(t, syn.Lam):
        disp, rename2 = _binder(t.var, t.body, rename)
        s = "[%s:%s] %s" % (disp, _fmt(t.ann, _TERM, rename), _fmt(t.body, _TERM, rename2))
        return _wrap(s, prec > _TERM)
    if isinstance(t, eq.QCLam):
        disp, rename2 = _binder(t.var, t.body, rename)
        s = "[%s] %s" % (disp, _fmt(t.body, _TERM, rename2))
        return _wrap(s, prec > _TERM)
    if isinstance(t, (syn.Pi, syn.PiK)):
        if t.var not in syn.free_vars(t.cod):
            s = "%s -> %s" % (_fmt(t.dom, _APP, rename), _fmt(t.cod, _TERM, rename))
        else:
            disp, rename2 = _binder(t.var, t.cod, rename)
            s = "{%s:%s} %s" % (disp, _fmt(t.dom, _TERM, rename), _fmt(t.cod, _TERM, rename2))
        return _wrap(s, prec > _TERM)
    raise TypeError("not printable: %r" % (t,))


def _wrap(s, needed):
    return "(%s)" % s if needed else s


def _binder(var, body, rename):
    # The display name may not collide with the printed name of anything
    # free below the binder, nor with a constant mentioned there.
    avoid = set()
    _printable_names(body, frozenset((var,)), rename, avoid)
    base = var.split("'", 1)[0] or "x"
    disp = base
    k = 0
    while disp in avoid:
        k += 1
        disp = "%s'%d" % (base, k)
    rename2 = dict(rename)
    rename2[var] = disp
    return disp, rename2


def _printable_names(t, bound, rename, out):
    if isinstance(t, (syn.Var, eq.QAVar)):
        if t.name not in bound:
            out.add(rename.get(t.name, t.name))
    elif isinstance(t, (syn.Const, syn.FamConst, eq.QAConst)):
        out.add(t.name)
    elif isinstance(t, syn.TypeKind):
        pass
    elif isinstance(t, (syn.App, eq.QAApp)):
        _printable_names(t.fun, bound, rename, out)
        _printable_names(t.arg, bound, rename, out)
    elif isinstance(t, syn.FamApp):
        _printable_names(t.fam, bound, rename, out)
        _printable_names(t.arg, bound, rename, out)
    elif isinstance(t, eq.QCAtom):
        _printable_names(t.atom, bound, rename, out)
    elif isinstance(t, syn.Lam):
        _printable_names(t.ann, bound, rename, out)
        _printable_names(t.body, bound | {t.var}, rename, out)
    elif isinstance(t, eq.QCLam):
        _printable_names(t.body, bound | {t.var}, rename, out)
    elif isinstance(t, (syn.Pi, syn.PiK)):
        _printable_names(t.dom, bound, rename, out)
        _printable_names(t.cod, bound | {t.var}, rename, out)
    else:
        raise TypeError("not printable: %r" % (t,))
