"""Bottom-up type synthesis, signature and context validation, and the
top-level decision procedure for definitional equality.

Synthesis is syntax-directed; conversion happens at exactly two places, the
domain comparison of an application and the final comparison of
``check_object``.  All rejections raise :class:`~lfkit.errors.CheckError`
carrying a structured :class:`~lfkit.errors.Diagnostic`.
"""

from lfkit import equality as eq
from lfkit import erasure as er
from lfkit import syntax as syn
from lfkit.errors import CheckError, Diagnostic
from lfkit.frontend.printer import print_term
from lfkit.reduction import as_fuel

__all__ = [
    "CheckedSignature",
    "Diagnostic",
    "check_signature",
    "check_context",
    "synth_object",
    "synth_family",
    "synth_kind",
    "check_object",
    "def_equal_objects",
]


class CheckedSignature:
    """A signature whose every declaration was validated against the prefix
    before it, together with cached erased classifiers for the equality
    judgments.  Immutable once built; construct via ``check_signature``."""

    def __init__(self, signature, esig):
        self._signature = signature
        self._esig = esig

    @property
    def signature(self):
        return self._signature

    def erased(self):
        return self._esig

    def lookup(self, name):
        return self._signature.lookup(name)

    def declares(self, name):
        return self._signature.declares(name)

    def fam_kind(self, name):
        classifier = self._signature.lookup(name)
        if isinstance(classifier, (syn.TypeKind, syn.PiK)):
            return classifier
        return None

    def obj_family(self, name):
        classifier = self._signature.lookup(name)
        if classifier is None or isinstance(classifier, (syn.TypeKind, syn.PiK)):
            return None
        return classifier

    def _extended(self, name, classifier):
        esig = er.ErasedSignature(self._esig.obj_consts, self._esig.fam_consts)
        if isinstance(classifier, (syn.TypeKind, syn.PiK)):
            esig.fam_consts[name] = er.erase_kind(classifier)
        else:
            esig.obj_consts[name] = er.erase_family(classifier)
        return CheckedSignature(self._signature.extended(name, classifier), esig)

    def __len__(self):
        return len(self._signature)

    def __iter__(self):
        return iter(self._signature)


EMPTY_SIGNATURE = CheckedSignature(syn.Signature(), er.ErasedSignature())


def _reject(judgment, reason, expected=None, found=None, path=()):
    raise CheckError(Diagnostic(judgment, reason, expected, found, None, tuple(path)))


def _require_checked(sig):
    if not isinstance(sig, CheckedSignature):
        raise TypeError("expected a CheckedSignature; run check_signature first")


def _extend(g, x, fam, body):
    # Contexts declare a variable at most once; rename on collision.
    if g.declares(x):
        x2 = syn.fresh(x)
        return g.extended(x2, fam), x2, syn.subst_single(body, x, syn.Var(x2))
    return g.extended(x, fam), x, body


# ---------------------------------------------------------------------------
# synthesis
# ---------------------------------------------------------------------------


def synth_object(sig, g, m, fuel=None):
    """Synthesize the family of an object, bottom-up."""
    _require_checked(sig)
    return _synth_obj(sig, g, m, as_fuel(fuel))


def _synth_obj(sig, g, m, fuel):
    if isinstance(m, syn.Var):
        fam = g.lookup(m.name)
        if fam is None:
            _reject("object-synthesis", "unbound variable %s" % m.name)
        return fam
    if isinstance(m, syn.Const):
        fam = sig.obj_family(m.name)
        if fam is None:
            if sig.fam_kind(m.name) is not None:
                _reject(
                    "object-synthesis",
                    "family constant %s used as an object" % m.name,
                )
            _reject("object-synthesis", "undeclared constant %s" % m.name)
        return fam
    if isinstance(m, syn.App):
        fam_fun = _synth_obj(sig, g, m.fun, fuel)
        if not isinstance(fam_fun, syn.Pi):
            _reject(
                "object-synthesis",
                "application of a non-function",
                expected="{x:A} B",
                found=print_term(fam_fun),
            )
        fam_arg = _synth_obj(sig, g, m.arg, fuel)
        r = eq.fam_eq(sig, er.erase_context(g), fam_fun.dom, fam_arg, er.TYPE_MINUS, fuel)
        if not r.ok:
            _reject(
                "object-synthesis",
                "argument type mismatch: %s" % r.mismatch,
                expected=print_term(fam_fun.dom),
                found=print_term(fam_arg),
            )
        return syn.subst_single(fam_fun.cod, fam_fun.var, m.arg)
    if isinstance(m, syn.Lam):
        kind = _synth_fam(sig, g, m.ann, fuel)
        if not isinstance(kind, syn.TypeKind):
            _reject(
                "object-synthesis",
                "abstraction annotation is not a type",
                expected="type",
                found=print_term(kind),
            )
        g2, x2, body = _extend(g, m.var, m.ann, m.body)
        fam_body = _synth_obj(sig, g2, body, fuel)
        return syn.Pi(x2, m.ann, fam_body)
    raise TypeError("not an object: %r" % (m,))


def synth_family(sig, g, a, fuel=None):
    """Synthesize the kind of a family, bottom-up."""
    _require_checked(sig)
    return _synth_fam(sig, g, a, as_fuel(fuel))


def _synth_fam(sig, g, a, fuel):
    if isinstance(a, syn.FamConst):
        kind = sig.fam_kind(a.name)
        if kind is None:
            if sig.obj_family(a.name) is not None:
                _reject(
                    "family-synthesis",
                    "object constant %s used as a type family" % a.name,
                )
            _reject("family-synthesis", "undeclared family constant %s" % a.name)
        return kind
    if isinstance(a, syn.FamApp):
        kind_fun = _synth_fam(sig, g, a.fam, fuel)
        if not isinstance(kind_fun, syn.PiK):
            _reject(
                "family-synthesis",
                "family applied beyond its kind",
                expected="{x:A} kind",
                found=print_term(kind_fun),
            )
        fam_arg = _synth_obj(sig, g, a.arg, fuel)
        r = eq.fam_eq(sig, er.erase_context(g), kind_fun.dom, fam_arg, er.TYPE_MINUS, fuel)
        if not r.ok:
            _reject(
                "family-synthesis",
                "argument type mismatch: %s" % r.mismatch,
                expected=print_term(kind_fun.dom),
                found=print_term(fam_arg),
            )
        return syn.subst_single(kind_fun.cod, kind_fun.var, a.arg)
    if isinstance(a, syn.Pi):
        _check_is_type(sig, g, a.dom, fuel)
        g2, _, cod = _extend(g, a.var, a.dom, a.cod)
        _check_is_type(sig, g2, cod, fuel)
        return syn.TYPE
    raise TypeError("not a family: %r" % (a,))


def _check_is_type(sig, g, a, fuel):
    kind = _synth_fam(sig, g, a, fuel)
    if not isinstance(kind, syn.TypeKind):
        _reject(
            "family-synthesis",
            "family is not fully applied",
            expected="type",
            found=print_term(kind),
        )


def synth_kind(sig, g, k, fuel=None):
    """Validate a kind; returns None on success."""
    _require_checked(sig)
    _synth_kind(sig, g, k, as_fuel(fuel))


def _synth_kind(sig, g, k, fuel):
    if isinstance(k, syn.TypeKind):
        return
    if isinstance(k, syn.PiK):
        _check_is_type(sig, g, k.dom, fuel)
        g2, _, cod = _extend(g, k.var, k.dom, k.cod)
        _synth_kind(sig, g2, cod, fuel)
        return
    raise TypeError("not a kind: %r" % (k,))


# ---------------------------------------------------------------------------
# signature and context validation
# ---------------------------------------------------------------------------


def check_signature(decls, fuel=None):
    """Validate declarations in order and produce a CheckedSignature.

    Family constants must carry valid kinds, object constants families of
    kind ``type``; every classifier may mention only earlier constants.
    """
    if not isinstance(decls, syn.Signature):
        decls = syn.Signature(tuple(decls))
    fuel = as_fuel(fuel)
    checked = EMPTY_SIGNATURE
    empty = syn.Context()
    for name, classifier in decls:
        if checked.declares(name):
            _reject("signature-check", "constant %s declared twice" % name)
        if isinstance(classifier, (syn.TypeKind, syn.PiK)):
            _synth_kind(checked, empty, classifier, fuel)
        elif isinstance(classifier, (syn.FamConst, syn.FamApp, syn.Pi)):
            kind = _synth_fam(checked, empty, classifier, fuel)
            if not isinstance(kind, syn.TypeKind):
                _reject(
                    "signature-check",
                    "classifier of %s is not a type" % name,
                    expected="type",
                    found=print_term(kind),
                )
        else:
            _reject(
                "signature-check",
                "classifier of %s is an object, not a family or kind" % name,
            )
        checked = checked._extended(name, classifier)
    return checked


def check_context(sig, g, fuel=None):
    """Validate a context against a checked signature; None on success."""
    _require_checked(sig)
    fuel = as_fuel(fuel)
    prefix = syn.Context()
    for name, fam in g:
        if prefix.declares(name):
            _reject("context-check", "variable %s declared twice" % name)
        if not isinstance(fam, (syn.FamConst, syn.FamApp, syn.Pi)):
            _reject(
                "context-check",
                "classifier of %s is not a family" % name,
            )
        kind = _synth_fam(sig, prefix, fam, fuel)
        if not isinstance(kind, syn.TypeKind):
            _reject(
                "context-check",
                "classifier of %s is not a type" % name,
                expected="type",
                found=print_term(kind),
            )
        prefix = prefix.extended(name, fam)


# ---------------------------------------------------------------------------
# decision procedures
# ---------------------------------------------------------------------------


def check_object(sig, g, m, a, fuel=None):
    """Decide whether ``m`` has family ``a``; None on success.

    Synthesizes a family for ``m`` and compares it against ``a``.
    """
    _require_checked(sig)
    fuel = as_fuel(fuel)
    _check_is_type(sig, g, a, fuel)
    found = _synth_obj(sig, g, m, fuel)
    r = eq.fam_eq(sig, er.erase_context(g), found, a, er.TYPE_MINUS, fuel)
    if not r.ok:
        _reject(
            "object-check",
            "object does not have the ascribed type: %s" % r.mismatch,
            expected=print_term(a),
            found=print_term(found),
        )


def def_equal_objects(sig, g, m, n, a, fuel=None):
    """Decide definitional equality of ``m`` and ``n`` at family ``a``.

    Both operands are type-checked first; an ill-typed operand raises
    ``CheckError`` and is thereby kept distinct from a negative equality
    verdict, which is returned as a failed ``EqOutcome``.
    """
    _require_checked(sig)
    fuel = as_fuel(fuel)
    check_object(sig, g, m, a, fuel)
    check_object(sig, g, n, a, fuel)
    return eq.obj_eq(sig, er.erase_context(g), m, n, er.erase_family(a), fuel)
