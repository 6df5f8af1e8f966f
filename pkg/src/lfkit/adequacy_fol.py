"""First-order syntax and its bijection with quasi-canonical forms.

Terms live at the base family ``iota`` and formulas at ``o``.  The
connective set is equality, conjunction, and universal quantification, plus
user-declared function symbols; each symbol becomes one constant of an
iterated arrow type over ``iota``.
"""

from dataclasses import dataclass

from lfkit import canonical as cn
from lfkit import syntax as syn
from lfkit.errors import LfError, ParseError, Span

TERM_TYPE = "iota"
FORMULA_TYPE = "o"

_EQ = "eq"
_AND = "and"
_FORALL = "forall"
RESERVED = (TERM_TYPE, FORMULA_TYPE, _EQ, _AND, _FORALL)

_IOTA = syn.FamConst(TERM_TYPE)
_O = syn.FamConst(FORMULA_TYPE)


class AdequacyError(LfError):
    """A first-order expression or quasi-canonical form falls outside the
    bijection (unknown symbol, arity mismatch, ill-shaped spine)."""


# ---------------------------------------------------------------------------
# syntax
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FolVar:
    name: str


@dataclass(frozen=True)
class FolFun:
    symbol: str
    args: tuple = ()


@dataclass(frozen=True)
class FolEq:
    left: object
    right: object


@dataclass(frozen=True)
class FolAnd:
    left: object
    right: object


@dataclass(frozen=True)
class FolForall:
    var: str
    body: object


@dataclass(frozen=True)
class FolSignatureTable:
    """Function symbols with their arities, in declaration order."""

    functions: tuple = ()  # of (name, arity)

    def __post_init__(self):
        seen = set()
        for name, arity in self.functions:
            if name in RESERVED:
                raise ValueError("symbol name '%s' is reserved" % name)
            if name in seen:
                raise ValueError("symbol '%s' declared twice" % name)
            if arity < 0:
                raise ValueError("negative arity for '%s'" % name)
            seen.add(name)

    def arity(self, symbol):
        for name, arity in self.functions:
            if name == symbol:
                return arity
        return None


def fol_free_names(e):
    """Free variable names of a term or formula, in first-occurrence order."""
    out = []
    _frees(e, frozenset(), out)
    return tuple(out)


def _frees(e, bound, out):
    if isinstance(e, FolVar):
        if e.name not in bound and e.name not in out:
            out.append(e.name)
    elif isinstance(e, FolFun):
        for a in e.args:
            _frees(a, bound, out)
    elif isinstance(e, (FolEq, FolAnd)):
        _frees(e.left, bound, out)
        _frees(e.right, bound, out)
    elif isinstance(e, FolForall):
        _frees(e.body, bound | {e.var}, out)
    else:
        raise TypeError("not a first-order expression: %r" % (e,))


# ---------------------------------------------------------------------------
# the generated signature
# ---------------------------------------------------------------------------


def _arrow(dom, cod):
    return syn.Pi("_", dom, cod)


def _iota_chain(arity):
    fam = _IOTA
    for _ in range(arity):
        fam = _arrow(_IOTA, fam)
    return fam


def gen_lf_signature(tbl):
    """The signature encoding a first-order language: the two base families,
    one constant per function symbol, and the three connectives."""
    decls = [(TERM_TYPE, syn.TYPE), (FORMULA_TYPE, syn.TYPE)]
    for name, arity in tbl.functions:
        decls.append((name, _iota_chain(arity)))
    decls.append((_EQ, _arrow(_IOTA, _arrow(_IOTA, _O))))
    decls.append((_AND, _arrow(_O, _arrow(_O, _O))))
    decls.append((_FORALL, _arrow(_arrow(_IOTA, _O), _O)))
    return syn.Signature(tuple(decls))


def derive_table(sig):
    """Recover the symbol table from a signature shaped like the output of
    ``gen_lf_signature``; raises AdequacyError otherwise."""
    expected_core = dict(gen_lf_signature(FolSignatureTable()).decls)
    functions = []
    for name, classifier in sig:
        if name in expected_core:
            if not syn.alpha_equal(classifier, expected_core[name]):
                raise AdequacyError(
                    "constant %s does not have its first-order classifier" % name
                )
            continue
        arity = _chain_arity(classifier)
        if arity is None:
            raise AdequacyError(
                "constant %s is not a function symbol over %s" % (name, TERM_TYPE)
            )
        functions.append((name, arity))
    for core in expected_core:
        if not sig.declares(core):
            raise AdequacyError("signature lacks the constant %s" % core)
    return FolSignatureTable(tuple(functions))


def _chain_arity(fam):
    arity = 0
    while isinstance(fam, syn.Pi):
        if fam.dom != _IOTA or fam.var in syn.free_vars(fam.cod):
            return None
        fam = fam.cod
        arity += 1
    return arity if fam == _IOTA else None


# ---------------------------------------------------------------------------
# the bijection
# ---------------------------------------------------------------------------


def encode(tbl, ctx, e):
    """Translate a term or formula with free names in ``ctx`` into its
    quasi-canonical form at ``iota`` or ``o``."""
    if isinstance(e, FolVar):
        if e.name not in ctx:
            raise AdequacyError("variable %s is not in scope" % e.name)
        return cn.QCAtom(cn.QAVar(e.name))
    if isinstance(e, FolFun):
        arity = tbl.arity(e.symbol)
        if arity is None:
            raise AdequacyError("unknown function symbol %s" % e.symbol)
        if arity != len(e.args):
            raise AdequacyError(
                "symbol %s expects %d arguments, got %d"
                % (e.symbol, arity, len(e.args))
            )
        return cn.QCAtom(_spine(cn.QAConst(e.symbol), [encode(tbl, ctx, a) for a in e.args]))
    if isinstance(e, FolEq):
        return cn.QCAtom(
            _spine(cn.QAConst(_EQ), [encode(tbl, ctx, e.left), encode(tbl, ctx, e.right)])
        )
    if isinstance(e, FolAnd):
        return cn.QCAtom(
            _spine(cn.QAConst(_AND), [encode(tbl, ctx, e.left), encode(tbl, ctx, e.right)])
        )
    if isinstance(e, FolForall):
        body = encode(tbl, list(ctx) + [e.var], e.body)
        return cn.QCAtom(_spine(cn.QAConst(_FORALL), [cn.QCLam(e.var, body)]))
    raise TypeError("not a first-order expression: %r" % (e,))


def _spine(head, args):
    for a in args:
        head = cn.QAApp(head, a)
    return head


def _unspine(qa):
    args = []
    while isinstance(qa, cn.QAApp):
        args.append(qa.arg)
        qa = qa.fun
    args.reverse()
    return qa, args


def decode(tbl, ctx, q, at):
    """Inverse of ``encode``: read a term (``at="iota"``) or a formula
    (``at="o"``) back off a quasi-canonical form."""
    if at not in (TERM_TYPE, FORMULA_TYPE):
        raise ValueError("decode target must be %r or %r" % (TERM_TYPE, FORMULA_TYPE))
    if isinstance(q, cn.QCLam):
        raise AdequacyError("abstractions do not inhabit %s" % at)
    if not isinstance(q, cn.QCAtom):
        raise TypeError("not a quasi-canonical form: %r" % (q,))
    head, args = _unspine(q.atom)
    if at == TERM_TYPE:
        return _decode_term(tbl, ctx, head, args)
    return _decode_formula(tbl, ctx, head, args)


def _decode_args(tbl, ctx, args, at):
    return tuple(decode(tbl, ctx, a, at) for a in args)


def _decode_term(tbl, ctx, head, args):
    if isinstance(head, cn.QAVar):
        if head.name not in ctx:
            raise AdequacyError("variable %s is not in scope" % head.name)
        if args:
            raise AdequacyError("variable %s cannot be applied" % head.name)
        return FolVar(head.name)
    if isinstance(head, cn.QAConst):
        arity = tbl.arity(head.name)
        if arity is None:
            raise AdequacyError("head %s is not a function symbol" % head.name)
        if arity != len(args):
            raise AdequacyError(
                "symbol %s expects %d arguments, got %d" % (head.name, arity, len(args))
            )
        return FolFun(head.name, _decode_args(tbl, ctx, args, TERM_TYPE))
    raise AdequacyError("ill-shaped head in a first-order term")


def _decode_formula(tbl, ctx, head, args):
    if not isinstance(head, cn.QAConst):
        raise AdequacyError("formulas must be headed by a connective")
    if head.name == _EQ:
        if len(args) != 2:
            raise AdequacyError("equality expects 2 arguments, got %d" % len(args))
        l, r = _decode_args(tbl, ctx, args, TERM_TYPE)
        return FolEq(l, r)
    if head.name == _AND:
        if len(args) != 2:
            raise AdequacyError("conjunction expects 2 arguments, got %d" % len(args))
        l, r = _decode_args(tbl, ctx, args, FORMULA_TYPE)
        return FolAnd(l, r)
    if head.name == _FORALL:
        if len(args) != 1:
            raise AdequacyError("quantifier expects 1 argument, got %d" % len(args))
        body = args[0]
        if not isinstance(body, cn.QCLam):
            raise AdequacyError("quantifier argument must be an abstraction")
        return FolForall(
            body.var, decode(tbl, list(ctx) + [body.var], body.body, FORMULA_TYPE)
        )
    raise AdequacyError("head %s is not a formula constructor" % head.name)


def fol_subst(e, x, t):
    """Capture-avoiding substitution of the term ``t`` for ``x``."""
    if isinstance(e, FolVar):
        return t if e.name == x else e
    if isinstance(e, FolFun):
        return FolFun(e.symbol, tuple(fol_subst(a, x, t) for a in e.args))
    if isinstance(e, FolEq):
        return FolEq(fol_subst(e.left, x, t), fol_subst(e.right, x, t))
    if isinstance(e, FolAnd):
        return FolAnd(fol_subst(e.left, x, t), fol_subst(e.right, x, t))
    if isinstance(e, FolForall):
        if e.var == x:
            return e
        if e.var in fol_free_names(t):
            v2 = syn.fresh(e.var)
            body = fol_subst(e.body, e.var, FolVar(v2))
            return FolForall(v2, fol_subst(body, x, t))
        return FolForall(e.var, fol_subst(e.body, x, t))
    raise TypeError("not a first-order expression: %r" % (e,))


# ---------------------------------------------------------------------------
# concrete syntax: `forall x. P`, `t1 = t2`, `P & Q`, `f(t1, t2)`
# ---------------------------------------------------------------------------


def print_formula(e):
    if isinstance(e, FolForall):
        return "forall %s. %s" % (e.var, print_formula(e.body))
    if isinstance(e, FolAnd):
        return "%s & %s" % (_print_conjunct(e.left, False), _print_conjunct(e.right, True))
    if isinstance(e, FolEq):
        return "%s = %s" % (print_term(e.left), print_term(e.right))
    raise TypeError("not a formula: %r" % (e,))


def _print_conjunct(e, is_right):
    if isinstance(e, FolForall) or (is_right and isinstance(e, FolAnd)):
        return "(%s)" % print_formula(e)
    return print_formula(e)


def print_term(t):
    if isinstance(t, FolVar):
        return t.name
    if isinstance(t, FolFun):
        if not t.args:
            return t.symbol
        return "%s(%s)" % (t.symbol, ", ".join(print_term(a) for a in t.args))
    raise TypeError("not a first-order term: %r" % (t,))


_PUNCT = {"(": "LPAREN", ")": "RPAREN", ",": "COMMA", "&": "AMP", "=": "EQUALS", ".": "DOT"}


def _lex_formula(text):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        span = Span(line, col)
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, span))
            i += 1
            col += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            word = text[i:j]
            kind = "FORALL" if word == "forall" else "IDENT"
            tokens.append((kind, word, span))
            col += j - i
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, span)
    tokens.append(("EOF", "", Span(line, col)))
    return tokens


class _FormulaParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError("expected %s, found %r" % (what, tok[1] or "end of input"), tok[2])
        return tok

    def formula(self):
        if self.peek() == "FORALL":
            self.next()
            name = self.expect("IDENT", "a variable name")[1]
            self.expect("DOT", "'.'")
            return FolForall(name, self.formula())
        left = self.conjunct()
        while self.peek() == "AMP":
            self.next()
            left = FolAnd(left, self.conjunct())
        return left

    def conjunct(self):
        if self.peek() == "LPAREN":
            self.next()
            inner = self.formula()
            self.expect("RPAREN", "')'")
            return inner
        left = self.term()
        self.expect("EQUALS", "'='")
        return FolEq(left, self.term())

    def term(self):
        name = self.expect("IDENT", "a term")[1]
        if self.peek() != "LPAREN":
            return FolVar(name)
        self.next()
        args = [self.term()]
        while self.peek() == "COMMA":
            self.next()
            args.append(self.term())
        self.expect("RPAREN", "')'")
        return FolFun(name, tuple(args))


def parse_formula(tbl, text):
    """Parse the small formula format; bare identifiers that are declared
    0-ary symbols become constants, everything else a variable."""
    parser = _FormulaParser(_lex_formula(text))
    e = parser.formula()
    parser.expect("EOF", "end of input")
    return _resolve(tbl, e)


def _resolve(tbl, e, bound=frozenset()):
    if isinstance(e, FolVar):
        if e.name in bound:
            return e
        if tbl.arity(e.name) == 0:
            return FolFun(e.name, ())
        if tbl.arity(e.name) is not None:
            raise AdequacyError("symbol %s needs arguments" % e.name)
        return e
    if isinstance(e, FolFun):
        return FolFun(e.symbol, tuple(_resolve(tbl, a, bound) for a in e.args))
    if isinstance(e, FolEq):
        return FolEq(_resolve(tbl, e.left, bound), _resolve(tbl, e.right, bound))
    if isinstance(e, FolAnd):
        return FolAnd(_resolve(tbl, e.left, bound), _resolve(tbl, e.right, bound))
    if isinstance(e, FolForall):
        return FolForall(e.var, _resolve(tbl, e.body, bound | {e.var}))
    raise TypeError("not a first-order expression: %r" % (e,))
