"""Concrete syntax for signatures and terms.

Grammar (one shared term grammar for all three levels)::

    sigfile  ::= { IDENT ":" term "." }
    term     ::= "{" IDENT ":" term "}" term        dependent function
               | "[" IDENT [":" term] "]" term      abstraction
               | app [ "->" term ]                  arrow, right-assoc
    app      ::= atom { atom }                      juxtaposition, left-assoc
    atom     ::= IDENT | "type" | "(" term ")"

``%`` starts a line comment; identifiers match ``[A-Za-z_][A-Za-z0-9_']*``.
Which syntactic level a parsed term belongs to is decided afterwards:
``type`` at the end of an arrow/binder spine marks a kind, and identifiers
resolve through the signature and the enclosing binders, innermost first.
"""

from dataclasses import dataclass
from typing import Optional

from lfkit import equality as eq
from lfkit import syntax as syn
from lfkit.errors import ParseError, ScopeError, Span

# ---------------------------------------------------------------------------
# lexer
# ---------------------------------------------------------------------------

_PUNCT = {
    ":": "COLON",
    ".": "DOT",
    "{": "LBRACE",
    "}": "RBRACE",
    "[": "LBRACK",
    "]": "RBRACK",
    "(": "LPAREN",
    ")": "RPAREN",
    ",": "COMMA",
}


def _lex(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
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
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        span = Span(line, col)
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            tokens.append(("ARROW", "->", span))
            i += 2
            col += 2
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, span))
            i += 1
            col += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            word = text[i:j]
            kind = "TYPE" if word == "type" else "IDENT"
            tokens.append((kind, word, span))
            col += j - i
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, span)
    tokens.append(("EOF", "", Span(line, col)))
    return tokens


# ---------------------------------------------------------------------------
# pre-terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PName:
    name: str
    span: Span


@dataclass(frozen=True)
class PType:
    span: Span


@dataclass(frozen=True)
class PApp:
    fun: object
    arg: object
    span: Span


@dataclass(frozen=True)
class PLam:
    var: str
    ann: Optional[object]
    body: object
    span: Span


@dataclass(frozen=True)
class PPi:
    var: str
    dom: object
    body: object
    span: Span


@dataclass(frozen=True)
class PArrow:
    dom: object
    cod: object
    span: Span


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def span(self):
        return self.tokens[self.pos][2]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(
                "expected %s, found %r" % (what, tok[1] or "end of input"), tok[2]
            )
        return tok

    def signature_file(self):
        decls = []
        while self.peek() != "EOF":
            name = self.expect("IDENT", "a declaration name")
            self.expect("COLON", "':'")
            classifier = self.term()
            self.expect("DOT", "'.'")
            decls.append((name[1], classifier, name[2]))
        return decls

    def term(self):
        kind = self.peek()
        if kind == "LBRACE":
            span = self.next()[2]
            var = self.expect("IDENT", "a variable name")[1]
            self.expect("COLON", "':'")
            dom = self.term()
            self.expect("RBRACE", "'}'")
            return PPi(var, dom, self.term(), span)
        if kind == "LBRACK":
            span = self.next()[2]
            var = self.expect("IDENT", "a variable name")[1]
            ann = None
            if self.peek() == "COLON":
                self.next()
                ann = self.term()
            self.expect("RBRACK", "']'")
            return PLam(var, ann, self.term(), span)
        lhs = self.app()
        if self.peek() == "ARROW":
            span = self.next()[2]
            return PArrow(lhs, self.term(), span)
        return lhs

    def app(self):
        t = self.atom()
        while self.peek() in ("IDENT", "TYPE", "LPAREN"):
            arg = self.atom()
            t = PApp(t, arg, t.span)
        return t

    def atom(self):
        kind, value, span = self.next()
        if kind == "IDENT":
            return PName(value, span)
        if kind == "TYPE":
            return PType(span)
        if kind == "LPAREN":
            t = self.term()
            self.expect("RPAREN", "')'")
            return t
        raise ParseError("expected a term, found %r" % (value or "end of input"), span)


# ---------------------------------------------------------------------------
# elaboration into the three levels
# ---------------------------------------------------------------------------


class _Env:
    def __init__(self, sig, bound=()):
        fam, obj = set(), set()
        if sig is not None:
            for name, classifier in sig:
                if isinstance(classifier, (syn.TypeKind, syn.PiK)):
                    fam.add(name)
                else:
                    obj.add(name)
        self.fam_consts = fam
        self.obj_consts = obj
        self.bound = frozenset(bound)

    def with_bound(self, name):
        env = _Env.__new__(_Env)
        env.fam_consts = self.fam_consts
        env.obj_consts = self.obj_consts
        env.bound = self.bound | {name}
        return env


def _is_kind_shaped(pre):
    if isinstance(pre, PType):
        return True
    if isinstance(pre, PPi):
        return _is_kind_shaped(pre.body)
    if isinstance(pre, PArrow):
        return _is_kind_shaped(pre.cod)
    return False


def _to_object(pre, env):
    if isinstance(pre, PName):
        if pre.name in env.bound:
            return syn.Var(pre.name)
        if pre.name in env.obj_consts:
            return syn.Const(pre.name)
        if pre.name in env.fam_consts:
            raise ScopeError(
                "family constant '%s' cannot appear in an object" % pre.name, pre.span
            )
        raise ScopeError("unknown identifier '%s'" % pre.name, pre.span)
    if isinstance(pre, PApp):
        return syn.App(_to_object(pre.fun, env), _to_object(pre.arg, env))
    if isinstance(pre, PLam):
        if pre.ann is None:
            raise ScopeError(
                "abstraction over '%s' needs a type annotation here" % pre.var, pre.span
            )
        return syn.Lam(
            pre.var,
            _to_family(pre.ann, env),
            _to_object(pre.body, env.with_bound(pre.var)),
        )
    if isinstance(pre, PType):
        raise ScopeError("'type' is a kind, not an object", pre.span)
    raise ScopeError("a dependent function type is not an object", pre.span)


def _to_family(pre, env):
    if isinstance(pre, PName):
        if pre.name in env.fam_consts:
            return syn.FamConst(pre.name)
        if pre.name in env.bound or pre.name in env.obj_consts:
            raise ScopeError("'%s' is not a type family" % pre.name, pre.span)
        raise ScopeError("unknown identifier '%s'" % pre.name, pre.span)
    if isinstance(pre, PApp):
        return syn.FamApp(_to_family(pre.fun, env), _to_object(pre.arg, env))
    if isinstance(pre, PPi):
        return syn.Pi(
            pre.var,
            _to_family(pre.dom, env),
            _to_family(pre.body, env.with_bound(pre.var)),
        )
    if isinstance(pre, PArrow):
        # The sugar variable must not capture anything free in the codomain.
        return syn.Pi(syn.fresh("_"), _to_family(pre.dom, env), _to_family(pre.cod, env))
    if isinstance(pre, PLam):
        raise ScopeError("abstractions cannot appear at the family level", pre.span)
    raise ScopeError("'type' is a kind, not a family", pre.span)


def _to_kind(pre, env):
    if isinstance(pre, PType):
        return syn.TYPE
    if isinstance(pre, PPi):
        return syn.PiK(
            pre.var,
            _to_family(pre.dom, env),
            _to_kind(pre.body, env.with_bound(pre.var)),
        )
    if isinstance(pre, PArrow):
        return syn.PiK(syn.fresh("_"), _to_family(pre.dom, env), _to_kind(pre.cod, env))
    raise ScopeError("expected a kind", getattr(pre, "span", None))


def _to_quasi(pre, env):
    if isinstance(pre, PName):
        if pre.name in env.bound:
            return eq.QCAtom(eq.QAVar(pre.name))
        if pre.name in env.obj_consts:
            return eq.QCAtom(eq.QAConst(pre.name))
        if pre.name in env.fam_consts:
            raise ScopeError(
                "family constant '%s' cannot appear in an object" % pre.name, pre.span
            )
        raise ScopeError("unknown identifier '%s'" % pre.name, pre.span)
    if isinstance(pre, PApp):
        fun = _to_quasi(pre.fun, env)
        if not isinstance(fun, eq.QCAtom):
            raise ScopeError(
                "an abstraction cannot be applied in a quasi-canonical form", pre.span
            )
        return eq.QCAtom(eq.QAApp(fun.atom, _to_quasi(pre.arg, env)))
    if isinstance(pre, PLam):
        if pre.ann is not None:
            raise ScopeError(
                "quasi-canonical forms carry no annotations", pre.span
            )
        return eq.QCLam(pre.var, _to_quasi(pre.body, env.with_bound(pre.var)))
    raise ScopeError("expected a quasi-canonical object", getattr(pre, "span", None))


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def _parse_pre(text):
    parser = _Parser(_lex(text))
    pre = parser.term()
    parser.expect("EOF", "end of input")
    return pre


@dataclass(frozen=True)
class SourceFile:
    """A parsed signature file: declarations in order, the span of each
    declaration's name, and the comment-stripped token stream."""

    signature: object  # Signature
    spans: tuple  # of Span, aligned with the declarations
    tokens: tuple  # of (kind, text, Span)


def parse_source(text):
    """Parse a signature file, keeping source spans for diagnostics.

    Classifiers may mention only earlier constants; duplicate names are
    left for ``check_signature`` to reject.
    """
    tokens = tuple(_lex(text))
    parser = _Parser(list(tokens))
    raw = parser.signature_file()
    decls = []
    spans = []
    for name, pre, span in raw:
        env = _Env(syn.Signature(tuple(decls)))
        if _is_kind_shaped(pre):
            decls.append((name, _to_kind(pre, env)))
        else:
            decls.append((name, _to_family(pre, env)))
        spans.append(span)
    return SourceFile(syn.Signature(tuple(decls)), tuple(spans), tokens)


def parse_signature(text):
    """Parse a signature file into declarations, order preserved."""
    return parse_source(text).signature


parse = parse_signature


def _ctx_names(ctx):
    if ctx is None:
        return ()
    return ctx.names()


def parse_object(text, sig, ctx=None):
    """Parse an object over a signature and an optional ambient context."""
    return _to_object(_parse_pre(text), _Env(_raw_sig(sig), _ctx_names(ctx)))


def parse_family(text, sig, ctx=None):
    return _to_family(_parse_pre(text), _Env(_raw_sig(sig), _ctx_names(ctx)))


def parse_kind(text, sig, ctx=None):
    return _to_kind(_parse_pre(text), _Env(_raw_sig(sig), _ctx_names(ctx)))


def parse_qc(text, sig, ctx_names=()):
    """Parse a quasi-canonical form (annotation-free lambdas)."""
    return _to_quasi(_parse_pre(text), _Env(_raw_sig(sig), tuple(ctx_names)))


def parse_context(text, sig):
    """Parse an ambient context written ``x:A, y:B``; earlier variables
    scope over later classifiers."""
    sig = _raw_sig(sig)
    parser = _Parser(_lex(text))
    g = syn.Context()
    if parser.peek() == "EOF":
        return g
    while True:
        name = parser.expect("IDENT", "a variable name")
        parser.expect("COLON", "':'")
        fam = _to_family(parser.term(), _Env(sig, g.names()))
        if g.declares(name[1]):
            raise ScopeError("variable '%s' declared twice" % name[1], name[2])
        g = g.extended(name[1], fam)
        if parser.peek() == "EOF":
            return g
        parser.expect("COMMA", "','")


def _raw_sig(sig):
    signature = getattr(sig, "signature", None)
    return signature if signature is not None else sig
