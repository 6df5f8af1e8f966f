"""The first-order encoding and its bijection."""

import random

import pytest

from lfkit import adequacy_fol as fol
from lfkit import canonical as cn
from lfkit import typecheck as tc
from lfkit.canonical import QAApp, QAConst, QAVar, QCAtom, QCLam, qc_alpha_equal
from lfkit.errors import ParseError
from lfkit.frontend import printer as pr
from lfkit.syntax import Context, FamConst, Signature, TYPE, alpha_equal

IOTA = FamConst("iota")
O = FamConst("o")


# ---------------------------------------------------------------------------
# random first-order expressions
# ---------------------------------------------------------------------------


def gen_table(rng, max_symbols=3):
    functions = [("c0", 0)]  # always one constant so closed terms exist
    for i in range(rng.randint(0, max_symbols)):
        functions.append(("g%d" % i, rng.randint(0, 3)))
    return fol.FolSignatureTable(tuple(functions))


def gen_term(rng, tbl, ctx, depth):
    atoms = [fol.FolVar(x) for x in ctx] + [
        fol.FolFun(n, ()) for n, a in tbl.functions if a == 0
    ]
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice(atoms)
    name, arity = rng.choice(tbl.functions)
    return fol.FolFun(name, tuple(gen_term(rng, tbl, ctx, depth - 1) for _ in range(arity)))


def gen_formula(rng, tbl, ctx, depth):
    if depth <= 0:
        return fol.FolEq(gen_term(rng, tbl, ctx, 1), gen_term(rng, tbl, ctx, 1))
    roll = rng.random()
    if roll < 0.35:
        return fol.FolAnd(gen_formula(rng, tbl, ctx, depth - 1), gen_formula(rng, tbl, ctx, depth - 1))
    if roll < 0.7:
        var = rng.choice(["x1", "x2", "x3", "x4"])  # shadowing welcome
        return fol.FolForall(var, gen_formula(rng, tbl, list(ctx) + [var], depth - 1))
    return fol.FolEq(gen_term(rng, tbl, ctx, depth - 1), gen_term(rng, tbl, ctx, depth - 1))


# ---------------------------------------------------------------------------
# signature generation
# ---------------------------------------------------------------------------


def test_empty_table_gives_the_five_core_constants():
    sig = fol.gen_lf_signature(fol.FolSignatureTable())
    assert [name for name, _ in sig] == ["iota", "o", "eq", "and", "forall"]
    assert tc.check_signature(sig)


def test_unary_symbol(fam=None):
    sig = fol.gen_lf_signature(fol.FolSignatureTable((("f", 1),)))
    classifier = sig.lookup("f")
    from lfkit.syntax import Pi

    assert alpha_equal(classifier, Pi("x", IOTA, IOTA))


def test_binary_symbol():
    sig = fol.gen_lf_signature(fol.FolSignatureTable((("g", 2),)))
    from lfkit.syntax import Pi

    assert alpha_equal(sig.lookup("g"), Pi("x", IOTA, Pi("y", IOTA, IOTA)))


def test_table_rejects_reserved_and_duplicates():
    with pytest.raises(ValueError):
        fol.FolSignatureTable((("forall", 1),))
    with pytest.raises(ValueError):
        fol.FolSignatureTable((("f", 1), ("f", 2)))


def test_derive_table_round_trips():
    tbl = fol.FolSignatureTable((("c0", 0), ("g0", 2)))
    assert fol.derive_table(fol.gen_lf_signature(tbl)) == tbl


def test_derive_table_rejects_foreign_constants(std_sig):
    with pytest.raises(fol.AdequacyError):
        fol.derive_table(std_sig)  # std signature has p : {x:iota} type


# ---------------------------------------------------------------------------
# encode / decode
# ---------------------------------------------------------------------------


def test_encode_reflexive_equation():
    tbl = fol.FolSignatureTable()
    e = fol.FolForall("x", fol.FolEq(fol.FolVar("x"), fol.FolVar("x")))
    q = fol.encode(tbl, [], e)
    want = QCAtom(
        QAApp(
            QAConst("forall"),
            QCLam("x", QCAtom(QAApp(QAApp(QAConst("eq"), QCAtom(QAVar("x"))), QCAtom(QAVar("x"))))),
        )
    )
    assert qc_alpha_equal(q, want)


def test_encode_variable():
    q = fol.encode(fol.FolSignatureTable(), ["x"], fol.FolVar("x"))
    assert q == QCAtom(QAVar("x"))


def test_encode_conjunction_of_swapped_equations():
    tbl = fol.FolSignatureTable()
    e = fol.FolAnd(
        fol.FolEq(fol.FolVar("x"), fol.FolVar("y")),
        fol.FolEq(fol.FolVar("y"), fol.FolVar("x")),
    )
    q = fol.encode(tbl, ["x", "y"], e)
    eq_ = lambda a, b: QCAtom(QAApp(QAApp(QAConst("eq"), QCAtom(QAVar(a))), QCAtom(QAVar(b))))
    want = QCAtom(QAApp(QAApp(QAConst("and"), eq_("x", "y")), eq_("y", "x")))
    assert q == want


def test_encode_unknown_symbol_and_arity():
    tbl = fol.FolSignatureTable((("f", 1),))
    with pytest.raises(fol.AdequacyError):
        fol.encode(tbl, [], fol.FolFun("nope", ()))
    with pytest.raises(fol.AdequacyError):
        fol.encode(tbl, [], fol.FolFun("f", ()))
    with pytest.raises(fol.AdequacyError):
        fol.encode(tbl, [], fol.FolVar("loose"))


def test_decode_examples():
    tbl = fol.FolSignatureTable()
    e = fol.FolForall("x", fol.FolEq(fol.FolVar("x"), fol.FolVar("x")))
    assert fol.decode(tbl, [], fol.encode(tbl, [], e), "o") == e
    assert fol.decode(tbl, ["x"], QCAtom(QAVar("x")), "iota") == fol.FolVar("x")


def test_decode_underapplied_connective():
    tbl = fol.FolSignatureTable()
    q = QCAtom(QAApp(QAConst("and"), QCAtom(QAVar("x"))))
    with pytest.raises(fol.AdequacyError):
        fol.decode(tbl, ["x"], q, "o")


def test_decode_rejects_lambda_at_base():
    with pytest.raises(fol.AdequacyError):
        fol.decode(fol.FolSignatureTable(), [], QCLam("x", QCAtom(QAVar("x"))), "o")


def test_decode_rejects_connective_at_term_level():
    tbl = fol.FolSignatureTable()
    q = QCAtom(QAConst("eq"))
    with pytest.raises(fol.AdequacyError):
        fol.decode(tbl, [], q, "iota")


# ---------------------------------------------------------------------------
# bijection, typability, compositionality
# ---------------------------------------------------------------------------


def test_bijection_on_random_formulas():
    rng = random.Random(51)
    for _ in range(120):
        tbl = gen_table(rng)
        ctx = ["x1", "x2"][: rng.randint(0, 2)]
        e = gen_formula(rng, tbl, ctx, rng.randint(0, 4))
        q = fol.encode(tbl, ctx, e)
        assert fol.decode(tbl, ctx, q, "o") == e


def test_encoded_forms_elaborate_and_check():
    rng = random.Random(52)
    for _ in range(40):
        tbl = gen_table(rng)
        csig = tc.check_signature(fol.gen_lf_signature(tbl))
        ctx_names = ["x1", "x2"][: rng.randint(0, 2)]
        g = Context(tuple((x, IOTA) for x in ctx_names))
        e = gen_formula(rng, tbl, ctx_names, 3)
        q = fol.encode(tbl, ctx_names, e)
        n = cn.elaborate_qc(csig, g, q, O)
        assert tc.check_object(csig, g, n, O) is None
        assert qc_alpha_equal(cn.canonicalize(csig, g, n, O), q)


def test_encode_commutes_with_substitution():
    rng = random.Random(53)
    from lfkit.syntax import subst_single

    hits = 0
    for _ in range(60):
        tbl = gen_table(rng)
        ctx_names = ["x1", "x2"]
        e = gen_formula(rng, tbl, ctx_names, 3)
        if "x1" not in fol.fol_free_names(e):
            continue
        t = gen_term(rng, tbl, ["x2"], 2)
        csig = tc.check_signature(fol.gen_lf_signature(tbl))
        g = Context(tuple((x, IOTA) for x in ctx_names))
        n_e = cn.elaborate_qc(csig, g, fol.encode(tbl, ctx_names, e), O)
        n_t = cn.elaborate_qc(csig, g, fol.encode(tbl, ctx_names, t), IOTA)
        substituted = subst_single(n_e, "x1", n_t)
        direct = fol.encode(tbl, ctx_names, fol.fol_subst(e, "x1", t))
        assert qc_alpha_equal(cn.canonicalize(csig, g, substituted, O), direct)
        hits += 1
    assert hits >= 20


# ---------------------------------------------------------------------------
# the formula text format
# ---------------------------------------------------------------------------


def test_parse_formula_examples():
    tbl = fol.FolSignatureTable((("f", 2), ("c", 0)))
    e = fol.parse_formula(tbl, "forall x. f(x, c) = x & c = c")
    assert e == fol.FolForall(
        "x",
        fol.FolAnd(
            fol.FolEq(fol.FolFun("f", (fol.FolVar("x"), fol.FolFun("c", ()))), fol.FolVar("x")),
            fol.FolEq(fol.FolFun("c", ()), fol.FolFun("c", ())),
        ),
    )


def test_parse_formula_parenthesized():
    tbl = fol.FolSignatureTable()
    e = fol.parse_formula(tbl, "(x = x) & (forall y. y = x)")
    assert e == fol.FolAnd(
        fol.FolEq(fol.FolVar("x"), fol.FolVar("x")),
        fol.FolForall("y", fol.FolEq(fol.FolVar("y"), fol.FolVar("x"))),
    )


def test_parse_formula_errors():
    tbl = fol.FolSignatureTable((("f", 1),))
    with pytest.raises(ParseError):
        fol.parse_formula(tbl, "forall . x = x")
    with pytest.raises(ParseError):
        fol.parse_formula(tbl, "x =")
    with pytest.raises(fol.AdequacyError):
        fol.parse_formula(tbl, "f = f")  # f needs arguments


def test_formula_print_parse_round_trip():
    rng = random.Random(54)
    for _ in range(150):
        tbl = gen_table(rng)
        ctx = ["x1", "x2"][: rng.randint(0, 2)]
        e = gen_formula(rng, tbl, ctx, rng.randint(0, 4))
        assert fol.parse_formula(tbl, fol.print_formula(e)) == e
