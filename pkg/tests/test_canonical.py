"""Quasi-canonical forms: extraction, labels, and elaboration."""

import pytest

from lfkit import canonical as cn
from lfkit import erasure as er
from lfkit import typecheck as tc
from lfkit._gen import TermGen
from lfkit.canonical import (
    BApp,
    BConst,
    BLam,
    BVar,
    QAApp,
    QAConst,
    QAVar,
    QCAtom,
    QCLam,
    bare_alpha_equal,
    canonicalize,
    elaborate_qc,
    qc_alpha_equal,
    qc_extract,
    qc_to_bare,
    strip_labels,
    tidy_names,
)
from lfkit.erasure import Arrow, Base, SimpleContext, erase_family
from lfkit.errors import CheckError, NotEqualError
from lfkit.syntax import App, Const, Context, FamConst, Lam, Pi, Var, alpha_equal

from oracle import oracle_canonical

IOTA = FamConst("iota")
O = FamConst("o")
EMPTY = Context()
EMPTY_D = SimpleContext()


# ---------------------------------------------------------------------------
# shape oracle: eta-long beta-normal against the erased classifier
# ---------------------------------------------------------------------------


def assert_qc_shape(q, tau, env, consts):
    if isinstance(tau, Arrow):
        assert isinstance(q, QCLam), "function type demands an abstraction"
        env2 = dict(env)
        env2[q.var] = tau.dom
        assert_qc_shape(q.body, tau.cod, env2, consts)
        return
    assert isinstance(q, QCAtom), "base type demands an atomic form"
    result = _spine_type(q.atom, env, consts)
    assert result == tau


def _spine_type(qa, env, consts):
    if isinstance(qa, QAVar):
        return env[qa.name]
    if isinstance(qa, QAConst):
        return consts[qa.name]
    fun_tau = _spine_type(qa.fun, env, consts)
    assert isinstance(fun_tau, Arrow)
    assert_qc_shape(qa.arg, fun_tau.dom, env, consts)
    return fun_tau.cod


def assert_no_beta_redex(m):
    if isinstance(m, App):
        assert not isinstance(m.fun, Lam)
        assert_no_beta_redex(m.fun)
        assert_no_beta_redex(m.arg)
    elif isinstance(m, Lam):
        assert_no_beta_redex(m.body)


# ---------------------------------------------------------------------------
# extraction
# ---------------------------------------------------------------------------


def test_extract_constant(std_csig):
    q = qc_extract(std_csig, EMPTY_D, Const("t"), Const("t"), Base("iota"))
    assert q == QCAtom(QAConst("t"))


def test_extract_eta_expands_function_constant(std_csig):
    q = qc_extract(std_csig, EMPTY_D, Const("f"), Const("f"), Arrow(Base("iota"), Base("iota")))
    q = tidy_names(q)
    assert qc_alpha_equal(q, QCLam("x", QCAtom(QAApp(QAConst("f"), QCAtom(QAVar("x"))))))


def test_extract_sees_through_head_reduction(std_csig):
    m = App(Lam("x", IOTA, Var("x")), Const("t"))
    q = qc_extract(std_csig, EMPTY_D, m, Const("t"), Base("iota"))
    assert q == QCAtom(QAConst("t"))


def test_extract_failure_raises(std_csig):
    with pytest.raises(NotEqualError):
        qc_extract(std_csig, EMPTY_D, Const("t"), Const("u"), Base("iota"))


def test_canonicalize_formula(std_csig, obj):
    q = canonicalize(std_csig, EMPTY, obj("forall ([x:iota] eq x x)"), O)
    want = QCAtom(
        QAApp(
            QAConst("forall"),
            QCLam("x", QCAtom(QAApp(QAApp(QAConst("eq"), QCAtom(QAVar("x"))), QCAtom(QAVar("x"))))),
        )
    )
    assert qc_alpha_equal(q, want)


def test_canonicalize_identity(std_csig):
    q = canonicalize(std_csig, EMPTY, Lam("x", IOTA, Var("x")), Pi("x", IOTA, IOTA))
    assert qc_alpha_equal(q, QCLam("x", QCAtom(QAVar("x"))))


def test_canonicalize_two_eta_layers(std_csig, fam):
    q = canonicalize(std_csig, EMPTY, Const("and"), fam("o -> o -> o"))
    want = QCLam(
        "x",
        QCLam("y", QCAtom(QAApp(QAApp(QAConst("and"), QCAtom(QAVar("x"))), QCAtom(QAVar("y"))))),
    )
    assert qc_alpha_equal(q, want)


def test_canonicalize_rejects_ill_typed(std_csig):
    with pytest.raises(CheckError):
        canonicalize(std_csig, EMPTY, Const("t"), O)


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------


def test_strip_labels_examples(std_csig):
    assert strip_labels(Lam("x", IOTA, Var("x"))) == BLam("x", BVar("x"))
    assert strip_labels(Const("c")) == BConst("c")
    m = Lam("x", IOTA, App(App(Const("eq"), Var("x")), Var("x")))
    assert strip_labels(m) == BLam(
        "x", BApp(BApp(BConst("eq"), BVar("x")), BVar("x"))
    )


def test_elaborate_reads_label_off_the_pi(std_csig):
    q = QCLam("x", QCAtom(QAVar("x")))
    n = elaborate_qc(std_csig, EMPTY, q, Pi("y", IOTA, IOTA))
    assert alpha_equal(n, Lam("x", IOTA, Var("x")))


def test_elaborate_fills_binder_type_from_argument_position(std_csig, obj):
    q = QCAtom(
        QAApp(
            QAConst("forall"),
            QCLam("x", QCAtom(QAApp(QAApp(QAConst("eq"), QCAtom(QAVar("x"))), QCAtom(QAVar("x"))))),
        )
    )
    n = elaborate_qc(std_csig, EMPTY, q, O)
    assert alpha_equal(n, obj("forall ([x:iota] eq x x)"))
    assert tc.check_object(std_csig, EMPTY, n, O) is None


def test_elaborate_shape_mismatch(std_csig):
    with pytest.raises(CheckError):
        elaborate_qc(std_csig, EMPTY, QCLam("x", QCAtom(QAVar("x"))), IOTA)


def test_elaborate_atomic_at_function_type_rejected(std_csig, fam):
    with pytest.raises(CheckError):
        elaborate_qc(std_csig, EMPTY, QCAtom(QAConst("f")), fam("iota -> iota"))


def test_elaborate_wrong_spine_type_rejected(std_csig):
    with pytest.raises(CheckError):
        elaborate_qc(std_csig, EMPTY, QCAtom(QAConst("t")), O)


# ---------------------------------------------------------------------------
# invariants on generated terms
# ---------------------------------------------------------------------------


def _sessions(seed, n):
    gen = TermGen(seed=seed)
    for _ in range(n):
        csig = gen.signature()
        g = gen.context(csig)
        yield gen, csig, g


def test_qc_characterizes_equality():
    for gen, csig, g in _sessions(41, 40):
        for _ in range(3):
            m, n, fam = gen.pair(csig, g)
            verdict = tc.def_equal_objects(csig, g, m, n, fam).ok
            qm = canonicalize(csig, g, m, fam)
            qn = canonicalize(csig, g, n, fam)
            assert verdict == qc_alpha_equal(qm, qn)


def test_round_trip_through_elaboration():
    for gen, csig, g in _sessions(42, 40):
        m, fam = gen.typed_term(csig, g)
        q = canonicalize(csig, g, m, fam)
        n = elaborate_qc(csig, g, q, fam)
        assert tc.check_object(csig, g, n, fam) is None
        assert qc_alpha_equal(canonicalize(csig, g, n, fam), q)
        assert bare_alpha_equal(strip_labels(n), qc_to_bare(q))
        assert tc.def_equal_objects(csig, g, m, n, fam).ok


def test_canonical_shapes_are_eta_long_beta_normal():
    for gen, csig, g in _sessions(43, 40):
        m, fam = gen.typed_term(csig, g)
        q = canonicalize(csig, g, m, fam)
        env = {name: erase_family(f) for name, f in g}
        assert_qc_shape(q, erase_family(fam), env, csig.erased().obj_consts)


def test_elaborated_forms_have_no_redex():
    for gen, csig, g in _sessions(44, 30):
        m, fam = gen.typed_term(csig, g)
        n = elaborate_qc(csig, g, canonicalize(csig, g, m, fam), fam)
        assert_no_beta_redex(n)


def test_canonical_agrees_with_normalization_oracle():
    for gen, csig, g in _sessions(45, 40):
        m, fam = gen.typed_term(csig, g)
        q = canonicalize(csig, g, m, fam)
        assert bare_alpha_equal(qc_to_bare(q), oracle_canonical(csig, g, m, fam))
