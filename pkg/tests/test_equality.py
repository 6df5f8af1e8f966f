"""Type-directed and structural equality."""

from lfkit import equality as eq
from lfkit import erasure as er
from lfkit import typecheck as tc
from lfkit._gen import TermGen
from lfkit.erasure import TYPE_MINUS, Arrow, ArrowK, Base, SimpleContext, erase_context, erase_family
from lfkit.reduction import whr_step
from lfkit.syntax import App, Const, Context, FamApp, FamConst, Lam, Pi, PiK, TYPE, Var

from oracle import oracle_equal

IOTA = FamConst("iota")
O = FamConst("o")
EMPTY = SimpleContext()


# ---------------------------------------------------------------------------
# object equality
# ---------------------------------------------------------------------------


def test_constant_reflexive_at_base(std_csig):
    r = eq.obj_eq(std_csig, EMPTY, Const("t"), Const("t"), Base("iota"))
    assert r.ok


def test_eta_equality_via_extensionality(std_csig):
    m = Lam("x", IOTA, App(Const("f"), Var("x")))
    r = eq.obj_eq(std_csig, EMPTY, m, Const("f"), Arrow(Base("iota"), Base("iota")))
    assert r.ok


def test_distinct_constants_fail(std_csig):
    r = eq.obj_eq(std_csig, EMPTY, Const("t"), Const("u"), Base("iota"))
    assert not r.ok
    assert "t" in r.mismatch.reason and "u" in r.mismatch.reason


def test_beta_redex_reduced_before_comparison(std_csig):
    m = App(Lam("x", IOTA, Var("x")), Const("t"))
    r = eq.obj_eq(std_csig, EMPTY, m, Const("t"), Base("iota"))
    assert r.ok


def test_structural_variable_synthesizes_context_type(std_csig):
    d = SimpleContext((("x", Base("iota")),))
    r = eq.obj_eq_structural(std_csig, d, Var("x"), Var("x"))
    assert r.ok
    assert r.classifier == Base("iota")


def test_structural_spine_synthesizes_result(std_csig):
    m = App(App(Const("eq"), Const("t")), App(Const("f"), Const("u")))
    r = eq.obj_eq_structural(std_csig, EMPTY, m, m)
    assert r.ok
    assert r.classifier == Base("o")


def test_structural_unbound_variable_reports(std_csig):
    d = SimpleContext((("x", Base("iota")),))
    r = eq.obj_eq_structural(std_csig, d, Var("y"), Var("y"))
    assert not r.ok
    assert "unbound" in r.mismatch.reason


def test_mismatch_path_points_into_the_spine(std_csig):
    m = App(Const("f"), Const("t"))
    n = App(Const("f"), Const("u"))
    r = eq.obj_eq(std_csig, EMPTY, m, n, Base("iota"))
    assert not r.ok
    assert r.mismatch.path == ("arg",)


def test_lambda_at_base_type_is_rejected(std_csig):
    lam = Lam("x", IOTA, Var("x"))
    r = eq.obj_eq_structural(std_csig, EMPTY, lam, lam)
    assert not r.ok


# ---------------------------------------------------------------------------
# family and kind equality
# ---------------------------------------------------------------------------


def test_reflexive_pi_family(std_csig):
    fam = Pi("x", IOTA, O)
    assert eq.fam_eq(std_csig, EMPTY, fam, fam, TYPE_MINUS).ok


def test_family_argument_compared_after_reduction(std_csig):
    a = FamApp(FamConst("p"), App(Lam("x", IOTA, Var("x")), Const("t")))
    b = FamApp(FamConst("p"), Const("t"))
    assert eq.fam_eq(std_csig, EMPTY, a, b, TYPE_MINUS).ok


def test_pi_against_atomic_fails(std_csig):
    assert not eq.fam_eq(std_csig, EMPTY, Pi("x", IOTA, O), O, TYPE_MINUS).ok


def test_dependent_domains_must_match(std_csig):
    a = Pi("x", IOTA, O)
    b = Pi("x", O, O)
    r = eq.fam_eq(std_csig, EMPTY, a, b, TYPE_MINUS)
    assert not r.ok
    assert r.mismatch.path[0] == "dom"


def test_underapplied_family_compared_at_its_kind(std_csig):
    p = FamConst("p")
    r = eq.fam_eq(std_csig, EMPTY, p, p, ArrowK(Base("iota"), TYPE_MINUS))
    assert r.ok


def test_structural_family_constant_synthesizes_kind(std_csig):
    r = eq.fam_eq_structural(std_csig, EMPTY, FamConst("p"), FamConst("p"))
    assert r.ok
    assert r.classifier == ArrowK(Base("iota"), TYPE_MINUS)


def test_structural_family_application(std_csig):
    a = FamApp(FamConst("p"), Const("t"))
    r = eq.fam_eq_structural(std_csig, EMPTY, a, a)
    assert r.ok
    assert r.classifier == TYPE_MINUS


def test_structural_family_distinct_heads(std_csig):
    a = FamApp(FamConst("p"), Const("t"))
    b = FamApp(FamConst("iota"), Const("t"))
    assert not eq.fam_eq_structural(std_csig, EMPTY, a, b).ok


def test_kind_eq_examples(std_csig):
    assert eq.kind_eq(std_csig, EMPTY, TYPE, TYPE).ok
    k = PiK("x", IOTA, TYPE)
    assert eq.kind_eq(std_csig, EMPTY, k, PiK("y", IOTA, TYPE)).ok
    assert not eq.kind_eq(std_csig, EMPTY, TYPE, k).ok


def test_kind_eq_domains_compared(std_csig):
    a = PiK("x", IOTA, TYPE)
    b = PiK("x", O, TYPE)
    assert not eq.kind_eq(std_csig, EMPTY, a, b).ok


# ---------------------------------------------------------------------------
# algebraic properties on generated well-typed terms
# ---------------------------------------------------------------------------


def _sessions(seed, n_sessions):
    gen = TermGen(seed=seed)
    for _ in range(n_sessions):
        csig = gen.signature()
        g = gen.context(csig)
        yield gen, csig, g


def test_symmetry_on_generated_pairs():
    for gen, csig, g in _sessions(2, 40):
        delta = erase_context(g)
        for _ in range(4):
            m, n, fam = gen.pair(csig, g)
            tau = erase_family(fam)
            assert eq.obj_eq(csig, delta, m, n, tau).ok == eq.obj_eq(csig, delta, n, m, tau).ok


def test_transitivity_on_generated_triples():
    applicable = 0
    for gen, csig, g in _sessions(3, 40):
        delta = erase_context(g)
        for _ in range(4):
            m, fam = gen.typed_term(csig, g)
            n = gen.equal_variant(csig, g, m)
            o = gen.equal_variant(csig, g, n)
            tau = erase_family(fam)
            if eq.obj_eq(csig, delta, m, n, tau).ok and eq.obj_eq(csig, delta, n, o, tau).ok:
                applicable += 1
                assert eq.obj_eq(csig, delta, m, o, tau).ok
    assert applicable >= 100


def test_structural_determinacy_and_normality():
    for gen, csig, g in _sessions(4, 30):
        delta = erase_context(g)
        for _ in range(4):
            m, n, _fam = gen.pair(csig, g)
            from lfkit.reduction import whnf

            m, n = whnf(m), whnf(n)
            r1 = eq.obj_eq_structural(csig, delta, m, n)
            r2 = eq.obj_eq_structural(csig, delta, m, n)
            if r1.ok:
                assert r1.classifier == r2.classifier
                assert whr_step(m) is None and whr_step(n) is None


def test_weakening_preserves_outcomes():
    from lfkit.syntax import fresh

    for gen, csig, g in _sessions(5, 30):
        delta = erase_context(g)
        for _ in range(3):
            m, n, fam = gen.pair(csig, g)
            tau = erase_family(fam)
            before = eq.obj_eq(csig, delta, m, n, tau).ok
            entries = list(delta.entries)
            entries.insert(gen.rng.randint(0, len(entries)), (fresh("w"), Base("iota")))
            widened = SimpleContext(tuple(entries))
            assert eq.obj_eq(csig, widened, m, n, tau).ok == before


def test_reflexivity_on_well_typed_terms():
    for gen, csig, g in _sessions(6, 40):
        delta = erase_context(g)
        for _ in range(4):
            m, _fam = gen.typed_term(csig, g)
            fam = tc.synth_object(csig, g, m)
            assert eq.obj_eq(csig, delta, m, m, erase_family(fam)).ok


def test_oracle_agreement_smoke():
    for gen, csig, g in _sessions(7, 40):
        for _ in range(3):
            m, n, fam = gen.pair(csig, g)
            verdict = tc.def_equal_objects(csig, g, m, n, fam).ok
            assert verdict == oracle_equal(csig, g, m, n, fam)


def test_successful_structural_outcome_carries_classifier():
    for gen, csig, g in _sessions(8, 20):
        delta = erase_context(g)
        m, n, _ = gen.pair(csig, g)
        from lfkit.reduction import whnf

        r = eq.obj_eq_structural(csig, delta, whnf(m), whnf(n))
        if r.ok:
            assert r.classifier is not None
