"""The compiled kernel twin must agree with the interpreted kernel."""

import pytest

from lfkit import _backend
from lfkit import erasure as er
from lfkit._gen import TermGen


def _load_pair():
    pure = _backend.load_backend("pure")
    try:
        compiled = _backend.load_backend("compiled")
    except ImportError:
        pytest.skip("compiled kernel twin is not built")
    return pure, compiled


def test_backend_flag_is_reported():
    assert _backend.BACKEND in ("pure", "compiled")


def test_clone_round_trips_terms(std_csig):
    pure = _backend.load_backend("pure")
    sig = std_csig.signature
    cloned = _backend.clone(sig, pure["terms"])
    assert type(cloned).__name__ == "Signature"
    assert [n for n, _ in cloned] == [n for n, _ in sig]


def test_backends_agree_on_equality_and_reduction():
    pure, compiled = _load_pair()
    gen = TermGen(seed=71)
    banked = []
    for _ in range(40):
        csig = gen.signature()
        g = gen.context(csig)
        for _ in range(3):
            m, n, fam = gen.pair(csig, g)
            banked.append((csig.signature, er.erase_context(g), m, n, er.erase_family(fam)))

    def run(backend, sig, delta, m, n, tau):
        t = backend["terms"]
        s = backend["simple"]
        esig = s.erase_signature(_backend.clone(sig, t))
        out = backend["equate"].obj_eq(
            esig,
            _backend.clone(delta, s),
            _backend.clone(m, t),
            _backend.clone(n, t),
            _backend.clone(tau, s),
            backend["reduction"].Fuel(10**6),
        )
        whr = backend["reduction"].whr_step(_backend.clone(m, t))
        return out.ok, whr is None

    for case in banked:
        assert run(pure, *case) == run(compiled, *case)
