"""Compare the compiled kernel twin against the interpreted kernel.

Builds one deterministic workload of well-typed comparison problems, clones
it into each backend's own data types, and times the equality decision
procedure plus weak head normalization on each.

Run from the repository root after an editable install:

    python benchmarks/bench_backends.py [--pairs N] [--repeats K]
"""

import argparse
import time

from lfkit import _backend
from lfkit import erasure as er
from lfkit._gen import TermGen


def build_workload(n_pairs, seed=9):
    gen = TermGen(seed=seed)
    cases = []
    while len(cases) < n_pairs:
        csig = gen.signature()
        g = gen.context(csig)
        for _ in range(10):
            m, n, fam = gen.pair(csig, g, depth=6)
            cases.append(
                (csig.signature, er.erase_context(g), m, n, er.erase_family(fam))
            )
    return cases[:n_pairs]


def prepare(backend, cases):
    t, s = backend["terms"], backend["simple"]
    native = []
    for sig, delta, m, n, tau in cases:
        native.append(
            (
                s.erase_signature(_backend.clone(sig, t)),
                _backend.clone(delta, s),
                _backend.clone(m, t),
                _backend.clone(n, t),
                _backend.clone(tau, s),
            )
        )
    return native


def time_backend(backend, native, repeats):
    equate, reduction = backend["equate"], backend["reduction"]
    best = float("inf")
    verdicts = 0
    for _ in range(repeats):
        start = time.perf_counter()
        verdicts = 0
        for esig, delta, m, n, tau in native:
            out = equate.obj_eq(esig, delta, m, n, tau, reduction.Fuel(10**6))
            verdicts += out.ok
            reduction.whnf(m, reduction.Fuel(10**6))
        best = min(best, time.perf_counter() - start)
    return best, verdicts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=600)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    cases = build_workload(args.pairs)
    print("workload: %d equality problems, best of %d runs" % (args.pairs, args.repeats))

    results = {}
    for name in ("pure", "compiled"):
        try:
            backend = _backend.load_backend(name)
        except ImportError:
            print("%-9s not available (build with `pip install -e .`)" % name)
            continue
        native = prepare(backend, cases)
        secs, verdicts = time_backend(backend, native, args.repeats)
        results[name] = (secs, verdicts)
        print("%-9s %8.1f ms   (%d equal)" % (name, secs * 1e3, verdicts))

    if len(results) == 2:
        if results["pure"][1] != results["compiled"][1]:
            raise SystemExit("backends disagree on the workload!")
        print("speedup: %.2fx" % (results["pure"][0] / results["compiled"][0]))


if __name__ == "__main__":
    main()
