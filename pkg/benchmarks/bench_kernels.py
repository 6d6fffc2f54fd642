#!/usr/bin/env python3
"""Time the compiled kernels against their pure-Python twins.

Run ``python benchmarks/bench_kernels.py --nodes 400 --repeat 5``.
"""
import argparse
import random
import statistics
import timeit

from pathweaver import _pycore

try:
    from pathweaver import _core
except ImportError:
    _core = None


def random_csr(rng: random.Random, n: int, p: float):
    """Random DAG on 0..n-1 (edges only go forward) in CSR form."""
    indptr, indices = [0], []
    for u in range(n):
        indices.extend(v for v in range(u + 1, n) if rng.random() < p)
        indptr.append(len(indices))
    return indptr, indices


def path_workload(mod, graph, cost, pairs, hops):
    indptr, indices = graph
    return lambda: [mod.hop_bounded_path(indptr, indices, cost, s, t, hops) for s, t in pairs]


def lev_workload(mod, seqs):
    return lambda: [mod.levenshtein(a, b) for a, b in seqs]


def best_of(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=300)
    ap.add_argument("--density", type=float, default=0.03)
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--hops", type=int, default=10)
    ap.add_argument("--seq-len", type=int, default=12)
    ap.add_argument("--seqs", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _core is None:
        print("compiled extension not built; only the Python kernels are available")
    rng = random.Random(args.seed)
    graph = random_csr(rng, args.nodes, args.density)
    cost = [rng.choice([0.0, rng.random()]) for _ in range(args.nodes)]
    pairs = [(rng.randrange(args.nodes), rng.randrange(args.nodes)) for _ in range(args.pairs)]
    seqs = [([rng.randrange(8) for _ in range(rng.randint(1, args.seq_len))],
             [rng.randrange(8) for _ in range(rng.randint(1, args.seq_len))]) for _ in range(args.seqs)]

    cases = {
        f"hop_bounded_path x{args.pairs} (n={args.nodes}, k={args.hops})":
            lambda mod: path_workload(mod, graph, cost, pairs, args.hops),
        f"levenshtein x{args.seqs} (len<={args.seq_len})": lambda mod: lev_workload(mod, seqs),
    }
    print(f"{'kernel':<48} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, make in cases.items():
        py = best_of(make(_pycore), args.repeat)
        if _core is None:
            print(f"{name:<48} {py:>10.4f} {'-':>10} {'-':>8}")
            continue
        if _norm(make(_pycore)()) != _norm(make(_core)()):
            raise SystemExit(f"{name}: backends disagree")
        cy = best_of(make(_core), args.repeat)
        print(f"{name:<48} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")
    return 0


def _norm(results):
    """Compiled and Python paths may differ in sequence type; compare as tuples."""
    return [(tuple(r[0]), r[1]) if isinstance(r, tuple) else r for r in results]


if __name__ == "__main__":
    raise SystemExit(main())
