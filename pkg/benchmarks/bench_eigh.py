"""Compare the compiled and pure-Python Jacobi kernels.

    python benchmarks/bench_eigh.py [--n 2000] [--repeat 3]

Times raw 4x4 Hermitian eigensolves, full concurrence evaluations (two
eigensolves each), and a whole report, for every available backend.
"""
import argparse
import time

import numpy as np

from bellsym import linalg
from bellsym.constraints import full_report
from bellsym.derivation import semiclassical_state
from bellsym.entanglement import concurrence


def random_states(rng, n):
    x = rng.normal(size=(n, 4, 4)) + 1j * rng.normal(size=(n, 4, 4))
    h = x @ np.conj(np.transpose(x, (0, 2, 1)))
    return h / np.trace(h, axis1=1, axis2=2)[:, None, None]


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--n", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    states = random_states(np.random.default_rng(0), args.n)
    rho = semiclassical_state()
    rows = []
    for name in linalg.available_backends():
        linalg.use_backend(name)
        t_eigh = best_of(args.repeat, lambda: [linalg.hermitian_eigh(m) for m in states])
        t_conc = best_of(args.repeat, lambda: [concurrence(m) for m in states])
        t_report = best_of(args.repeat, lambda: full_report(rho))
        rows.append((name, t_eigh, t_conc, t_report))
    t_numpy = best_of(args.repeat, lambda: [np.linalg.eigh(m) for m in states])

    print(f"{args.n} random 4x4 states, best of {args.repeat}")
    print(f"{'backend':<10}{'eigh us/call':>14}{'concurrence us':>16}{'full_report ms':>16}")
    for name, t_eigh, t_conc, t_report in rows:
        print(f"{name:<10}{1e6 * t_eigh / args.n:>14.1f}{1e6 * t_conc / args.n:>16.1f}{1e3 * t_report:>16.2f}")
    print(f"{'numpy':<10}{1e6 * t_numpy / args.n:>14.1f}{'-':>16}{'-':>16}")
    if len(rows) == 2:
        (_, pe, pc, pr), (_, ee, ec, er) = sorted(rows, key=lambda r: r[0] != "python")
        print(f"speedup ext/python: eigh {pe / ee:.1f}x, concurrence {pc / ec:.1f}x, full_report {pr / er:.1f}x")


if __name__ == "__main__":
    main()
