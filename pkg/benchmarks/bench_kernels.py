"""Time the compiled and pure-Python kernels against each other.

Usage: python benchmarks/bench_kernels.py [--cells N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time
import timeit

import numpy as np

from burgersnet import kernels
from burgersnet.simulate import run_scenario
from burgersnet.suite import tripod_scenario


def bench_kernel(name: str, cells: int, repeat: int) -> dict:
    k = kernels.get_backend(name)
    rng = np.random.default_rng(0)
    f1, f2, u = rng.uniform(-1, 1, cells), rng.uniform(-1, 1, cells), rng.uniform(-1, 1, cells)
    dx = 1.0 / cells
    kin = timeit.Timer(lambda: k.kinetic_step(f1, f2, 0.1, -0.1, 0.4 * dx, dx, 5e-4, -2.0, 2.0))
    god = timeit.Timer(lambda: k.godunov_step(u, 0.1, -0.1, 0.2))
    n = 200
    return {"kinetic_step": min(kin.repeat(repeat, n)) / n, "godunov_step": min(god.repeat(repeat, n)) / n}


def bench_scenario(name: str, cells: int) -> float:
    s = tripod_scenario("1-2", (1.0, 0.75, 0.5), cells=cells)
    t0 = time.perf_counter()
    run_scenario(s, backend=name)
    return time.perf_counter() - t0


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--cells", type=int, default=1000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    names = [n for n in ("cython", "python") if n in kernels.BACKENDS]
    rows = {n: bench_kernel(n, args.cells, args.repeat) for n in names}
    for n in names:
        rows[n]["tripod run"] = bench_scenario(n, args.cells)
    print(f"{'':14s}" + "".join(f"{n:>14s}" for n in names) + ("      speed-up" if len(names) == 2 else ""))
    for key in ("kinetic_step", "godunov_step", "tripod run"):
        vals = [rows[n][key] for n in names]
        line = f"{key:14s}" + "".join(f"{v * 1e3:12.3f}ms" for v in vals)
        if len(vals) == 2:
            line += f"{vals[1] / vals[0]:13.1f}x"
        print(line)


if __name__ == "__main__":
    main()
