"""Compare the numba and numpy search kernels.

Each backend runs in its own interpreter (the backend is fixed at import time
by EQUIDISSECT_KERNELS). Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
import numpy as np
from equidissect import _kernels
from equidissect.search import SearchSpace, enumerate_equidissections

repeat = int(sys.argv[1])
sq = ((0, 0), (1, 0), (1, 1), (0, 1))
enumerate_equidissections(SearchSpace(sq, 2, 1))  # warm-up (jit compile / cache load)
out = {"backend": _kernels.BACKEND}
for label, pieces, d in (("square n=3 D=12", 3, 12), ("square n=4 D=4", 4, 4), ("square n=4 D=2", 4, 2)):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        r = enumerate_equidissections(SearchSpace(sq, pieces, d))
        best = min(best, time.perf_counter() - t0)
    out[label] = {"seconds": round(best, 4), "found": len(r.dissections), "nodes": r.nodes}

rng = np.random.default_rng(0)
pts = np.array(sorted({tuple(p) for p in rng.integers(0, 20, size=(120, 2)).tolist()}), dtype=np.int64)
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    tris = _kernels.triangles_with_area(pts, 8)
    alive = _kernels.disjoint_from(tris, tris[0])
    hit = _kernels.perturbed_in_triangles(tris, 5, 5, 1, 2)
    best = min(best, time.perf_counter() - t0)
out["raw kernels (120 points)"] = {"seconds": round(best, 4), "triangles": int(len(tris)),
                                   "disjoint": int(alive.sum()), "containing": int(np.asarray(hit).sum())}
print(json.dumps(out))
"""


def run(backend: str, repeat: int) -> dict:
    env = dict(os.environ, EQUIDISSECT_KERNELS=backend)
    proc = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    results = {b: run(b, args.repeat) for b in ("numpy", "numba")}
    if results["numba"]["backend"] != "numba":
        print("numba is not installed; both runs used numpy", file=sys.stderr)
    keys = [k for k in results["numpy"] if k != "backend"]
    print(f"{'workload':28} {'numpy s':>9} {'numba s':>9} {'speedup':>8}  same result")
    for k in keys:
        a, b = results["numpy"][k], results["numba"][k]
        same = {x: y for x, y in a.items() if x != "seconds"} == {x: y for x, y in b.items() if x != "seconds"}
        speed = a["seconds"] / b["seconds"] if b["seconds"] else float("inf")
        print(f"{k:28} {a['seconds']:9.4f} {b['seconds']:9.4f} {speed:7.1f}x  {same}")


if __name__ == "__main__":
    main()
