"""Compare the compiled and pure-Python polynomial kernels.

Run with ``python3 benchmarks/bench_kernels.py``. Two workloads: random dense
products/quotients, and a full cluster enumeration (which pins the backend
in a subprocess through CLUSTERCRYSTAL_PURE).
"""
import argparse
import json
import os
import random
import subprocess
import sys
import time

from clustercrystal.kernel import backends


def random_poly(rng, nv, nt, lo=-3, hi=3):
    out = {}
    for _ in range(nt):
        k = tuple(rng.randint(lo, hi) for _ in range(nv))
        out[k] = out.get(k, 0) + (rng.randint(1, 9) * rng.choice((-1, 1)))
    return {k: v for k, v in out.items() if v}


def bench_dense(mod, cases, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for a, b, prod in cases:
            mod.mul_dense(a, b)
            mod.div_dense(prod, b)
    return time.perf_counter() - t0


ENUM = ("from clustercrystal import CartanData, initial_seed, enumerate_cluster_variables, BACKEND;"
        "import time; t=time.perf_counter();"
        "n=len(enumerate_cluster_variables(initial_seed(CartanData.parse('{t}'))));"
        "print(BACKEND, n, time.perf_counter()-t)")


def bench_enum(typ, pure):
    env = dict(os.environ)
    if pure:
        env["CLUSTERCRYSTAL_PURE"] = "1"
    else:
        env.pop("CLUSTERCRYSTAL_PURE", None)
    out = subprocess.run([sys.executable, "-c", ENUM.format(t=typ)], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return out[0], int(out[1]), float(out[2])


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--types", default="C4,D5")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rng = random.Random(20240611)
    cases = []
    for _ in range(args.cases):
        nv = rng.randint(4, 10)
        a = random_poly(rng, nv, rng.randint(5, 30))
        b = random_poly(rng, nv, rng.randint(2, 12))
        cases.append((a, b, backends()["python"].mul_dense(a, b)))

    report = {"dense": {}, "enumeration": {}}
    for name, mod in backends().items():
        report["dense"][name] = bench_dense(mod, cases, args.repeat)
    for typ in args.types.split(","):
        row = {}
        for pure in (True, False):
            be, n, secs = bench_enum(typ, pure)
            row[be] = {"variables": n, "seconds": secs}
        report["enumeration"][typ] = row

    if args.json:
        print(json.dumps(report, indent=2))
        return
    print("dense mul+div over %d cases x %d:" % (args.cases, args.repeat))
    for name, secs in report["dense"].items():
        print(f"  {name:7s} {secs:8.3f} s")
    if "cython" in report["dense"]:
        print(f"  speedup {report['dense']['python'] / report['dense']['cython']:.2f}x")
    for typ, row in report["enumeration"].items():
        cells = ", ".join(f"{be} {v['seconds']:.3f} s ({v['variables']} vars)" for be, v in row.items())
        print(f"enumerate {typ}: {cells}")


if __name__ == "__main__":
    main()
