"""Compare the compiled and pure-Python kernel backends.

Kernel timings call both modules directly.  End-to-end timings run the
engine and the oracle on the seeded sample in a subprocess per backend,
since the backend is fixed at import.

    python benchmarks/bench_kernels.py [--cases N] [--repeat R]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from cusp_char import _pykernels

try:
    from cusp_char import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = """
import json, sys, time
from cusp_char import BACKEND
from cusp_char.engine import analyze, validate
from cusp_char.puiseux import puiseux_characteristic
from cusp_char.sampling import sample_cases
cases = sample_cases(int(sys.argv[1]))
t0 = time.perf_counter()
for x, y, _ in cases:
    analyze(x, y)
t1 = time.perf_counter()
for x, y, _ in cases:
    puiseux_characteristic(validate(x, y))
t2 = time.perf_counter()
print(json.dumps({"backend": BACKEND, "engine": t1 - t0, "oracle": t2 - t1}))
"""


def dense_poly(rng, n, bits):
    exps = sorted(rng.sample(range(3 * n), n))
    nums = [rng.choice([-1, 1]) * rng.getrandbits(bits) or 1 for _ in exps]
    return exps, nums


def bench_kernel(mod, a, b, limit, repeat):
    fn = lambda: mod.mul_terms(a[0], a[1], b[0], b[1], limit)
    return min(timeit.repeat(fn, number=20, repeat=repeat)) / 20


def end_to_end(n, pure):
    env = dict(os.environ)
    env.pop("CUSP_CHAR_PURE", None)
    if pure:
        env["CUSP_CHAR_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END, str(n)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(1)

    print("mul_terms, seconds per call")
    print(f"{'terms':>6} {'bits':>5} {'python':>11} {'cython':>11} {'speedup':>8}")
    for n, bits in [(20, 16), (60, 16), (60, 200), (200, 64)]:
        a, b = dense_poly(rng, n, bits), dense_poly(rng, n, bits)
        t_py = bench_kernel(_pykernels, a, b, -1, args.repeat)
        if _ckernels is None:
            print(f"{n:>6} {bits:>5} {t_py:>11.2e} {'n/a':>11}")
            continue
        t_c = bench_kernel(_ckernels, a, b, -1, args.repeat)
        print(f"{n:>6} {bits:>5} {t_py:>11.2e} {t_c:>11.2e} {t_py / t_c:>7.1f}x")

    print(f"\nend to end on {args.cases} seeded cases, seconds")
    rows = [end_to_end(args.cases, pure=True)]
    if _ckernels is not None:
        rows.append(end_to_end(args.cases, pure=False))
    for row in rows:
        print(f"{row['backend']:>7}  engine {row['engine']:.3f}  oracle {row['oracle']:.3f}")


if __name__ == "__main__":
    main()
