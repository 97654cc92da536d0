"""Time the series engine on large truncated products."""
import argparse
import time

from partition_crt.identities import build_preset
from partition_crt.series import product_of_factors


def bench(label, factors, N, modulus=None, repeat=3):
    best = min(_once(factors, N, modulus) for _ in range(repeat))
    ring = "Z" if modulus is None else f"Z/{modulus}"
    print(f"{label:<40} N={N:<7} ring={ring:<14} {best:.3f} s")


def _once(factors, N, modulus):
    t = time.perf_counter()
    product_of_factors(factors, N, modulus)
    return time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--factors", type=int, default=200)
    args = ap.parse_args()
    N, F = args.n, args.factors
    inst = build_preset("subbarao", 3, 2)
    typical = (inst.generating_factors(N) * F)[:F]
    bench("identity factors", typical, N)
    bench("1/(1-q^j), j <= F", [-j for j in range(1, F + 1)], N)
    bench("1/(1-q^j), j <= F", [-j for j in range(1, F + 1)], N, 10**9 + 7)


if __name__ == "__main__":
    main()
