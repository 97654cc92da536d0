"""Independent reference implementations used only by the tests.

Nothing here imports the package's counting or series code.
"""
import math
from collections import Counter


def partitions(n, max_part=None):
    """All partitions of n as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def count_by_multiplicity(n, allowed):
    """P(A; n) by filtering every partition of n; ``allowed(d)`` tests membership."""
    return sum(all(allowed(d) for d in Counter(lam).values())
               for lam in partitions(n))


def count_by_parts(n, allowed):
    """Q(B; n) by filtering every partition of n; ``allowed(x)`` tests membership."""
    return sum(all(allowed(x) for x in lam) for lam in partitions(n))


def poly_mul(f, g, N):
    out = [0] * (N + 1)
    for i, a in enumerate(f[:N + 1]):
        if a:
            for j, b in enumerate(g[:N + 1 - i]):
                out[i + j] += a * b
    return out


def geometric(b, N):
    """Coefficients of 1/(1 - q^b) up to q^N."""
    return [1 if i % b == 0 else 0 for i in range(N + 1)]


def binomial(b, N):
    """Coefficients of 1 - q^b up to q^N."""
    out = [0] * (N + 1)
    out[0] = 1
    if b <= N:
        out[b] -= 1
    return out


def naive_product(factors, N):
    """Expand prod (1 - q^b)^sign by schoolbook multiplication."""
    out = [1] + [0] * N
    for f in factors:
        out = poly_mul(out, binomial(f, N) if f > 0 else geometric(-f, N), N)
    return out


def residues_intersect(c1, c2):
    """Disjointness by intersecting residue lists lifted to a common modulus."""
    def residue_list(c):
        if c.excluded is None:
            return c.base, {0}
        L = math.lcm(c.base, c.excluded)
        return L, {r for r in range(0, L, c.base) if r % c.excluded}

    L1, R1 = residue_list(c1)
    L2, R2 = residue_list(c2)
    L = math.lcm(L1, L2)
    lift1 = {r + L1 * t for r in R1 for t in range(L // L1)}
    lift2 = {r + L2 * t for r in R2 for t in range(L // L2)}
    return bool(lift1 & lift2)
