"""Exact counts ``p(n)``, ``P(A; n)`` and ``Q(B; n)``.

Three independent routes are kept apart on purpose: the pentagonal
recurrence for ``p(n)``, the series engine for ``P`` and ``Q``, and
exhaustive enumeration as the small-``n`` oracle.
"""
from __future__ import annotations

import bisect
import csv
import io
import json
from dataclasses import dataclass, field

from .identities import IdentityInstance
from .series import div_binomial, mul_sparse, one
from .sets import MultiplicitySet, ResidueClassUnion
from .errors import OracleScaleExceeded

ORACLE_MAX = 60
JSON_SAFE = 2**53 - 1


def json_int(v: int):
    """Integers beyond double precision travel as decimal strings."""
    return v if -JSON_SAFE <= v <= JSON_SAFE else str(v)


@dataclass(frozen=True)
class CountTable:
    kind: str  # "p", "P" or "Q"
    method: str  # "pentagonal", "series" or "brute-force"
    values: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self):
        unit = 1 if self.modulus is None else 1 % self.modulus
        if self.values and self.values[0] != unit:
            raise ValueError(f"a count table must start with 1, got {self.values[0]}")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(enumerate(self.values))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"kind": self.kind, "method": self.method, "modulus": self.modulus,
                "values": [json_int(v) for v in self.values]}


def partition_p(N: int, modulus: int | None = None) -> CountTable:
    """``p(0..N)`` from Euler's pentagonal-number recurrence."""
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    p = [0] * (N + 1)
    p[0] = 1 % modulus if modulus else 1
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            term = p[n - g]
            if g + k <= n:
                term += p[n - g - k]
            total += term if k % 2 else -term
            k += 1
        p[n] = total % modulus if modulus else total
    return CountTable("p", "pentagonal", tuple(p), modulus)


def count_P(A: MultiplicitySet, N: int, modulus: int | None = None) -> CountTable:
    """Multiply ``1 + sum_{a in A} q^{a t}`` over part sizes ``t = 1..N``."""
    s = one(N, modulus)
    for t in range(1, N + 1):
        exps = [a * t for a in A.elements_upto(N // t)]
        if exps:
            s = mul_sparse(s, exps)
    return CountTable("P", "series", tuple(s.coefficients), modulus)


def count_Q(B: ResidueClassUnion, N: int, modulus: int | None = None) -> CountTable:
    """``prod_{b in B, b <= N} 1/(1 - q^b)``."""
    s = one(N, modulus)
    for b in B.members(N):
        s = div_binomial(s, b)
    return CountTable("Q", "series", tuple(s.coefficients), modulus)


def _check_scale(n: int) -> None:
    if n > ORACLE_MAX:
        raise OracleScaleExceeded(f"brute-force oracle is limited to n <= {ORACLE_MAX}, got {n}")


def brute_P_table(A: MultiplicitySet, N: int) -> CountTable:
    """Enumerate every partition of size ``<= N`` whose multiplicities lie in ``A``."""
    _check_scale(N)
    mults = A.sorted_upto(N)
    counts = [0] * (N + 1)

    def visit(max_part: int, total: int) -> None:
        counts[total] += 1
        room = N - total
        if not mults:
            return
        # choose the next (smaller) part size and its multiplicity
        for t in range(min(max_part, room // mults[0]), 0, -1):
            for a in mults:
                if a * t > room:
                    break
                visit(t - 1, total + a * t)

    visit(N, 0)
    return CountTable("P", "brute-force", tuple(counts))


def brute_Q_table(B: ResidueClassUnion, N: int) -> CountTable:
    """Enumerate non-increasing part sequences from ``B`` with sum ``<= N``."""
    _check_scale(N)
    parts = B.members(N)
    counts = [0] * (N + 1)

    def visit(limit: int, total: int) -> None:
        counts[total] += 1
        hi = bisect.bisect_right(parts, N - total, 0, limit)
        for i in range(hi - 1, -1, -1):
            visit(i + 1, total + parts[i])

    visit(len(parts), 0)
    return CountTable("Q", "brute-force", tuple(counts))


def brute_P(A: MultiplicitySet, n: int) -> int:
    return brute_P_table(A, n)[n]


def brute_Q(B: ResidueClassUnion, n: int) -> int:
    return brute_Q_table(B, n)[n]


@dataclass
class CountReport:
    n_max: int
    oracle_max: int
    passed: bool
    first_failure: int | None = None
    values: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "n_max": self.n_max,
            "oracle_max": self.oracle_max,
            "first_failure": self.first_failure,
            "values": {k: (None if v is None else json_int(v))
                       for k, v in self.values.items()},
        }


def verify_counts(inst: IdentityInstance, N: int, oracle_N: int) -> CountReport:
    """Series ``P`` vs series ``Q`` on ``[0, N]``, and both against the oracles on ``[0, oracle_N]``."""
    if not 0 <= oracle_N <= N:
        raise ValueError(f"need 0 <= oracle_N <= N, got {oracle_N}, {N}")
    sp = count_P(inst.A, N)
    sq = count_Q(inst.B, N)
    bp = brute_P_table(inst.A, oracle_N)
    bq = brute_Q_table(inst.B, oracle_N)
    for n in range(N + 1):
        row = {"series_P": sp[n], "series_Q": sq[n],
               "brute_P": bp[n] if n <= oracle_N else None,
               "brute_Q": bq[n] if n <= oracle_N else None}
        if len({v for v in row.values() if v is not None}) > 1:
            return CountReport(N, oracle_N, False, n, row)
    return CountReport(N, oracle_N, True)


def dumps_report(report) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
