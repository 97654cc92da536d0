"""Congruences ``f(mn + c) = 0 (mod d)`` for ``p`` and for ``P(A; .)``.

Checks are always over a finite window ``0 <= n <= n_max`` and are reported
as window evidence.  Transfers map a congruence for ``p`` to one for the
multiplicity count of a built instance.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import IndexOutOfRange, InvalidParams, ModulusMismatch, WrongShape
from .identities import IdentityInstance
from .partitions import count_P, json_int, partition_p
from .series import mul_binomial


@dataclass(frozen=True)
class CongruenceClaim:
    m: int
    c: int
    d: int
    subject: str = "p"  # "p" or "P"
    instance: IdentityInstance | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.m < 1 or self.d < 1 or self.c < 0:
            raise InvalidParams(f"claim needs m >= 1, c >= 0, d >= 1; got {self}")
        if self.subject not in ("p", "P"):
            raise InvalidParams(f"subject must be 'p' or 'P', got {self.subject!r}")
        if self.subject == "P" and self.instance is None:
            raise InvalidParams("a claim about P(A; n) needs its instance")

    def __str__(self):
        arg = f"{self.m}n+{self.c}"
        lhs = f"p({arg})" if self.subject == "p" else f"P(A; {arg})"
        return f"{lhs} = 0 mod {self.d}"

    def to_json(self) -> dict:
        return {"m": self.m, "c": self.c, "d": self.d, "subject": self.subject}


RAMANUJAN = (
    CongruenceClaim(5, 4, 5),
    CongruenceClaim(7, 5, 7),
    CongruenceClaim(11, 6, 11),
)


def catalog() -> list[CongruenceClaim]:
    return list(RAMANUJAN)


def load_claims(path: str | Path) -> list[CongruenceClaim]:
    """Claims for ``p`` from a JSON-lines file of ``{"m": .., "c": .., "d": ..}``."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            out.append(CongruenceClaim(int(obj["m"]), int(obj["c"]), int(obj["d"])))
        except (KeyError, ValueError, TypeError) as exc:
            raise InvalidParams(f"{path}:{lineno}: bad claim line: {exc}") from exc
    return out


@dataclass
class ClaimReport:
    claim: CongruenceClaim
    n_max: int
    violations: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "claim": self.claim.to_json(),
            "pass": self.passed,
            "window": [0, self.n_max],
            "evidence": "finite window only, not a proof",
            "violations": [{"n": n, "arg": self.claim.m * n + self.claim.c,
                            "value": json_int(v)} for n, v in self.violations],
        }


def evaluate(claim: CongruenceClaim, n_max: int, modulus: int | None) -> list[int]:
    """Values ``f(mn + c)`` for ``n = 0..n_max`` in the requested ring."""
    top = claim.m * n_max + claim.c
    if claim.subject == "p":
        table = partition_p(top, modulus)
    else:
        table = count_P(claim.instance.A, top, modulus)
    return [table[claim.m * n + claim.c] for n in range(n_max + 1)]


def check_claim(claim: CongruenceClaim, n_max: int) -> ClaimReport:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    values = evaluate(claim, n_max, claim.d)
    return ClaimReport(claim, n_max, [(n, v) for n, v in enumerate(values) if v])


def _require(inst: IdentityInstance, builder: str) -> dict:
    if inst.provenance.get("builder") != builder:
        raise WrongShape(f"expected a {builder}-built instance, got "
                         f"{inst.provenance.get('builder')!r}")
    return inst.provenance


def transfer_crt(inst: IdentityInstance, i: int, base: CongruenceClaim) -> CongruenceClaim:
    """``p(m_i n + c) = 0 (mod d)`` gives ``P(A; m_i n + a_i c) = 0 (mod d)``.

    ``i`` is 1-based, matching the factor numbering of the CRT parameters.
    """
    prov = _require(inst, "crt")
    m, a = prov["m"], prov["a"]
    if not 1 <= i <= len(m):
        raise IndexOutOfRange(f"factor index {i} outside 1..{len(m)}")
    if base.subject != "p":
        raise InvalidParams("the base claim must be about p(n)")
    if base.m != m[i - 1]:
        raise ModulusMismatch(f"claim modulus {base.m} differs from m_{i} = {m[i - 1]}")
    return CongruenceClaim(base.m, a[i - 1] * base.c, base.d, "P", inst)


def transfer_chain(inst: IdentityInstance, base: CongruenceClaim) -> CongruenceClaim:
    """``p(m_1 n + c) = 0 (mod d)`` gives ``P(A; r_1 (m_1 n + c)) = 0 (mod d)``.

    The generating function is ``G(q^{r_1 m_1}) / prod (1 - q^{r_1 n})``, so
    ``P(A; N)`` vanishes unless ``r_1 | N``, and ``N / r_1`` plays the role of
    the argument of ``p``.  For ``r_1 = 1`` this is ``P(A; m_1 n + c)``.
    """
    prov = _require(inst, "chain")
    m1, r1 = prov["m"][0], prov["r"][0]
    if base.subject != "p":
        raise InvalidParams("the base claim must be about p(n)")
    if base.m != m1:
        raise ModulusMismatch(f"claim modulus {base.m} differs from m_1 = {m1}")
    return CongruenceClaim(r1 * base.m, r1 * base.c, base.d, "P", inst)


@dataclass
class ConvolutionReport:
    n_max: int
    passed: bool
    support_ok: bool
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    g: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"pass": self.passed, "n_max": self.n_max, "g_support_ok": self.support_ok,
                "mismatches": [{"n": n, "P": json_int(a), "convolution": json_int(b)}
                               for n, a, b in self.mismatches]}


def convolution_check(inst: IdentityInstance, i: int, n_max: int) -> ConvolutionReport:
    """Check ``P(A; n) = sum_{r_i u + m_i v = n} p(u) g(v)`` on ``[0, n_max]``.

    ``G(q^{m_i})`` is the full generating product with the factor
    ``prod 1/(1 - q^{r_i n})`` divided back out; every exponent it carries
    must be a multiple of ``m_i``.
    """
    prov = _require(inst, "crt")
    if not 1 <= i <= len(prov["m"]):
        raise IndexOutOfRange(f"factor index {i} outside 1..{len(prov['m'])}")
    mi, ri = prov["m"][i - 1], prov["r"][i - 1]
    G = inst.generating_function(n_max)
    for n in range(1, n_max // ri + 1):
        G = mul_binomial(G, ri * n)
    coeffs = G.coefficients
    support_ok = all(v == 0 for e, v in enumerate(coeffs) if e % mi)
    g = coeffs[::mi]
    p = partition_p(n_max // ri)
    P = count_P(inst.A, n_max)
    mismatches = []
    for n in range(n_max + 1):
        conv = sum(p[u] * g[(n - ri * u) // mi]
                   for u in range(n // ri + 1) if (n - ri * u) % mi == 0)
        if conv != P[n]:
            mismatches.append((n, P[n], conv))
    return ConvolutionReport(n_max, support_ok and not mismatches, support_ok,
                             mismatches, g)
