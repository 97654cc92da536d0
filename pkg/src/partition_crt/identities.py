"""Builders for partition identities ``P(A; n) = Q(B; n)``.

Every identity here comes from a finite geometric-series identity

    1 + sum_{a in A} x^a = prod_{b} (1 - x^{b*delta_b}) / (1 - x^b)

together with pairwise disjoint classes ``bN \\ b*delta_b N``.  An instance
stores ``A``, the class union ``B`` and the factor list ``(b, b*delta_b)``
(``None`` for an unbounded ``delta_b``) separately, so a corrupted instance
is caught by the verifiers instead of being silently re-derived.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Sequence

from .arith import CrtParams, check_r_override, crt_solve, gcd
from .errors import ChainViolation, DistinctnessViolation, InvalidParams, WrongShape
from .series import CoefficientSeries, product_of_factors
from .sets import DifferenceClass, MultiplicitySet, ResidueClassUnion

Factor = tuple[int, "int | None"]


@dataclass(frozen=True)
class CrtIdentityParams:
    crt: CrtParams
    k: int = 1
    l: int | None = 1  # None is l = infinity
    r: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParams(f"k must be positive, got {self.k}")
        if self.l is not None and self.l < 1:
            raise InvalidParams(f"l must be positive or infinite, got {self.l}")
        if self.r is not None:
            object.__setattr__(self, "r", tuple(int(v) for v in self.r))


@dataclass(frozen=True)
class ChainIdentityParams:
    m: tuple[int, ...]
    r: tuple[int, ...]
    l: int | None = 1

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))
        object.__setattr__(self, "r", tuple(int(v) for v in self.r))
        if not self.m:
            raise InvalidParams("need s >= 1 moduli")
        if len(self.r) != len(self.m) + 1:
            raise InvalidParams(
                f"a chain with s={len(self.m)} moduli takes s+1 r-values, "
                f"got {len(self.r)}")
        if any(v < 1 for v in self.m + self.r):
            raise InvalidParams("chain moduli and r-values must be positive")
        if self.l is not None and self.l < 1:
            raise InvalidParams(f"l must be positive or infinite, got {self.l}")
        for ri, rnext in zip(self.r, self.r[1:]):
            if rnext % ri:
                raise ChainViolation(f"r-chain breaks: {ri} does not divide {rnext}")


@dataclass(frozen=True)
class IdentityInstance:
    A: MultiplicitySet
    B: ResidueClassUnion
    factorization: tuple[Factor, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    @property
    def builder(self) -> str:
        return self.provenance.get("builder", "")

    def generating_factors(self, N: int) -> list[int]:
        """Signed binomial exponents of ``prod_n prod_b (1-q^{b delta n})/(1-q^{b n})``."""
        out = []
        for den, num in self.factorization:
            for n in range(1, N // den + 1):
                out.append(-den * n)
                if num is not None and num * n <= N:
                    out.append(num * n)
        return out

    def generating_function(self, N: int, modulus: int | None = None
                            ) -> CoefficientSeries:
        return product_of_factors(self.generating_factors(N), N, modulus)

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "factors": [{"den": d, "num": n} for d, n in self.factorization],
            "provenance": self.provenance,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "IdentityInstance":
        try:
            A = MultiplicitySet.from_json(obj["A"])
            B = ResidueClassUnion.from_json(obj["B"])
            factors = tuple(
                (int(f["den"]), None if f.get("num") is None else int(f["num"]))
                for f in obj["factors"])
        except (KeyError, TypeError) as exc:
            raise InvalidParams(f"malformed instance: {exc!r}") from exc
        return cls(A, B, factors, dict(obj.get("provenance") or {}))


def _check_distinct(sums: list[int], what: str) -> None:
    if len(set(sums)) != len(sums):
        dup = next(x for x, n in Counter(sums).items() if n > 1)
        raise DistinctnessViolation(f"{what}: exponent {dup} arises twice")


def _union(classes: list[DifferenceClass]) -> ResidueClassUnion:
    # construction raises DisjointnessViolation on overlap
    return ResidueClassUnion(tuple(classes))


def _instance_from_sums(residue_sums: list[int], top: int, l: int | None,
                        classes: list[DifferenceClass], what: str,
                        provenance: dict) -> IdentityInstance:
    """Assemble ``A = {sigma + top*j}`` minus 0, with ``j < l`` or ``j >= 0`` if l is infinite."""
    if l is None:
        _check_distinct([x % top for x in residue_sums], what)
        A = MultiplicitySet(frozenset(x if x else top for x in residue_sums), top)
    else:
        sums = [x + top * j for x in residue_sums for j in range(l)]
        _check_distinct(sums, what)
        A = MultiplicitySet(frozenset(x for x in sums if x))
    B = _union(classes)
    factors = tuple((c.base, c.excluded) for c in classes)
    return IdentityInstance(A, B, factors, provenance)


def _subset_sums(weights: Sequence[int], ranges: Sequence[int]) -> list[int]:
    return [sum(w * j for w, j in zip(weights, js))
            for js in itertools.product(*(range(n) for n in ranges))]


def build_crt(params: CrtIdentityParams, strict: bool = True) -> IdentityInstance:
    """Identity from a CRT residue system: ``A`` from sums ``sum r_i j_i + m k j``.

    With ``strict=False`` user r-overrides skip the congruence check, leaving
    the distinctness and disjointness assertions as the only guard.
    """
    crt = params.crt
    sol = crt_solve(crt)
    if params.r is None:
        r = sol.r
    elif strict:
        r = check_r_override(crt, sol, params.r)
    else:
        r = params.r
        if len(r) != crt.s or any(v < 1 for v in r):
            raise InvalidParams(f"need {crt.s} positive r-values, got {r}")
    mk = sol.m * params.k
    classes = [DifferenceClass(mk, None if params.l is None else mk * params.l)]
    classes += [DifferenceClass(ri, ri * mi) for ri, mi in zip(r, crt.moduli)]
    provenance = {
        "builder": "crt",
        "m": list(crt.moduli), "a": list(crt.offsets),
        "k": params.k, "l": params.l, "r": list(r),
        "M": list(sol.cofactors), "Mbar": list(sol.inverses),
    }
    sums = _subset_sums(r, crt.moduli)
    return _instance_from_sums(sums, mk, params.l, classes, "crt", provenance)


def build_chain(params: ChainIdentityParams) -> IdentityInstance:
    """Identity from the mixed-radix residue system of a divisibility chain ``r_1 | ... | r_{s+1}``."""
    weights, classes = [], []
    prefix = 1
    for mi, ri in zip(params.m, params.r):
        w = prefix * ri
        weights.append(w)
        classes.append(DifferenceClass(w, w * mi))
        prefix *= mi
    top = prefix * params.r[-1]
    classes.append(DifferenceClass(top, None if params.l is None else top * params.l))
    provenance = {"builder": "chain", "m": list(params.m), "r": list(params.r),
                  "l": params.l}
    sums = _subset_sums(weights, params.m)
    return _instance_from_sums(sums, top, params.l, classes, "chain", provenance)


# -- classical presets, written out from their closed forms ------------------

def _preset(name: str, A: MultiplicitySet, classes: list[DifferenceClass],
            **params: Any) -> IdentityInstance:
    B = _union(classes)
    factors = tuple((c.base, c.excluded) for c in classes)
    return IdentityInstance(A, B, factors, {"builder": "preset", "name": name, **params})


def euler() -> IdentityInstance:
    return _preset("euler", MultiplicitySet(frozenset({1})), [DifferenceClass(1, 2)])


def glaisher(d: int) -> IdentityInstance:
    if d < 2:
        raise InvalidParams(f"glaisher needs d >= 2, got {d}")
    return _preset("glaisher", MultiplicitySet(frozenset(range(1, d))),
                   [DifferenceClass(1, d)], d=d)


def macmahon() -> IdentityInstance:
    # 1 + x^2 + x^3 + ... = 1/(1-x^2) * (1-x^6)/(1-x^3)
    return _preset("macmahon", MultiplicitySet(frozenset({2, 3}), 2),
                   [DifferenceClass(2), DifferenceClass(3, 6)])


def andrews(r: int) -> IdentityInstance:
    if r < 1:
        raise InvalidParams(f"andrews needs r >= 1, got {r}")
    q = 2 * r + 1
    return _preset("andrews", MultiplicitySet(frozenset({2, q}), 2),
                   [DifferenceClass(2), DifferenceClass(q, 2 * q)], r=r)


def subbarao(l: int | None, r: int) -> IdentityInstance:
    """``A = {2i + j(2r+1)}`` for ``i < l``, ``j in {0, 1}``; ``l=None`` drops the bound on ``i``."""
    if (l is not None and l <= 1) or r < 0:
        raise InvalidParams(f"subbarao needs l > 1 and r >= 0, got l={l}, r={r}")
    q = 2 * r + 1
    if l is None:
        A = MultiplicitySet(frozenset({2, q}), 2)
    else:
        sums = [2 * i + j * q for i in range(l) for j in range(2)]
        _check_distinct(sums, "subbarao")
        A = MultiplicitySet(frozenset(x for x in sums if x))
    classes = [DifferenceClass(2, None if l is None else 2 * l), DifferenceClass(q, 2 * q)]
    return _preset("subbarao", A, classes, l=l, r=r)


def nm(l: int | None, r: int, a: int, p: int) -> IdentityInstance:
    """``A = {p i + j(pr+a)}`` for ``i < l``, ``j < p``, with ``gcd(a, p) = 1``."""
    if (l is not None and l < 1) or r < 1 or a < 1 or p < 1:
        raise InvalidParams(f"nm needs positive l, r, a, p; got {l}, {r}, {a}, {p}")
    if gcd(a, p) != 1:
        raise InvalidParams(f"nm needs gcd(a, p) = 1, got gcd({a}, {p}) = {gcd(a, p)}")
    q = p * r + a
    if l is None:
        _check_distinct([j * q % p for j in range(p)], "nm")
        A = MultiplicitySet(frozenset({p} | {j * q for j in range(1, p)}), p)
    else:
        sums = [p * i + j * q for i in range(l) for j in range(p)]
        _check_distinct(sums, "nm")
        A = MultiplicitySet(frozenset(x for x in sums if x))
    classes = [DifferenceClass(p, None if l is None else l * p),
               DifferenceClass(q, p * q)]
    return _preset("nm", A, classes, l=l, r=r, a=a, p=p)


PRESETS = {
    "euler": euler,
    "glaisher": glaisher,
    "macmahon": macmahon,
    "andrews": andrews,
    "subbarao": subbarao,
    "nm": nm,
}


def build_preset(name: str, *args) -> IdentityInstance:
    try:
        builder = PRESETS[name]
    except KeyError:
        raise InvalidParams(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    try:
        return builder(*args)
    except TypeError as exc:
        raise InvalidParams(f"bad arguments for preset {name}: {exc}") from exc


# -- verifiers ---------------------------------------------------------------

def multiplicity_series(A: MultiplicitySet, N: int) -> CoefficientSeries:
    """``1 + sum_{a in A, a <= N} x^a`` as a truncated series."""
    c = [0] * (N + 1)
    c[0] = 1
    for a in A.elements_upto(N):
        c[a] = 1
    return CoefficientSeries(c)


def verify_polynomial(inst: IdentityInstance, N: int) -> bool:
    """Compare ``1 + sum x^a`` with the product of the instance's factors up to ``x^N``."""
    factors = []
    for den, num in inst.factorization:
        factors.append(-den)
        if num is not None:
            factors.append(num)
    return multiplicity_series(inst.A, N) == product_of_factors(factors, N)


def finite_complement(inst: IdentityInstance) -> frozenset[int]:
    """Non-members of a cofinite ``A`` from a CRT build with ``k = 1`` and ``l`` infinite.

    Each residue sum ``sigma = sum r_i j_i`` hides the smaller members of its
    class mod ``m``, namely ``sigma - m, sigma - 2m, ... > 0``.
    """
    prov = inst.provenance
    if prov.get("builder") != "crt" or prov.get("k") != 1 or prov.get("l") is not None:
        raise WrongShape("finite complement needs a CRT instance with k = 1 and l = inf")
    m = math.prod(prov["m"])
    out = set()
    for sigma in _subset_sums(prov["r"], prov["m"]):
        out.update(range(sigma - m, 0, -m))
    return frozenset(out)
