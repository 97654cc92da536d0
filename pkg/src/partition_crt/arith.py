"""Modular arithmetic and the Chinese remainder solver for the r-vector."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParams, NotCoprime

MAX_MODULUS = 2**63 - 1


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def mod_inverse(x: int, m: int) -> int:
    """Return ``y`` in ``[1, m]`` with ``x*y = 1 (mod m)``.

    For ``m == 1`` every residue is zero, and the representative in ``[1, m]``
    is ``1``.
    """
    if m < 1:
        raise InvalidParams(f"modulus must be positive, got {m}")
    if gcd(x, m) != 1:
        raise NotCoprime(f"gcd({x}, {m}) = {gcd(x, m)} > 1")
    y = pow(x, -1, m)
    return y if y else m


@dataclass(frozen=True)
class CrtParams:
    moduli: tuple[int, ...]
    offsets: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(v) for v in self.moduli)
        if len(moduli) != len(self.offsets):
            raise InvalidParams(
                f"{len(moduli)} moduli but {len(self.offsets)} offsets")
        # a degenerate factor m_i = 1 carries no residue information
        offsets = tuple(1 if m == 1 else int(a)
                        for m, a in zip(moduli, self.offsets))
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "offsets", offsets)
        if not moduli:
            raise InvalidParams("need at least one modulus")
        if any(m < 1 for m in moduli) or any(a < 1 for a in offsets):
            raise InvalidParams("moduli and offsets must be positive")
        for i, mi in enumerate(moduli):
            for mj in moduli[i + 1:]:
                if gcd(mi, mj) != 1:
                    raise InvalidParams(f"moduli {mi} and {mj} are not coprime")
        for a, mi in zip(offsets, moduli):
            if gcd(a, mi) != 1:
                raise InvalidParams(f"offset {a} is not coprime to modulus {mi}")
        if math.prod(moduli) > MAX_MODULUS:
            raise InvalidParams("product of moduli exceeds 2**63 - 1")

    @property
    def s(self) -> int:
        return len(self.moduli)


@dataclass(frozen=True)
class CrtSolution:
    m: int
    cofactors: tuple[int, ...]
    inverses: tuple[int, ...]
    r: tuple[int, ...]


def least_positive(x: int, m: int) -> int:
    """Representative of ``x mod m`` in ``[1, m]``."""
    return x % m or m


def crt_solve(params: CrtParams) -> CrtSolution:
    """Solve for ``r_i = a_i * M_i * inv(M_i) (mod m)`` as least positive residues.

    Each ``r_i`` satisfies ``r_i = a_i (mod m_i)`` and ``r_i = 0 (mod m_j)`` for
    every ``j != i``.
    """
    m = math.prod(params.moduli)
    cofactors = tuple(m // mi for mi in params.moduli)
    inverses = tuple(mod_inverse(M % mi, mi) if mi > 1 else 1
                     for M, mi in zip(cofactors, params.moduli))
    r = tuple(least_positive(a * M * Mb, m)
              for a, M, Mb in zip(params.offsets, cofactors, inverses))
    return CrtSolution(m=m, cofactors=cofactors, inverses=inverses, r=r)


def check_r_override(params: CrtParams, solution: CrtSolution,
                     r: Sequence[int]) -> tuple[int, ...]:
    """Validate user-chosen representatives against ``r_i = a_i M_i inv(M_i) (mod m)``."""
    r = tuple(int(v) for v in r)
    if len(r) != params.s:
        raise InvalidParams(f"expected {params.s} r-values, got {len(r)}")
    for i, (ri, canon) in enumerate(zip(r, solution.r)):
        if ri < 1:
            raise InvalidParams(f"r_{i + 1} = {ri} must be positive")
        if (ri - canon) % solution.m:
            raise InvalidParams(
                f"r_{i + 1} = {ri} is not congruent to {canon} mod {solution.m}")
    return r
