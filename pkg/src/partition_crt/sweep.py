"""Seeded parameter sweeps: sample valid CRT and chain parameters, build, verify."""
from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .arith import CrtParams, crt_solve, gcd
from .congruences import catalog, check_claim, transfer_chain, transfer_crt
from .errors import PartitionCrtError
from .identities import (ChainIdentityParams, CrtIdentityParams, IdentityInstance,
                         build_chain, build_crt, verify_polynomial)
from .partitions import verify_counts

THREADS_ENV = "PARTITION_CRT_THREADS"


@dataclass(frozen=True)
class SweepConfig:
    s_max: int = 3
    m_max: int = 7
    k_max: int = 2
    l_max: int = 3
    n_max: int = 120
    oracle_max: int = 30
    claim_window: int = 30
    samples: int = 40  # per builder
    seed: int = 0
    inf_rate: float = 0.2
    override_rate: float = 0.25
    inject_fault: bool = False

    def __post_init__(self):
        if not 0 <= self.oracle_max <= self.n_max:
            raise ValueError("need 0 <= oracle_max <= n_max")
        if min(self.s_max, self.m_max, self.k_max, self.l_max, self.samples) < 1:
            raise ValueError("sweep bounds must be positive")
        if self.m_max < 2:
            raise ValueError("m_max must be at least 2")


def sample_crt(rng: random.Random, cfg: SweepConfig) -> CrtIdentityParams:
    s = rng.randint(1, cfg.s_max)
    pool = list(range(2, cfg.m_max + 1))
    rng.shuffle(pool)
    moduli: list[int] = []
    for c in pool:
        if len(moduli) == s:
            break
        if all(gcd(c, x) == 1 for x in moduli):
            moduli.append(c)
    offsets = [rng.choice([a for a in range(1, 2 * mi + 1) if gcd(a, mi) == 1])
               for mi in moduli]
    crt = CrtParams(tuple(moduli), tuple(offsets))
    k = rng.randint(1, cfg.k_max)
    l = None if rng.random() < cfg.inf_rate else rng.randint(1, cfg.l_max)
    r = None
    if rng.random() < cfg.override_rate:
        sol = crt_solve(crt)
        r = tuple(ri + sol.m * rng.randint(0, 2) for ri in sol.r)
    return CrtIdentityParams(crt, k, l, r)


def sample_chain(rng: random.Random, cfg: SweepConfig) -> ChainIdentityParams:
    s = rng.randint(1, cfg.s_max)
    m = tuple(rng.randint(1, cfg.m_max) for _ in range(s))
    r = [rng.choice((1, 1, 2, 3))]
    for _ in range(s):
        r.append(r[-1] * rng.choice((1, 1, 2, 3)))
    l = None if rng.random() < cfg.inf_rate else rng.randint(1, cfg.l_max)
    return ChainIdentityParams(m, tuple(r), l)


def sample_params(cfg: SweepConfig) -> list[tuple[str, object]]:
    rng = random.Random(cfg.seed)
    out: list[tuple[str, object]] = []
    for _ in range(cfg.samples):
        out.append(("crt", sample_crt(rng, cfg)))
        out.append(("chain", sample_chain(rng, cfg)))
    return out


def describe(kind: str, params) -> dict:
    if kind == "crt":
        return {"m": list(params.crt.moduli), "a": list(params.crt.offsets),
                "k": params.k, "l": params.l,
                "r": None if params.r is None else list(params.r)}
    return {"m": list(params.m), "r": list(params.r), "l": params.l}


def build(kind: str, params) -> IdentityInstance:
    return build_crt(params) if kind == "crt" else build_chain(params)


def matching_claims(inst: IdentityInstance):
    """Ramanujan-transferred claims available for an instance: ``(label, base, claim)``."""
    ramanujan = {c.m: c for c in catalog()}
    prov = inst.provenance
    if prov.get("builder") == "crt":
        for i, mi in enumerate(prov["m"], 1):
            if mi in ramanujan:
                yield f"factor {i}", ramanujan[mi], transfer_crt(inst, i, ramanujan[mi])
    elif prov.get("builder") == "chain" and prov["m"][0] in ramanujan:
        base = ramanujan[prov["m"][0]]
        yield "m_1", base, transfer_chain(inst, base)


def mutate(inst: IdentityInstance) -> IdentityInstance:
    """Drop the nonempty class with the smallest base (fault-injection hook)."""
    idx = min((i for i, c in enumerate(inst.B.classes) if not c.is_empty),
              key=lambda i: inst.B.classes[i].base, default=None)
    if idx is None:
        return inst
    return IdentityInstance(inst.A, inst.B.without(idx), inst.factorization,
                            inst.provenance)


def run_one(task: tuple[str, object, SweepConfig]) -> dict:
    kind, params, cfg = task
    record = {"kind": kind, "params": describe(kind, params)}
    try:
        inst = build(kind, params)
        if cfg.inject_fault:
            inst = mutate(inst)
        poly = verify_polynomial(inst, cfg.n_max)
        counts = verify_counts(inst, cfg.n_max, cfg.oracle_max)
        claims = []
        for label, _, claim in matching_claims(inst):
            rep = check_claim(claim, cfg.claim_window)
            claims.append({"label": label, **rep.to_json()})
        record["polynomial"] = poly
        record["counts"] = counts.to_json()
        record["congruences"] = claims
        record["pass"] = poly and counts.passed and all(c["pass"] for c in claims)
    except PartitionCrtError as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
        record["pass"] = False
    return record


def worker_count() -> int:
    cap = os.environ.get(THREADS_ENV)
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def run_sweep(cfg: SweepConfig, workers: int | None = None) -> dict:
    tasks = [(kind, params, cfg) for kind, params in sample_params(cfg)]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_one, tasks, chunksize=4))
    else:
        records = [run_one(t) for t in tasks]
    records.sort(key=lambda r: (r["kind"], json.dumps(r["params"], sort_keys=True)))
    failed = [r for r in records if not r["pass"]]
    return {
        "config": asdict(cfg),
        "total": len(records),
        "passed": len(records) - len(failed),
        "failed": len(failed),
        "results": records,
    }
