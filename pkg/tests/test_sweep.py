import random

from partition_crt.sweep import (SweepConfig, build, matching_claims, mutate,
                                 run_one, run_sweep, sample_chain, sample_crt,
                                 sample_params, worker_count)
from partition_crt.partitions import verify_counts


def test_sampling_is_seeded():
    cfg = SweepConfig(samples=10, seed=3)
    assert sample_params(cfg) == sample_params(cfg)
    assert sample_params(cfg) != sample_params(SweepConfig(samples=10, seed=4))


def test_samples_are_valid():
    cfg = SweepConfig()
    rng = random.Random(11)
    for _ in range(200):
        build("crt", sample_crt(rng, cfg))
        build("chain", sample_chain(rng, cfg))


def test_mutate_breaks_identity(crt_235):
    bad = mutate(crt_235)
    assert len(bad.B.classes) == len(crt_235.B.classes) - 1
    assert not verify_counts(bad, 100, 0).passed


def test_matching_claims(crt_235):
    labels = [(label, base.m) for label, base, _ in matching_claims(crt_235)]
    assert labels == [("factor 3", 5)]


def test_run_one_record_shape():
    cfg = SweepConfig(samples=1, n_max=50, oracle_max=10, claim_window=10)
    kind, params = sample_params(cfg)[0]
    rec = run_one((kind, params, cfg))
    assert rec["pass"] and rec["kind"] == kind
    assert set(rec) >= {"params", "polynomial", "counts", "congruences"}


def test_run_sweep_small():
    cfg = SweepConfig(samples=5, n_max=60, oracle_max=15, claim_window=15)
    summary = run_sweep(cfg, workers=1)
    assert summary["total"] == 10 and summary["failed"] == 0


def test_worker_cap(monkeypatch):
    monkeypatch.setenv("PARTITION_CRT_THREADS", "1")
    assert worker_count() == 1
