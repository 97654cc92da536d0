import json

import pytest

from partition_crt.congruences import (CongruenceClaim, catalog, check_claim,
                                       convolution_check, load_claims,
                                       transfer_chain, transfer_crt)
from partition_crt.errors import (IndexOutOfRange, InvalidParams, ModulusMismatch,
                                  WrongShape)
from partition_crt.identities import ChainIdentityParams, build_chain, build_preset


def test_catalog():
    assert [(c.m, c.c, c.d) for c in catalog()] == [(5, 4, 5), (7, 5, 7), (11, 6, 11)]


@pytest.mark.parametrize("claim", catalog())
def test_ramanujan_claims_hold(claim):
    rep = check_claim(claim, 60)
    assert rep.passed
    obj = rep.to_json()
    assert obj["window"] == [0, 60]
    assert "not a proof" in obj["evidence"]


def test_false_claim_reports_violations():
    rep = check_claim(CongruenceClaim(5, 3, 5), 10)
    assert not rep.passed
    n, v = rep.violations[0]
    assert n == 0 and v == 3  # p(3) = 3
    assert rep.to_json()["violations"][0] == {"n": 0, "arg": 3, "value": 3}


def test_claim_validation():
    for args in [(0, 1, 5), (5, -1, 5), (5, 4, 0)]:
        with pytest.raises(InvalidParams):
            CongruenceClaim(*args)
    with pytest.raises(InvalidParams):
        CongruenceClaim(5, 4, 5, "P")
    assert str(CongruenceClaim(5, 4, 5)) == "p(5n+4) = 0 mod 5"


def test_transfer_crt_crt_235(crt_235):
    claim = transfer_crt(crt_235, 3, CongruenceClaim(5, 4, 5))
    assert (claim.m, claim.c, claim.d, claim.subject) == (5, 4, 5, "P")
    assert check_claim(claim, 100).passed


def test_transfer_crt_uses_offset():
    from partition_crt import CrtIdentityParams, CrtParams, build_crt
    inst = build_crt(CrtIdentityParams(CrtParams((7, 2), (3, 1)), k=1, l=2))
    claim = transfer_crt(inst, 1, CongruenceClaim(7, 5, 7))
    assert claim.c == 15
    assert check_claim(claim, 40).passed


def test_transfer_crt_errors(crt_235):
    with pytest.raises(ModulusMismatch):
        transfer_crt(crt_235, 1, CongruenceClaim(5, 4, 5))
    with pytest.raises(IndexOutOfRange):
        transfer_crt(crt_235, 4, CongruenceClaim(5, 4, 5))
    with pytest.raises(IndexOutOfRange):
        transfer_crt(crt_235, 0, CongruenceClaim(5, 4, 5))
    with pytest.raises(WrongShape):
        transfer_crt(build_preset("euler"), 1, CongruenceClaim(5, 4, 5))


def test_transfer_chain_unit_weight():
    inst = build_chain(ChainIdentityParams((5, 2), (1, 1, 3), 2))
    claim = transfer_chain(inst, CongruenceClaim(5, 4, 5))
    assert (claim.m, claim.c) == (5, 4)
    assert check_claim(claim, 60).passed


def test_transfer_chain_scaled_weight():
    # with r_1 = 2 the counts live on even sizes, so the argument scales by r_1
    inst = build_chain(ChainIdentityParams((5,), (2, 2), 2))
    claim = transfer_chain(inst, CongruenceClaim(5, 4, 5))
    assert (claim.m, claim.c) == (10, 8)
    assert check_claim(claim, 50).passed
    unscaled = CongruenceClaim(5, 4, 5, "P", inst)
    assert not check_claim(unscaled, 50).passed


def test_transfer_chain_errors(crt_235):
    inst = build_chain(ChainIdentityParams((7,), (1, 1), 2))
    with pytest.raises(ModulusMismatch):
        transfer_chain(inst, CongruenceClaim(5, 4, 5))
    with pytest.raises(WrongShape):
        transfer_chain(crt_235, CongruenceClaim(5, 4, 5))


def test_convolution_crt_235(crt_235):
    rep = convolution_check(crt_235, 3, 60)
    assert rep.passed and rep.support_ok and not rep.mismatches
    assert rep.g[0] == 1


@pytest.mark.parametrize("i", [1, 2, 3])
def test_convolution_every_factor(crt_235, i):
    assert convolution_check(crt_235, i, 80).passed


def test_convolution_unbounded(crt_23_unbounded):
    assert convolution_check(crt_23_unbounded, 1, 60).passed
    assert convolution_check(crt_23_unbounded, 2, 60).passed


def test_convolution_index_check(crt_235):
    with pytest.raises(IndexOutOfRange):
        convolution_check(crt_235, 4, 10)


def test_load_claims(tmp_path):
    path = tmp_path / "claims.jsonl"
    path.write_text(json.dumps({"m": 5, "c": 4, "d": 5}) + "\n\n"
                    + json.dumps({"m": 7, "c": 5, "d": 7}) + "\n")
    assert load_claims(path) == [CongruenceClaim(5, 4, 5), CongruenceClaim(7, 5, 7)]
    path.write_text('{"m": 5}\n')
    with pytest.raises(InvalidParams):
        load_claims(path)
