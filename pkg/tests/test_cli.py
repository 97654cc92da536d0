import io
import json

import pytest

from partition_crt.cli import main, parse_preset
from partition_crt.partitions import partition_p


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def inst_file(tmp_path, capsys):
    def make(*gen_args):
        code, out = run(capsys, "gen", *gen_args)
        assert code == 0
        path = tmp_path / "inst.json"
        path.write_text(out)
        return str(path)
    return make


def test_gen_crt_235(capsys):
    code, obj = run_json(capsys, "gen", "crt", "--m", "2,3,5", "--a", "1,1,1",
                         "--k", "1", "--l", "1")
    assert code == 0
    assert len(obj["A"]["core"]) == 29
    assert obj["A"]["period"] is None
    assert obj["provenance"]["r"] == [15, 10, 6]


def test_gen_defaults_offsets_to_one(capsys):
    _, a = run_json(capsys, "gen", "crt", "--m", "2,3,5")
    _, b = run_json(capsys, "gen", "crt", "--m", "2,3,5", "--a", "1,1,1")
    assert a == b


def test_gen_unbounded_with_override(capsys):
    code, obj = run_json(capsys, "gen", "crt", "--m", "2,3", "--l", "inf", "--r", "3,4")
    assert code == 0
    assert obj["A"]["period"] == 6


def test_gen_chain_and_presets(capsys):
    code, obj = run_json(capsys, "gen", "chain", "--m", "2,3", "--r", "1,2,6", "--l", "2")
    assert code == 0 and len(obj["A"]["core"]) == 11
    for name in ("euler", "glaisher=3", "macmahon", "andrews=2", "subbarao=inf,1", "nm=2,1,1,3"):
        code, _ = run_json(capsys, "gen", "preset", name)
        assert code == 0, name


def test_parse_preset():
    assert parse_preset("subbarao=inf,2") == ("subbarao", (None, 2))
    assert parse_preset("Euler") == ("euler", ())


@pytest.mark.parametrize("argv, code", [
    (["gen", "crt", "--m", "2,4"], 2),  # moduli not coprime
    (["gen", "crt", "--m", "2,x"], 2),
    (["gen", "chain", "--m", "2", "--r", "2,3"], 3),  # divisibility link fails
    (["gen", "preset", "nosuch"], 2),
    (["bogus"], 2),
    (["count", "P", "--n-max", "5"], 2),
    (["verify", "--in", "/nonexistent.json"], 2),
])
def test_error_exit_codes(capsys, argv, code):
    got, out = run(capsys, *argv)
    assert got == code
    err = json.loads(out)
    assert err["exit_code"] == code and err["message"]


def test_verify_pass_and_fail(capsys, inst_file, tmp_path):
    path = inst_file("crt", "--m", "2,3,5")
    code, obj = run_json(capsys, "verify", "--in", path, "--n-max", "120", "--oracle-max", "25")
    assert code == 0 and obj["pass"]
    data = json.loads(open(path).read())
    data["A"]["core"].remove(21)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, obj = run_json(capsys, "verify", "--in", str(bad), "--n-max", "120",
                         "--oracle-max", "25")
    assert code == 1 and not obj["pass"]
    assert obj["counts"]["first_failure"] == 21


def test_verify_window_usage(capsys, inst_file):
    path = inst_file("preset", "euler")
    code, _ = run(capsys, "verify", "--in", path, "--n-max", "10", "--oracle-max", "61")
    assert code == 2


def test_verify_from_stdin(capsys, inst_file, monkeypatch):
    path = inst_file("preset", "macmahon")
    monkeypatch.setattr("sys.stdin", io.StringIO(open(path).read()))
    code, obj = run_json(capsys, "verify", "--in", "-", "--n-max", "80", "--oracle-max", "20")
    assert code == 0 and obj["pass"]


def test_count_p_json_and_csv(capsys):
    code, obj = run_json(capsys, "count", "p", "--n-max", "10")
    assert code == 0 and obj["values"][-1] == 42
    code, out = run(capsys, "--format", "csv", "count", "p", "--n-max", "4")
    assert out == "n,value\n0,1\n1,1\n2,2\n3,3\n4,5\n"


def test_count_big_values_are_strings(capsys):
    _, obj = run_json(capsys, "count", "p", "--n-max", "500")
    assert obj["values"][500] == str(partition_p(500)[500])


def test_count_P_and_Q_agree(capsys, inst_file):
    path = inst_file("crt", "--m", "2,3")
    _, P = run_json(capsys, "count", "P", "--in", path, "--n-max", "60", "--mod", "1000")
    _, Q = run_json(capsys, "count", "Q", "--in", path, "--n-max", "60", "--mod", "1000")
    assert P["values"] == Q["values"] and P["modulus"] == 1000


def test_congruence_base_only(capsys):
    code, obj = run_json(capsys, "congruence", "--claim", "5,4,5", "--claim", "7,5,7")
    assert code == 0 and obj["pass"] and len(obj["claims"]) == 2


def test_congruence_transfer_crt(capsys, inst_file):
    path = inst_file("crt", "--m", "2,3,5")
    code, obj = run_json(capsys, "congruence", "--in", path, "--factor", "3",
                         "--claim", "5,4,5")
    assert code == 0
    assert obj["claims"][0]["transferred"]["claim"]["subject"] == "P"


def test_congruence_transfer_chain(capsys, inst_file):
    path = inst_file("chain", "--m", "7", "--r", "1,2", "--l", "2")
    code, obj = run_json(capsys, "congruence", "--in", path, "--chain",
                         "--claim", "7,5,7", "--n-max", "40")
    assert code == 0 and obj["pass"]


def test_congruence_false_claim_and_mismatch(capsys, inst_file, tmp_path):
    code, obj = run_json(capsys, "congruence", "--claim", "5,3,5", "--n-max", "5")
    assert code == 1 and not obj["pass"]
    path = inst_file("crt", "--m", "2,3,5")
    code, _ = run(capsys, "congruence", "--in", path, "--factor", "1", "--claim", "5,4,5")
    assert code == 2
    code, _ = run(capsys, "congruence", "--in", path, "--claim", "5,4,5")
    assert code == 2
    claims = tmp_path / "c.jsonl"
    claims.write_text('{"m": 11, "c": 6, "d": 11}\n')
    code, obj = run_json(capsys, "congruence", "--claims", str(claims), "--n-max", "20")
    assert code == 0


SWEEP = ["sweep", "--samples", "4", "--n-max", "60", "--oracle-max", "15",
         "--claim-window", "15", "--seed", "7", "--workers", "1", "--full"]


def test_sweep_is_deterministic(capsys):
    code1, out1 = run(capsys, *SWEEP)
    code2, out2 = run(capsys, *SWEEP[:-3], "--workers", "2", "--full")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["total"] == 8


def test_sweep_inject_fault(capsys):
    code, obj = run_json(capsys, *SWEEP, "--inject-fault")
    assert code == 1 and obj["failed"] > 0


def test_sweep_bad_config(capsys):
    code, _ = run(capsys, "sweep", "--n-max", "5", "--oracle-max", "10")
    assert code == 2
