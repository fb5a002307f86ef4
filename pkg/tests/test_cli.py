"""Command line surface: formats, determinism, exit codes."""

import json

from congrkit.sequences import t_seq


def test_list_contains_required_families(cli):
    run = cli("list")
    assert run.returncode == 0
    text = run.stdout.decode()
    names = [line.split("->")[0].strip() for line in text.splitlines() if "->" in line]
    assert "thm12" in names
    assert "conj57" in names
    assert len(names) >= 25
    assert len(names) == len(set(names))


def test_seq_csv_matches_reference_values(cli):
    run = cli("seq", "R", "--max", "16", "--format", "csv")
    assert run.returncode == 0
    rows = run.stdout.decode().strip().splitlines()
    assert rows[0] == "n,value"
    assert rows[1] == "0,-1"
    assert rows[-1] == "16,11996748255"
    run = cli("seq", "S", "--max", "12", "--format", "csv")
    assert run.stdout.decode().strip().splitlines()[-1] == "12,162071863425"


def test_seq_text_and_json(cli):
    run = cli("seq", "t", "--max", "2")
    want = ["t(%d) = %d" % (n, t_seq(n)) for n in range(3)]
    assert run.stdout.decode().splitlines() == want
    run = cli("seq", "R", "--max", "4", "--format", "json")
    obj = json.loads(run.stdout)
    assert obj["values"] == ["-1", "1", "7", "25", "87"]
    assert obj["timestamp"] is None
    assert obj["config"]["command"] == "seq"


def test_poly_outputs(cli):
    run = cli("poly", "R", "--n", "5", "--format", "json")
    assert json.loads(run.stdout)["coeffs"] == ["-1", "30", "70", "112", "90", "28"]
    run = cli("poly", "R", "--n", "2", "--format", "csv")
    assert run.stdout.decode().strip().splitlines() == [
        "power,coefficient",
        "0,-1",
        "1,6",
        "2,2",
    ]
    sm = cli("poly", "Sm", "--n", "3", "--m", "2", "--format", "json")
    plain = cli("poly", "S", "--n", "3", "--format", "json")
    assert json.loads(sm.stdout)["coeffs"] == json.loads(plain.stdout)["coeffs"]


def test_poly_flag_validation(cli):
    assert cli("poly", "Sm", "--n", "3").returncode == 2
    assert cli("poly", "R", "--n", "3", "--m", "2").returncode == 2


def test_verify_single_instance(cli):
    run = cli("verify", "thm13", "--p", "3")
    assert run.returncode == 0
    out = run.stdout.decode()
    assert "PASS" in out
    assert "summary pass=1 fail=0" in out


def test_verify_csv_row(cli):
    run = cli("verify", "thm13", "--p", "3", "--format", "csv")
    rows = run.stdout.decode().strip().splitlines()
    assert rows[0] == "family,params,status,lhs,rhs,modulus,witness,note"
    assert rows[1].startswith('thm13,"{""p"":3}",PASS')


def test_verify_rejects_bad_input(cli):
    assert cli("verify", "thm11", "--p", "9").returncode == 2
    assert cli("verify", "nosuch", "--p", "3").returncode == 2
    assert cli("verify", "thm15ii", "--n", "3").returncode == 2
    assert cli("verify").returncode == 2


def test_scan_bound_narrowing(cli):
    run = cli("scan", "conj54", "--max-n", "50", "--format", "json")
    obj = json.loads(run.stdout)
    assert len(obj["results"]) == 50
    assert obj["summary"] == {"pass": 50, "fail": 0, "ill_posed": 0, "inconclusive": 0}
    run = cli("scan", "conj54", "--max-p", "20", "--format", "json")
    rs = json.loads(run.stdout)["results"]
    assert [r["params"]["p"] for r in rs] == [3, 5, 7, 11, 13, 17, 19]


def test_scan_empty_result_list_gives_zero_summary(cli):
    run = cli("scan", "conj51", "--max-p", "2", "--format", "json")
    assert run.returncode == 0
    obj = json.loads(run.stdout)
    assert obj["results"] == []
    assert obj["summary"] == {"pass": 0, "fail": 0, "ill_posed": 0, "inconclusive": 0}


def test_qverify_aliases(cli):
    run = cli("qverify", "thm31", "--n", "7", "--k", "2", "--format", "json")
    first = json.loads(run.stdout)["results"][0]
    assert first["family"] == "thm31q"
    assert first["status"] == "PASS"
    assert cli("qverify", "conj58", "--m", "1", "--n", "3").returncode == 0


def test_out_file_and_stamp(cli, tmp_path):
    target = tmp_path / "report.json"
    run = cli("verify", "thm13", "--p", "3", "--format", "json", "--out", str(target))
    assert run.returncode == 0
    obj = json.loads(target.read_text())
    assert obj["timestamp"] is None
    stamped = cli("verify", "thm13", "--p", "3", "--format", "json", "--stamp")
    assert json.loads(stamped.stdout)["timestamp"] is not None


def test_worker_count_never_changes_bytes(cli):
    one = cli("verify", "thm14i", "--max-n", "40", "--jobs", "1", "--format", "json")
    three = cli("verify", "thm14i", "--max-n", "40", "--jobs", "3", "--format", "json")
    assert one.stdout == three.stdout
    assert one.returncode == three.returncode == 0
    obj = json.loads(one.stdout)
    assert "jobs" not in obj["config"]


def test_json_result_key_order(cli):
    run = cli("verify", "thm13", "--p", "3", "--format", "json")
    first = json.loads(run.stdout)["results"][0]
    assert list(first)[:3] == ["family", "params", "status"]


def test_version_flag(cli):
    run = cli("--version")
    assert run.returncode == 0
    assert b"0.1.0" in run.stdout
