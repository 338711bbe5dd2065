import json
import subprocess
import sys

import pytest

from hullatlas import cli


def run(tmp_path, *args):
    out = tmp_path / "out.json"
    rc = cli.main([*args, "--out", str(out)])
    assert rc == 0
    return json.loads(out.read_text())


def test_counts(tmp_path):
    d = run(tmp_path, "counts", "--surface", "bordiga")
    assert d["counts"]["A1^2"] == 235 and d["counts"]["A1^4"] == 1761
    assert run(tmp_path, "counts", "--surface", "plane:4", "--class", "A1^3")["count"] == 675
    assert run(tmp_path, "counts", "--surface", "delpezzo", "--class", "A2")["count"] == 24
    assert "formula inapplicable" in run(tmp_path, "counts", "--surface", "veronese")["counts"]["A1^2"]


def test_dualcurve(tmp_path):
    d = run(tmp_path, "dualcurve", "--invariants", "8,9,0,12")
    assert (d["dual"]["degree"], d["dual"]["nodes"], d["dual"]["cusps"]) == (20, 114, 48)
    d = run(tmp_path, "dualcurve", "--developable", "620,725,2304")
    assert d["developable_degree"] == 384


def test_veronese_report(tmp_path):
    rep = tmp_path / "rep.json"
    assert cli.main(["veronese", "--center", "1,0,0,1,0,1", "--report", str(rep)]) == 0
    d = json.loads(rep.read_text())
    assert d["classification"] == "FullSpaceHull"
    assert d["curve"]["real_locus_empty"] is True
    assert d["certificates"]["full_hull_witness"]["ok"] is True
    assert cli.main(["veronese", "--example", "ex1", "--report", str(rep)]) == 0
    d = json.loads(rep.read_text())
    assert d["classification"] == "BoundedHull"
    assert all(d["certificates"].values())


def test_veronese_matrix_basis(tmp_path):
    basis = "[[1,0,0,-1,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,0,1,0],[1,0,0,0,0,-1]]"
    d = run(tmp_path, "veronese", "--center", "1,0,0,1,0,1", "--basis", basis, "--dual")
    assert d["hull_type"] == "FullSpaceHull"
    assert d["forms"][0] == "t0^2 - t1^2"


def test_delpezzo(tmp_path):
    d = run(tmp_path, "delpezzo", "--example", "delpezzo_ex39", "--report")
    assert d["report"]["real_type"] == "D4" and d["x4"]["total"] == 40
    d = run(tmp_path, "delpezzo", "--f0", "2*x0^2 - 3*x1^2 - x2^2 + x4^2", "--finf", "3*x0^2 - 2*x1^2 - x3^2 - x4^2",
            "--chart", "1,0,0,0,0")
    assert d["real_type"] == "Q22" and d["chart"]["valid"]


def test_delpezzo_slices(tmp_path):
    csv = tmp_path / "s.csv"
    d = run(tmp_path, "delpezzo", "--example", "delpezzo_ex37", "--slices", str(csv), "--section=-1,2,0,0,0")
    assert len(d["slices"]["clouds"]) == 3
    assert csv.read_text().startswith("label,c1,c2,c3")


def test_bordiga(tmp_path):
    assert run(tmp_path, "bordiga", "census", "--k", "4")["total"] == 1761
    assert run(tmp_path, "bordiga", "severi-dual")["degree"] == 384
    d = run(tmp_path, "bordiga", "sos", "--points", "(0,0);(1,0);(0,1)")
    assert d["zero_set_certified"] is True
    d = run(tmp_path, "bordiga", "classify", "--case", "X4_A")
    assert d[0]["realizable"] is False


def test_convexity(tmp_path):
    d = run(tmp_path, "convexity", "pair", "--example", "delpezzo_ex38")
    assert len(d["pair"]) == 2
    d = run(tmp_path, "convexity", "chart", "--example", "delpezzo_ex38", "--hyperplane", "1,0,0,0,0")
    assert d["compact"] is True


def test_errors_give_exit_code_two(capsys):
    assert cli.main(["bordiga", "sos", "--points", "(0,0);(0,0)"]) == 2
    assert "error" in capsys.readouterr().err
    assert cli.main(["counts", "--surface", "plane:4", "--class", "A1^7"]) == 2


def test_replay_all(tmp_path):
    out = tmp_path / "report.jsonl"
    assert cli.main(["replay", "--target", "all", "--out", str(out)]) == 0
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    assert "config" in lines[0]
    claims = lines[1:]
    assert len(claims) > 100
    statuses = {c["status"] for c in claims}
    assert statuses <= {"pass", "flagged", "open"}
    assert sum(c["status"] == "flagged" for c in claims) == 5
    assert sum(c["status"] == "open" for c in claims) == 1
    targets = {c["target"] for c in claims}
    assert targets == set(cli.TARGETS) - {"all"}


def test_replay_unknown_target():
    with pytest.raises(SystemExit):
        cli.main(["replay", "--target", "nowhere"])


def test_config_file_and_env_seed(tmp_path, monkeypatch):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"seed": 5, "samples": 100}))
    c = cli.RunConfig.load(str(cfg))
    assert (c.seed, c.samples) == (5, 100)
    monkeypatch.setenv("ATLAS_SEED", "17")
    assert cli.RunConfig.load(str(cfg)).seed == 17
    cfg.write_text(json.dumps({"bogus": 1}))
    with pytest.raises(ValueError):
        cli.RunConfig.load(str(cfg))


def test_replay_records_seed(tmp_path, monkeypatch):
    monkeypatch.setenv("ATLAS_SEED", "3")
    out = tmp_path / "r.jsonl"
    assert cli.main(["replay", "--target", "tables", "--out", str(out)]) == 0
    assert json.loads(out.read_text().splitlines()[0])["config"]["seed"] == 3


def test_replay_aborts_on_failed_claim(monkeypatch, tmp_path):
    def broken(L, cfg):
        L.check("deliberately wrong", 1, 2, "test")

    monkeypatch.setitem(cli.REPLAYS, "tables", broken)
    out = tmp_path / "r.jsonl"
    assert cli.main(["replay", "--target", "tables", "--out", str(out)]) == 1
    last = json.loads(out.read_text().splitlines()[-1])
    assert last["status"] == "fail"


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "hullatlas.cli", "dualcurve"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["dual"]["degree"] == 20
