import pytest

from resolvekit.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_dist_path(capsys):
    rc, out, _ = run(capsys, "dist", "--family", "path", "--q", "3")
    assert rc == 0
    assert out.splitlines() == ["0 1 2", "1 0 1", "2 1 0", "diam 2"]


def test_dist_k_minus_clique(capsys):
    rc, out, _ = run(capsys, "dist", "--family", "k-minus-clique",
                     "--q", "6", "--clique", "3")
    assert rc == 0
    assert out.splitlines()[0] == "0 2 2 1 1 1"
    assert out.splitlines()[-1] == "diam 2"


def test_dist_graph6(capsys):
    rc, out, _ = run(capsys, "dist", "--graph6", "Bw")
    assert rc == 0
    assert out.splitlines()[:3] == ["0 1 1", "1 0 1", "1 1 0"]


def test_dist_disconnected_exit2(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("A?\n")   # two isolated vertices
    rc, _, err = run(capsys, "dist", "--file", str(f))
    assert rc == 2
    assert "not connected" in err


def test_dist_parse_error_exit2(capsys):
    rc, _, err = run(capsys, "dist", "--graph6", "B")
    assert rc == 2


def test_usage_error_exit1(capsys):
    rc, _, err = run(capsys, "lb", "--q", "2", "--diam", "1", "--n", "1")
    assert rc == 1


def test_witness_k5(capsys):
    rc, out, _ = run(capsys, "witness", "--family", "complete", "--q", "5")
    assert rc == 0
    assert "r exact 5" in out


def test_witness_k6_minus_k3(capsys):
    rc, out, _ = run(capsys, "witness", "--family", "k-minus-clique",
                     "--q", "6", "--clique", "3", "--box", "6")
    assert rc == 0
    assert "statement3 none" in out
    assert "r exact 7" in out


def test_witness_odd_cycle_named(capsys):
    rc, out, _ = run(capsys, "witness", "--family", "cycle", "--q", "5",
                     "--w", "-1 -1 1 -1 2")
    assert rc == 0
    assert "ap true" in out
    assert "g 1 ratio 4 r_w 5" in out


def test_code_encode_decode_cycle(capsys, tmp_path):
    dump = tmp_path / "k2.code"
    rc, out, _ = run(capsys, "code", "--family", "complete", "--q", "2",
                     "--n", "3", "--out", str(dump), "--verify")
    assert rc == 0
    assert "rows 4" in out and "identities: ok" in out

    rc, out, _ = run(capsys, "encode", "--family", "complete", "--q", "2",
                     "--code", str(dump), "--word", "1 1 1")
    assert rc == 0 and out.strip() == "2 2 2 1"

    rc, out, _ = run(capsys, "decode", "--family", "complete", "--q", "2",
                     "--code", str(dump), "--d", "2 2 2 1")
    assert rc == 0 and out.strip() == "1 1 1"

    rc, _, err = run(capsys, "decode", "--family", "complete", "--q", "2",
                     "--code", str(dump), "--d", "2 2 3 1")
    assert rc == 3


def test_code_verify_k3(capsys, tmp_path):
    dump = tmp_path / "k3.code"
    rc, out, _ = run(capsys, "code", "--family", "complete", "--q", "3",
                     "--n", "20", "--out", str(dump), "--verify")
    assert rc == 0
    assert "identities: ok" in out


def test_code_path_uses_named_witness(capsys, tmp_path):
    dump = tmp_path / "p4.code"
    rc, out, _ = run(capsys, "code", "--family", "path", "--q", "4",
                     "--n", "10", "--out", str(dump))
    assert rc == 0
    header, wline = dump.read_text().splitlines()[:2]
    assert wline == "-1 0 0 1"


def test_census_enumerate(capsys):
    rc, out, _ = run(capsys, "census", "--enumerate", "5")
    assert rc == 0
    assert out.strip() == "q=5 scanned=728 flagged_classes=0"


def test_census_file(capsys, tmp_path):
    f = tmp_path / "mix.g6"
    f.write_text(">>graph6<<\nBw\nA?\nDhc\n")
    rc, out, err = run(capsys, "census", "--file", str(f))
    assert rc == 0
    assert "skipped 1 disconnected" in err


def test_mastermind_fixed_secret(capsys):
    rc, out, _ = run(capsys, "mastermind", "--q", "2", "--n", "3",
                     "--secret", "1 1 1")
    assert rc == 0
    lines = out.splitlines()
    assert lines[-1] == "recovered 1 1 1"
    assert "answers 1 1 1 2" in out
    assert sum(1 for ln in lines if ln.startswith("query ")) == 4


def test_mastermind_seeded(capsys):
    rc1, out1, _ = run(capsys, "mastermind", "--q", "3", "--n", "5", "--seed", "7")
    rc2, out2, _ = run(capsys, "mastermind", "--q", "3", "--n", "5", "--seed", "7")
    assert rc1 == rc2 == 0
    assert out1 == out2     # byte-identical across runs
    lines = out1.splitlines()
    secret = next(ln for ln in lines if ln.startswith("secret "))
    recovered = next(ln for ln in lines if ln.startswith("recovered "))
    assert secret.split()[1:] == recovered.split()[1:]


def test_mastermind_n1(capsys):
    rc, out, _ = run(capsys, "mastermind", "--q", "2", "--n", "1",
                     "--secret", "1")
    assert rc == 0
    assert sum(1 for ln in out.splitlines() if ln.startswith("query ")) == 2
    assert out.splitlines()[-1] == "recovered 1"


def test_lb(capsys):
    rc, out, _ = run(capsys, "lb", "--q", "2", "--diam", "1", "--n", "3")
    assert rc == 0 and out.strip() == "2"
    rc, out, _ = run(capsys, "lb", "--q", "2", "--diam", "1", "--n", "100")
    assert rc == 0 and out.strip().isdigit()


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("RESOLVEKIT_CAP", "10")
    rc, out, _ = run(capsys, "witness", "--family", "k-minus-clique",
                     "--q", "6", "--clique", "3", "--box", "6")
    # the tiny cap stops the growing-box search before a witness appears
    assert rc == 0
    assert "r lower 7 upper ?" in out


def test_determinism_census(capsys):
    rc1, out1, _ = run(capsys, "census", "--enumerate", "4")
    rc2, out2, _ = run(capsys, "census", "--enumerate", "4")
    assert out1 == out2
