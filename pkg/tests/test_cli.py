import json

import pytest

from qshadow import cli, fixtures as fx, quivers as qv, shadows as sh


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_shadows_counts(capsys):
    code, out, _ = run(capsys, "shadows", "--n", "3", "--mode", "essential")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "shadows", "--n", "1", "--mode", "basic")
    assert code == 0 and out.strip() == "1"


def test_shadows_out_of_range(capsys):
    code, _, err = run(capsys, "shadows", "--n", "7")
    assert code == 2


def test_shadows_writes_result_and_manifest(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "shadows", "--n", "3", "--mode", "essential",
                     "--out", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["count"] == 4
    manifest = json.loads((tmp_path / "s.json.manifest.json").read_text())
    assert manifest["command"] == "shadows"
    assert manifest["workers"] == 1


def test_classify_verify_n3(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--mode", "tsp4", "--verify")
    assert code == 0
    assert "verified" in out


def test_classify_n6_rejected(capsys):
    code, _, err = run(capsys, "classify", "--n", "6")
    assert code == 2
    assert "UnsupportedSize" in err


def test_classify_threads_same_bytes(capsys, tmp_path):
    one = tmp_path / "one.json"
    two = tmp_path / "two.json"
    assert run(capsys, "classify", "--n", "3", "--out", str(one))[0] == 0
    assert run(capsys, "classify", "--n", "3", "--threads", "2",
               "--out", str(two))[0] == 0
    assert one.read_bytes() == two.read_bytes()


def test_reconstruct_command(capsys, tmp_path):
    path = tmp_path / "shadow.json"
    path.write_text(sh.to_json(fx.SHADOWS_3[2]))
    code, out, _ = run(capsys, "reconstruct", "--shadow", str(path), "--report")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["survivors"]) == 1
    assert any(r["verdict"] == "excluded" for r in payload["reports"])


def test_mutate_named_fixture(capsys):
    code, out, _ = run(capsys, "mutate", "--quiver", "Q17", "--vertex", "3")
    assert code == 0
    mutated = qv.from_json(out)
    assert qv.is_isomorphic_or_opposite(mutated, fx.Q13_FIXTURE)


def test_mutate_domain_error(capsys):
    code, _, err = run(capsys, "mutate", "--quiver", "MARKOV3", "--vertex", "1")
    assert code == 4
    assert "NoMatchingPattern" in err


def test_recognize_q17(capsys):
    code, out, _ = run(capsys, "recognize", "--quiver", "Q17")
    assert code == 0
    payload = json.loads(out)
    assert sorted(b["type"] for b in payload["blocks"]) == ["I", "V"]


def test_canon_idempotent_bytes(capsys, tmp_path):
    code, first, _ = run(capsys, "canon", "--quiver", "MARKOV3")
    assert code == 0
    path = tmp_path / "q.json"
    path.write_text(first)
    code, second, _ = run(capsys, "canon", "--quiver", str(path))
    assert code == 0
    assert first == second


def test_canon_dot_output(capsys):
    code, out, _ = run(capsys, "canon", "--quiver", "TRI3", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")


def test_missing_file_is_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "canon", "--quiver", str(tmp_path / "nope.json"))
    assert code == 3


def test_bad_subcommand_is_arg_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "classify")[0] == 2  # missing --n
