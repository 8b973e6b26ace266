from __future__ import annotations

import json

from designforge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field_command(capsys):
    code, out, _ = run_cli(capsys, "field", "--m", "6")
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 6 and obj["q"] == 64 and obj["poly"] == "0x43"


def test_field_rejects_odd_m(capsys):
    code, out, err = run_cli(capsys, "field", "--m", "5")
    assert code == 2 and out == "" and "UnsupportedM" in err


def test_field_rejects_non_primitive(capsys):
    code, _, err = run_cli(capsys, "field", "--m", "4", "--poly", "0x1F")
    assert code == 2 and "NonPrimitivePolynomial" in err


def test_weights_closed_form_match(capsys):
    code, out, _ = run_cli(capsys, "weights", "--family", "c1", "--s", "3", "--closed-form")
    assert code == 0
    obj = json.loads(out)
    assert obj["closed_form_match"] is True
    assert obj["distribution"]["dimension"] == 19


def test_weights_closed_form_inapplicable(capsys):
    code, _, err = run_cli(capsys, "weights", "--family", "c1", "--s", "2", "--closed-form")
    assert code == 2 and "InapplicableParameters" in err


def test_weights_c2_enumerator(capsys):
    code, out, _ = run_cli(capsys, "weights", "--family", "c2", "--s", "2", "--l", "1")
    assert code == 0
    obj = json.loads(out)
    weights = {row["w"]: row["count"] for row in obj["distribution"]["weights"]}
    assert weights == {0: "1", 4: "140", 6: "448", 8: "870", 10: "448", 12: "140", 16: "1"}


def test_weights_requires_l_for_c2(capsys):
    code, _, err = run_cli(capsys, "weights", "--family", "c2", "--s", "2")
    assert code == 2 and "ValueError" in err


def test_weights_csv(capsys):
    code, out, _ = run_cli(capsys, "weights", "--family", "c1", "--s", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "w,count"
    assert lines[1] == "0,1" and lines[2] == "4,140"


def test_designs_command(capsys):
    code, out, _ = run_cli(capsys, "designs", "--family", "c1", "--s", "3", "--t", "2")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["reports"]) == 7
    assert all(r["verified"] and r["match"] for r in obj["reports"])


def test_designs_t3_m4(capsys):
    code, out, _ = run_cli(capsys, "designs", "--family", "c2", "--s", "2", "--l", "1", "--t", "3")
    assert code == 0
    obj = json.loads(out)
    got = {r["k"]: r["lambda"] for r in obj["reports"]}
    assert got == {4: "1", 6: "16", 8: "87", 10: "96", 12: "55"}


def test_designs_export_blocks(capsys):
    code, out, _ = run_cli(
        capsys, "designs", "--family", "c1", "--s", "2", "--weight", "4", "--export-blocks"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 140
    assert all(len(line.split()) == 4 for line in lines)


def test_invariance_command(capsys):
    code, out, _ = run_cli(capsys, "invariance", "--family", "c1", "--s", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "closure": True, "witness": None, "orbit_checked": True,
        "orbit_invariant": True, "dual_inherits": True,
    }


def test_invariance_skips_orbit_for_large_m(capsys):
    code, out, err = run_cli(capsys, "invariance", "--family", "c1", "--s", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["closure"] is True and obj["orbit_checked"] is False
    assert "skipped" in err


def test_reproduce_single(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "--example", "m4")
    assert code == 0
    obj = json.loads(out)
    assert obj["all_match"] is True
    assert obj["results"][0]["code"] == "[16, 11, 4]"


def test_reproduce_unknown_example(capsys):
    code, _, err = run_cli(capsys, "reproduce", "--example", "9.9")
    assert code == 2 and "InapplicableParameters" in err


def test_reproduce_csv(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "--example", "3.7", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "example,code,match"
    assert lines[1] == "3.7,[64, 16, 24],True"


def test_export_blocks_requires_weight(capsys):
    code, _, err = run_cli(capsys, "designs", "--family", "c1", "--s", "2", "--export-blocks")
    assert code == 2 and "InapplicableParameters" in err


def test_threads_env_fallback(monkeypatch):
    from designforge.cli import _default_threads

    monkeypatch.setenv("DESIGN_FORGE_THREADS", "3")
    assert _default_threads() == 3
    monkeypatch.setenv("DESIGN_FORGE_THREADS", "junk")
    assert _default_threads() >= 1
    monkeypatch.delenv("DESIGN_FORGE_THREADS")
    assert _default_threads() >= 1


def test_thread_count_does_not_change_output(capsys):
    outs = []
    for threads in ("1", "2", "8"):
        code, out, _ = run_cli(
            capsys, "weights", "--family", "c2", "--s", "3", "--l", "1", "--threads", threads
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]
