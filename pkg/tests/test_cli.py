"""Command-line behaviors: outputs, exit codes, determinism."""
import json

from fracbal.cli import main
from fracbal.gadgets import BuildTrace, Op2
from fracbal.sgraph import parse_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_w_prime(capsys):
    code, out, _ = run(capsys, "build", "w-prime")
    assert code == 0
    g = parse_graph(out)
    assert len(g.vertices) == 16


def test_build_is_byte_identical(capsys):
    _, first, _ = run(capsys, "build", "u-hat")
    _, second, _ = run(capsys, "build", "u-hat")
    assert first == second


def test_build_g_seq_level(capsys):
    code, out, _ = run(capsys, "build", "g-seq", "--i", "1")
    assert code == 0
    assert len(parse_graph(out).vertices) == 130


def test_enumerate_balanced_maximal(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "w-hat")
    graph_file = tmp_path / "w.json"
    graph_file.write_text(out)
    code, out, _ = run(
        capsys, "enumerate", str(graph_file), "--maximal", "--contains", "u,v"
    )
    assert code == 0
    sets = json.loads(out)
    assert len(sets) == 8
    assert all({"u", "v"} <= set(s) for s in sets)


def test_enumerate_guard_exit_code(tmp_path, capsys):
    _, out, _ = run(capsys, "build", "w-prime")
    f = tmp_path / "wp.json"
    f.write_text(out)
    code, _, err = run(capsys, "enumerate", str(f), "--guard", "4")
    assert code == 3
    assert "guard" in err


def test_solve_chi_fb(tmp_path, capsys):
    _, out, _ = run(capsys, "build", "k3-minus")
    f = tmp_path / "k3.json"
    f.write_text(out)
    code, out, _ = run(capsys, "solve", "chi-fb", str(f))
    assert code == 0
    doc = json.loads(out)
    assert doc["optimum"] == "3/2"
    assert doc["dual"]
    code, out, _ = run(capsys, "solve", "chi-fb", str(f), "--column-generation")
    assert code == 0
    assert json.loads(out)["optimum"] == "3/2"


def test_verify_pass_and_fail(tmp_path, capsys):
    _, gout, _ = run(capsys, "build", "w-hat")
    gfile = tmp_path / "w.json"
    gfile.write_text(gout)
    good = {
        "p": 3, "q": 1, "mode": "balanced",
        "classes": [
            {"set": ["u", "v", "w", "x2"], "rep": 1},
            {"set": ["x1", "x3", "z", "t"], "rep": 1},
            {"set": ["u", "x4", "x5"], "rep": 1},
        ],
    }
    cfile = tmp_path / "cert.json"
    cfile.write_text(json.dumps(good))
    code, out, _ = run(capsys, "verify", str(gfile), str(cfile))
    assert code == 0 and json.loads(out)["ok"]

    bad = dict(good)
    bad["classes"] = [{"set": ["u", "v", "z"], "rep": 1}]
    cfile.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "verify", str(gfile), str(cfile))
    assert code == 1
    doc = json.loads(out)
    assert not doc["ok"]
    kinds = {v["kind"] for v in doc["violations"]}
    assert "unbalanced-class" in kinds and "undercovered-vertex" in kinds


def test_compose_command(tmp_path, capsys):
    trace = BuildTrace("K3_MINUS", (Op2(("u1", "u2")),))
    tfile = tmp_path / "trace.json"
    tfile.write_text(trace.to_json())
    code, out, _ = run(capsys, "compose-8341", str(tfile))
    assert code == 0
    doc = json.loads(out)
    assert doc["p"] == 83 and doc["q"] == 41


def test_audit_triangle_command(tmp_path, capsys):
    from fracbal.tables import w_coloring_172_85

    cfile = tmp_path / "t1.json"
    cfile.write_text(w_coloring_172_85().to_json())
    code, out, _ = run(
        capsys, "audit-triangle", str(cfile), "--triangle", "w,x1,x2", "--sign", "-1"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["missing"] == 4 and doc["strict_property"] is False


def test_bounds_commands(capsys):
    code, out, _ = run(capsys, "bounds", "thresholds")
    assert code == 0
    doc = json.loads(out)
    assert set(doc.values()) == {"83/41", "172/85", "52/25"}
    code, out, _ = run(capsys, "bounds", "mu", "--p", "2", "--q", "1", "--i", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["mu"] == "-1" and doc["first-infeasible-index"] == 1


def test_check_commands(capsys):
    for which in ("lemma-3.1", "forest-lemmas", "triangle-signs"):
        code, out, _ = run(capsys, "check", which)
        assert code == 0
        assert json.loads(out)["ok"]


def test_check_lemma_listing_has_ten_sets(capsys):
    code, out, _ = run(capsys, "check", "lemma-3.1")
    assert code == 0
    assert len(json.loads(out)["sets"]) == 10


def test_reproduce_single_criterion(capsys):
    code, out, _ = run(capsys, "reproduce", "lemma-3.1")
    assert code == 0
    assert "PASS lemma-3.1" in out


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "build", "no-such-gadget")
    assert code == 2


def test_missing_file_exit_code(tmp_path, capsys):
    code, _, err = run(capsys, "solve", "chi-fb", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read" in err


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "graph.json"
    code, out, _ = run(capsys, "build", "k4-minus", "--out", str(target))
    assert code == 0 and out == ""
    assert len(parse_graph(target.read_text()).vertices) == 4
