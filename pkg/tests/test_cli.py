import json

import pytest

from gtseq import cli
from gtseq.verify import SUITES


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_product(capsys):
    code, out, _ = run(capsys, "count", "product", "--k", "0,2")
    assert code == 0
    assert out.strip() == "3"


def test_count_alpha(capsys):
    code, out, _ = run(capsys, "count", "alpha", "--n", "3", "--k", "1,2,3")
    assert code == 0
    assert out.strip() == "7"


def test_count_alpha_length_mismatch(capsys):
    code, _, err = run(capsys, "count", "alpha", "--n", "2", "--k", "1,2,3")
    assert code == 2
    assert "disagrees" in err


def test_count_negative_k_equals_form(capsys):
    code, out, _ = run(capsys, "count", "det", "--k=-1,0,2")
    assert (code, out.strip()) == (0, "15")
    code, out, _ = run(capsys, "count", "product", "--k= -2,0,1")
    assert (code, out.strip()) == (0, "15")


def test_count_gtseq_variants(capsys):
    code, out, _ = run(capsys, "count", "gtseq", "--k", "0,1,2")
    assert (code, out.strip()) == (0, "8")
    code, out, _ = run(capsys, "count", "gtseq", "--k", "0,1,2",
                       "--sequence", "random", "--seed", "11")
    assert (code, out.strip()) == (0, "8")
    code, out, _ = run(capsys, "count", "gtseq", "--k", "0,1,2",
                       "--sequence", "leafchain:2")
    assert (code, out.strip()) == (0, "8")
    code, _, err = run(capsys, "count", "gtseq", "--k", "0,1",
                       "--sequence", "random")
    assert code == 2 and "--seed" in err


def test_count_paths_variants(capsys):
    for variant, want in (("classic", "3"), ("general", "3"),
                          ("nonintersecting", "3")):
        code, out, _ = run(capsys, "count", "paths", "--k", "0,2",
                           "--variant", variant)
        assert (code, out.strip()) == (0, want)


def test_bad_k_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "product", "--k", "zebra"])
    assert exc.value.code == 2


def test_verify_report_shape(capsys):
    code, out, _ = run(capsys, "verify", "decomposition")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "decomposition"
    assert report["violations"] == []
    assert report["pointsChecked"] > 0
    assert "wallTime" in report


def test_verify_flag_mapping(capsys):
    code, out, _ = run(capsys, "verify", "theorem-main", "--n", "2",
                       "--grid=-1..1", "--trees", "2", "--seed", "3")
    assert code == 0
    report = json.loads(out)
    assert report["parameters"]["nMax"] == 2
    assert report["parameters"]["bound"] == 1
    assert report["parameters"]["trees"] == 2
    assert report["parameters"]["seed"] == 3


def test_verify_asymmetric_grid_rejected(capsys):
    code, _, err = run(capsys, "verify", "theorem-main", "--grid=0..2")
    assert code == 2
    assert "symmetric" in err


def test_verify_workers_only_for_all(capsys):
    code, _, err = run(capsys, "verify", "intervals", "--workers", "2")
    assert code == 2
    assert "workers" in err


def test_verify_determinism(capsys):
    code1, out1, _ = run(capsys, "verify", "intervals")
    code2, out2, _ = run(capsys, "verify", "intervals")
    assert code1 == code2 == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("wallTime")
    r2.pop("wallTime")
    assert r1 == r2


def test_verify_exit_one_on_violation(capsys, monkeypatch):
    def broken():
        return {"suite": "broken", "parameters": {}, "pointsChecked": 1,
                "violations": [{"k": [0], "lhs": 1, "rhs": 2}],
                "wallTime": 0.0}

    monkeypatch.setitem(SUITES, "broken", broken)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1
    assert json.loads(out)["violations"]


def test_config_file_defaults(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "gtseq.conf"
    cfg.write_text("# sweep bounds\nnMax = 2\ngrid = -1..1\nseed = 5\n")
    monkeypatch.setenv("GTSEQ_CONFIG", str(cfg))
    code, out, _ = run(capsys, "verify", "delta-n")
    assert code == 0
    report = json.loads(out)
    assert report["parameters"]["nMax"] == 2
    assert report["parameters"]["bound"] == 1
    # flags still win over the file
    code, out, _ = run(capsys, "verify", "delta-n", "--n", "1")
    assert json.loads(out)["parameters"]["nMax"] == 1


def test_config_rejects_unknown_key(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "bad.conf"
    cfg.write_text("turbo = yes\n")
    monkeypatch.setenv("GTSEQ_CONFIG", str(cfg))
    code, _, err = run(capsys, "count", "product", "--k", "0,2")
    assert code == 2
    assert "turbo" in err


def test_emit_tree_formats(capsys):
    code, out, _ = run(capsys, "emit", "tree", "--n", "4", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    code, out, _ = run(capsys, "emit", "tree", "--n", "4")
    doc = json.loads(out)
    assert doc["n"] == 4
    assert len(doc["edges"]) == 3


def test_emit_pattern_and_ssyt(capsys):
    code, out, _ = run(capsys, "emit", "pattern", "--k", "0,2")
    doc = json.loads(out)
    assert doc["signedCount"] == 3
    assert len(doc["patterns"]) == 3
    code, out, _ = run(capsys, "emit", "ssyt", "--k", "0,2")
    assert len(json.loads(out)["tableaux"]) == 3


def test_emit_paths_json_and_svg(capsys):
    code, out, _ = run(capsys, "emit", "paths", "--k", "0,2")
    doc = json.loads(out)
    assert doc["variant"] == "classic"
    assert len(doc["families"]) == 3
    code, out, _ = run(capsys, "emit", "paths", "--k", "0,2", "--format",
                       "svg", "--index", "1")
    assert out.startswith("<svg")
    code, _, err = run(capsys, "emit", "paths", "--k", "0,2", "--format",
                       "svg", "--index", "9")
    assert code == 2 and "index" in err


def test_convert_round_trip(capsys, tmp_path):
    pattern_doc = tmp_path / "pattern.json"
    pattern_doc.write_text('{"rows": [[1], [0, 2]]}')
    code, out, _ = run(capsys, "convert", "pattern-to-ssyt",
                       "--input", str(pattern_doc))
    assert code == 0
    ssyt_doc = tmp_path / "ssyt.json"
    ssyt_doc.write_text(out)
    code, out, _ = run(capsys, "convert", "ssyt-to-pattern",
                       "--input", str(ssyt_doc))
    assert json.loads(out)["rows"] == [[1], [0, 2]]


def test_convert_treeseq_round_trip(capsys, tmp_path):
    pattern_doc = tmp_path / "pattern.json"
    pattern_doc.write_text('{"rows": [[1], [2, 0]]}')
    code, out, _ = run(capsys, "convert", "pattern-to-treeseq",
                       "--input", str(pattern_doc))
    assert code == 0
    chain = json.dumps(json.loads(out)["chain"])
    chain_doc = tmp_path / "chain.json"
    chain_doc.write_text(chain)
    code, out, _ = run(capsys, "convert", "treeseq-to-pattern",
                       "--input", str(chain_doc))
    doc = json.loads(out)
    assert doc["rows"] == [[1], [2, 0]]
    assert doc["sign"] == -1


def test_convert_rejects_garbage(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows": "nope"}')
    code, _, err = run(capsys, "convert", "pattern-to-ssyt", "--input",
                       str(bad))
    assert code == 2


def test_apply_operator(capsys):
    code, out, _ = run(capsys, "apply", "--operator", "D^2 k1",
                       "--function", "patterns", "--at", "0,0")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run(capsys, "apply", "--operator", "E^-1 k1 E k2",
                       "--function", "product", "--at", "0,2")
    assert (code, out.strip()) == (0, "5")
    code, _, err = run(capsys, "apply", "--operator", "Q k1",
                       "--function", "product", "--at", "0,2")
    assert code == 2
