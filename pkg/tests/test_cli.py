"""CLI contract: subcommands, exit codes, deterministic reports."""

import json
from pathlib import Path

from reedylab.cli import main
from reedylab.corpus import default_corpus_dir
from reedylab.serialize import write_json

CORPUS = default_corpus_dir()


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_diamond(tmp_path, capsys):
    out = tmp_path / "d.alg.json"
    code, stdout, _ = run(
        capsys, "build", str(CORPUS / "diamond.quiver.json"), "--field", "Q", "-o", str(out)
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["dim"] == 9 and report["radical_dim"] == 5
    assert out.exists()


def test_build_malformed_relation_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.quiver.json"
    write_json(
        bad,
        {
            "vertices": ["a", "b", "c"],
            "arrows": [["a", "b", "x"], ["a", "c", "y"]],
            "relations": [[{"coeff": "1", "path": ["x"]}, {"coeff": "-1", "path": ["y"]}]],
            "nilpotency_bound": 2,
        },
    )
    code, _, stderr = run(capsys, "build", str(bad))
    assert code == 2
    assert "relation 0" in stderr


def test_construct_simplex(tmp_path, capsys):
    base = tmp_path / "s2"
    code, stdout, _ = run(capsys, "construct", "simplex", "--n", "2", "-o", str(base))
    assert code == 0
    report = json.loads(stdout)
    assert report["dim"] == 31
    assert Path(f"{base}.alg.json").exists() and Path(f"{base}.reedy.json").exists()
    code, stdout, _ = run(capsys, "verify", "reedy", f"{base}.reedy.json")
    assert code == 0


def test_construct_matrix_gf2(tmp_path, capsys):
    base = tmp_path / "m2"
    code, stdout, _ = run(
        capsys, "construct", "matrix", "--n", "2", "--field", "GF:2", "-o", str(base)
    )
    assert code == 0
    assert json.loads(stdout)["dim"] == 4


def test_construct_tensor(tmp_path, capsys):
    code, stdout, _ = run(
        capsys,
        "construct",
        "tensor",
        str(CORPUS / "diamond.deg1234.reedy.json"),
        str(CORPUS / "simplex1.reedy.json"),
        "-o",
        str(tmp_path / "t"),
    )
    assert code == 0
    assert json.loads(stdout)["dim"] == 63


def test_construct_tensor_sibling_discovery(tmp_path, capsys):
    # passing .alg.json files finds the .reedy.json siblings by name
    import shutil

    for stem in ("simplex1",):
        shutil.copy(CORPUS / f"{stem}.alg.json", tmp_path / f"{stem}.alg.json")
        shutil.copy(CORPUS / f"{stem}.reedy.json", tmp_path / f"{stem}.reedy.json")
    code, stdout, _ = run(
        capsys,
        "construct",
        "tensor",
        str(tmp_path / "simplex1.alg.json"),
        str(tmp_path / "simplex1.alg.json"),
        "-o",
        str(tmp_path / "t49"),
    )
    assert code == 0 and json.loads(stdout)["dim"] == 49


def test_corpus_run_with_worker_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("REEDYLAB_THREADS", "2")
    code, stdout, _ = run(capsys, "corpus", "run")
    assert code == 0
    monkeypatch.setenv("REEDYLAB_THREADS", "1")
    code2, stdout2, _ = run(capsys, "corpus", "run")
    assert code2 == 0 and stdout2 == stdout


def test_construct_dualext(tmp_path, capsys):
    up = tmp_path / "up.alg.json"
    down = tmp_path / "down.alg.json"
    import reedylab as rl
    from reedylab.serialize import save_algebra

    Q = rl.rationals()
    ap, apf = rl.build_quiver_algebra(
        rl.QuiverPresentation(["a", "b"], [["a", "b", "u"]], [], 1), Q
    )
    am, amf = rl.build_quiver_algebra(
        rl.QuiverPresentation(["a", "b"], [["b", "a", "v"]], [], 1), Q
    )
    save_algebra(up, ap, apf.with_degrees([0, 1]))
    save_algebra(down, am, amf.with_degrees([0, 1]))
    code, stdout, _ = run(
        capsys, "construct", "dualext", str(up), str(down), "-o", str(tmp_path / "de")
    )
    assert code == 0
    assert json.loads(stdout)["dim"] == 5


def test_verify_reedy_exit_codes(capsys):
    code, stdout, _ = run(
        capsys, "verify", "reedy",
        str(CORPUS / "diamond.alg.json"), str(CORPUS / "diamond.deg1234.reedy.json"),
    )
    assert code == 0 and json.loads(stdout)["overall"] is True
    code, stdout, _ = run(capsys, "verify", "reedy", str(CORPUS / "uppertri.ss.reedy.json"))
    assert code == 1
    report = json.loads(stdout)
    total_domain = sum(p["domain_dim"] for p in report["cond_decomp"]["pairs"])
    total_block = sum(p["block_dim"] for p in report["cond_decomp"]["pairs"])
    assert (total_domain, total_block) == (2, 3)


def test_verify_qh(capsys):
    code, stdout, _ = run(
        capsys, "verify", "qh",
        str(CORPUS / "diamond.alg.json"), str(CORPUS / "diamond.order3201.order.json"),
    )
    assert code == 0 and json.loads(stdout)["overall"] is True


def test_verify_borel_delta(capsys):
    code, _, _ = run(capsys, "verify", "borel", str(CORPUS / "simplex1.reedy.json"))
    assert code == 0
    code, _, _ = run(capsys, "verify", "delta", str(CORPUS / "simplex1.reedy.json"))
    assert code == 0
    code, _, _ = run(capsys, "verify", "borel", str(CORPUS / "uppertri.ss.reedy.json"))
    assert code == 1


def test_verify_theorem41(capsys):
    code, stdout, _ = run(capsys, "verify", "theorem41", str(CORPUS / "tensor49.reedy.json"))
    assert code == 0
    report = json.loads(stdout)
    assert report["agree"] and report["route_reedy"]


def test_verify_theorem53_counterexample(capsys):
    code, stdout, _ = run(
        capsys, "verify", "theorem53", str(CORPUS / "uppertri.ss.reedy.json"), "--cut", "0"
    )
    assert code == 1
    report = json.loads(stdout)
    assert report["triple"] == [True, True, True]
    assert report["hypothesis_product_spans"] is False
    assert report["overall"] is False


def test_verify_missing_cut_is_usage_error(capsys):
    code, _, stderr = run(capsys, "verify", "theorem53", str(CORPUS / "uppertri.ss.reedy.json"))
    assert code == 2 and "cut" in stderr


def test_search_exit_codes(capsys):
    code, stdout, _ = run(
        capsys, "search", str(CORPUS / "m2.gf2.alg.json"), "--mode", "exhaustive"
    )
    assert code == 1 and json.loads(stdout)["count"] == 0
    code, stdout, _ = run(
        capsys, "search", str(CORPUS / "simplex1.alg.json"), "--mode", "heuristic"
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["count"] == 1
    assert report["found"][0]["aplus_dim"] == 4


def test_search_diamond_gf2(capsys):
    code, stdout, _ = run(
        capsys, "search", str(CORPUS / "diamond.gf2.alg.json"), "--mode", "exhaustive"
    )
    assert code == 0
    report = json.loads(stdout)
    degs = [tuple(e["degrees"][v] for v in ("a", "b", "c", "d")) for e in report["found"]]
    assert (0, 1, 2, 3) in degs
    assert (3, 2, 0, 1) not in degs


def test_search_reports_are_byte_identical(capsys):
    _, first, _ = run(capsys, "search", str(CORPUS / "diamond.gf2.alg.json"), "--mode", "exhaustive")
    _, second, _ = run(capsys, "search", str(CORPUS / "diamond.gf2.alg.json"), "--mode", "exhaustive")
    assert first == second


def test_verify_reports_are_byte_identical(capsys):
    _, first, _ = run(capsys, "verify", "theorem41", str(CORPUS / "simplex1.reedy.json"))
    _, second, _ = run(capsys, "verify", "theorem41", str(CORPUS / "simplex1.reedy.json"))
    assert first == second


def test_corpus_run_passes(capsys):
    code, stdout, _ = run(capsys, "corpus", "run")
    assert code == 0
    lines = stdout.strip().splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert lines[-1].endswith("corpus entries match")


def test_corpus_corrupted_fixture_names_entry(tmp_path, capsys):
    import shutil

    shutil.copytree(CORPUS, tmp_path / "corpus")
    index = tmp_path / "corpus" / "entries.json"
    data = json.loads(index.read_text())
    data["entries"][0]["expected"]["overall"] = not data["entries"][0]["expected"]["overall"]
    name = data["entries"][0]["name"]
    index.write_text(json.dumps(data))
    code, stdout, _ = run(capsys, "corpus", "run", "--dir", str(tmp_path / "corpus"))
    assert code == 1
    assert any(l.startswith("FAIL") and name in l for l in stdout.splitlines())


def test_corpus_empty_dir_exits_2(tmp_path, capsys):
    code, stdout, _ = run(capsys, "corpus", "run", "--dir", str(tmp_path))
    assert code == 2


def test_missing_file_exits_2(capsys):
    code, _, stderr = run(capsys, "verify", "reedy", "/nonexistent/x.reedy.json")
    assert code == 2
