import json

from pairlex.cli import main

from conftest import SEED_DIR, rewrite_json


def test_validate_ok_exit_zero(capsys):
    assert main(["validate", "--input", str(SEED_DIR)]) == 0
    assert "ok:" in capsys.readouterr().out


def test_validate_same_language_pair_exit_one(seed_copy, capsys):
    rewrite_json(
        seed_copy / "pairs.json",
        lambda pairs: pairs.append({"ru": "lgat-1", "bg": "vrat-1"}),
    )
    assert main(["validate", "--input", str(seed_copy)]) == 1
    out = capsys.readouterr().out
    assert "invariant.same_language" in out


def test_validate_missing_input_exit_two(tmp_path):
    assert main(["validate", "--input", str(tmp_path / "missing")]) == 2


def test_build_writes_tree_and_report(tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["build", "--input", str(SEED_DIR), "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert report["page_count"] >= 20
    for slug in ("LGAT-LAZHA", "VESHAT-BESYA", "ZABLUZHDAVAM"):
        assert (out / "pages" / f"{slug}.html").exists()
        assert (out / "pages" / f"{slug}.xml").exists()
    assert (out / "index" / "alpha_ru.json").exists()
    assert (out / "index" / "alpha_bg.json").exists()
    assert (out / "index" / "combined.json").exists()
    assert (out / "assets" / "legend.json").exists()
    # all seven sign-type buckets always reported
    assert len(report["sign_counts"]) == 7
    # audit exports: criterion traces per pair, chains per page
    traces = json.loads((out / "traces.json").read_text(encoding="utf-8"))
    assert traces["lgat-1~lzh-bg-1"]["sign_type"] == "synchronous_homogeneous"
    assert "hom" in traces["lgat-1~lzh-bg-1"]["criteria"]
    chains = json.loads((out / "chains.json").read_text(encoding="utf-8"))
    assert "LGAT-LAZHA" in chains
    assert all("terminal" in c for c in chains["LGAT-LAZHA"])


def test_build_invalid_input_exit_one_and_writes_nothing(seed_copy, tmp_path, capsys):
    rewrite_json(seed_copy / "lexemes" / "lgat.json", lambda d: d.pop("lemma"))
    out = tmp_path / "out"
    assert main(["build", "--input", str(seed_copy), "--out", str(out)]) == 1
    assert not out.exists()


def test_rebuild_is_byte_identical(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["build", "--input", str(SEED_DIR), "--out", str(out1)]) == 0
    assert main(["build", "--input", str(SEED_DIR), "--out", str(out2)]) == 0
    files1 = sorted(p.relative_to(out1) for p in out1.rglob("*") if p.is_file())
    files2 = sorted(p.relative_to(out2) for p in out2.rglob("*") if p.is_file())
    assert files1 == files2
    for rel in files1:
        assert (out1 / rel).read_bytes() == (out2 / rel).read_bytes(), rel


def test_flag_off_changes_execution_routing(tmp_path):
    out = tmp_path / "out"
    assert main([
        "build", "--input", str(SEED_DIR), "--out", str(out),
        "--no-admit-pre-registered",
    ]) == 0
    report = json.loads((out / "report.json").read_text(encoding="utf-8"))
    slugs = {p["slug"] for p in report["pages"]}
    assert "EKZEKUTIROVAT-EKZEKUTIRAM" not in slugs
    assert "KAZNIT-EKZEKUTIRAM" in slugs
    assert any("pre-registered" in note for note in report["policy_notes"])


def test_config_file_overrides_flags(tmp_path, monkeypatch, capsys):
    out_flag = tmp_path / "flag-out"
    out_file = tmp_path / "file-out"
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps({"out": str(out_file)}), encoding="utf-8")
    monkeypatch.setenv("SED_CONFIG", str(config_path))
    assert main(["build", "--input", str(SEED_DIR), "--out", str(out_flag)]) == 0
    assert out_file.exists() and not out_flag.exists()


def test_report_command(tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["build", "--input", str(SEED_DIR), "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["report", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "pages: " in text and "sign counts:" in text


def test_report_missing_tree_exit_two(tmp_path):
    assert main(["report", "--out", str(tmp_path / "none")]) == 2
