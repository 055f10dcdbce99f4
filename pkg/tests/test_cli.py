import json

import pytest

from coline.cli import main
from coline.graph6 import emit_graph6
from coline.graphcore import build_named


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_k5_verify(capsys):
    code, out, _ = run_cli(capsys, "classify", "--named", "K5", "--verify")
    assert code == 0
    report = json.loads(out)
    assert report["graph"]["m"] == 10
    assert report["verdicts"]["tough"]["value"] is True
    assert report["verdicts"]["hamiltonian"] == {
        "value": False,
        "clause": "K5",
        "all_matches": ["K5"],
    }
    assert report["verdicts"]["traceable"]["value"] is True
    assert all(entry["agrees"] for entry in report["oracle"].values())
    assert report["coline"] == {"n": 10, "components": 1}
    assert report["within_verified_range"] is True
    assert report["versions"]["tool"]


def test_classify_labels_out_of_range_inputs(capsys):
    code, out, _ = run_cli(capsys, "classify", "--named", "K6")  # 15 edges
    assert code == 0
    report = json.loads(out)
    assert report["within_verified_range"] is False
    assert report["verdicts"]["hamiltonian"]["value"] is True


def test_classify_corona(capsys):
    code, out, _ = run_cli(capsys, "classify", "--named", "K3_circ_K1")
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"]["traceable"]["clause"] == "(iv)"
    assert "oracle" not in report


def test_classify_c6_all_true(capsys):
    code, out, _ = run_cli(capsys, "classify", "--named", "C6", "--verify")
    assert code == 0
    report = json.loads(out)
    verdicts = report["verdicts"]
    assert verdicts["tough"]["value"] and verdicts["hamiltonian"]["value"]
    assert verdicts["traceable"]["value"]


def test_classify_graph6_input(capsys):
    code, out, _ = run_cli(capsys, "classify", "--graph6", emit_graph6(build_named("C6")))
    assert code == 0
    assert json.loads(out)["verdicts"]["hamiltonian"]["value"] is True


def test_classify_edge_list_input(capsys, tmp_path):
    path = tmp_path / "c6.txt"
    path.write_text("n=6\n" + "\n".join(f"{u} {v}" for u, v in build_named("C6").edges()))
    code, out, _ = run_cli(capsys, "classify", "-i", str(path))
    assert code == 0
    assert json.loads(out)["graph"]["m"] == 6


def test_classify_out_of_scope(capsys):
    code, out, _ = run_cli(capsys, "classify", "--named", "K2", "--verify")
    assert code == 0
    report = json.loads(out)
    assert "out_of_scope" in report["verdicts"]
    assert report["oracle"]["traceable"] is True


def test_bad_graph6_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "classify", "--graph6", "D~{X")
    assert code == 2
    assert "error" in err


def test_unknown_name_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "classify", "--named", "Zorp")
    assert code == 2


def test_missing_input_file_is_io_error(capsys, tmp_path):
    code, _, err = run_cli(capsys, "classify", "-i", str(tmp_path / "nope.txt"))
    assert code == 3


def test_invalid_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["classify"])  # no input source
    assert err.value.code == 2


def test_cms_command(capsys):
    code, out, _ = run_cli(capsys, "cms", "--named", "K5")
    assert code == 0
    report = json.loads(out)
    assert report["cms"] == 1
    assert report["cms_ge2_iff_hamiltonian"] is True
    code, out, _ = run_cli(capsys, "cms", "--named", "C6")
    assert json.loads(out)["cms"] >= 2
    code, out, _ = run_cli(capsys, "cms", "--named", "K2")
    report = json.loads(out)
    assert report["cms"] == 1 and report["verdicts"]["hamiltonian"] is None


def test_cms_budget(capsys):
    code, _, err = run_cli(capsys, "cms", "--named", "K6")  # 15 edges
    assert code == 2


def test_roots_command(capsys):
    code, out, _ = run_cli(capsys, "roots", "--graph6", "B?")  # edgeless on 3
    assert code == 0
    report = json.loads(out)
    from coline.graph6 import parse_graph6
    from coline.oracle import canonical_form

    got = {canonical_form(parse_graph6(code)) for code in report["roots"]}
    assert got == {
        canonical_form(build_named("K3")),
        canonical_form(build_named("K1_3")),
    }
    assert report["complete"] is True


def test_sweep_command(capsys, tmp_path):
    out_path = tmp_path / "report.txt"
    code, out, _ = run_cli(
        capsys,
        "sweep",
        "--max-vertices", "6",
        "--max-edges", "9",
        "--output", str(out_path),
    )
    assert code == 0
    assert "mismatches: 0" in out
    assert out_path.exists()


def test_sweep_bad_flags(capsys):
    code, _, err = run_cli(capsys, "sweep", "--max-vertices", "40")
    assert code == 2


def test_catalog_validate_and_show(capsys):
    code, out, _ = run_cli(capsys, "catalog", "validate")
    assert code == 0 and "valid" in out
    code, out, _ = run_cli(capsys, "catalog", "show")
    assert code == 0
    assert "[tough18] (18)" in out and "[trace9] (9)" in out and "[wumeng21] (21)" in out


def test_catalog_bootstrap_writes_file(capsys, tmp_path):
    target = tmp_path / "catalog.txt"
    code, out, _ = run_cli(capsys, "catalog", "bootstrap", "--output", str(target))
    assert code == 0
    assert target.exists()
    code, out, _ = run_cli(capsys, "--catalog", str(target), "catalog", "validate")
    assert code == 0


def test_env_var_catalog(capsys, tmp_path, monkeypatch):
    from coline.characterize import emit_catalog, load_catalog

    target = tmp_path / "catalog.txt"
    target.write_text(emit_catalog(load_catalog()), encoding="ascii")
    monkeypatch.setenv("COLINE_CATALOG", str(target))
    code, out, _ = run_cli(capsys, "catalog", "validate")
    assert code == 0


def test_corrupt_catalog_exits_1(capsys, tmp_path):
    from coline.characterize import emit_catalog, load_catalog

    text = emit_catalog(load_catalog())
    lines = text.splitlines()
    index = lines.index("[tough18]") + 1
    broken = "\n".join(lines[:index] + lines[index + 1 :]) + "\n"
    target = tmp_path / "broken.txt"
    target.write_text(broken, encoding="ascii")
    code, _, err = run_cli(capsys, "--catalog", str(target), "catalog", "validate")
    assert code == 1
    assert "catalog error" in err
