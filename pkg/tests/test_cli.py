import json
import subprocess
import sys

import pytest

from posetalg import dual_from_boolean, structure_from_poset
from posetalg.cli import main
from posetalg.io import StructureFile, golden_table, parse_poset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("fig,cls,code", [
    ("fixtures/fig2", "boolean", 1),
    ("fixtures/fig3", "boolean", 0),
    ("fixtures/fig1", "bounded", 1),
    ("fixtures/fig1", "poset", 0),
    ("fixtures/fig2", "complemented", 0),
    ("fixtures/fig3", "lattice", 1),
    ("fixtures/fig4", "distributive", 0),
])
def test_check(capsys, fig, cls, code):
    got, out, _ = run(capsys, "check", fig, "--class", cls)
    assert got == code


def test_check_reports_witness(capsys):
    _, out, _ = run(capsys, "check", "fixtures/fig2", "--class", "boolean")
    assert "(a,b,c)" in out and "{0,c}" in out


@pytest.mark.parametrize("fig,number", [("fig2", 1), ("fig3", 2), ("fig4", 3)])
def test_golden_tables(capsys, fig, number):
    code, out, _ = run(capsys, "table", f"fixtures/{fig}", "--op", "sd", "--format", "golden")
    assert code == 0 and out == golden_table(number)


def test_table_formats(capsys, fig3):
    code, out, _ = run(capsys, "table", "fixtures/fig3", "--op", "maxl")
    assert code == 0 and out.startswith("ML |")
    code, out, _ = run(capsys, "table", "fixtures/fig3", "--op", "sheffer", "--format", "json")
    data = json.loads(out)
    assert data["operator"] == "|" and len(data["cells"]) == 100
    code, out, _ = run(capsys, "table", "fixtures/fig1", "--op", "minu")
    assert code == 0


def test_maxl_table_matches_brute_force(capsys, fig3):
    from conftest import leq_matrix, oracle_max_l

    _, out, _ = run(capsys, "table", "fixtures/fig3", "--op", "maxl", "--format", "json")
    p = fig3.poset
    leq = leq_matrix(p)
    for cell in json.loads(out)["cells"]:
        x, y = p.index(cell["x"]), p.index(cell["y"])
        assert {p.index(r) for r in cell["result"]} == oracle_max_l(leq, [x, y])


def test_table_needs_complement(capsys):
    code, _, err = run(capsys, "table", "fixtures/fig1", "--op", "sd")
    assert code == 2 and "MissingComplement" in err


@pytest.mark.parametrize("fig,structure", [
    ("fixtures/fig2", "sheffer"), ("fixtures/fig3", "dual"), ("fixtures/fig4", "operator"),
])
def test_axioms_pass(capsys, fig, structure):
    code, out, _ = run(capsys, "axioms", fig, "--structure", structure)
    assert code == 0 and "FAIL" not in out


def test_axioms_on_corrupted_structure_file(capsys, tmp_path, fig3):
    d = dual_from_boolean(fig3)
    sf = StructureFile.from_structure(d)
    a, b = fig3.poset.index("a"), fig3.poset.index("b")
    sf.tables["times"][a][b] = sf.tables["times"][b][a] = 1 << a
    f = tmp_path / "bad.structure"
    f.write_text(sf.dumps())
    code, out, _ = run(capsys, "axioms", str(f), "--structure", "dual")
    assert code == 1 and "FAIL" in out and "witness" in out
    code, _, err = run(capsys, "axioms", str(f), "--structure", "sheffer")
    assert code == 2 and "KindMismatch" in err
    code, out, _ = run(capsys, "roundtrip", str(f), "--via", "dual")
    assert code == 1


def test_structure_file_roundtrip(capsys, tmp_path, fig2):
    f = tmp_path / "op.structure"
    f.write_text(StructureFile.from_structure(structure_from_poset(fig2.poset)).dumps())
    code, out, _ = run(capsys, "roundtrip", str(f), "--via", "operator")
    assert code == 0 and "holds" in out


@pytest.mark.parametrize("fig,via,code", [
    ("fixtures/fig3", "dual", 0),
    ("fixtures/fig2", "sheffer", 0),
    ("fixtures/fig2", "dual", 1),
    ("fixtures/fig4", "operator", 0),
])
def test_roundtrip(capsys, fig, via, code):
    assert run(capsys, "roundtrip", fig, "--via", via)[0] == code


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-size", "4", "--dedup")
    assert code == 0
    assert "size 3: 19 instances, 5 up to isomorphism" in out
    code, out, _ = run(capsys, "enumerate", "--theorem", "roundtrip-operator", "--max-size", "5")
    assert code == 0 and "0 failures / 425 instances" in out


def test_enumerate_too_large(capsys):
    code, _, err = run(capsys, "enumerate", "--max-size", "99")
    assert code == 2 and "SizeTooLarge" in err


def test_counterexample_emits_poset_file(capsys, tmp_path):
    target = tmp_path / "w.poset"
    code, out, _ = run(capsys, "counterexample", "--property", "maxl-associativity",
                       "--max-size", "6", "--output", str(target))
    assert code == 0
    pf = parse_poset(out)
    assert pf.poset().size <= 6
    assert target.read_text() == out
    code, out, _ = run(capsys, "counterexample", "--property", "maxl-associativity-lattice", "--max-size", "4")
    assert code == 1


def test_bad_input_file(capsys, tmp_path):
    f = tmp_path / "bad.poset"
    f.write_text("format: poset 1\nelements: a b\ncovers:\n  a b\n  b a\n")
    assert run(capsys, "check", str(f), "--class", "poset")[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing"), "--class", "poset")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "posetalg", "check", "fixtures/fig3", "--class", "boolean"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "yes" in r.stdout
