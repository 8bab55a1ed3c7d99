import json
import shutil
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from spreadhom import FileFormatError, PrimeField, ShapeError
from spreadhom.cli import main
from spreadhom.files import (
    dump_family,
    dump_module,
    dump_poset,
    load_family,
    load_module,
    load_poset,
)
from spreadhom.gallery import atilde5

DATA = Path(__file__).resolve().parent.parent / "data"

POSET_FILES = ["grid2x2.yaml", "grid2x3.yaml", "atilde5.yaml", "zigzag_w.yaml"]
MODULE_FILES = [
    "equal_rank_m.yaml",
    "equal_rank_mprime.yaml",
    "diagram_m.yaml",
    "diagram_x.yaml",
    "diagram_n.yaml",
    "diagram_l.yaml",
    "m16.yaml",
    "zigzag_module.yaml",
]


# -- round trips -------------------------------------------------------------


@pytest.mark.parametrize("name", POSET_FILES)
def test_poset_round_trip_is_byte_identical(name):
    raw = (DATA / name).read_text()
    assert dump_poset(load_poset(str(DATA / name))) == raw


@pytest.mark.parametrize("name", MODULE_FILES)
def test_module_round_trip_is_byte_identical(name, field):
    raw = (DATA / name).read_text()
    m, _, ref = load_module(str(DATA / name), field)
    assert dump_module(m, ref) == raw


def test_family_round_trip_is_byte_identical():
    raw = (DATA / "atilde5_family.yaml").read_text()
    fam = load_family(str(DATA / "atilde5_family.yaml"), atilde5())
    assert dump_family(fam.members, fam.quotient_closed) == raw
    assert len(fam) == 9


# -- parsing details --------------------------------------------------------


def test_identity_shorthand(tmp_path, field):
    (tmp_path / "p.yaml").write_text('elements: ["a", "b"]\ncovers: [["a", "b"]]\n')
    (tmp_path / "m.yaml").write_text(
        'poset: "p.yaml"\ndims: {"a": 2, "b": 2}\nmaps:\n  "a->b": id\n'
    )
    m, _, _ = load_module(str(tmp_path / "m.yaml"), field)
    assert np.array_equal(m.maps[(0, 1)], field.eye(2))


def test_identity_shorthand_needs_equal_dims(tmp_path, field):
    (tmp_path / "p.yaml").write_text('elements: ["a", "b"]\ncovers: [["a", "b"]]\n')
    (tmp_path / "m.yaml").write_text(
        'poset: "p.yaml"\ndims: {"a": 2, "b": 1}\nmaps:\n  "a->b": id\n'
    )
    with pytest.raises(FileFormatError):
        load_module(str(tmp_path / "m.yaml"), field)


@pytest.mark.parametrize(
    "body,exc",
    [
        ("elements: 3\ncovers: []\n", FileFormatError),           # elements not a list
        ('elements: ["a"]\ncovers: [["a"]]\n', FileFormatError),  # cover not a pair
        ('elements: ["a"]\ncovers: [["a", "z"]]\n', FileFormatError),  # unknown label
        ('elements: ["a"]\ncovers: []\nextra: 1\n', FileFormatError),  # unknown key
        ("covers: []\n", FileFormatError),                        # missing elements
        ("- 1\n- 2\n", FileFormatError),                          # not a mapping
        ("{", FileFormatError),                                   # not YAML
    ],
)
def test_poset_file_errors(tmp_path, body, exc):
    path = tmp_path / "p.yaml"
    path.write_text(body)
    with pytest.raises(exc):
        load_poset(str(path))


def test_module_file_errors(tmp_path, field):
    (tmp_path / "p.yaml").write_text('elements: ["a", "b"]\ncovers: [["a", "b"]]\n')

    def modfile(body):
        path = tmp_path / "m.yaml"
        path.write_text(body)
        return str(path)

    with pytest.raises(FileFormatError):  # unknown label in dims
        load_module(modfile('poset: "p.yaml"\ndims: {"z": 1}\n'), field)
    with pytest.raises(FileFormatError):  # negative dimension
        load_module(modfile('poset: "p.yaml"\ndims: {"a": -1}\n'), field)
    with pytest.raises(FileFormatError):  # key is not a cover
        load_module(
            modfile('poset: "p.yaml"\ndims: {"a": 1, "b": 1}\nmaps:\n  "b->a": [[1]]\n'),
            field,
        )
    with pytest.raises(FileFormatError):  # malformed key
        load_module(
            modfile('poset: "p.yaml"\ndims: {"a": 1}\nmaps:\n  "a": [[1]]\n'), field
        )
    with pytest.raises(ShapeError):  # wrong matrix shape
        load_module(
            modfile('poset: "p.yaml"\ndims: {"a": 1, "b": 1}\nmaps:\n  "a->b": [[1, 2]]\n'),
            field,
        )
    with pytest.raises(FileFormatError):  # no such file
        load_module(str(tmp_path / "missing.yaml"), field)


def test_load_family_forms(tmp_path):
    p = atilde5()
    assert len(load_family("single_source", p)) == 15
    indirect = tmp_path / "fam.yaml"
    indirect.write_text('family: "connected_upsets"\n')
    assert len(load_family(str(indirect), p)) == 10
    bad = tmp_path / "bad.yaml"
    bad.write_text('family: "everything"\n')
    with pytest.raises(FileFormatError):
        load_family(str(bad), p)
    with pytest.raises(FileFormatError):
        load_family("no_such_family_or_file", p)
    malformed = tmp_path / "spr.yaml"
    malformed.write_text('spreads:\n  - {sources: ["1"]}\n')
    with pytest.raises(FileFormatError):
        load_family(str(malformed), p)


# -- command line ------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_validate(capsys):
    code, out, _ = run_cli(
        capsys,
        "validate",
        str(DATA / "grid2x2.yaml"),
        str(DATA / "equal_rank_m.yaml"),
        str(DATA / "equal_rank_mprime.yaml"),
    )
    assert code == 0
    assert out.count("ok module") == 2
    assert "ok poset" in out


def test_cli_validate_rejects_garbage(capsys, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("covers: []\n")
    code, _, err = run_cli(capsys, "validate", str(bad))
    assert code == 1
    assert "error:" in err


def test_cli_rank(capsys):
    code, out, _ = run_cli(capsys, "invariant", "rank", str(DATA / "equal_rank_m.yaml"))
    assert code == 0
    assert "00" in out


def test_cli_class_needs_family(capsys):
    code, _, err = run_cli(capsys, "invariant", "class", str(DATA / "equal_rank_m.yaml"))
    assert code == 1
    assert "family" in err


def test_cli_class_intervals(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "class", str(DATA / "equal_rank_mprime.yaml"),
        "--family", "intervals",
    )
    assert code == 0
    assert "hom_matrix" in out
    assert "[00,11]" in out


def test_cli_resolve_truncates_with_exit_2(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "resolve", str(DATA / "m16.yaml"),
        "--family", str(DATA / "atilde5_family.yaml"),
        "--max-depth", "6",
    )
    assert code == 2
    assert "status: truncated" in out
    assert "periodicity hint" in out
    assert out.count("term ") == 6


def test_cli_resolve_finite(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "resolve", str(DATA / "equal_rank_mprime.yaml"),
        "--family", "single_source",
    )
    assert code == 0
    assert "status: finite" in out


def test_cli_class_on_cyclic_family_reports_undecided(capsys):
    code, _, err = run_cli(
        capsys,
        "invariant", "class", str(DATA / "m16.yaml"),
        "--family", str(DATA / "atilde5_family.yaml"),
        "--max-depth", "6",
    )
    assert code == 2
    assert "undecided" in err
    assert "partial terms" in err


def test_cli_barcode_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "invariant", "barcode", str(DATA / "zigzag_module.yaml"))
    assert code == 0
    assert "barcode:" in out
    code, _, err = run_cli(capsys, "invariant", "barcode", str(DATA / "equal_rank_m.yaml"))
    assert code == 3
    assert "unsupported" in err


def test_cli_dimhom_and_jobs(capsys):
    args = [
        "invariant", "dimhom", str(DATA / "diagram_n.yaml"),
        "--family", "single_source",
    ]
    code, out, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args, "--jobs", "4")
    assert code == code2 == 0
    assert out == out2


def test_cli_genrank_and_diagram(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "genrank", str(DATA / "diagram_m.yaml"),
        "--collection", "connected_spreads",
    )
    assert code == 0
    assert "[11,22]" in out
    code, out, _ = run_cli(
        capsys,
        "invariant", "diagram", str(DATA / "diagram_m.yaml"),
        "--collection", "connected_spreads",
    )
    assert code == 0
    assert "signed diagram:" in out


def test_cli_compare(capsys):
    a, b = str(DATA / "equal_rank_m.yaml"), str(DATA / "equal_rank_mprime.yaml")
    code, out, _ = run_cli(capsys, "compare", "rank", a, b)
    assert code == 0 and "equal" in out
    code, out, _ = run_cli(capsys, "compare", "class", a, b, "--family", "single_source")
    assert code == 0 and "distinguished" in out
    code, out, _ = run_cli(
        capsys, "compare", "genrank", a, b, "--collection", "connected_spreads"
    )
    assert code == 0 and "distinguished" in out


def test_cli_compare_batch(capsys, tmp_path):
    mods = tmp_path / "mods"
    mods.mkdir()
    shutil.copy(DATA / "grid2x2.yaml", tmp_path / "grid2x2.yaml")
    for name in ("equal_rank_m.yaml", "equal_rank_mprime.yaml"):
        text = (DATA / name).read_text().replace('"grid2x2.yaml"', '"../grid2x2.yaml"')
        (mods / name).write_text(text)
    code, out, _ = run_cli(capsys, "compare", "rank", "--batch", str(mods))
    assert code == 0
    assert out.count(": equal") == 1


def test_cli_jsonl_records(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "rank", str(DATA / "equal_rank_m.yaml"), "--jsonl",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[0]["record"] == "header"
    assert lines[0]["format"] == "spreadhom.v1"
    assert lines[0]["command"] == "invariant"
    assert lines[1]["record"] == "invariant"
    assert lines[1]["kind"] == "rank"
    assert all(isinstance(e, list) and len(e) == 3 for e in lines[1]["entries"])


def test_cli_jsonl_resolve_payload(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "resolve", str(DATA / "m16.yaml"),
        "--family", str(DATA / "atilde5_family.yaml"),
        "--max-depth", "6", "--jsonl",
    )
    assert code == 2
    lines = [json.loads(line) for line in out.strip().splitlines()]
    body = lines[1]
    assert body["status"] == "truncated"
    assert len(body["terms"]) == 6
    assert body["periodicity"] is not None


def test_cli_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "spreadhom", "invariant", "dimvec", str(DATA / "diagram_x.yaml")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "dimension vector" in proc.stdout


def test_cli_custom_prime(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariant", "rank", str(DATA / "equal_rank_m.yaml"), "--prime", "2",
    )
    assert code == 0
    code, _, err = run_cli(
        capsys,
        "invariant", "rank", str(DATA / "equal_rank_m.yaml"), "--prime", "6",
    )
    assert code == 1
    assert "prime" in err


def test_data_files_match_generator(tmp_path):
    # the checked-in files are exactly what scripts/make_data.py emits
    names = POSET_FILES + MODULE_FILES + ["atilde5_family.yaml"]
    before = {name: (DATA / name).read_text() for name in names}
    script = Path(__file__).resolve().parent.parent / "scripts" / "make_data.py"
    proc = subprocess.run(
        [sys.executable, str(script)],
        capture_output=True,
        text=True,
        cwd=str(tmp_path),
    )
    assert proc.returncode == 0, proc.stderr
    for name in names:
        assert (DATA / name).read_text() == before[name], name
