import json
import re

import pytest

from subrosa.cli import main
from subrosa.io import (
    DocumentError,
    document_to_patch,
    dumps,
    patch_to_document,
    read_patch,
    render_svg,
    write_patch,
)
from subrosa.patch import Patch
from subrosa.rose import rose_R2
from subrosa.tiler import super_rhombus_patch


def test_round_trip_is_byte_identical(tmp_path):
    p = super_rhombus_patch(7, 3)
    a = tmp_path / "a.json"
    write_patch(a, p, None, "test")
    q, doc = read_patch(a)
    assert q == p
    assert doc["meta"]["tile_count"] == len(p)
    assert all(len(t["pos"]) == 28 for t in doc["tiles"])
    b = tmp_path / "b.json"
    write_patch(b, q, None, "test")
    assert a.read_bytes() == b.read_bytes()


def test_dumps_is_valid_json_one_tile_per_line():
    p = rose_R2(5, 1).tiles
    text = dumps(patch_to_document(p, 0))
    assert json.loads(text)["generation"] == 0
    assert sum(1 for line in text.splitlines() if line.lstrip().startswith('{"k"')) == len(p)
    empty = dumps(patch_to_document(Patch(5)))
    assert json.loads(empty)["tiles"] == []


def test_reading_unreduced_coordinates():
    doc = {"n": 3, "tiles": [{"k": 1, "rot": 0, "pos": [0] * 6 + [1] + [0] * 5}]}
    p = document_to_patch(doc)
    assert p.pos.tolist() == [[-1, 0, 0, 0]]


@pytest.mark.parametrize(
    "doc",
    [
        {"tiles": []},
        {"n": 1, "tiles": []},
        {"n": 5, "tiles": [{"k": 3, "rot": 0, "pos": [0]}]},
        {"n": 5, "tiles": [{"k": 1, "rot": 0.5, "pos": [0]}]},
        {"n": 5, "tiles": [{"k": 1}]},
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(DocumentError):
        document_to_patch(doc)


def test_svg_rendering():
    svg = render_svg(rose_R2(5, 1).tiles)
    assert svg.count("<polygon") == 30
    assert svg.startswith("<?xml")
    assert render_svg(rose_R2(5, 1).tiles) == svg
    gray = render_svg(rose_R2(5, 1).tiles, palette="gray", stroke=0.1)
    assert 'stroke-width="0.100000"' in gray
    assert "-0.000000" not in svg
    empty = render_svg(Patch(4))
    assert "<polygon" not in empty and empty.rstrip().endswith("</svg>")
    with pytest.raises(ValueError):
        render_svg(Patch(4), palette="neon")


def test_cli_sigma_and_boundary(capsys):
    assert main(["sigma", "--n", "7"]) == 0
    assert capsys.readouterr().out.strip() == "1-3-5-1-3-1|1-3-1-5-3-1"
    assert main(["boundary", "--n", "5", "--k", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "A: 1,19,1,19"
    assert main(["boundary", "--n", "5", "--k", "2", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["letters"]) == 36


def test_cli_verify(capsys):
    assert main(["verify", "--n", "5", "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert "10 pairs" in out and "FAIL" not in out


def test_cli_pipeline(tmp_path, capsys):
    js, svg = tmp_path / "p.json", tmp_path / "p.svg"
    assert main(["supertile", "--n", "5", "--k", "2", "--out", str(js)]) == 0
    assert main(["render", str(js), "--out", str(svg)]) == 0
    assert main(["validate", str(js), "--region", "rhombus:5,2"]) == 0
    assert main(["validate", str(js), "--region", "rhombus:5,2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out.splitlines()[-1])["ok"] is True
    assert len(re.findall("<polygon", svg.read_text())) == len(read_patch(js)[0])


def test_cli_iterate_and_rose_region(tmp_path):
    js = tmp_path / "g.json"
    assert main(["iterate", "--n", "2", "--generations", "3", "--out", str(js)]) == 0
    assert read_patch(js)[1]["meta"]["tile_count"] == 64
    assert main(["iterate", "--n", "5", "--generations", "1", "--out", str(js)]) == 0
    assert main(["validate", str(js), "--region", "rose"]) == 0


def test_cli_exit_codes(tmp_path):
    assert main([]) == 2
    assert main(["sigma"]) == 2
    assert main(["sigma", "--n", "1"]) == 2
    assert main(["boundary", "--n", "5", "--k", "3"]) == 2
    assert main(["iterate", "--n", "7", "--generations", "2", "--out", str(tmp_path / "x.json")]) == 3
    assert main(["render", str(tmp_path / "missing.json"), "--out", str(tmp_path / "x.svg")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["validate", str(bad)]) == 2
    js = tmp_path / "p.json"
    main(["supertile", "--n", "5", "--k", "1", "--out", str(js)])
    assert main(["validate", str(js), "--region", "rhombus:5,2"]) == 1
    assert main(["validate", str(js), "--region", "square"]) == 2
