import json

import pytest
from hypothesis import given, settings

from posetalg import (
    dual_from_boolean,
    sheffer_from_poset,
    structure_from_poset,
)
from posetalg.errors import MissingComplement, ParseError
from posetalg.io import (
    FIXTURES,
    PosetFile,
    StructureFile,
    fixture_text,
    parse_poset,
    parse_structure,
    read_any,
    resolve,
)
from posetalg.tables import OperatorTable

from conftest import posets


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_files_are_canonical(name):
    text = fixture_text(name)
    assert parse_poset(text).dumps() == text


def test_fig4_cover_list(fig4):
    p = fig4.poset
    got = {(p.names[x], p.names[y]) for x, y in p.covers}
    expected = {("0", v) for v in "abcd"}
    expected |= {("a", "e"), ("b", "e"), ("c", "e'"), ("d", "e'"), ("a", "b'"), ("b", "a'"),
                 ("c", "d'"), ("d", "c'"), ("e", "c'"), ("e", "d'"), ("e'", "a'"), ("e'", "b'")}
    expected |= {(v, "1") for v in ("a'", "b'", "c'", "d'")}
    assert got == expected


@settings(max_examples=50)
@given(posets())
def test_poset_serialization_roundtrip(p):
    text = PosetFile.from_poset(p).dumps()
    again = parse_poset(text)
    assert again.poset() == p
    assert again.dumps() == text


def test_complement_serialization(fig3):
    pf = PosetFile.from_poset(fig3.poset, fig3.comp)
    assert parse_poset(pf.dumps()).complemented() == fig3


@pytest.mark.parametrize("build", [
    lambda cp: structure_from_poset(cp.poset),
    sheffer_from_poset,
    dual_from_boolean,
])
def test_structure_serialization_roundtrip(fig3, build):
    s = build(fig3)
    text = StructureFile.from_structure(s).dumps()
    sf = parse_structure(text)
    assert sf.structure() == s
    assert sf.dumps() == text
    assert isinstance(read_any(text), StructureFile)


def test_missing_complement(fig1):
    pf = PosetFile.from_poset(fig1)
    with pytest.raises(MissingComplement):
        pf.complemented()


@pytest.mark.parametrize("text", [
    "elements: a b\n",
    "format: poset 1\ncovers:\n  a b\n",
    "format: poset 1\nelements: a b\ncovers:\n  a z\n",
    "format: poset 1\nelements: a b\ncovers:\n  a b\n  b a\n",
    "format: poset 1\nelements: a a\n",
    "format: poset 1\nelements: a b\ncovers:\n  a b c\n",
    "format: poset 1\nelements: 0 1\ncovers:\n  0 1\nbounds: 1 0\n",
    "format: poset 1\nelements: 0 m 1\ncovers:\n  0 m\n  m 1\ncomplement:\n  0 1\n  m m\n",
    "format: poset 1\nelements: a\nextra: x\n",
])
def test_bad_poset_files(text):
    with pytest.raises(ParseError):
        parse_poset(text)


def test_bad_structure_files():
    good = StructureFile.from_structure(sheffer_from_poset(
        parse_poset(fixture_text("fig3")).complemented())).dumps()
    with pytest.raises(ParseError):
        parse_structure(good.replace("kind: sheffer", "kind: ring"))
    lines = good.splitlines()
    with pytest.raises(ParseError):
        parse_structure("\n".join(lines[:-1]) + "\n")  # table no longer total
    with pytest.raises(ParseError):
        parse_structure(good + "  0 0 : 1\n")  # duplicate entry
    with pytest.raises(ParseError):
        parse_structure(good.replace(": 1", ": zz", 1))


def test_comments_and_blank_lines():
    text = "# a chain\nformat: poset 1\n\nelements: 0 1  # two points\ncovers:\n  0 1\n"
    assert parse_poset(text).poset().leq(0, 1)


def test_resolve_fixture_names(tmp_path):
    assert resolve("fixtures/fig2") == fixture_text("fig2")
    assert resolve("fig3") == fixture_text("fig3")
    f = tmp_path / "x.poset"
    f.write_text("format: poset 1\nelements: a\n")
    assert resolve(str(f)).startswith("format")
    with pytest.raises(FileNotFoundError):
        resolve("fixtures/fig9")


def test_json_table(fig3):
    t = OperatorTable("+", ("0", "1"), [[1, 2], [2, 1]])
    data = json.loads(t.render_json())
    assert data["operator"] == "+"
    assert data["cells"][1] == {"x": "0", "y": "1", "result": ["1"]}
