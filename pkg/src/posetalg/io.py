"""Text formats for posets and operator tables, and the bundled fixture posets.

Poset file::

    format: poset 1
    elements: 0 a b a' b' 1
    covers:
      0 a
      ...
    complement:
      0 1
      a a'
    bounds: 0 1

Structure file (``kind`` is operator, sheffer or dual)::

    format: structure 1
    kind: operator
    carrier: 0 1
    zero: 0
    one: 1
    join:
      0 0 : 0
      0 1 : 1
      ...

Each table line is ``x y : r1 r2 ...`` with nothing after the colon for the
empty set.  ``#`` starts a comment.  Prime marks are ASCII apostrophes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .complemented import ComplementedPoset
from .dual import DualStructure
from .errors import MissingComplement, ParseError, PosetError
from .operator_structure import OperatorStructure
from .poset import FinitePoset, bits
from .sheffer import ShefferStructure

POSET_HEADER = "format: poset 1"
STRUCTURE_HEADER = "format: structure 1"
FIXTURES = ("fig1", "fig2", "fig3", "fig4")

TABLE_NAMES = {
    "operator": ("join", "meet"),
    "sheffer": ("stroke",),
    "dual": ("plus", "times"),
}
HAS_CONSTANTS = {"operator": True, "sheffer": False, "dual": True}


@dataclass
class PosetFile:
    elements: list[str]
    covers: list[tuple[str, str]]
    complement: Optional[list[tuple[str, str]]] = None
    bounds: Optional[tuple[str, str]] = None

    def poset(self) -> FinitePoset:
        try:
            p = FinitePoset.from_covers(self.elements, self.covers)
        except PosetError as exc:
            raise ParseError(str(exc)) from exc
        if self.bounds is not None:
            b = p.bounds()
            if b is None or (p.names[b[0]], p.names[b[1]]) != tuple(self.bounds):
                raise ParseError(f"declared bounds {self.bounds} are not the bottom and top")
        return p

    def complemented(self) -> ComplementedPoset:
        if self.complement is None:
            raise MissingComplement("file declares no complement")
        return ComplementedPoset.from_pairs(self.poset(), self.complement)

    @classmethod
    def from_poset(cls, p: FinitePoset, comp: Optional[tuple[int, ...]] = None) -> "PosetFile":
        covers = [(p.names[x], p.names[y]) for x, y in p.covers]
        complement = None
        if comp is not None:
            complement = [(p.names[i], p.names[j]) for i, j in enumerate(comp) if i <= j]
        b = p.bounds()
        bounds = (p.names[b[0]], p.names[b[1]]) if b else None
        return cls(list(p.names), covers, complement, bounds)

    def dumps(self) -> str:
        lines = [POSET_HEADER, "elements: " + " ".join(self.elements), "covers:"]
        lines += [f"  {x} {y}" for x, y in self.covers]
        if self.complement is not None:
            lines.append("complement:")
            lines += [f"  {x} {y}" for x, y in self.complement]
        if self.bounds is not None:
            lines.append(f"bounds: {self.bounds[0]} {self.bounds[1]}")
        return "\n".join(lines) + "\n"


@dataclass
class StructureFile:
    kind: str
    carrier: list[str]
    tables: dict[str, list[list[int]]] = field(default_factory=dict)
    zero: Optional[str] = None
    one: Optional[str] = None

    def structure(self):
        idx = {n: i for i, n in enumerate(self.carrier)}
        if self.kind == "sheffer":
            return ShefferStructure(self.carrier, self.tables["stroke"])
        zero, one = idx[self.zero], idx[self.one]
        if self.kind == "operator":
            return OperatorStructure(self.carrier, self.tables["join"], self.tables["meet"], zero, one)
        return DualStructure(self.carrier, self.tables["plus"], self.tables["times"], zero, one)

    @classmethod
    def from_structure(cls, s) -> "StructureFile":
        names = list(s.names)
        if isinstance(s, OperatorStructure):
            return cls("operator", names, {"join": _rows(s.join), "meet": _rows(s.meet)},
                       names[s.zero], names[s.one])
        if isinstance(s, ShefferStructure):
            return cls("sheffer", names, {"stroke": _rows(s.stroke)})
        if isinstance(s, DualStructure):
            return cls("dual", names, {"plus": _rows(s.plus), "times": _rows(s.times)},
                       names[s.zero], names[s.one])
        raise TypeError(f"not a structure: {type(s).__name__}")

    def dumps(self) -> str:
        lines = [STRUCTURE_HEADER, f"kind: {self.kind}", "carrier: " + " ".join(self.carrier)]
        if HAS_CONSTANTS[self.kind]:
            lines += [f"zero: {self.zero}", f"one: {self.one}"]
        names = self.carrier
        for tname in TABLE_NAMES[self.kind]:
            lines.append(f"{tname}:")
            for x, row in enumerate(self.tables[tname]):
                for y, m in enumerate(row):
                    result = " ".join(names[k] for k in bits(m))
                    lines.append(f"  {names[x]} {names[y]} : {result}".rstrip())
        return "\n".join(lines) + "\n"


def _rows(table) -> list[list[int]]:
    return [list(r) for r in table]


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            out.append((no, line))
    return out


def _sections(lines: list[tuple[int, str]]) -> dict[str, tuple[str, list[tuple[int, str]]]]:
    """Map each top-level ``key: value`` line to its inline value and indented body lines."""
    sections: dict[str, tuple[str, list[tuple[int, str]]]] = {}
    current = None
    for no, line in lines:
        if line[0].isspace():
            if current is None:
                raise ParseError(f"line {no}: indented line outside a section")
            sections[current][1].append((no, line.strip()))
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"line {no}: expected 'key: value'")
        key = key.strip()
        if key in sections:
            raise ParseError(f"line {no}: duplicate section {key!r}")
        sections[key] = (value.strip(), [])
        current = key
    return sections


def _pairs(body: list[tuple[int, str]], what: str) -> list[tuple[str, str]]:
    out = []
    for no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected two labels in {what}")
        out.append((parts[0], parts[1]))
    return out


def parse_poset(text: str) -> PosetFile:
    lines = _content_lines(text)
    if not lines or lines[0][1].strip() != POSET_HEADER:
        raise ParseError(f"expected header {POSET_HEADER!r}")
    sec = _sections(lines[1:])
    unknown = set(sec) - {"elements", "covers", "complement", "bounds"}
    if unknown:
        raise ParseError(f"unknown section(s): {', '.join(sorted(unknown))}")
    if "elements" not in sec:
        raise ParseError("missing 'elements' section")
    elements = sec["elements"][0].split()
    if not elements:
        raise ParseError("no elements declared")
    covers = _pairs(sec["covers"][1], "covers") if "covers" in sec else []
    complement = _pairs(sec["complement"][1], "complement") if "complement" in sec else None
    bounds = None
    if "bounds" in sec:
        b = sec["bounds"][0].split()
        if len(b) != 2:
            raise ParseError("bounds needs two labels")
        bounds = (b[0], b[1])
    pf = PosetFile(elements, covers, complement, bounds)
    pf.poset()
    if complement is not None:
        try:
            pf.complemented()
        except PosetError as exc:
            raise ParseError(f"invalid complement: {exc}") from exc
    return pf


def parse_structure(text: str) -> StructureFile:
    lines = _content_lines(text)
    if not lines or lines[0][1].strip() != STRUCTURE_HEADER:
        raise ParseError(f"expected header {STRUCTURE_HEADER!r}")
    sec = _sections(lines[1:])
    kind = sec.get("kind", ("", []))[0]
    if kind not in TABLE_NAMES:
        raise ParseError(f"kind must be one of {', '.join(TABLE_NAMES)}")
    carrier = sec.get("carrier", ("", []))[0].split()
    if not carrier or len(set(carrier)) != len(carrier):
        raise ParseError("carrier must list distinct labels")
    idx = {n: i for i, n in enumerate(carrier)}
    n = len(carrier)

    def label(tok: str, no: int) -> int:
        if tok not in idx:
            raise ParseError(f"line {no}: unknown element {tok!r}")
        return idx[tok]

    sf = StructureFile(kind, carrier)
    if HAS_CONSTANTS[kind]:
        for const in ("zero", "one"):
            if const not in sec:
                raise ParseError(f"missing {const!r}")
            label(sec[const][0], 0)
        sf.zero, sf.one = sec["zero"][0], sec["one"][0]
    for tname in TABLE_NAMES[kind]:
        if tname not in sec:
            raise ParseError(f"missing table {tname!r}")
        table = [[None] * n for _ in range(n)]
        for no, line in sec[tname][1]:
            args, sep, result = line.partition(":")
            parts = args.split()
            if not sep or len(parts) != 2:
                raise ParseError(f"line {no}: expected 'x y : results'")
            x, y = label(parts[0], no), label(parts[1], no)
            if table[x][y] is not None:
                raise ParseError(f"line {no}: duplicate entry")
            m = 0
            for tok in result.split():
                m |= 1 << label(tok, no)
            table[x][y] = m
        if any(c is None for row in table for c in row):
            raise ParseError(f"table {tname!r} is not total")
        sf.tables[tname] = table
    extra = set(sec) - {"kind", "carrier", "zero", "one", *TABLE_NAMES[kind]}
    if extra:
        raise ParseError(f"unknown section(s): {', '.join(sorted(extra))}")
    return sf


def read_any(text: str) -> Union[PosetFile, StructureFile]:
    head = _content_lines(text)[:1]
    if head and head[0][1].strip() == STRUCTURE_HEADER:
        return parse_structure(text)
    return parse_poset(text)


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", f"{name}.poset").read_text()


def load_fixture(name: str) -> PosetFile:
    """One of the bundled fixture posets: fig1, fig2, fig3, fig4."""
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}")
    return parse_poset(fixture_text(name))


def golden_table(n: int) -> str:
    return resources.files(__package__).joinpath("fixtures", "golden", f"table{n}.txt").read_text()


def resolve(path: str) -> str:
    """Text of ``path``, or of a bundled fixture named ``fig2`` / ``fixtures/fig2``."""
    p = Path(path)
    if p.is_file():
        return p.read_text()
    stem = p.name[: -len(".poset")] if p.name.endswith(".poset") else p.name
    if stem in FIXTURES and (len(p.parts) == 1 or p.parent.name == "fixtures"):
        return fixture_text(stem)
    raise FileNotFoundError(path)
