"""Rendering of pair tables of set-valued operators."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .poset import bits, compact_set


@dataclass(frozen=True)
class OperatorTable:
    """``cells[x][y]`` is the result mask of ``x <symbol> y``."""

    symbol: str
    names: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]

    def __init__(self, symbol: str, names: Sequence[str], cells: Sequence[Sequence[int]]):
        object.__setattr__(self, "symbol", symbol)
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "cells", tuple(tuple(r) for r in cells))

    def cell(self, x: str, y: str) -> str:
        i, j = self.names.index(x), self.names.index(y)
        return compact_set(self.names, self.cells[i][j])

    def is_symmetric(self) -> bool:
        n = len(self.names)
        return all(self.cells[x][y] == self.cells[y][x] for x in range(n) for y in range(n))

    def render_golden(self) -> str:
        """Aligned text table: header row with the operator symbol in the corner,
        a rule, then one row per element; cells use the compact set form ``b'c'``.
        """
        names = self.names
        rows = [[compact_set(names, m) for m in row] for row in self.cells]
        widths = [max([len(names[j])] + [len(r[j]) for r in rows]) for j in range(len(names))]
        w0 = max([len(self.symbol)] + [len(n) for n in names])

        def line(head: str, cells: list[str]) -> str:
            body = " ".join(c.ljust(w) for c, w in zip(cells, widths))
            return (head.ljust(w0) + " | " + body).rstrip()

        out = [line(self.symbol, list(names))]
        out.append("-" * (w0 + 1) + "+" + "-" * (sum(widths) + len(widths)))
        out.extend(line(names[i], rows[i]) for i in range(len(names)))
        return "\n".join(out) + "\n"

    def to_dict(self) -> dict:
        return {
            "operator": self.symbol,
            "elements": list(self.names),
            "cells": [
                {"x": self.names[x], "y": self.names[y], "result": [self.names[k] for k in bits(m)]}
                for x, row in enumerate(self.cells)
                for y, m in enumerate(row)
            ],
        }

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"
