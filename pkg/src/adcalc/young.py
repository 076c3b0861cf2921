"""Young diagrams stored as column heights.

``YoungDiagram((5, 3, 2, 2, 1))`` has five columns; the first column is the
tallest.  For a unipotent conjugacy class the height of column ``j`` is the
number of Jordan blocks of size at least ``j``, so ``[N]`` is the identity
matrix of size N and ``[1, 1, ..., 1]`` (N columns) is a single Jordan block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import BoxTooSmall, MalformedDiagram, ParseError


@dataclass(frozen=True, order=True)
class YoungDiagram:
    columns: tuple[int, ...] = ()

    def __post_init__(self):
        cols = tuple(int(c) for c in self.columns)
        for c in cols:
            if c < 1:
                raise MalformedDiagram(f"column heights must be positive: {list(cols)}")
        for a, b in zip(cols, cols[1:]):
            if a < b:
                raise MalformedDiagram(f"column heights must weakly decrease: {list(cols)}")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def of(cls, *cols: int) -> "YoungDiagram":
        return cls(tuple(cols))

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def __bool__(self) -> bool:
        return bool(self.columns)

    def __str__(self) -> str:
        return "[" + format_shorthand(self) + "]"

    @property
    def num_columns(self) -> int:
        return len(self.columns)

    def to_rows(self) -> tuple[int, ...]:
        """Conjugate partition (row lengths), i.e. the Jordan block sizes."""
        return conjugate(self.columns)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "YoungDiagram":
        rows = sorted((int(r) for r in rows if int(r) > 0), reverse=True)
        return cls(conjugate(rows))


def conjugate(parts: Iterable[int]) -> tuple[int, ...]:
    parts = list(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(max(parts)))


def rank(y: YoungDiagram) -> int:
    return sum(y.columns)


def first_column_height(y: YoungDiagram) -> int:
    return y.columns[0] if y.columns else 0


def truncate(y: YoungDiagram) -> YoungDiagram:
    """Delete the first column (no-op on the empty diagram)."""
    return YoungDiagram(y.columns[1:])


def prepend_column(y: YoungDiagram, h: int) -> YoungDiagram:
    """Return ``[h, Y]``; a height-0 column leaves ``y`` unchanged."""
    if h < 0:
        raise MalformedDiagram(f"cannot prepend a column of negative height {h} to {y}")
    if h == 0:
        return y
    if h < first_column_height(y):
        raise MalformedDiagram(f"cannot prepend height {h} in front of {y}")
    return YoungDiagram((h,) + y.columns)


def complement(y: YoungDiagram, box_height: int) -> YoungDiagram:
    """Columns ``box_height - h_L >= ... >= box_height - h_1``, zero columns dropped."""
    if not y:
        raise MalformedDiagram("complement of the empty diagram is undefined")
    if box_height < first_column_height(y):
        raise BoxTooSmall(f"box height {box_height} is below the first column of {y}")
    return YoungDiagram(tuple(box_height - h for h in reversed(y.columns) if box_height > h))


def concat(*diagrams: YoungDiagram) -> YoungDiagram:
    """Merge the columns of several diagrams into one, tallest first."""
    cols: list[int] = []
    for d in diagrams:
        cols.extend(d.columns)
    return YoungDiagram(tuple(sorted(cols, reverse=True)))


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse(text) -> YoungDiagram:
    """Parse ``"2,1^5"``, ``"[5,3,2^2,1]"``, a list of ints, or ``""``."""
    if isinstance(text, YoungDiagram):
        return text
    if isinstance(text, (list, tuple)):
        try:
            return YoungDiagram(tuple(int(c) for c in text))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad diagram {text!r}") from exc
    body = str(text).strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    cols: list[int] = []
    if body.strip():
        for tok in body.split(","):
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError(f"bad diagram token {tok!r} in {text!r}")
            height = int(m.group(1))
            cols.extend([height] * int(m.group(2) or 1))
    return YoungDiagram(tuple(cols))


def format_shorthand(y: YoungDiagram) -> str:
    """``(2,1,1,1,1,1)`` -> ``"2,1^5"``."""
    out = []
    cols = y.columns
    i = 0
    while i < len(cols):
        j = i
        while j < len(cols) and cols[j] == cols[i]:
            j += 1
        n = j - i
        out.append(f"{cols[i]}^{n}" if n > 1 else f"{cols[i]}")
        i = j
    return ",".join(out)
