"""Partitions, skew shapes, level-rank classification, superposition and
the positive window transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

Partition = tuple[int, ...]
Cell = tuple[int, int]  # (column, row); rows count from 0 at the bottom


class InputError(ValueError):
    """Raised when an argument violates an operation's stated domain."""


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize to a weakly decreasing tuple with no trailing zeros."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise InputError(f"parts not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise InputError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def psum(p: Partition) -> int:
    return sum(p)


def pad(p: Partition, n: int) -> tuple[int, ...]:
    """p extended with zeros to exactly n entries."""
    if len(p) > n:
        raise InputError(f"{p} has more than {n} parts")
    return p + (0,) * (n - len(p))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when inner fits inside outer row by row."""
    if len(inner) > len(outer):
        return any(x == 0 for x in inner[len(outer):]) is False and len(partition(inner)) <= len(outer) and all(
            inner[i] <= outer[i] for i in range(len(outer)))
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def transpose(p: Partition) -> Partition:
    """Conjugate diagram: column lengths read as a partition."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c) for c in range(1, p[0] + 1))


def column_height(p: Partition, col: int) -> int:
    """Number of rows of p reaching column col (1-indexed)."""
    return sum(1 for x in p if x >= col)


def partitions_of(m: int, max_parts: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of m, optionally bounded in length and largest part."""
    if max_part is None:
        max_part = m
    if max_parts is None:
        max_parts = m

    def rec(rest: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(m, max_part, max_parts)


def partitions_in_box(width: int, height: int) -> list[Partition]:
    """All partitions with at most `height` parts, each at most `width`."""
    out: list[Partition] = []
    for m in range(width * height + 1):
        out.extend(partitions_of(m, max_parts=height, max_part=width))
    return out


@dataclass(frozen=True)
class FusionContext:
    """Level and rank of the fusion ring; the alcove modulus is level+rank."""

    level: int
    rank: int

    def __post_init__(self) -> None:
        if self.level < 1 or self.rank < 1:
            raise InputError(f"level and rank must be positive: {self}")

    @property
    def modulus(self) -> int:
        return self.level + self.rank


class Classification(NamedTuple):
    in_P: bool
    in_R: bool


def classify(p: Partition, ctx: FusionContext) -> Classification:
    """Membership in the level-rank set P (bounded spread) and the box R."""
    if len(p) > ctx.rank:
        return Classification(False, False)
    top = p[0] if p else 0
    bottom = p[ctx.rank - 1] if len(p) == ctx.rank else 0
    return Classification(top - bottom <= ctx.level, top <= ctx.level)


def complement(p: Partition, ctx: FusionContext) -> Partition:
    """Complement inside the level x rank box, read upside down."""
    if not classify(p, ctx).in_R:
        raise InputError(f"{p} does not fit in the {ctx.level} x {ctx.rank} box")
    q = pad(p, ctx.rank)
    return partition(ctx.level - q[ctx.rank - 1 - i] for i in range(ctx.rank))


@dataclass(frozen=True)
class SkewShape:
    """Cells of outer not in inner, French convention (row 0 at the bottom)."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise InputError(f"{self.inner} is not contained in {self.outer}")

    def size(self) -> int:
        return psum(self.outer) - psum(self.inner)

    def row_bounds(self) -> list[tuple[int, int]]:
        """Per row, (start, end) columns of the cells, 1-indexed inclusive."""
        inner = pad(self.inner, len(self.outer))
        return [(inner[i] + 1, self.outer[i]) for i in range(len(self.outer))]

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.row_bounds())

    def cells(self) -> list[Cell]:
        out = []
        for r, (a, b) in enumerate(self.row_bounds()):
            out.extend((c, r) for c in range(a, b + 1))
        return out

    def has_cell(self, col: int, row: int) -> bool:
        if row < 0 or row >= len(self.outer):
            return False
        a, b = self.row_bounds()[row]
        return a <= col <= b

    def column_cells(self, col: int) -> list[int]:
        """Rows occupied in the given column, bottom to top."""
        return [r for r in range(len(self.outer)) if self.has_cell(col, r)]


@dataclass(frozen=True)
class SuperposedShape:
    """Union of a skew shape with its translate by (-level, rank)."""

    cells: frozenset[Cell]
    base_window: SkewShape
    context: FusionContext

    def __post_init__(self) -> None:
        for col in self.columns():
            rows = sorted(r for c, r in self.cells if c == col)
            segments = 1 + sum(1 for a, b in zip(rows, rows[1:]) if b > a + 1)
            if segments > 2:
                raise InputError(f"column {col} splits into {segments} segments")

    def columns(self) -> list[int]:
        return sorted({c for c, _ in self.cells})

    def column_rows(self, col: int) -> set[int]:
        return {r for c, r in self.cells if c == col}


def superpose(shape: SkewShape, ctx: FusionContext) -> SuperposedShape:
    """Base copy with columns 1..outer_1 plus the copy shifted by (-level, rank)."""
    if not classify(shape.outer, ctx).in_P:
        raise InputError(f"outer shape {shape.outer} is not level-rank admissible")
    base = shape.cells()
    shifted = [(c - ctx.level, r + ctx.rank) for c, r in base]
    return SuperposedShape(frozenset(base) | frozenset(shifted), shape, ctx)


def cutting_point(shape: SkewShape, ctx: FusionContext) -> Optional[int]:
    """Rightmost occupied column sharing no row with the next column, with
    occupied columns further right; None when the superposition is connected."""
    sup = superpose(shape, ctx)
    cols = sup.columns()
    if not cols:
        return None
    rightmost = cols[-1]
    for c in sorted(cols, reverse=True):
        if c == rightmost:
            continue
        if not (sup.column_rows(c) & sup.column_rows(c + 1)):
            return c
    return None


def cells_to_skew(cells: Iterable[Cell]) -> Optional[SkewShape]:
    """Normalize a cell set to a skew shape: leftmost occupied column becomes 1,
    empty bottom rows are dropped.  None when no skew shape matches."""
    cs = set(cells)
    if not cs:
        return SkewShape((), ())
    mincol = min(c for c, _ in cs)
    minrow = min(r for _, r in cs)
    cs = {(c - mincol + 1, r - minrow) for c, r in cs}
    nrows = max(r for _, r in cs) + 1
    spans: list[Optional[tuple[int, int]]] = []
    for r in range(nrows):
        cols = sorted(c for c, rr in cs if rr == r)
        if not cols:
            spans.append(None)
            continue
        if cols != list(range(cols[0], cols[-1] + 1)):
            return None
        spans.append((cols[0] - 1, cols[-1]))  # (inner part, outer part)
    # Fill empty middle rows with the smallest value the rows above allow.
    above = 0
    for r in range(nrows - 1, -1, -1):
        if spans[r] is None:
            spans[r] = (above, above)
        else:
            above = max(above, spans[r][1])
    inner = tuple(s[0] for s in spans)
    outer = tuple(s[1] for s in spans)
    try:
        return SkewShape(partition(outer), partition(inner))
    except InputError:
        return None


class WindowTransform(NamedTuple):
    outer: Partition
    inner: Partition
    case: str  # "cut" or "sl2"


def _window(sup: SuperposedShape, c: int, ell: int) -> set[Cell]:
    """Cells with column index in the half-open window (c-ell, c]."""
    return {(x, y) for x, y in sup.cells if c - ell < x <= c}


def window_transform(shape: SkewShape, mu: Partition,
                     ctx: FusionContext) -> Optional[WindowTransform]:
    """Rewrite the fusion problem as a classical one on a windowed shape.

    When the superposition has a cutting point c, the shape restricted to the
    cell-columns in (c-level, c] is returned (case "cut").  Otherwise, when mu
    has at most two parts and the rank is at least 2, the window ends at the
    rightmost base column of height exactly two (case "sl2").  Returns None
    when neither case applies or the window does not normalize to a skew shape.
    """
    if not classify(shape.inner, ctx).in_R:
        raise InputError(f"inner shape {shape.inner} does not fit the level x rank box")
    if not classify(shape.outer, ctx).in_P:
        raise InputError(f"outer shape {shape.outer} is not level-rank admissible")
    if psum(mu) != shape.size():
        raise InputError(f"|mu|={psum(mu)} does not match the shape size {shape.size()}")
    sup = superpose(shape, ctx)
    c = cutting_point(shape, ctx)
    if c is not None:
        win = cells_to_skew(_window(sup, c, ctx.level))
        if win is not None:
            return WindowTransform(win.outer, win.inner, "cut")
        return None
    if len(mu) <= 2 and ctx.rank >= 2:
        outer1 = shape.outer[0] if shape.outer else 0
        for col in range(outer1, 0, -1):
            if len(shape.column_cells(col)) == 2:
                win = cells_to_skew(_window(sup, col, ctx.level))
                if win is not None:
                    return WindowTransform(win.outer, win.inner, "sl2")
                return None
    return None
