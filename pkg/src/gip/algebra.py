"""Block-triangular matrix algebras with the cyclic grading, and their
homogeneous support patterns.

The grading on n-by-n matrices assigns the matrix unit e_{ij} the residue
(j - i) mod n.  A block-triangular subalgebra BT(d_1,...,d_m) inherits the
grading, and every homogeneous component is spanned by the matrix units it
contains: at most one admissible column per row.  Products of homogeneous
elements therefore never cancel (distinct commuting coefficients), so a
product vanishes exactly when its 0/1 row-to-column support does.  All
identity questions in this package reduce to composing such partial maps
and counting the rows that die ("empty lines").

Rows and columns are 1-based throughout, matching the e_{ij} convention;
degrees are residues in 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import (
    LabelMismatch,
    OutOfRange,
    SizeMismatch,
    SumMismatch,
    ZeroBlock,
)

__all__ = [
    "AlgebraSpec",
    "make_algebra_spec",
    "block_of",
    "ElementaryMatrix",
    "GradedMonomial",
    "degrees_of",
    "validate_degrees",
    "SupportPattern",
    "component_support",
    "full_shift_pattern",
    "compose_patterns",
    "composed_pattern",
    "empty_line_count",
    "fall",
]


@dataclass(frozen=True)
class AlgebraSpec:
    """The algebra BT(d_1,...,d_m) inside n-by-n matrices.

    A single block (m = 1) is the full matrix algebra.  The grading modulus
    equals the matrix size n.
    """

    n: int
    blocks: tuple[int, ...]
    # row -> block index, derived; excluded from equality and hashing
    _row_block: tuple[int, ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OutOfRange(f"matrix size must be positive, got {self.n}")
        if not self.blocks:
            raise ZeroBlock("at least one block is required")
        if any(d < 1 for d in self.blocks):
            raise ZeroBlock(f"all blocks must be positive, got {self.blocks}")
        if sum(self.blocks) != self.n:
            raise SumMismatch(
                f"blocks {self.blocks} sum to {sum(self.blocks)}, expected {self.n}"
            )
        table = []
        for index, size in enumerate(self.blocks, start=1):
            table.extend([index] * size)
        object.__setattr__(self, "_row_block", tuple(table))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def is_full(self) -> bool:
        return len(self.blocks) == 1

    def block_of(self, row: int) -> int:
        """Index (1-based) of the diagonal block containing ``row``."""
        if not 1 <= row <= self.n:
            raise OutOfRange(f"row {row} outside 1..{self.n}")
        return self._row_block[row - 1]

    def contains_unit(self, row: int, col: int) -> bool:
        """Whether the matrix unit e_{row,col} lies in the algebra."""
        return self.block_of(row) <= self.block_of(col)

    def __str__(self) -> str:
        if self.is_full:
            return f"M_{self.n}"
        return f"BT({','.join(map(str, self.blocks))})"


def make_algebra_spec(n: int, blocks: Sequence[int]) -> AlgebraSpec:
    """Validated algebra spec for BT(blocks) inside n-by-n matrices."""
    return AlgebraSpec(n, tuple(blocks))


def block_of(spec: AlgebraSpec, row: int) -> int:
    return spec.block_of(row)


@dataclass(frozen=True)
class ElementaryMatrix:
    """The matrix unit e_{row,col}."""

    row: int
    col: int

    def degree(self, n: int) -> int:
        return (self.col - self.row) % n

    def __str__(self) -> str:
        return f"e[{self.row},{self.col}]"


@dataclass(frozen=True)
class GradedMonomial:
    """A product of graded variables, recorded as its degree sequence.

    Labels are optional and only matter for operations that permute
    positions; when present they must be pairwise distinct.
    """

    degrees: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.degrees) < 1:
            raise OutOfRange("a monomial has at least one variable")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != len(self.degrees):
                raise LabelMismatch(
                    f"{len(labels)} labels for {len(self.degrees)} positions"
                )
            if len(set(labels)) != len(labels):
                raise LabelMismatch(f"labels are not distinct: {labels}")

    def __len__(self) -> int:
        return len(self.degrees)

    def total_degree(self, n: int) -> int:
        return sum(self.degrees) % n


def degrees_of(monomial: GradedMonomial | Sequence[int]) -> tuple[int, ...]:
    """Coerce a monomial or raw degree sequence to a tuple of degrees."""
    if isinstance(monomial, GradedMonomial):
        return monomial.degrees
    degrees = tuple(monomial)
    if len(degrees) < 1:
        raise OutOfRange("a monomial has at least one variable")
    return degrees


def validate_degrees(n: int, degrees: Sequence[int]) -> tuple[int, ...]:
    """Check every degree is a canonical residue in 0..n-1."""
    out = tuple(degrees)
    for d in out:
        if not 0 <= d < n:
            raise OutOfRange(f"degree {d} is not a residue in 0..{n - 1}")
    return out


@dataclass(frozen=True)
class SupportPattern:
    """Row-to-column support of a homogeneous element.

    ``cols[i]`` is the column mapped from row i+1, or 0 when the row is
    empty.  Homogeneous elements map each row by a uniform cyclic shift, so
    patterns arising from them satisfy cols[i] == ((i + t) mod n) + 1 on
    mapped rows for a single residue t.
    """

    n: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.cols) != self.n:
            raise SizeMismatch(f"{len(self.cols)} columns for size {self.n}")
        for c in self.cols:
            if not 0 <= c <= self.n:
                raise OutOfRange(f"column {c} outside 0..{self.n}")

    @classmethod
    def from_row_map(cls, n: int, row_map: Mapping[int, int]) -> "SupportPattern":
        cols = [0] * n
        for row, col in row_map.items():
            if not (1 <= row <= n and 1 <= col <= n):
                raise OutOfRange(f"entry ({row},{col}) outside 1..{n}")
            cols[row - 1] = col
        return cls(n, tuple(cols))

    @property
    def row_map(self) -> dict[int, int]:
        return {i + 1: c for i, c in enumerate(self.cols) if c}

    @property
    def is_empty(self) -> bool:
        return not any(self.cols)

    @property
    def mapped_rows(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.cols) if c)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(c for c in self.cols if c)

    def shift(self) -> int | None:
        """The uniform shift t when the pattern is homogeneous, else None.

        The empty pattern is homogeneous of every degree; 0 is returned.
        """
        shifts = {(c - (i + 1)) % self.n for i, c in enumerate(self.cols) if c}
        if not shifts:
            return 0
        if len(shifts) == 1:
            return shifts.pop()
        return None

    def __str__(self) -> str:
        entries = ", ".join(f"{r}->{c}" for r, c in sorted(self.row_map.items()))
        return "{" + entries + "}"


def _shifted_col(row: int, t: int, n: int) -> int:
    return (row - 1 + t) % n + 1


@lru_cache(maxsize=None)
def component_support(spec: AlgebraSpec, t: int) -> SupportPattern:
    """Support of the degree-t homogeneous component of the algebra.

    Row i carries the unit e_{i, i+t} exactly when that unit survives the
    block-triangular shape.
    """
    if not 0 <= t < spec.n:
        raise OutOfRange(f"degree {t} is not a residue in 0..{spec.n - 1}")
    cols = []
    for row in range(1, spec.n + 1):
        col = _shifted_col(row, t, spec.n)
        cols.append(col if spec.contains_unit(row, col) else 0)
    return SupportPattern(spec.n, tuple(cols))


def full_shift_pattern(n: int, t: int) -> SupportPattern:
    """The full cyclic-shift pattern: every row mapped by +t (mod n)."""
    return SupportPattern(n, tuple(_shifted_col(r, t, n) for r in range(1, n + 1)))


def compose_patterns(a: SupportPattern, b: SupportPattern) -> SupportPattern:
    """Support of the product: row i survives iff a maps it to a row b maps."""
    if a.n != b.n:
        raise SizeMismatch(f"pattern sizes differ: {a.n} vs {b.n}")
    bc = b.cols
    return SupportPattern(a.n, tuple(bc[c - 1] if c else 0 for c in a.cols))


def _compose_cols(ac: tuple[int, ...], bc: tuple[int, ...]) -> tuple[int, ...]:
    # raw-tuple composition used by the hot enumeration loops
    return tuple(bc[c - 1] if c else 0 for c in ac)


def composed_pattern(spec: AlgebraSpec, degrees: Sequence[int]) -> SupportPattern:
    """Support of the product of the component patterns of ``degrees``."""
    degs = validate_degrees(spec.n, degrees_of(degrees))
    cols = component_support(spec, degs[0]).cols
    for d in degs[1:]:
        if not any(cols):
            break
        cols = _compose_cols(cols, component_support(spec, d).cols)
    return SupportPattern(spec.n, cols)


def empty_line_count(pattern: SupportPattern) -> int:
    """Number of empty rows of the pattern."""
    return pattern.cols.count(0)


def fall(a: SupportPattern, b: SupportPattern) -> int:
    """Empty rows gained when multiplying a by b.

    Nonnegative for row-functional patterns: a row that is empty in ``a``
    stays empty in the product.
    """
    product = compose_patterns(a, b)
    result = empty_line_count(product) - empty_line_count(a)
    assert result >= 0, "composition cannot revive an empty row"
    return result
