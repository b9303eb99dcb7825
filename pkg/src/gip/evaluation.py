"""Evaluation of graded monomials.

Three interchangeable views of the same product, used to cross-check each
other:

* matrix-unit chains (a substitution assigns each variable one unit),
* generic matrices whose entries are words in independent symbols,
* the 0/1 support pattern of the product.

On top of the support view sit the empty-row profile, the segmentation of a
monomial at its fall positions, and the reduction that replaces zero-fall
runs by single variables.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from random import Random
from typing import Sequence

from .algebra import (
    AlgebraSpec,
    ElementaryMatrix,
    GradedMonomial,
    SupportPattern,
    component_support,
    composed_pattern,
    compose_patterns,
    degrees_of,
    empty_line_count,
    validate_degrees,
)
from .errors import LengthMismatch, NotAnIdentity, UnsupportedEntry, ZeroDegreeVariable

__all__ = [
    "StandardSubstitution",
    "evaluate_standard",
    "find_witness",
    "GenericMatrix",
    "generic_matrix",
    "generic_evaluate",
    "integer_evaluation",
    "ProfileStep",
    "fall_profile",
    "MonomialSegment",
    "FallDecomposition",
    "fall_decomposition",
    "reduction_candidates",
    "collapse",
    "collapse_with_blocks",
]


@dataclass(frozen=True)
class StandardSubstitution:
    """Starting rows, one per monomial position.

    Position s with degree d stands for the unit e_{rows[s], rows[s]+d}
    (column reduced mod n into 1..n).
    """

    rows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.rows)


def _unit_for(row: int, degree: int, n: int) -> ElementaryMatrix:
    return ElementaryMatrix(row, (row - 1 + degree) % n + 1)


def evaluate_standard(
    spec: AlgebraSpec,
    monomial: GradedMonomial | Sequence[int],
    substitution: StandardSubstitution,
) -> ElementaryMatrix | None:
    """Product of the assigned matrix units, or None when it vanishes.

    Raises UnsupportedEntry when an assigned unit lies outside the algebra;
    that is an invalid substitution, not a zero value.
    """
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    if len(substitution.rows) != len(degrees):
        raise LengthMismatch(
            f"substitution has {len(substitution.rows)} rows for "
            f"{len(degrees)} positions"
        )
    units = []
    for row, degree in zip(substitution.rows, degrees):
        unit = _unit_for(row, degree, spec.n)
        if not spec.contains_unit(unit.row, unit.col):
            raise UnsupportedEntry(f"{unit} lies outside {spec}")
        units.append(unit)
    for left, right in zip(units, units[1:]):
        if left.col != right.row:
            return None
    return ElementaryMatrix(units[0].row, units[-1].col)


def find_witness(
    spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]
) -> StandardSubstitution | None:
    """A nonvanishing standard substitution inside the algebra, if any.

    Starting rows are the mapped rows of the composed support pattern; the
    lowest one is returned, so the result is deterministic.
    """
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    pattern = composed_pattern(spec, degrees)
    if pattern.is_empty:
        return None
    start = min(pattern.mapped_rows)
    rows = []
    row = start
    for degree in degrees:
        rows.append(row)
        row = (row - 1 + degree) % spec.n + 1
    return StandardSubstitution(tuple(rows))


Symbol = tuple[int, int, int]  # (factor index, row, col)


@dataclass(frozen=True)
class GenericMatrix:
    """Matrix over words in independent symbols, at most one entry per row.

    ``entries`` maps (row, col) to the word: a tuple of symbols
    (factor index, row, col), one symbol per generic factor multiplied.
    """

    n: int
    entries: tuple[tuple[tuple[int, int], tuple[Symbol, ...]], ...]

    @classmethod
    def from_dict(
        cls, n: int, entries: dict[tuple[int, int], tuple[Symbol, ...]]
    ) -> "GenericMatrix":
        return cls(n, tuple(sorted(entries.items())))

    @property
    def entry_map(self) -> dict[tuple[int, int], tuple[Symbol, ...]]:
        return dict(self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def support_pattern(self) -> SupportPattern:
        cols = [0] * self.n
        for (row, col), _word in self.entries:
            cols[row - 1] = col
        return SupportPattern(self.n, tuple(cols))

    def __mul__(self, other: "GenericMatrix") -> "GenericMatrix":
        if self.n != other.n:
            raise LengthMismatch(f"sizes differ: {self.n} vs {other.n}")
        right = other.entry_map
        by_row: dict[int, tuple[int, tuple[Symbol, ...]]] = {}
        for (row, col), word in right.items():
            by_row[row] = (col, word)
        product: dict[tuple[int, int], tuple[Symbol, ...]] = {}
        for (row, mid), word in self.entries:
            hit = by_row.get(mid)
            if hit is not None:
                col, tail = hit
                product[(row, col)] = word + tail
        return GenericMatrix.from_dict(self.n, product)


def generic_matrix(spec: AlgebraSpec, degree: int, index: int) -> GenericMatrix:
    """The generic element of the degree component, with symbols tagged by
    ``index`` so distinct factors stay independent."""
    support = component_support(spec, degree)
    entries = {
        (row, col): ((index, row, col),) for row, col in support.row_map.items()
    }
    return GenericMatrix.from_dict(spec.n, entries)


def generic_evaluate(
    spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]
) -> GenericMatrix:
    """Product of one generic matrix per position; zero iff the monomial is
    an identity of the algebra."""
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    result = generic_matrix(spec, degrees[0], 1)
    for position, degree in enumerate(degrees[1:], start=2):
        if result.is_zero:
            break
        result = result * generic_matrix(spec, degree, position)
    return result


def integer_evaluation(
    spec: AlgebraSpec,
    monomial: GradedMonomial | Sequence[int],
    rng: Random,
    max_entry: int = 97,
) -> list[list[int]]:
    """Product of integer matrices with random positive entries on the
    component supports.  Entries are single products of independent
    positives, so the result is the zero matrix exactly when the generic
    product is zero."""
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    n = spec.n
    result: list[list[int]] | None = None
    for degree in degrees:
        support = component_support(spec, degree)
        factor = [[0] * n for _ in range(n)]
        for row, col in support.row_map.items():
            factor[row - 1][col - 1] = rng.randint(1, max_entry)
        if result is None:
            result = factor
            continue
        result = [
            [
                sum(result[i][k] * factor[k][j] for k in range(n))
                for j in range(n)
            ]
            for i in range(n)
        ]
    assert result is not None
    return result


@dataclass(frozen=True)
class ProfileStep:
    """State after multiplying the first ``prefix_length`` factors."""

    prefix_length: int
    empty_lines: int
    fall: int  # empty rows gained at this step; 0 at the first factor


def fall_profile(
    spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]
) -> tuple[ProfileStep, ...]:
    """Stepwise empty-row counts of the prefix products.

    The final empty-row count equals n exactly when the monomial is an
    identity of the algebra.
    """
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    steps = []
    pattern = component_support(spec, degrees[0])
    previous = empty_line_count(pattern)
    steps.append(ProfileStep(1, previous, 0))
    for position, degree in enumerate(degrees[1:], start=2):
        pattern = compose_patterns(pattern, component_support(spec, degree))
        count = empty_line_count(pattern)
        steps.append(ProfileStep(position, count, count - previous))
        previous = count
    return tuple(steps)


@dataclass(frozen=True)
class MonomialSegment:
    """Positions [start, stop) of the monomial, 1-based half-open."""

    start: int
    stop: int
    degree: int  # total degree of the segment, mod n
    fall: int  # empty rows gained at the segment's leading factor

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class FallDecomposition:
    """Segmentation of a monomial at its positive-fall positions.

    Each segment is a fall-contributing factor followed by its maximal
    zero-fall run; the leading segment starts at position 1 regardless.
    The zero-fall run after the last fall position is exposed separately
    as ``trailing_span``: for identities the support is already empty
    there.
    """

    n: int
    degrees: tuple[int, ...]
    segments: tuple[MonomialSegment, ...]
    leading_empty_lines: int  # empty rows after the leading segment

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(s.fall for s in self.segments[1:])

    @property
    def last_fall_position(self) -> int:
        return self.segments[-1].start if len(self.segments) > 1 else 1

    @property
    def trailing_span(self) -> tuple[int, int]:
        """Positions [start, stop) after the last fall-contributing factor."""
        return (self.last_fall_position + 1, len(self.degrees) + 1)

    def certifies_identity(self) -> bool:
        return sum(self.alphas) == self.n - self.leading_empty_lines

    def grouped_degrees(self) -> tuple[int, ...]:
        return tuple(s.degree for s in self.segments)


def fall_decomposition(
    spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]
) -> FallDecomposition:
    """Segment the monomial at its fall positions.

    The fall counts of the segments add up to n minus the leading segment's
    empty-row count exactly when the monomial is an identity.
    """
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    if any(d == 0 for d in degrees):
        raise ZeroDegreeVariable(
            "strip degree-0 variables before decomposing: " f"{degrees}"
        )
    profile = fall_profile(spec, degrees)
    boundaries = [1] + [s.prefix_length for s in profile[1:] if s.fall > 0]
    falls = {s.prefix_length: s.fall for s in profile}
    segments = []
    for i, start in enumerate(boundaries):
        stop = boundaries[i + 1] if i + 1 < len(boundaries) else len(degrees) + 1
        segments.append(
            MonomialSegment(
                start,
                stop,
                sum(degrees[start - 1 : stop - 1]) % spec.n,
                falls[start] if start > 1 else 0,
            )
        )
    # empty rows after the full leading segment == after its first factor,
    # since the rest of the segment contributes no falls
    leading_empty = profile[0].empty_lines
    return FallDecomposition(spec.n, degrees, tuple(segments), leading_empty)


def _segments_within(
    decomposition: FallDecomposition, stop: int
) -> tuple[MonomialSegment, ...]:
    """Clip the segmentation to positions [1, stop)."""
    clipped = []
    for segment in decomposition.segments:
        if segment.start >= stop:
            break
        clipped.append(
            MonomialSegment(
                segment.start,
                min(segment.stop, stop),
                sum(decomposition.degrees[segment.start - 1 : min(segment.stop, stop) - 1])
                % decomposition.n,
                segment.fall,
            )
        )
    return tuple(clipped)


def _companion_degrees(
    degrees: tuple[int, ...], segments: tuple[MonomialSegment, ...], n: int
) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """One variable per fall factor plus one per nonempty zero-fall run.

    Returns the degree sequence and the spans (1-based, half-open) each
    output variable covers.
    """
    out: list[int] = []
    spans: list[tuple[int, int]] = []
    for segment in segments:
        out.append(degrees[segment.start - 1])
        spans.append((segment.start, segment.start + 1))
        if len(segment) > 1:
            tail = degrees[segment.start : segment.stop - 1]
            out.append(sum(tail) % n)
            spans.append((segment.start + 1, segment.stop))
    return tuple(out), tuple(spans)


def reduction_candidates(
    spec: AlgebraSpec, degrees: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]:
    """Candidate reductions for an identity without degree-0 variables.

    Both candidates cover the prefix up to the last fall position (the
    support is already dead on the remainder): first the grouped form (one
    variable per segment), then the split form keeping each fall factor
    separate from its zero-fall run.  Candidates come with the spans their
    variables replace; callers pick the first that suits them.
    """
    decomposition = fall_decomposition(spec, degrees)
    stop = decomposition.trailing_span[0]
    segments = _segments_within(decomposition, stop)
    grouped = (
        tuple(s.degree for s in segments),
        tuple((s.start, s.stop) for s in segments),
    )
    split = _companion_degrees(degrees, segments, spec.n)
    if split == grouped:
        return (grouped,)
    return (grouped, split)


def collapse_with_blocks(
    spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]
) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Reduced identity together with the span each variable replaces.

    The spans cover a prefix of the monomial; any remainder is the
    zero-fall run after the support has already died, so the original is
    the substitution instance times that right context.
    """
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    if any(d == 0 for d in degrees):
        raise ZeroDegreeVariable(f"monomial has degree-0 variables: {degrees}")
    if not composed_pattern(spec, degrees).is_empty:
        raise NotAnIdentity(f"{degrees} is not an identity of {spec}")
    candidates = reduction_candidates(spec, degrees)
    for collapsed, spans in candidates:
        if composed_pattern(spec, collapsed).is_empty:
            bound = 2 * spec.n - 2
            if len(collapsed) > bound:
                warnings.warn(
                    f"reduction of {degrees} has {len(collapsed)} > {bound} variables",
                    stacklevel=2,
                )
            return collapsed, spans
    raise AssertionError(
        f"no reduction of identity {degrees} vanishes: {candidates}"
    )


def collapse(
    spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]
) -> tuple[int, ...]:
    """Shorter identity the monomial follows from.

    Zero-fall runs are merged into single variables of the run's total
    degree; when that merged sequence fails to vanish (possible for general
    block shapes) each fall factor is kept separate from its run instead.
    The result has at most 2n-2 variables for the block shapes exercised
    here; longer outputs are reported with a warning rather than truncated.
    """
    collapsed, _spans = collapse_with_blocks(spec, monomial)
    return collapsed
