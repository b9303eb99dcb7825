"""Deciding and enumerating graded monomial identities.

A degree sequence is an identity of the algebra exactly when the composed
support pattern of its components is empty, so every labeled monomial with
that sequence vanishes identically.  Sequences are therefore the canonical
representation throughout; labelings multiply the count without adding
information.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .algebra import (
    AlgebraSpec,
    GradedMonomial,
    component_support,
    composed_pattern,
    degrees_of,
    validate_degrees,
)
from .errors import LengthMismatch
from .evaluation import (
    ProfileStep,
    StandardSubstitution,
    fall_profile,
    find_witness,
)

__all__ = [
    "IdentityReport",
    "check_identity",
    "is_identity",
    "strip_zero_degrees",
    "bt_n11_criterion",
    "short_monomial_is_identity",
    "enumerate_identities",
    "identities_with_prefix",
    "BasisBT_n11",
    "minimal_basis_bt_n11",
]


@dataclass(frozen=True)
class IdentityReport:
    """Decision for one monomial: a witness substitution certifies a
    non-identity, its absence an identity."""

    monomial: tuple[int, ...]
    is_identity: bool
    witness: StandardSubstitution | None
    profile: tuple[ProfileStep, ...] | None = None


def check_identity(
    spec: AlgebraSpec,
    monomial: GradedMonomial | Sequence[int],
    with_profile: bool = False,
) -> IdentityReport:
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    witness = find_witness(spec, degrees)
    profile = fall_profile(spec, degrees) if with_profile else None
    return IdentityReport(degrees, witness is None, witness, profile)


def is_identity(spec: AlgebraSpec, monomial: GradedMonomial | Sequence[int]) -> bool:
    degrees = validate_degrees(spec.n, degrees_of(monomial))
    return composed_pattern(spec, degrees).is_empty


def strip_zero_degrees(monomial: GradedMonomial | Sequence[int]) -> GradedMonomial | None:
    """Remove degree-0 positions.

    Returns None when nothing remains: the all-zero monomial is never an
    identity (substituting the unit everywhere gives a nonzero value).
    Otherwise the original is an identity iff the result is.
    """
    if isinstance(monomial, GradedMonomial):
        degrees = monomial.degrees
        labels = monomial.labels
    else:
        degrees = degrees_of(monomial)
        labels = None
    keep = [i for i, d in enumerate(degrees) if d != 0]
    if not keep:
        return None
    if len(keep) == len(degrees):
        return monomial if isinstance(monomial, GradedMonomial) else GradedMonomial(degrees)
    return GradedMonomial(
        tuple(degrees[i] for i in keep),
        tuple(labels[i] for i in keep) if labels is not None else None,
    )


def bt_n11_criterion(n: int, monomial: GradedMonomial | Sequence[int]) -> bool:
    """Closed-form identity test for two blocks of sizes n-1 and 1.

    A length-n sequence is an identity of BT(n-1,1) iff every degree is
    nonzero and no contiguous run within the first n-1 positions sums to 0
    mod n; equivalently the prefix sums of the first n-1 degrees are
    pairwise distinct and nonzero.
    """
    degrees = validate_degrees(n, degrees_of(monomial))
    if len(degrees) != n:
        raise LengthMismatch(f"expected length {n}, got {len(degrees)}")
    if any(d == 0 for d in degrees):
        return False
    seen = {0}
    total = 0
    for d in degrees[: n - 1]:
        total = (total + d) % n
        if total in seen:
            return False
        seen.add(total)
    return True


def short_monomial_is_identity(n: int, monomial: GradedMonomial | Sequence[int]) -> bool:
    """Always False: BT(n-1,1) has no monomial identities shorter than n.

    Kept as an assertable fast path; rejects inputs of length >= n.
    """
    degrees = validate_degrees(n, degrees_of(monomial))
    if len(degrees) >= n:
        raise LengthMismatch(f"expected length < {n}, got {len(degrees)}")
    return False


def identities_with_prefix(
    spec: AlgebraSpec,
    prefix: tuple[int, ...],
    max_degree: int,
    nonzero_only: bool = True,
) -> list[tuple[int, ...]]:
    """All identity sequences of length <= max_degree extending ``prefix``.

    Used directly for the worker partitions of a parallel enumeration;
    results come out in (length, lex) order already.
    """
    n = spec.n
    if len(prefix) > max_degree:
        return []
    residues = tuple(range(1, n)) if nonzero_only else tuple(range(n))
    found: dict[int, list[tuple[int, ...]]] = {
        k: [] for k in range(1, max_degree + 1)
    }

    def emit_all_extensions(seq: tuple[int, ...]) -> None:
        # the prefix pattern is already empty: every extension is an identity
        found[len(seq)].append(seq)
        for k in range(len(seq) + 1, max_degree + 1):
            for tail in product(residues, repeat=k - len(seq)):
                found[k].append(seq + tail)

    def walk(seq: tuple[int, ...], cols: tuple[int, ...]) -> None:
        if len(seq) >= max_degree:
            return
        for r in residues:
            rc = component_support(spec, r).cols
            new_cols = tuple(rc[c - 1] if c else 0 for c in cols)
            new_seq = seq + (r,)
            if not any(new_cols):
                emit_all_extensions(new_seq)
            else:
                walk(new_seq, new_cols)

    if prefix:
        validate_degrees(n, prefix)
        pattern = composed_pattern(spec, prefix)
        if pattern.is_empty:
            emit_all_extensions(prefix)
        else:
            walk(prefix, pattern.cols)
    else:
        identity_cols = tuple(range(1, n + 1))
        walk((), identity_cols)
    out: list[tuple[int, ...]] = []
    for k in range(1, max_degree + 1):
        out.extend(found[k])
    return out


def enumerate_identities(
    spec: AlgebraSpec, max_degree: int, nonzero_only: bool = True
) -> Iterator[tuple[int, ...]]:
    """All identity sequences of length <= max_degree, shortest first and
    lexicographic within a length."""
    if max_degree < 1:
        raise LengthMismatch(f"max_degree must be positive, got {max_degree}")
    yield from identities_with_prefix(spec, (), max_degree, nonzero_only)


@dataclass(frozen=True)
class BasisBT_n11:
    """The degree-n monomial identities of BT(n-1,1): a minimal basis for
    its monomial identities."""

    n: int
    monomials: tuple[tuple[int, ...], ...]

    def __contains__(self, item: object) -> bool:
        return item in set(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)


def minimal_basis_bt_n11(n: int) -> BasisBT_n11:
    """All length-n sequences over nonzero residues passing the closed-form
    criterion; exactly the degree-n monomial identities of BT(n-1,1)."""
    if n < 2:
        raise LengthMismatch(f"need n >= 2, got {n}")
    members = tuple(
        seq
        for seq in product(range(1, n), repeat=n)
        if bt_n11_criterion(n, seq)
    )
    return BasisBT_n11(n, members)
