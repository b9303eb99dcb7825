"""Consequences of monomial identities, modulo the graded identities of the
full matrix algebra.

Two orderings of a multilinear monomial are equivalent modulo those
identities whenever one chain substitution (each variable receives the
matrix unit forced by its position in the first ordering) gives both
orderings the same nonzero value.  The derivation search closes the target
under this relation, strips degree-0 variables, and looks for a contiguous
window that splits into consecutive blocks whose degree sums match a
generator.  Every confirmation carries a replayable derivation; the search
is sound but makes no completeness claim, so a negative outcome is reported
as "unresolved", never as independence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import (
    AlgebraSpec,
    ElementaryMatrix,
    GradedMonomial,
    composed_pattern,
    degrees_of,
    make_algebra_spec,
    validate_degrees,
)
from .errors import (
    CapExceeded,
    GeneratorNotIdentity,
    LabelMismatch,
    TargetNotIdentity,
)
from .evaluation import StandardSubstitution, evaluate_standard, reduction_candidates
from .identities import enumerate_identities

__all__ = [
    "CONFIRMED",
    "UNRESOLVED",
    "LabeledMonomialPair",
    "equivalence_witness",
    "evaluate_ordering",
    "equivalence_class",
    "RearrangementStep",
    "Derivation",
    "ConsequenceVerdict",
    "replay_derivation",
    "is_consequence",
    "IndependenceEntry",
    "independence_check",
    "ConjectureReport",
    "conjecture_report",
]

CONFIRMED = "confirmed"
UNRESOLVED = "unresolved"


def _validate_permutation(perm: Sequence[int], k: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, k + 1)):
        raise LabelMismatch(f"{perm} is not a permutation of 1..{k}")
    return perm


@dataclass(frozen=True)
class LabeledMonomialPair:
    """Two orderings of one multilinear monomial.

    ``sigma`` and ``tau`` list variable indices (1-based) in product order.
    """

    base: GradedMonomial
    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.base)
        object.__setattr__(self, "sigma", _validate_permutation(self.sigma, k))
        object.__setattr__(self, "tau", _validate_permutation(self.tau, k))

    def witness(self, n: int) -> StandardSubstitution | None:
        return equivalence_witness(n, self.base.degrees, self.sigma, self.tau)


def equivalence_witness(
    n: int,
    degrees: GradedMonomial | Sequence[int],
    sigma: Sequence[int],
    tau: Sequence[int],
) -> StandardSubstitution | None:
    """Chain substitution on which both orderings take the same nonzero
    value, or None when no starting row provides one.

    The witness rows are indexed by variable: rows[v-1] is the starting row
    of the unit assigned to variable v.  Existence of a witness proves the
    two orderings equivalent modulo the graded identities of the full
    matrix algebra; absence proves nothing.
    """
    degs = validate_degrees(n, degrees_of(degrees))
    k = len(degs)
    sigma = _validate_permutation(sigma, k)
    tau = _validate_permutation(tau, k)
    for start in range(1, n + 1):
        rows = [0] * k
        cur = start
        for v in sigma:
            rows[v - 1] = cur
            cur = (cur - 1 + degs[v - 1]) % n + 1
        cur = start
        ok = True
        for v in tau:
            if rows[v - 1] != cur:
                ok = False
                break
            cur = (cur - 1 + degs[v - 1]) % n + 1
        if ok:
            return StandardSubstitution(tuple(rows))
    return None


def evaluate_ordering(
    n: int,
    degrees: GradedMonomial | Sequence[int],
    perm: Sequence[int],
    substitution: StandardSubstitution,
) -> ElementaryMatrix | None:
    """Value of the permuted monomial under a rows-per-variable assignment."""
    degs = validate_degrees(n, degrees_of(degrees))
    perm = _validate_permutation(perm, len(degs))
    full = make_algebra_spec(n, [n])
    ordered_degrees = tuple(degs[v - 1] for v in perm)
    ordered_rows = tuple(substitution.rows[v - 1] for v in perm)
    return evaluate_standard(full, ordered_degrees, StandardSubstitution(ordered_rows))


def _chain_geometry(n: int, degrees: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Rows and columns of the units assigned by the chain substitution
    starting at row 1.  Starting elsewhere translates everything, so row 1
    loses no generality."""
    rows = []
    cols = []
    r = 1
    for d in degrees:
        rows.append(r)
        r = (r - 1 + d) % n + 1
        cols.append(r)
    return rows, cols


def _linking_orders(
    n: int, degrees: tuple[int, ...], dedup: bool
) -> list[tuple[int, ...]]:
    """Orderings (0-based positions) whose assigned units chain from the
    same starting row, hence evaluate to the same nonzero value.

    With ``dedup`` set, positions interchangeable at a branch (same row and
    degree) are tried once; that loses no distinct degree sequences.
    """
    k = len(degrees)
    rows, cols = _chain_geometry(n, degrees)
    by_row: dict[int, list[int]] = {}
    for pos in range(k):
        by_row.setdefault(rows[pos], []).append(pos)
    used = [False] * k
    order: list[int] = []
    results: list[tuple[int, ...]] = []

    def dfs(current_row: int) -> None:
        if len(order) == k:
            results.append(tuple(order))
            return
        tried: set[int] = set()
        for pos in by_row.get(current_row, ()):
            if used[pos]:
                continue
            if dedup:
                if degrees[pos] in tried:
                    continue
                tried.add(degrees[pos])
            used[pos] = True
            order.append(pos)
            dfs(cols[pos])
            order.pop()
            used[pos] = False

    dfs(1)
    return results


def _order_links(n: int, degrees: tuple[int, ...], order: tuple[int, ...]) -> bool:
    """Whether the 1-based ordering chains under the chain substitution."""
    rows, cols = _chain_geometry(n, degrees)
    if rows[order[0] - 1] != 1:
        return False
    for here, after in zip(order, order[1:]):
        if cols[here - 1] != rows[after - 1]:
            return False
    return True


def _sequence_neighbors(
    n: int, seq: tuple[int, ...]
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Degree sequences one rearrangement away, each with one witnessing
    ordering (1-based), sorted for determinism."""
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for order in _linking_orders(n, seq, dedup=True):
        new = tuple(seq[p] for p in order)
        if new not in out:
            out[new] = tuple(p + 1 for p in order)
    return sorted(out.items())


def equivalence_class(
    n: int,
    monomial: GradedMonomial | Sequence[int],
    cap: int | None = None,
) -> frozenset[tuple[int, ...]]:
    """All permutations reachable from the identity ordering through shared
    chain-substitution witnesses, closed transitively.

    Permutations are 1-based tuples; the class always contains the identity.
    The cap (default 2n-2) guards against factorial blowup.
    """
    degs = validate_degrees(n, degrees_of(monomial))
    k = len(degs)
    limit = cap if cap is not None else max(2 * n - 2, 1)
    if k > limit:
        raise CapExceeded(f"length {k} exceeds cap {limit}")
    identity = tuple(range(1, k + 1))
    seen = {identity}
    queue = deque([identity])
    while queue:
        pi = queue.popleft()
        ordered = tuple(degs[v - 1] for v in pi)
        for order in _linking_orders(n, ordered, dedup=False):
            tau = tuple(pi[p] for p in order)
            if tau not in seen:
                seen.add(tau)
                queue.append(tau)
    return frozenset(seen)


@dataclass(frozen=True)
class RearrangementStep:
    """One rearrangement move: ``after`` is ``before`` reordered by the
    1-based ``order``, which chains under the shared substitution."""

    before: tuple[int, ...]
    order: tuple[int, ...]
    after: tuple[int, ...]


@dataclass(frozen=True)
class Derivation:
    """Replayable record of how a target follows from a generator."""

    generator: tuple[int, ...]
    stripped_positions: tuple[int, ...]  # 1-based degree-0 positions removed
    steps: tuple[RearrangementStep, ...]
    window_start: int  # 1-based, into the final rearrangement
    blocks: tuple[tuple[int, ...], ...]  # one block per generator variable


@dataclass(frozen=True)
class ConsequenceVerdict:
    status: str  # CONFIRMED or UNRESOLVED
    derivation: Derivation | None

    @property
    def confirmed(self) -> bool:
        return self.status == CONFIRMED


def replay_derivation(
    n: int,
    target: GradedMonomial | Sequence[int],
    verdict: ConsequenceVerdict,
) -> bool:
    """Re-run a confirmed derivation against its target.

    Checks that the stripped positions carried degree 0, every
    rearrangement step chains, and the final window splits into nonempty
    blocks whose degree sums reproduce the generator.
    """
    if not verdict.confirmed or verdict.derivation is None:
        return False
    d = verdict.derivation
    seq = validate_degrees(n, degrees_of(target))
    stripped = set(d.stripped_positions)
    if any(seq[p - 1] != 0 for p in stripped):
        return False
    seq = tuple(x for i, x in enumerate(seq, 1) if i not in stripped)
    for step in d.steps:
        if step.before != seq:
            return False
        if sorted(step.order) != list(range(1, len(seq) + 1)):
            return False
        if not _order_links(n, seq, step.order):
            return False
        if step.after != tuple(seq[p - 1] for p in step.order):
            return False
        seq = step.after
    if len(d.blocks) != len(d.generator):
        return False
    flat: tuple[int, ...] = ()
    for block, g in zip(d.blocks, d.generator):
        if not block:
            return False
        if sum(block) % n != g % n:
            return False
        flat += block
    start = d.window_start
    return seq[start - 1 : start - 1 + len(flat)] == flat


def _window_partition(
    n: int, seq: tuple[int, ...], gen: tuple[int, ...]
) -> tuple[int, tuple[tuple[int, ...], ...]] | None:
    """First window of ``seq`` splitting into consecutive nonempty blocks
    with degree sums matching ``gen``; (1-based start, blocks) or None."""
    k, l = len(seq), len(gen)
    if l > k:
        return None
    prefix = [0]
    for d in seq:
        prefix.append(prefix[-1] + d)
    dead: set[tuple[int, int]] = set()

    def match(pos: int, j: int) -> tuple[tuple[int, ...], ...] | None:
        if j == l:
            return ()
        if (pos, j) in dead:
            return None
        for end in range(pos + 1, k - (l - j - 1) + 1):
            if (prefix[end] - prefix[pos]) % n == gen[j] % n:
                rest = match(end, j + 1)
                if rest is not None:
                    return (tuple(seq[pos:end]),) + rest
        dead.add((pos, j))
        return None

    for start in range(k - l + 1):
        blocks = match(start, 0)
        if blocks is not None:
            return start + 1, blocks
    return None


def _match_any(
    n: int, seq: tuple[int, ...], genlist: Sequence[tuple[int, ...]]
) -> tuple[tuple[int, ...], int, tuple[tuple[int, ...], ...]] | None:
    for gen in genlist:
        hit = _window_partition(n, seq, gen)
        if hit is not None:
            return gen, hit[0], hit[1]
    return None


def _search(
    spec: AlgebraSpec,
    target: tuple[int, ...],
    genlist: Sequence[tuple[int, ...]],
    cap: int | None,
) -> ConsequenceVerdict:
    """Derivation search; inputs already validated as identities."""
    n = spec.n
    genset = set(genlist)
    stripped = tuple(i for i, d in enumerate(target, 1) if d == 0)
    base = tuple(d for d in target if d != 0)

    def confirmed(
        gen: tuple[int, ...],
        steps: tuple[RearrangementStep, ...],
        window_start: int,
        blocks: tuple[tuple[int, ...], ...],
    ) -> ConsequenceVerdict:
        return ConsequenceVerdict(
            CONFIRMED, Derivation(gen, stripped, steps, window_start, blocks)
        )

    if base in genset:
        return confirmed(base, (), 1, tuple((d,) for d in base))
    # fall-segmentation shortcut: the reductions of the target are its most
    # likely generators, and membership is a hash lookup
    for candidate, spans in reduction_candidates(spec, base):
        if candidate in genset:
            blocks = tuple(base[a - 1 : b - 1] for a, b in spans)
            return confirmed(candidate, (), 1, blocks)
    hit = _match_any(n, base, genlist)
    if hit is not None:
        return confirmed(hit[0], (), hit[1], hit[2])
    limit = cap if cap is not None else max(2 * n - 2, 1)
    if len(base) <= limit:
        parents: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]] | None]
        parents = {base: None}
        queue = deque([base])
        while queue:
            cur = queue.popleft()
            for new, order in _sequence_neighbors(n, cur):
                if new in parents:
                    continue
                parents[new] = (cur, order)
                hit = _match_any(n, new, genlist)
                if hit is not None:
                    steps: list[RearrangementStep] = []
                    walk = new
                    while parents[walk] is not None:
                        before, via = parents[walk]  # type: ignore[misc]
                        steps.append(RearrangementStep(before, via, walk))
                        walk = before
                    return confirmed(hit[0], tuple(reversed(steps)), hit[1], hit[2])
                queue.append(new)
    return ConsequenceVerdict(UNRESOLVED, None)


def is_consequence(
    spec: AlgebraSpec,
    target: GradedMonomial | Sequence[int],
    generators: Iterable[GradedMonomial | Sequence[int]],
    cap: int | None = None,
) -> ConsequenceVerdict:
    """Sound derivation search for ``target`` from ``generators``.

    Confirmed verdicts replay; unresolved verdicts do not prove
    independence.  Both the target and every generator must be identities
    of the algebra.
    """
    tdeg = validate_degrees(spec.n, degrees_of(target))
    if not composed_pattern(spec, tdeg).is_empty:
        raise TargetNotIdentity(f"{tdeg} is not an identity of {spec}")
    genlist = sorted(
        {validate_degrees(spec.n, degrees_of(g)) for g in generators},
        key=lambda s: (len(s), s),
    )
    for g in genlist:
        if not composed_pattern(spec, g).is_empty:
            raise GeneratorNotIdentity(f"{g} is not an identity of {spec}")
    return _search(spec, tdeg, genlist, cap)


@dataclass(frozen=True)
class IndependenceEntry:
    """One basis element checked against the rest.

    ``rearrangement_free`` records that no nontrivial rearrangement of the
    element chains at all; a same-length substitution instance must then be
    the element itself, which is the degree-counting obstruction that makes
    an unresolved verdict decisive for equal-length bases.
    """

    element: tuple[int, ...]
    verdict: ConsequenceVerdict
    rearrangement_free: bool


def independence_check(
    spec: AlgebraSpec,
    basis: Iterable[GradedMonomial | Sequence[int]],
    cap: int | None = None,
) -> tuple[IndependenceEntry, ...]:
    """Run the consequence search for each element against the others."""
    elements = sorted(
        {validate_degrees(spec.n, degrees_of(b)) for b in basis},
        key=lambda s: (len(s), s),
    )
    for e in elements:
        if not composed_pattern(spec, e).is_empty:
            raise GeneratorNotIdentity(f"{e} is not an identity of {spec}")
    entries = []
    for e in elements:
        others = [g for g in elements if g != e]
        verdict = _search(spec, e, others, cap)
        free = all(new == e for new, _ in _sequence_neighbors(spec.n, e))
        entries.append(IndependenceEntry(e, verdict, free))
    return tuple(entries)


@dataclass(frozen=True)
class ConjectureReport:
    """Census of identities up to length 2n-2 and how they reduce.

    ``checked_level`` is the generating degree the confirmation counts
    refer to: the minimal one found, else n (the conjectured bound).
    ``holds`` states that every identity longer than n followed from
    identities of length at most n.
    """

    n: int
    blocks: tuple[int, ...]
    max_length: int
    identity_counts: tuple[tuple[int, int], ...]  # (length, identities)
    minimal_generating_degree: int | None
    holds: bool
    checked_level: int
    confirmed_counts: tuple[tuple[int, int], ...]  # (length, confirmed)
    unresolved: tuple[tuple[int, ...], ...]


def conjecture_report(spec: AlgebraSpec, cap: int | None = None) -> ConjectureReport:
    """Enumerate all nonzero-degree identities up to length 2n-2 and try to
    derive each long one from the short ones.

    Generating degrees are probed in increasing order; the first level
    whose longer identities all confirm is reported as minimal.  Anything
    still unresolved at level n lands in ``unresolved``.
    """
    n = spec.n
    max_length = max(2 * n - 2, 1)
    by_length: dict[int, list[tuple[int, ...]]] = {
        k: [] for k in range(1, max_length + 1)
    }
    for seq in enumerate_identities(spec, max_length, nonzero_only=True):
        by_length[len(seq)].append(seq)
    identity_counts = tuple(
        (k, len(by_length[k])) for k in range(1, max_length + 1)
    )
    populated = [k for k, seqs in by_length.items() if seqs]
    levels = sorted({k for k in populated if k <= n} | {min(n, max_length)})

    minimal: int | None = None
    confirmed_at: dict[tuple[int, ...], int] = {}
    unresolved: list[tuple[int, ...]] = []
    if populated:
        for d in levels:
            genlist = sorted(
                (g for k in populated if k <= d for g in by_length[k]),
                key=lambda s: (len(s), s),
            )
            if not genlist:
                continue
            final = d == levels[-1]
            level_ok = True
            for k in range(d + 1, max_length + 1):
                for seq in by_length[k]:
                    if seq in confirmed_at:
                        continue
                    verdict = _search(spec, seq, genlist, cap)
                    if verdict.confirmed:
                        confirmed_at[seq] = d
                    else:
                        level_ok = False
                        if final:
                            unresolved.append(seq)
                if not level_ok and not final:
                    break
            if level_ok:
                minimal = d
                break

    checked_level = minimal if minimal is not None else min(n, max_length)
    confirmed_counts = tuple(
        (k, sum(1 for seq in by_length[k] if seq in confirmed_at))
        for k in range(checked_level + 1, max_length + 1)
    )
    holds = not unresolved
    return ConjectureReport(
        n=n,
        blocks=spec.blocks,
        max_length=max_length,
        identity_counts=identity_counts,
        minimal_generating_degree=minimal,
        holds=holds,
        checked_level=checked_level,
        confirmed_counts=confirmed_counts,
        unresolved=tuple(unresolved),
    )
