"""Acceptance suite.

One test per criterion; each prints a single PASS/FAIL line with its
runtime against the stated budget (run pytest with -s to see them on
success).  Every tolerance is exact: these are combinatorial
reproductions and property sweeps, not numeric fits.
"""

import functools
import random
import time
from itertools import product

from gip import (
    SupportPattern,
    bt_n11_criterion,
    collapse_with_blocks,
    compose_patterns,
    conjecture_report,
    empty_line_count,
    enumerate_identities,
    equivalence_class,
    equivalence_witness,
    evaluate_ordering,
    fall,
    find_witness,
    generic_evaluate,
    independence_check,
    integer_evaluation,
    is_consequence,
    is_identity,
    make_algebra_spec,
    minimal_basis_bt_n11,
    replay_derivation,
)


def criterion(number, budget_s, description):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                elapsed = time.perf_counter() - start
                print(
                    f"ACCEPTANCE {number} FAIL ({elapsed:.2f}s / {budget_s}s): "
                    f"{description}"
                )
                raise
            elapsed = time.perf_counter() - start
            print(
                f"ACCEPTANCE {number} PASS ({elapsed:.2f}s / {budget_s}s): "
                f"{description}"
            )
            assert elapsed < budget_s, f"budget exceeded: {elapsed:.2f}s"

        return run

    return wrap


@criterion(1, 1, "golden identity verdicts reproduced exactly")
def test_criterion_1_golden_examples():
    bt41 = make_algebra_spec(5, [4, 1])
    assert is_identity(bt41, (1, 2, 3, 4, 4)) is False
    assert is_identity(bt41, (1, 2, 1, 3, 4)) is True
    assert is_identity(bt41, (1, 2, 3, 4, 4, 3, 1)) is True
    assert is_identity(bt41, (1, 2, 3, 1, 1)) is False
    bt44 = make_algebra_spec(8, [4, 4])
    assert is_identity(bt44, (1, 1, 1, 1, 7, 7, 7, 1, 1, 1, 7, 1, 1)) is True
    assert is_identity(bt44, (1, 1, 1, 1, 7, 7, 2, 1)) is False
    for blocks in ([1, 1], [4, 1], [2, 2], [1, 2, 1], [4, 4]):
        n = sum(blocks)
        assert is_identity(make_algebra_spec(n, blocks), (1,) * n) is True


@criterion(2, 5, "closed-form criterion agrees with the decision procedure")
def test_criterion_2_criterion_equivalence():
    for n in (3, 4, 5):
        spec = make_algebra_spec(n, [n - 1, 1])
        for seq in product(range(1, n), repeat=n):
            assert bt_n11_criterion(n, seq) == is_identity(spec, seq), seq


@criterion(3, 5, "no short nonzero-degree monomial is an identity of BT(n-1,1)")
def test_criterion_3_short_monomials():
    for n in (3, 4, 5):
        spec = make_algebra_spec(n, [n - 1, 1])
        for k in range(1, n):
            for seq in product(range(1, n), repeat=k):
                assert not is_identity(spec, seq), seq


@criterion(4, 60, "every identity collapses within the 2n-2 bound and follows")
def test_criterion_4_reduction_bound():
    for n, blocks in ((4, (2, 2)), (4, (3, 1)), (5, (4, 1))):
        spec = make_algebra_spec(n, blocks)
        bound = 2 * n - 2

        def verify(monomial):
            collapsed, _spans = collapse_with_blocks(spec, monomial)
            assert len(collapsed) <= bound, (monomial, collapsed)
            assert is_identity(spec, collapsed), (monomial, collapsed)
            verdict = is_consequence(spec, monomial, [collapsed])
            assert verdict.confirmed, (monomial, collapsed)

        for monomial in enumerate_identities(spec, bound):
            verify(monomial)

        rng = random.Random(1000 + n)
        sampled = 0
        for length in (2 * n - 1, 2 * n):
            found = 0
            while found < 500:
                monomial = tuple(rng.randint(1, n - 1) for _ in range(length))
                if is_identity(spec, monomial):
                    verify(monomial)
                    found += 1
            sampled += found
        assert sampled >= 1000


@criterion(5, 120, "BT(2,2): all identities of degrees 4..6 follow from degree <= 3")
def test_criterion_5_bt22_conjecture():
    report = conjecture_report(make_algebra_spec(4, [2, 2]))
    assert report.minimal_generating_degree == 3
    assert report.unresolved == ()
    assert report.holds
    counts = dict(report.identity_counts)
    confirmed = dict(report.confirmed_counts)
    for degree in (4, 5, 6):
        assert counts[degree] > 0
        assert confirmed[degree] == counts[degree]


@criterion(6, 120, "BT(n-1,1): basis equals degree-n identities, generates, minimal")
def test_criterion_6_basis_theorems():
    for n in (3, 4, 5):
        spec = make_algebra_spec(n, [n - 1, 1])
        basis = minimal_basis_bt_n11(n)

        degree_n_identities = {
            seq for seq in product(range(1, n), repeat=n) if is_identity(spec, seq)
        }
        assert set(basis.monomials) == degree_n_identities

        report = conjecture_report(spec)
        assert report.minimal_generating_degree == n
        assert report.unresolved == ()
        counts = dict(report.identity_counts)
        confirmed = dict(report.confirmed_counts)
        for degree in range(n + 1, 2 * n - 1):
            assert confirmed[degree] == counts[degree]

        entries = independence_check(spec, basis.monomials)
        assert len(entries) == len(basis)
        assert all(not e.verdict.confirmed for e in entries)
        assert all(e.rearrangement_free for e in entries)


@criterion(7, 30, "support, generic, and integer verdicts coincide on 1000 cases")
def test_criterion_7_oracle_cross_validation():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(2, 6)
        blocks = []
        left = n
        while left:
            size = rng.randint(1, left)
            blocks.append(size)
            left -= size
        spec = make_algebra_spec(n, blocks)
        monomial = tuple(rng.randrange(n) for _ in range(rng.randint(1, 10)))
        by_pattern = is_identity(spec, monomial)
        by_generic = generic_evaluate(spec, monomial).is_zero
        by_witness = find_witness(spec, monomial) is None
        matrix = integer_evaluation(spec, monomial, rng)
        by_integers = all(v == 0 for row in matrix for v in row)
        assert by_pattern == by_generic == by_witness == by_integers


@criterion(8, 30, "fall-calculus laws over 10000 random homogeneous pairs")
def test_criterion_8_fall_calculus():
    rng = random.Random(4096)

    def random_homogeneous(n):
        t = rng.randrange(n)
        rows = [r for r in range(1, n + 1) if rng.random() < 0.6]
        return (
            SupportPattern.from_row_map(n, {r: (r - 1 + t) % n + 1 for r in rows}),
            t,
        )

    for _ in range(10000):
        n = rng.randint(2, 8)
        a, t = random_homogeneous(n)
        b, _s = random_homogeneous(n)
        c, _u = random_homogeneous(n)

        drop = fall(a, b)
        image_hits_empty = any(
            col not in b.row_map for col in a.image
        )
        assert (drop > 0) == image_hits_empty  # positive fall <-> dead row hit

        assert drop <= empty_line_count(b)
        equality_condition = all(
            (i - 1 + t) % n + 1 in b.row_map
            for i in range(1, n + 1)
            if i not in a.row_map
        )
        assert (drop == empty_line_count(b)) == equality_condition

        ab = compose_patterns(a, b)
        assert empty_line_count(ab) >= empty_line_count(a)
        assert compose_patterns(ab, c) == compose_patterns(a, compose_patterns(b, c))


@criterion(9, 10, "ordering equivalences detected with replayable witnesses")
def test_criterion_9_equivalence_checks():
    for n in range(2, 7):
        witness = equivalence_witness(n, (0, 0), (1, 2), (2, 1))
        assert witness is not None
        for d in range(n):
            degrees = (d, (n - d) % n, d)
            witness = equivalence_witness(n, degrees, (1, 2, 3), (3, 2, 1))
            assert witness is not None
            a = evaluate_ordering(n, degrees, (1, 2, 3), witness)
            b = evaluate_ordering(n, degrees, (3, 2, 1), witness)
            assert a is not None and a == b
            assert (3, 2, 1) in equivalence_class(n, degrees, cap=3)

    assert equivalence_witness(2, (1, 1), (1, 2), (2, 1)) is None

    rng = random.Random(9)
    replayed = 0
    for _ in range(500):
        n = rng.randint(2, 6)
        k = rng.randint(2, 5)
        degrees = tuple(rng.randrange(n) for _ in range(k))
        tau = list(range(1, k + 1))
        rng.shuffle(tau)
        witness = equivalence_witness(n, degrees, tuple(range(1, k + 1)), tuple(tau))
        if witness is None:
            continue
        a = evaluate_ordering(n, degrees, tuple(range(1, k + 1)), witness)
        b = evaluate_ordering(n, degrees, tuple(tau), witness)
        assert a is not None and a == b
        replayed += 1
    assert replayed > 100


@criterion(0, 60, "confirmed derivations replay end to end (spot check)")
def test_criterion_0_derivation_replay():
    # not a numbered criterion: a safety net tying confirmations to replays
    rng = random.Random(77)
    bt22 = make_algebra_spec(4, [2, 2])
    generators = [
        seq for seq in enumerate_identities(bt22, 3)
    ]
    checked = 0
    for monomial in enumerate_identities(bt22, 6):
        if len(monomial) <= 3:
            continue
        verdict = is_consequence(bt22, monomial, generators)
        assert verdict.confirmed, monomial
        assert replay_derivation(4, monomial, verdict), monomial
        checked += 1
    assert checked > 900
