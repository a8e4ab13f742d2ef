"""Acceptance suite: one test per shipping criterion, at its stated tolerance.

Each test prints a single [PASS]/[FAIL] line (visible with ``pytest -s``).
Random-case suites use fixed seeds, n <= 4, entries in [-3, 3], depth <= 6.
"""

import random
import time

from greenseq import (
    IntMatrix,
    check_uniform_sign_coherence,
    classify,
    compose_mgs,
    find_sequence,
    find_symmetrizer,
    frame,
    is_irreducible,
    mutate,
    reduce_and_search,
    scaling_commutation_check,
    split_mgs,
    trace_sequence,
    underlying_quiver,
    verify_sequence,
)

from data import (
    B_CYCLE3,
    B_FIVE,
    B_MARKOV,
    B_TWO,
    CYCLE3_SEQ,
    CYCLE3_TRACE,
    FIVE_SEQ,
    FIVE_TRACE,
    TWO_SEQ,
    TWO_TRACE,
)
from gen import (
    random_acyclic_exchange,
    random_exchange,
    random_nonnegative,
    random_sign_coherent,
)


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_golden_trace_three_by_three():
    B = find_symmetrizer(B_CYCLE3)
    framed = frame(B)
    trace_sequence(framed, CYCLE3_SEQ)  # warm path, excluded from the timing
    start = time.perf_counter()
    states = trace_sequence(framed, CYCLE3_SEQ)
    verdict = verify_sequence(B, CYCLE3_SEQ)
    elapsed = time.perf_counter() - start
    ok = (
        [s.data.to_lists() for s in states] == CYCLE3_TRACE
        and verdict.is_maximal_green
        and elapsed < 0.010
    )
    report("3x3 golden trace, maximal verdict, <10ms", ok, f"{elapsed * 1000:.2f} ms")


def test_golden_trace_two_by_two():
    B = find_symmetrizer(B_TWO)
    states = trace_sequence(frame(B), TWO_SEQ)
    final_c = states[-1].attached.to_lists()
    ok = [s.data.to_lists() for s in states] == TWO_TRACE and final_c == [[-1, 0], [0, -1]]
    report("2x2 golden trace with final C = -I", ok)


def test_golden_trace_five_by_five():
    B = find_symmetrizer(B_FIVE)
    ok_symmetrizer = B.symmetrizer == (1, 1, 1, 1, 2)
    states = trace_sequence(frame(B), FIVE_SEQ)
    ok_trace = [s.data.to_lists() for s in states] == FIVE_TRACE

    def corner(state):
        return [row[3:] for row in state.data.to_lists()[3:5]]

    ok_corner = all(corner(states[i]) == [[0, -2], [1, 0]] for i in range(5))

    def left_block(state):
        rows = state.data.to_lists()
        return [rows[i][:3] for i in (0, 1, 2, 5, 6, 7, 8, 9)]

    ok_left = left_block(states[4]) == left_block(states[5]) == left_block(states[6])
    report(
        "5x5 golden trace, symmetrizer (1,1,1,1,2), invariant blocks",
        ok_trace and ok_symmetrizer and ok_corner and ok_left,
    )


def test_composition_and_split():
    B = find_symmetrizer(B_FIVE)
    combined = compose_mgs(B, 3, (2, 3, 1, 2), (1, 2))
    ok_compose = combined == FIVE_SEQ and verify_sequence(B, combined).is_maximal_green
    seq1, seq2 = split_mgs(B, 3, combined)
    ok_split = seq1 == (2, 3, 1, 2) and seq2 == (1, 2)
    report("compose (2,3,1,2)+(1,2) -> (2,3,1,2,4,5); split inverts", ok_compose and ok_split)


def test_reduce_and_search_five():
    B = find_symmetrizer(B_FIVE)
    start = time.perf_counter()
    outcome = reduce_and_search(B, 4)
    elapsed = time.perf_counter() - start
    ok = (
        outcome.found
        and verify_sequence(B, outcome.sequence).is_maximal_green
        and list(outcome.blocks) == [frozenset({1, 2, 3}), frozenset({4}), frozenset({5})]
        and elapsed < 1.0
    )
    report("reduce_and_search on 5x5 found and verified, <1s", ok, f"{elapsed * 1000:.1f} ms")


def test_property_suite():
    cases = 500
    depth = 6
    start = time.perf_counter()

    rng = random.Random(20201)
    involution_bad = 0
    for _ in range(cases):
        B = random_exchange(rng, rng.randint(1, 4))
        M = frame(B)
        for k in range(1, B.n + 1):
            if mutate(mutate(M, k), k) != M:
                involution_bad += 1
    report(f"involution: 0 violations in {cases} cases", involution_bad == 0)

    rng = random.Random(20202)
    symmetrizer_bad = 0
    for _ in range(cases):
        B = random_exchange(rng, rng.randint(1, 4))
        M = mutate(frame(B), rng.randint(1, B.n))
        s = B.symmetrizer
        e = M.principal.entries
        if any(
            s[i] * e[i][j] != -s[j] * e[j][i] for i in range(B.n) for j in range(B.n)
        ):
            symmetrizer_bad += 1
    report(f"symmetrizer preservation: 0 violations in {cases} cases", symmetrizer_bad == 0)

    rng = random.Random(20203)
    coherence_bad = 0
    for _ in range(cases):
        n = rng.randint(1, 4)
        B = random_exchange(rng, n)
        if not check_uniform_sign_coherence(B, IntMatrix.identity(n), depth).verified:
            coherence_bad += 1
    report(
        f"C-matrix sign-coherence to depth {depth}: 0 violations in {cases} cases",
        coherence_bad == 0,
    )

    rng = random.Random(20204)
    commutation_bad = 0
    for _ in range(cases):
        n = rng.randint(1, 4)
        B = random_exchange(rng, n)
        m = rng.randint(1, 3)
        B2 = random_sign_coherent(rng, m, n)
        P = random_nonnegative(rng, rng.randint(1, 3), m)
        for k in range(1, n + 1):
            if not scaling_commutation_check(B, B2, P, k):
                commutation_bad += 1
    report(f"scaling commutation: 0 violations in {cases} cases", commutation_bad == 0)

    rng = random.Random(20205)
    nonneg_bad = 0
    for _ in range(cases):
        n = rng.randint(1, 4)
        B = random_exchange(rng, n)
        B2 = random_nonnegative(rng, rng.randint(1, 3), n)
        if not check_uniform_sign_coherence(B, B2, depth).verified:
            nonneg_bad += 1
    report(
        f"nonnegative attachments uniformly coherent: 0 violations in {cases} cases",
        nonneg_bad == 0,
    )

    rng = random.Random(20206)
    persistence_bad = 0
    for _ in range(cases):
        B = random_exchange(rng, rng.randint(1, 4))
        try:
            # the searcher checks green persistence on every expansion and
            # raises InternalSignViolation on any violation
            find_sequence(B, "mgs", depth)
        except Exception:
            persistence_bad += 1
    report(
        f"green persistence at every search expansion: 0 violations in {cases} cases",
        persistence_bad == 0,
    )

    rng = random.Random(20207)
    agreement_bad = 0
    connected_seen = 0
    while connected_seen < cases:
        B = random_exchange(rng, rng.randint(1, 4))
        if not classify(underlying_quiver(B)).connected:
            continue
        connected_seen += 1
        if is_irreducible(B, "definition") != is_irreducible(B, "cycle"):
            agreement_bad += 1
    report(
        f"irreducibility method agreement on {cases} connected cases",
        agreement_bad == 0,
    )

    elapsed = time.perf_counter() - start
    report("property suite total runtime < 60s", elapsed < 60.0, f"{elapsed:.1f} s")


def test_negative_search_control():
    B = find_symmetrizer(B_MARKOV)
    start = time.perf_counter()
    outcome = find_sequence(B, "mgs", 6, "bfs")
    elapsed = time.perf_counter() - start
    ok = outcome.exhausted and outcome.depth == 6 and elapsed < 30.0
    report("no sequence found for the weight-2 cycle at depth 6, <30s", ok, f"{elapsed * 1000:.1f} ms")


def test_acyclic_guarantee():
    rng = random.Random(20208)
    failures = 0
    for _ in range(200):
        n = rng.randint(1, 5)
        B = random_acyclic_exchange(rng, n)
        outcome = reduce_and_search(B, 3)
        if not (outcome.found and verify_sequence(B, outcome.sequence).is_maximal_green):
            failures += 1
    report("200 random acyclic matrices all admit a found sequence", failures == 0)
