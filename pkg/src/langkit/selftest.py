"""Brute-force oracle suites behind the `selftest` command.

Each suite checks a closed form against an independent computation:
word search for lengths, root enumeration for modulus exponents and
gradings, matrix arithmetic for the conjugation operator, exhaustive
generation for round trips and classification.  Everything here is also
exercised by the test suite; the command exists so a deployed install can
revalidate itself.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def _suite_word_lengths():
    from .normalizer import intertwining_word
    from .weyl import all_signed_perms, bfs_length

    for t in range(1, 5):
        for u in range(0, 5):
            intertwining_word(t, u)  # raises on any length mismatch
    for t in (1, 2, 3):
        for w in all_signed_perms(t):
            if w.length() != bfs_length(w):
                raise AssertionError(f"length mismatch at {w}")
    return "word lengths: closed count = reduced-word search (rank <= 3), block words on the grid"


def _suite_modulus():
    from .groups import (
        maximal_levi,
        modulus_borel,
        modulus_borel_root_sum,
        modulus_levi,
        modulus_levi_root_sum,
        so_even,
        so_odd,
        sp,
        unitary,
    )

    for n in range(1, 5):
        for r in range(1, n + 1):
            for mk in (sp, so_odd, so_even):
                lv = maximal_levi(mk(n), r)
                if modulus_levi(lv) != modulus_levi_root_sum(lv):
                    raise AssertionError(f"modulus mismatch {mk} {n} {r}")
    for N in range(2, 10):
        for r in range(1, N // 2 + 1):
            lv = maximal_levi(unitary(N), r)
            if modulus_levi(lv) != modulus_levi_root_sum(lv):
                raise AssertionError(f"unitary modulus mismatch {N} {r}")
        if modulus_borel(unitary(N)) != modulus_borel_root_sum(unitary(N)):
            raise AssertionError(f"unitary borel mismatch {N}")
    for n in range(1, 5):
        for g in (sp(n), so_odd(n)) + ((so_even(n),) if n >= 2 else ()):
            if modulus_borel(g) != modulus_borel_root_sum(g):
                raise AssertionError(f"borel mismatch {g}")
    return "modulus exponents: closed forms = positive-root sums (all families)"


def _suite_grading_and_operator():
    from .dual import asai_trace, grade_nilradical, grade_nilradical_by_roots, identify_R1

    for n in range(1, 7):
        for r in range(0, 7):
            got = {d: dim for d, dim, _ in grade_nilradical(n, r).components}
            want = grade_nilradical_by_roots(n, r)
            if got != want:
                raise AssertionError(f"grading mismatch {n} {r}")
    for n in range(1, 5):
        for r in range(0, 5):
            desc, op = identify_R1(n, r)
            if int(np.trace(op)) != asai_trace((-1) ** r, n):
                raise AssertionError(f"trace mismatch {n} {r}")
            if not np.array_equal(op @ op, np.eye(n * n, dtype=np.int64)):
                raise AssertionError(f"involution fails {n} {r}")
    return "nilradical grading = root enumeration; conjugation operator trace and involution"


def _suite_transport():
    from .satake import AutModel, bc_chain_check, eps_identities_hold

    for n in range(1, 7):
        for r in range(0, 7):
            for e in (1, -1):
                aut = AutModel(eps=e)
                if not eps_identities_hold(aut, n, r):
                    raise AssertionError(f"sign identity fails {n} {r} {e}")
                ok, _, mism = bc_chain_check(n, r, aut)
                if not ok:
                    raise AssertionError(f"chain mismatch {n} {r} {e}: {mism}")
    return "transport signs: both identities and the base-change chain on the full grid"


def _suite_round_trip():
    from .spectra import (
        SELFDUAL_ORTHOGONAL,
        SELFDUAL_SYMPLECTIC,
        TRIVIAL,
        ArthurParameter,
        CuspidalRecord,
        expand,
        reconstruct,
    )

    recs = [
        CuspidalRecord("a", 2, duality=SELFDUAL_SYMPLECTIC),
        CuspidalRecord("b", 3, duality=SELFDUAL_ORTHOGONAL),
        CuspidalRecord("c", 1, duality=SELFDUAL_ORTHOGONAL),
        CuspidalRecord("d", 4, duality=SELFDUAL_SYMPLECTIC),
        TRIVIAL,
    ]
    count = 0
    for k in range(1, 6):
        for chosen in itertools.combinations(recs, k):
            for ds in itertools.product(range(1, 5), repeat=k):
                p = ArthurParameter(tuple(zip(chosen, ds)))
                if reconstruct(expand(p)) != p:
                    raise AssertionError(f"round trip fails: {p}")
                count += 1
    return f"parameter round trips: {count} exhaustive cases (<= 5 summands, ladders <= 4)"


def _suite_classification():
    from .spectra import (
        SELFDUAL_ORTHOGONAL,
        SELFDUAL_SYMPLECTIC,
        ArthurParameter,
        CuspidalRecord,
        candidate_family,
        classify_levi_support,
    )

    pi = CuspidalRecord("pi", 2, duality=SELFDUAL_SYMPLECTIC, algebraicity="algebraic")
    rho = CuspidalRecord("rho", 3, duality=SELFDUAL_ORTHOGONAL, algebraicity="algebraic")
    target = ArthurParameter(((pi, 2), (rho, 1)))
    keys = set()
    total = 0
    for cand in candidate_family(target):
        v = classify_levi_support(target, cand)
        total += 1
        if v.accepted:
            keys.add((v.block[0].label, v.block[1]))
    if keys != {("pi", Fraction(1, 2))}:
        raise AssertionError(f"classification not unique: {keys}")
    return f"support classification: 1 datum accepted of {total} candidates"


def _suite_pole_table():
    from .eisenstein import constant_term_quotient, default_ledger, pole_at_half
    from .groups import ambient_with_block
    from .spectra import SELFDUAL_ORTHOGONAL, SELFDUAL_SYMPLECTIC, CuspidalRecord

    results = []
    for duality in (SELFDUAL_SYMPLECTIC, SELFDUAL_ORTHOGONAL):
        deg = 2 if duality == SELFDUAL_SYMPLECTIC else 3
        pi = CuspidalRecord("pi", deg, duality=duality, algebraicity="algebraic")
        rho_duality = (
            SELFDUAL_ORTHOGONAL if duality == SELFDUAL_SYMPLECTIC else SELFDUAL_SYMPLECTIC
        )
        rho_deg = 3 if rho_duality == SELFDUAL_ORTHOGONAL else 2
        rho = CuspidalRecord("rho", rho_deg, duality=rho_duality, algebraicity="algebraic")
        ambient = ambient_with_block(rho.duality, pi.degree, rho.degree)
        q = constant_term_quotient(ambient, pi, rho)
        led = default_ledger(pi, rho)
        for central in (0, 1):
            has = pole_at_half(q, led, central).has_pole
            want = central == 0  # the matching square always has the pole here
            if has != want:
                raise AssertionError(f"pole table {duality} central={central}")
            results.append(has)
    # mismatched square: orthogonal block forced into the alternating square
    from .eisenstein import LFactorRef, LQuotient

    pi = CuspidalRecord("pi", 2, duality=SELFDUAL_ORTHOGONAL, algebraicity="half_algebraic")
    rho = CuspidalRecord("rho", 3, duality=SELFDUAL_ORTHOGONAL, algebraicity="algebraic")
    q = LQuotient(
        (
            LFactorRef(("rankin", "pi", "rho"), 1, Fraction(0)),
            LFactorRef(("wedge2", "pi"), 2, Fraction(0)),
        ),
        (
            LFactorRef(("rankin", "pi", "rho"), 1, Fraction(1)),
            LFactorRef(("wedge2", "pi"), 2, Fraction(1)),
        ),
    )
    led = default_ledger(pi, rho)
    for central in (0, 1):
        if pole_at_half(q, led, central).has_pole:
            raise AssertionError("mismatched square must not produce a pole")
    return "pole truth table: pole iff matching square and central order 0 (4 cells)"


def _suite_factorization():
    from .normalizer import (
        DiscreteSegment,
        QuasiTemperedGL,
        QuasiTemperedSelfdual,
        classify_holomorphy,
        factor_normalization,
        verify_wedge_expansion,
    )

    for t in range(1, 5):
        for u in range(0, 5):
            segs = tuple(
                DiscreteSegment(f"p{i}", 1, 1, Fraction(1, 4 * (i + 2))) for i in range(t)
            )
            pi = QuasiTemperedGL(segs)
            if not verify_wedge_expansion(pi):
                raise AssertionError(f"square expansion fails t={t}")
            pairs = tuple((f"r{j}", Fraction(1, 3 * (j + 2))) for j in range(u))
            rho = QuasiTemperedSelfdual(("r0",), pairs)
            classified = classify_holomorphy(factor_normalization(pi, rho))
            for c in classified:
                expect = "pole_candidate" if c.ratio.family == "ii-" else "holo_nonzero"
                if c.status != expect:
                    raise AssertionError(f"classification {c.ratio.family} -> {c.status}")
    return "normalization factor: square expansion and pole candidates on the grid (t,u <= 4)"


def _suite_arch_signs():
    import random

    from .arch import AutOnEmbeddings, EmbeddingSet, InfChar, eps_arch, root_number_selfdual
    from .rationals import rat

    rng = random.Random(20240815)
    for case in range(100):
        d_r = rng.randint(1, 3)
        emb = EmbeddingSet.build(real=tuple(f"r{i}" for i in range(d_r)))
        deg_p = rng.choice((2, 4, 6))
        deg_q = rng.choice((1, 3, 5))
        p_data, q_data = [], []
        for label in emb.labels:
            halves = sorted(
                rng.sample([Fraction(2 * k + 1, 2) for k in range(1, 12)], deg_p // 2),
                reverse=True,
            )
            p_data.append((label, tuple(halves) + tuple(-h for h in reversed(halves))))
            ints = sorted(rng.sample(range(1, 15), deg_q // 2), reverse=True)
            q_vals = tuple(Fraction(i) for i in ints)
            q_vals = q_vals + ((Fraction(0),) if deg_q % 2 else ()) + tuple(-v for v in reversed(q_vals))
            q_data.append((label, q_vals))
        p, q = InfChar(tuple(p_data)), InfChar(tuple(q_data))
        base, _ = root_number_selfdual(emb, p, q, deg_p, deg_q)
        labels = list(emb.labels)
        rng.shuffle(labels)
        perm = AutOnEmbeddings(tuple(zip(emb.labels, labels)))
        s2, _ = root_number_selfdual(emb, p.permuted(perm), q.permuted(perm), deg_p, deg_q)
        if base != s2:
            raise AssertionError(f"sign not invariant in case {case}")
    for a in ("1/2", "1", "3/2", "2"):
        v = eps_arch("real_induced", a)
        if (v.k - (int(2 * rat(a)) + 1)) % 4:
            raise AssertionError("value mismatch")
    if eps_arch("complex", 1, 0).k != 1 or eps_arch("restriction", "1/2").k != 2:
        raise AssertionError("value mismatch")
    return "archimedean signs: 100 randomized invariance cases and the closed values"


SUITES = (
    _suite_word_lengths,
    _suite_modulus,
    _suite_grading_and_operator,
    _suite_transport,
    _suite_round_trip,
    _suite_classification,
    _suite_pole_table,
    _suite_factorization,
    _suite_arch_signs,
)


def run_all():
    lines = []
    ok = True
    for suite in SUITES:
        try:
            lines.append("PASS " + suite())
        except AssertionError as exc:
            ok = False
            lines.append(f"FAIL {suite.__name__}: {exc}")
    return lines, ok
