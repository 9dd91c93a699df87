from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from langkit.weyl import (
    ParabolicShape,
    RootDatum,
    SignedPerm,
    Weight,
    WeylError,
    all_signed_perms,
    bfs_length,
    kostant_reps,
    kostant_weights,
    length,
    length_additive,
    simple_reflections,
)


def shuffle_word(t, u):
    return SignedPerm(tuple([u + i for i in range(1, t + 1)] + list(range(1, u + 1))))


def flip_word(t, u):
    return SignedPerm(
        tuple([t + i for i in range(1, u + 1)] + [-(t + 1 - i) for i in range(1, t + 1)])
    )


def full_word(t, u):
    return SignedPerm(
        tuple([-(t + 1 - i) for i in range(1, t + 1)] + [t + i for i in range(1, u + 1)])
    )


class TestLength:
    def test_identity_is_zero(self):
        assert length(SignedPerm.identity(3)) == 0

    @pytest.mark.parametrize("t,u", [(t, u) for t in range(1, 5) for u in range(0, 5)])
    def test_block_words(self, t, u):
        assert length(shuffle_word(t, u)) == t * u
        assert length(flip_word(t, u)) == t * u + t * (t - 1) // 2 + t
        assert length(full_word(t, u)) == t * (t - 1) // 2 + 2 * t * u + t

    def test_full_flip_no_pairs(self):
        # u = 0: reversal with all signs flipped
        for t in range(1, 5):
            w = full_word(t, 0)
            assert length(w) == t * (t - 1) // 2 + t

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_matches_word_search(self, t):
        for w in all_signed_perms(t):
            assert w.length() == bfs_length(w)


class TestAdditivity:
    def test_identity_always_additive(self):
        for w in all_signed_perms(2):
            assert length_additive(SignedPerm.identity(2), w)
            assert length_additive(w, SignedPerm.identity(2))

    def test_block_decomposition(self):
        assert length_additive(shuffle_word(2, 1), flip_word(2, 1))
        assert shuffle_word(2, 1).then(flip_word(2, 1)) == full_word(2, 1)

    def test_square_of_reflection_fails(self):
        for s in simple_reflections(3):
            assert not length_additive(s, s)

    def test_rank_mismatch(self):
        with pytest.raises(WeylError):
            length_additive(SignedPerm.identity(2), SignedPerm.identity(3))


@given(st.integers(1, 3), st.data())
@settings(max_examples=60, deadline=None)
def test_inverse_has_same_length(t, data):
    perms = list(all_signed_perms(t))
    w = data.draw(st.sampled_from(perms))
    assert w.length() == w.inverse().length()
    assert w.then(w.inverse()).is_identity()


class TestRootData:
    @pytest.mark.parametrize(
        "family,rank,count",
        [("A", 3, 6), ("B", 3, 9), ("C", 3, 9), ("D", 4, 12)],
    )
    def test_positive_root_counts(self, family, rank, count):
        datum = RootDatum(family, rank)
        datum.validate()
        assert len(datum.positive_roots()) == count

    def test_rho_type_c(self):
        assert RootDatum("C", 3).rho().coords == (Fraction(3), Fraction(2), Fraction(1))

    def test_weyl_orders(self):
        assert sum(1 for _ in RootDatum("C", 3).weyl_elements()) == 48
        assert sum(1 for _ in RootDatum("D", 3).weyl_elements()) == 24
        assert sum(1 for _ in RootDatum("A", 2).weyl_elements()) == 6


class TestKostant:
    def test_rank_one_borel(self):
        datum = RootDatum("A", 1)
        shape = ParabolicShape((1, 1), 0, datum)
        reps = kostant_reps(datum, shape)
        assert [l for _, l in reps] == [0, 1]

    def test_siegel_type(self):
        datum = RootDatum("C", 2)
        reps = kostant_reps(datum, ParabolicShape((2,), 0, datum))
        assert [l for _, l in reps] == [0, 1, 2, 3]

    def test_block_plus_core(self):
        datum = RootDatum("C", 3)
        reps = kostant_reps(datum, ParabolicShape((1,), 2, datum))
        assert len(reps) == 48 // 8

    def test_longest_has_nilradical_length(self):
        datum = RootDatum("C", 2)
        shape = ParabolicShape((2,), 0, datum)
        reps = kostant_reps(datum, shape)
        nilradical = len(datum.positive_roots()) - 1  # Levi GL_2 has one positive root
        assert reps[-1][1] == nilradical
        assert len({w.images for w, _ in reps}) == len(reps)

    @pytest.mark.parametrize(
        "family,rank,blocks,core,levi_roots",
        [
            ("C", 3, (1,), 2, 4),
            ("C", 3, (2,), 1, 2),
            ("B", 3, (2,), 1, 2),
            ("D", 3, (1,), 2, 2),
            ("A", 3, (2, 2), 0, 2),
        ],
    )
    def test_longest_general(self, family, rank, blocks, core, levi_roots):
        datum = RootDatum(family, rank)
        shape = ParabolicShape(blocks, core, datum)
        reps = kostant_reps(datum, shape)
        lengths = [l for _, l in reps]
        nilradical = len(datum.positive_roots()) - levi_roots
        assert lengths[-1] == nilradical
        assert lengths.count(nilradical) == 1
        assert len({w.images for w, _ in reps}) == len(reps)

    def test_borel_shape_gives_whole_group(self):
        datum = RootDatum("C", 2)
        shape = ParabolicShape((1, 1), 0, datum)
        reps = kostant_reps(datum, shape)
        assert len(reps) == datum.order()
        assert sorted(l for _, l in reps) == sorted(
            datum.length_of(w) for w in datum.weyl_elements()
        )

    def test_weights_rank_one(self):
        datum = RootDatum("A", 1)
        shape = ParabolicShape((1, 1), 0, datum)
        out = kostant_weights(Weight((0, 0)), datum, shape)
        assert out[0] == (0, Weight((0, 0)))
        assert out[1] == (1, Weight((-1, 1)))  # the negative simple root

    def test_weights_siegel(self):
        datum = RootDatum("C", 2)
        out = kostant_weights(Weight((0, 0)), datum, ParabolicShape((2,), 0, datum))
        assert [d for d, _ in out] == [0, 1, 2, 3]
        weights = [wt.coords for _, wt in out]
        assert len(set(weights)) == 4

    def test_identity_representative_returns_weight(self):
        datum = RootDatum("C", 2)
        lam = Weight((3, 1))
        out = kostant_weights(lam, datum, ParabolicShape((), 2, datum))
        assert out == [(0, lam)]

    def test_distinct_for_regular(self):
        datum = RootDatum("B", 2)
        out = kostant_weights(Weight((2, 1)), datum, ParabolicShape((2,), 0, datum))
        assert len({wt.coords for _, wt in out}) == len(out)

    def test_rejects_non_dominant(self):
        datum = RootDatum("C", 2)
        with pytest.raises(WeylError):
            kostant_weights(Weight((1, 3)), datum, ParabolicShape((2,), 0, datum))

    def test_rejects_incompatible_shape(self):
        datum = RootDatum("C", 3)
        with pytest.raises(WeylError):
            ParabolicShape((3,), 2, datum)


def test_weight_purity():
    assert Weight(("1/2", "3/2")).is_pure()
    assert Weight((1, 2)).is_pure()
    assert not Weight((1, "3/2")).is_pure()


# ---------------------------------------------------------------------------
# an independent dimension oracle for the shifted weights


def levi_positive_roots(shape):
    """Positive roots of the Levi: within-block differences plus the core
    subsystem."""
    datum = shape.ambient
    n = datum.dim
    block_of = {}
    offset = 0
    for b_idx, size in enumerate(shape.gl_block_sizes):
        for i in range(offset, offset + size):
            block_of[i] = b_idx
        offset += size
    core = set(range(offset, n))
    roots = []
    for alpha in datum.positive_roots():
        support = [i for i, c in enumerate(alpha) if c != 0]
        values = sorted(alpha[i] for i in support)
        if len(support) == 2 and values == [Fraction(-1), Fraction(1)]:
            i, j = support
            same_block = block_of.get(i) is not None and block_of.get(i) == block_of.get(j)
            if same_block or (i in core and j in core):
                roots.append(alpha)
        else:
            # e_i + e_j, e_i or 2e_i: only in the core subsystem
            if all(i in core for i in support):
                roots.append(alpha)
    return roots


def levi_dim(shape, weight):
    """Weyl dimension formula over the Levi subsystem."""
    roots = levi_positive_roots(shape)
    rho_m = [sum(r[i] for r in roots) / 2 for i in range(shape.ambient.dim)]
    dim = Fraction(1)
    for alpha in roots:
        num = sum((w + r) * a for w, r, a in zip(weight.coords, rho_m, alpha))
        den = sum(r * a for r, a in zip(rho_m, alpha))
        dim *= Fraction(num, den)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


@pytest.mark.parametrize(
    "family,rank,blocks,core,lam",
    [
        ("C", 2, (2,), 0, (0, 0)),
        ("C", 2, (1,), 1, (2, 1)),
        ("C", 3, (1,), 2, (0, 0, 0)),
        ("C", 3, (3,), 0, (1, 1, 0)),
        ("B", 2, (2,), 0, (1, 0)),
        ("B", 3, (2,), 1, (2, 1, 0)),
        ("D", 3, (1,), 2, (1, 1, 0)),
        ("A", 3, (2, 2), 0, (1, 1, 0, 0)),
    ],
)
def test_shifted_weights_have_zero_euler_characteristic(family, rank, blocks, core, lam):
    # the alternating sum over degrees of the Levi dimensions vanishes
    # whenever the radical is nonzero
    datum = RootDatum(family, rank)
    shape = ParabolicShape(blocks, core, datum)
    out = kostant_weights(Weight(tuple(map(Fraction, lam))), datum, shape)
    assert len(out) > 1
    euler = sum((-1) ** d * levi_dim(shape, wt) for d, wt in out)
    assert euler == 0


@pytest.mark.parametrize(
    "family,rank,blocks,nil_dim",
    [
        ("C", 2, (2,), 3),  # abelian radical: e_i+e_j with i <= j
        ("C", 3, (3,), 6),
        ("A", 3, (2, 2), 4),  # abelian radical: the off-diagonal block
    ],
)
def test_abelian_radical_dimensions_are_binomial(family, rank, blocks, nil_dim):
    # with an abelian radical and trivial coefficients the degree-k piece is
    # the k-th exterior power, so the Levi dimensions sum to binomials
    import math

    datum = RootDatum(family, rank)
    shape = ParabolicShape(blocks, 0, datum)
    zero = Weight(tuple(Fraction(0) for _ in range(datum.dim)))
    by_degree = {}
    for d, wt in kostant_weights(zero, datum, shape):
        by_degree[d] = by_degree.get(d, 0) + levi_dim(shape, wt)
    assert by_degree == {k: math.comb(nil_dim, k) for k in range(nil_dim + 1)}
