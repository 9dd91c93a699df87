"""Registry of the named rules cited by derivation logs.

Every derivation step carries exactly one rule id; the registry maps each
id to a self-contained statement so reports are checkable without outside
context.  Open-question choices are tracked separately: steps that rely on
one add a warning, and strict mode refuses to use them.
"""

RULES = {
    "constant-term-quotient": (
        "the second summand of the parabolic constant term acts by the quotient of "
        "the pair factor at s and s+1 times the auxiliary factor at 2s and 2s+1"
    ),
    "aux-pole-duality": (
        "the auxiliary factor (alternating square, symmetric square, or the "
        "sign-matched twisted tensor factor) has a simple pole at 1 exactly when "
        "the duality type of the inducing record matches it"
    ),
    "central-nonvanishing-gate": (
        "a pole of the quotient at the half point requires the pair factor not to "
        "vanish there; a declared central zero removes the pole"
    ),
    "denominator-regular": (
        "the denominator factors sit at 3/2 and 2, where pair and auxiliary "
        "factors are regular and nonzero"
    ),
    "normalized-operator-region": (
        "normalized local intertwining operators are holomorphic on Re(s) ≥ 1/2 "
        "and not identically zero on Re(s) = 1/2, so local factors neither create "
        "nor destroy the pole"
    ),
    "epsilon-units": (
        "epsilon factors inside normalization quotients are holomorphic and "
        "nonvanishing, hence order-0 units everywhere"
    ),
    "residual-parameter": (
        "a pole at the half point produces a square-integrable residue whose "
        "discrete parameter is the ladder-2 extension of the block record plus "
        "the core record"
    ),
    "rational-structure-transport": (
        "the square-integrable spectrum in cohomology carries a rational "
        "structure, so a coefficient automorphism moves an eigensystem to "
        "another eigensystem of the same kind"
    ),
    "satake-transport": (
        "unramified eigenvalue data transport along the twisted coefficient "
        "action; the sign bookkeeping of the base-change chain matches the "
        "direct target form"
    ),
    "parity-transport": (
        "the parity sign of a conjugate-self-dual record is preserved by the "
        "coefficient action"
    ),
    "weight-type-transport": (
        "weight, duality type and algebraicity class are preserved by the "
        "coefficient action; the infinitesimal character is relabeled"
    ),
    "cuspidal-count": (
        "matching expansions forces two blocks' worth plus the core ladder count "
        "to equal the three cuspidal terms of the target"
    ),
    "support-uniqueness": (
        "multiset matching of (label, shift) pairs leaves exactly one induction "
        "datum up to associates: the ladder-2 record at shift 1/2 over the core"
    ),
    "trivial-block-shift": (
        "a trivial-record block carries shift 0 because its central character is "
        "trivial on the ray, and the resulting multiset cannot match"
    ),
    "pole-back-transport": (
        "the transported residue forces the transported quotient to have a pole "
        "at the half point, hence the transported pair value is nonzero"
    ),
    "sign-condition": (
        "the two parity constraints eta(block) = (-1)^r·kappa and eta(core) = "
        "(-1)^{r+1}·kappa admit a common kappa exactly when the parities differ"
    ),
    "descent-gate": (
        "the core record descends through base change exactly when its "
        "sign-matched twisted tensor factor has the pole at 1"
    ),
    "arch-sign-multiset-invariance": (
        "the archimedean sign product depends only on the multiset of "
        "per-embedding exponent pairs, hence is fixed by every relabeling"
    ),
    "discriminant-sign-relation": (
        "the sign of the discriminant equals (-1)^{number of complex places}, "
        "collapsing the two transport-ratio contributions to 1"
    ),
    "order-parity": (
        "the functional equation pairs s with 1-s, so the sign +1 (resp. -1) "
        "forces even (resp. odd) central vanishing order"
    ),
    "ratio-bound-positive": (
        "a factor whose argument has positive real part on the region, with "
        "tempered inducing data, is holomorphic and nonzero there"
    ),
    "ratio-pole-candidate": (
        "the minus-twist pair factors are the only ones whose argument can reach "
        "nonpositive real part on the region"
    ),
    "gl-block-window": (
        "normalized rank-one operators between discrete-series blocks are "
        "holomorphic for argument real part > -1 and invertible for |real part| "
        "< 1"
    ),
    "positivity-holomorphy": (
        "non-normalized rank-one operators with positive-real-part argument are "
        "holomorphic"
    ),
    "square-expansion": (
        "the alternating (or twisted) square of a direct sum expands into the "
        "squares of the parts plus the pairwise tensor factors"
    ),
    "dichotomy": (
        "a declared central zero is itself transported: both sides vanish and "
        "the equivalence holds in the vanishing direction"
    ),
}

# choices resolving documented ambiguities; strict mode refuses them
OPEN_CHOICES = {
    "word-length-additivity": (
        "composite intertwining words decompose additively in length"
    ),
    "chain-final-halves": (
        "the transported base-change identity ends with the two opposite half "
        "shifts"
    ),
    "half-plane-region": (
        "the normalized-operator region Re(s) ≥ 1/2 is used uniformly"
    ),
    "complex-place-count-parity": (
        "the complex-place sign factor requires an even product with the degrees"
    ),
}


def cite(rule_id: str) -> str:
    if rule_id not in RULES:
        raise KeyError(f"unknown rule id {rule_id!r}")
    return rule_id
