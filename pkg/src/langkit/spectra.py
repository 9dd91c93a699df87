"""Formal cuspidal records and discrete-spectrum parameters.

A parameter is a multiplicity-one multiset of (cuspidal record, ladder
length) pairs; its expansion lists the half-integral twist ladder of each
pair.  `classify_levi_support` decides which induction data can carry a
given two-term parameter, by the cuspidal count plus multiset matching;
the eta/kappa calculus converts between the two sign normalizations of
conjugate-self-dual records.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .arch import AutOnEmbeddings, InfChar
from .rationals import rat, rat_str

SELFDUAL_SYMPLECTIC = "symplectic"
SELFDUAL_ORTHOGONAL = "orthogonal"
CONJ_SELFDUAL = "conj_selfdual"
NO_DUALITY = "none"

_DUALITIES = (SELFDUAL_SYMPLECTIC, SELFDUAL_ORTHOGONAL, CONJ_SELFDUAL, NO_DUALITY)


class SpectraError(ValueError):
    pass


@dataclass(frozen=True)
class CuspidalRecord:
    """Formal descriptor of a cuspidal representation.

    ``eta`` is the parity sign of a conjugate-self-dual record (which of
    the two twisted-tensor factors has the pole).  ``weight`` is the
    unitary-normalization twist; ``algebraicity`` the regularity class.
    """

    label: str
    degree: int
    base: str = "F"
    duality: str = NO_DUALITY
    eta: int = 0
    weight: Fraction = Fraction(0)
    algebraicity: str = "none"
    infchar: Optional[InfChar] = None

    def __post_init__(self):
        object.__setattr__(self, "weight", rat(self.weight))
        if self.degree < 1:
            raise SpectraError("degree must be ≥ 1")
        if self.duality not in _DUALITIES:
            raise SpectraError(f"unknown duality {self.duality!r}")
        if self.duality == CONJ_SELFDUAL:
            if self.eta not in (1, -1):
                raise SpectraError("conjugate-self-dual records carry a parity sign")
        elif self.eta:
            raise SpectraError("only conjugate-self-dual records carry eta")
        if self.duality == SELFDUAL_SYMPLECTIC and self.degree % 2:
            raise SpectraError("symplectic records have even degree")
        if self.algebraicity not in ("algebraic", "half_algebraic", "none"):
            raise SpectraError(f"unknown algebraicity {self.algebraicity!r}")

    @property
    def is_trivial(self) -> bool:
        return self.label == "1" and self.degree == 1

    def serialize(self) -> dict:
        out = {
            "label": self.label,
            "degree": self.degree,
            "base": self.base,
            "duality": self.duality,
            "weight": rat_str(self.weight),
            "algebraicity": self.algebraicity,
        }
        if self.duality == CONJ_SELFDUAL:
            out["eta"] = self.eta
        if self.infchar is not None:
            out["infchar"] = self.infchar.serialize()
        return out


TRIVIAL = CuspidalRecord("1", 1, duality=SELFDUAL_ORTHOGONAL)


@dataclass(frozen=True)
class ArthurParameter:
    """Multiplicity-one multiset of (record, ladder length) summands."""

    summands: tuple  # ((CuspidalRecord, d), ...)

    def __post_init__(self):
        pairs = tuple(
            sorted(self.summands, key=lambda s: (s[0].label, s[0].degree, s[1]))
        )
        seen = set()
        for record, d in pairs:
            if d < 1:
                raise SpectraError("ladder lengths are positive")
            key = (record.label, record.degree, d)
            if key in seen:
                raise SpectraError(f"summand {key} repeats")
            seen.add(key)
        object.__setattr__(self, "summands", pairs)

    @property
    def degree(self) -> int:
        return sum(rec.degree * d for rec, d in self.summands)

    @property
    def cuspidal_count(self) -> int:
        return sum(d for _, d in self.summands)

    def serialize(self) -> list:
        return [{"record": rec.serialize(), "sp": d} for rec, d in self.summands]


@dataclass(frozen=True)
class CuspidalSum:
    """Multiset of (record, half-integral shift) terms."""

    terms: tuple

    def __post_init__(self):
        terms = tuple(
            sorted(
                ((rec, rat(shift)) for rec, shift in self.terms),
                key=lambda t: (t[0].label, t[0].degree, t[1]),
            )
        )
        object.__setattr__(self, "terms", terms)

    def __len__(self):
        return len(self.terms)

    def serialize(self) -> list:
        return [{"label": rec.label, "shift": rat_str(s)} for rec, s in self.terms]


def expand(p: ArthurParameter) -> CuspidalSum:
    """Each (record, d) contributes the shifts (d-1)/2, (d-3)/2, ..., -(d-1)/2."""
    terms = []
    for rec, d in p.summands:
        for j in range(d):
            terms.append((rec, Fraction(d - 1, 2) - j))
    return CuspidalSum(tuple(terms))


def reconstruct(s: CuspidalSum) -> ArthurParameter:
    """Invert `expand` by greedy ladder stripping: take a record with the
    longest complete ladder present, remove it, recurse."""
    remaining = list(s.terms)
    summands = []
    while remaining:
        by_record: dict = {}
        for rec, shift in remaining:
            by_record.setdefault((rec.label, rec.degree), (rec, []))[1].append(shift)
        # deterministic choice: smallest record key
        key = sorted(by_record)[0]
        rec, shifts = by_record[key]
        top = max(shifts)
        d = int(2 * top) + 1
        if Fraction(d - 1, 2) != top or d < 1:
            raise SpectraError(f"not a parameter sum: stray shift {top} for {rec.label}")
        ladder = [Fraction(d - 1, 2) - j for j in range(d)]
        for step in ladder:
            entry = (rec, step)
            if entry not in remaining:
                raise SpectraError(
                    f"not a parameter sum: ladder of {rec.label} misses shift {rat_str(step)}"
                )
            remaining.remove(entry)
        summands.append((rec, d))
    return ArthurParameter(tuple(summands))


# ---------------------------------------------------------------------------
# Levi-support classification


@dataclass(frozen=True)
class LeviCandidate:
    """Induction datum: GL blocks with twist exponents plus a core parameter."""

    blocks: tuple  # ((CuspidalRecord, shift), ...)
    core: ArthurParameter

    def __post_init__(self):
        blocks = tuple((rec, rat(s)) for rec, s in self.blocks)
        object.__setattr__(self, "blocks", blocks)


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str
    block: Optional[tuple] = None  # (record, shift) of the accepted block

    def serialize(self) -> dict:
        out = {"accepted": self.accepted, "reason": self.reason}
        if self.block is not None:
            rec, s = self.block
            out["block"] = {"label": rec.label, "shift": rat_str(s)}
        return out


def classify_levi_support(target: ArthurParameter, candidate: LeviCandidate) -> Verdict:
    """Decide whether induction data can produce the two-term parameter.

    The target must be (record ⊗ ladder 2) ⊕ (record ⊗ ladder 1); its
    expansion has three cuspidal terms, so a candidate with I blocks and
    core ladder count m must satisfy 2I + m = 3.  I = 0 contradicts
    non-cuspidality; I = 1 forces, by multiset matching of (label, shift)
    pairs, the block to be the ladder-2 record at shift ±1/2 and the core
    to match the remaining record.  Trivial-record blocks must carry shift
    0 (their central character kills any twist) and are rejected.
    """
    lad = sorted(d for _, d in target.summands)
    if lad != [1, 2]:
        raise SpectraError("target must be a ladder-2 plus ladder-1 parameter")
    pi = next(rec for rec, d in target.summands if d == 2)
    rho = next(rec for rec, d in target.summands if d == 1)
    want = sorted((t[0].label, t[1]) for t in expand(target).terms)

    I = len(candidate.blocks)
    core_count = candidate.core.cuspidal_count
    if 2 * I + core_count != 3:
        return Verdict(False, f"cuspidal count 2·{I}+{core_count} ≠ 3")
    if I == 0:
        return Verdict(False, "cuspidal case, contradicts non-cuspidality")
    # here I == 1 and the core is a single ladder-1 record
    (block_rec, s1), = candidate.blocks
    if block_rec.is_trivial:
        if s1 != 0:
            return Verdict(False, "trivial block must carry shift 0")
        return Verdict(False, "{1,1,core} mismatch")
    got = sorted(
        [
            (block_rec.label, s1),
            (block_rec.label, -s1),
            (candidate.core.summands[0][0].label, Fraction(0)),
        ]
    )
    if got != want:
        return Verdict(False, f"multiset mismatch: {got} vs {want}")
    return Verdict(
        True,
        f"block {block_rec.label} at shift {rat_str(abs(s1))}, core {rho.label}",
        block=(block_rec, abs(s1)),
    )


def candidate_family(target: ArthurParameter, shifts=None) -> list:
    """Exhaustive small family of candidates for the uniqueness check:
    every way to pick 0, 1 or 2 blocks from the target's records (and the
    trivial record) with small shifts, core from the leftover records."""
    shifts = [rat(s) for s in (shifts or ("0", "1/2", "-1/2", "1"))]
    records = [rec for rec, _ in target.summands]
    pool = records + ([TRIVIAL] if all(not r.is_trivial for r in records) else [])
    out = []
    for core_rec in records:
        core = ArthurParameter(((core_rec, 1),))
        for rec in pool:
            for s in shifts:
                out.append(LeviCandidate(((rec, s),), core))
    # the no-block candidate: everything in the core
    pi = next(rec for rec, d in target.summands if d == 2)
    rho = next(rec for rec, d in target.summands if d == 1)
    out.append(LeviCandidate((), ArthurParameter(((pi, 2), (rho, 1)))))
    # a two-block candidate for the count check
    out.append(
        LeviCandidate(
            ((pi, Fraction(1, 2)), (rho, Fraction(0))),
            ArthurParameter(((rho, 1),)),
        )
    )
    return out


# ---------------------------------------------------------------------------
# sign calculus


def kappa_from_eta(eta: int, r: int) -> int:
    """kappa = eta·(-1)^{r-1}: the descent normalization of the parity sign."""
    if eta not in (1, -1):
        raise SpectraError("eta must be ±1")
    return eta * (-1) ** ((r - 1) % 2)


def sign_condition(eta_pi: int, eta_rho: int, r: int) -> Optional[int]:
    """The unique kappa with eta_pi = (-1)^r·kappa and eta_rho =
    (-1)^{r+1}·kappa, or None (exactly when the two parities agree)."""
    for s in (eta_pi, eta_rho):
        if s not in (1, -1):
            raise SpectraError("parities must be ±1")
    k1 = eta_pi * (-1) ** (r % 2)
    k2 = eta_rho * (-1) ** ((r + 1) % 2)
    return k1 if k1 == k2 else None


def purity_consistent(record: CuspidalRecord, emb) -> bool:
    """Whether the record's declared weight matches the pairing weight of
    its infinitesimal character (vacuously true without one)."""
    if record.infchar is None:
        return True
    from .arch import ArchError, purity_weight

    try:
        w = purity_weight(record.infchar, emb, record.degree)
    except ArchError:
        return False
    return w == record.weight


def duality_preserved(record: CuspidalRecord, emb_action: Optional[AutOnEmbeddings]):
    """Transport a record along a coefficient automorphism: identical
    weight, duality and algebraicity class, infinitesimal character
    relabeled by the embedding action.

    Returns (transported record, assertion list).  Records without a
    regularity class cannot be transported.
    """
    if record.algebraicity == "none":
        raise SpectraError(f"record {record.label} lacks regularity flags")
    infchar = record.infchar
    if infchar is not None and emb_action is not None:
        infchar = infchar.permuted(emb_action)
    moved = replace(record, label=f"a({record.label})", infchar=infchar)
    assertions = [
        ("weight preserved", moved.weight == record.weight),
        ("duality type preserved", moved.duality == record.duality),
        ("algebraicity class preserved", moved.algebraicity == record.algebraicity),
    ]
    if record.duality == CONJ_SELFDUAL:
        assertions.append(("parity sign preserved", moved.eta == record.eta))
    if any(not ok for _, ok in assertions):
        raise SpectraError("transport failed an invariance assertion")
    return moved, assertions
