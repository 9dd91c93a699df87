"""Root data for the classical families and signed-permutation Weyl groups.

The Weyl group of type B/C in rank t is realized as the group W_t of
permutations w of {±1, ..., ±t} with w(-i) = -w(i).  Its Coxeter length is
taken for the generating set consisting of the adjacent transpositions
s_1, ..., s_{t-1} together with the sign change on position t; length is
computed exactly as the number of positive roots made negative, which is a
closed O(t²) count.

`kostant_reps` returns the minimal-length representatives of W_M\\W for a
standard parabolic with Levi M, and `kostant_weights` the associated
degree-graded dominant-shifted weights w(λ+ρ)-ρ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .rationals import rat, rat_str


class WeylError(ValueError):
    pass


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    """A coordinate vector of exact half-integers with a rank tag.

    ``context`` is a free-form tag ("C3", "ambient", ...) used only for
    error messages and serialization; arithmetic is purely coordinatewise.
    """

    coords: tuple
    context: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(rat(c) for c in self.coords))
        for c in self.coords:
            if (2 * c).denominator != 1:
                raise WeylError(f"weight coordinate {c} is not half-integral")

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        self._same_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.context)

    def __sub__(self, other: "Weight") -> "Weight":
        self._same_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.context)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.context)

    def _same_rank(self, other: "Weight"):
        if len(self) != len(other):
            raise WeylError(f"rank mismatch: {len(self)} vs {len(other)}")

    def is_pure(self) -> bool:
        """All coordinates integral, or all strictly half-integral."""
        if not self.coords:
            return True
        dens = {c.denominator for c in self.coords}
        return dens == {1} or dens == {2}

    def dot(self, other: "Weight") -> Fraction:
        self._same_rank(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __str__(self):
        return "(" + ", ".join(rat_str(c) for c in self.coords) + ")"


# ---------------------------------------------------------------------------
# signed permutations


@dataclass(frozen=True)
class SignedPerm:
    """A permutation w of {±1, ..., ±t} with w(-i) = -w(i).

    Stored through the window (w(1), ..., w(t)).  The product convention
    follows word composition left to right: ``u.then(v)`` applies u first.
    """

    images: tuple

    def __post_init__(self):
        t = len(self.images)
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        seen = sorted(abs(v) for v in self.images)
        if seen != list(range(1, t + 1)) or any(v == 0 for v in self.images):
            raise WeylError(f"not a signed permutation window: {self.images}")

    @classmethod
    def identity(cls, t: int) -> "SignedPerm":
        return cls(tuple(range(1, t + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.rank:
            raise WeylError(f"index {i} out of range for rank {self.rank}")
        v = self.images[abs(i) - 1]
        return v if i > 0 else -v

    def then(self, other: "SignedPerm") -> "SignedPerm":
        """The composite word: apply self first, then ``other``."""
        if self.rank != other.rank:
            raise WeylError("rank mismatch in composition")
        return SignedPerm(tuple(other(self(i)) for i in range(1, self.rank + 1)))

    def inverse(self) -> "SignedPerm":
        inv = [0] * self.rank
        for i in range(1, self.rank + 1):
            v = self(i)
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.rank + 1))

    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self.images)

    def act_coords(self, coords: Sequence[Fraction]) -> tuple:
        """Action on a coordinate vector: e_i ↦ e_{w(i)} (e_{-k} = -e_k)."""
        if len(coords) != self.rank:
            raise WeylError("rank mismatch in action")
        out = [Fraction(0)] * self.rank
        for i, x in enumerate(coords, start=1):
            v = self(i)
            out[abs(v) - 1] = x if v > 0 else -x
        return tuple(out)

    def act_weight(self, w: Weight) -> Weight:
        return Weight(self.act_coords(w.coords), w.context)

    def length(self) -> int:
        """Coxeter length for the generators (1 2), ..., (t-1 t), sign flip at t.

        Counted as the number of positive roots e_i ± e_j (i<j), 2e_i sent
        to negative roots; a root is negative iff its lowest-index nonzero
        coordinate is negative.
        """
        w = self.images
        t = self.rank
        total = sum(1 for v in w if v < 0)
        for i in range(t):
            for j in range(i + 1, t):
                a, b = w[i], w[j]
                # e_{i+1} - e_{j+1}  maps to  e_a - e_b
                if abs(a) < abs(b):
                    if a < 0:
                        total += 1
                else:
                    if b > 0:
                        total += 1
                # e_{i+1} + e_{j+1}  maps to  e_a + e_b
                if abs(a) < abs(b):
                    if a < 0:
                        total += 1
                else:
                    if b < 0:
                        total += 1
        return total

    def __str__(self):
        return "[" + " ".join(str(v) for v in self.images) + "]"


def length(w: SignedPerm) -> int:
    return w.length()


def length_additive(w1: SignedPerm, w2: SignedPerm) -> bool:
    """True iff the lengths add along the product w1·w2 (w1 applied first)."""
    if w1.rank != w2.rank:
        raise WeylError("rank mismatch")
    return w1.then(w2).length() == w1.length() + w2.length()


def simple_reflections(t: int) -> list:
    """Generators used by the length function: s_1..s_{t-1} and the flip at t."""
    gens = []
    for i in range(1, t):
        img = list(range(1, t + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(SignedPerm(tuple(img)))
    img = list(range(1, t + 1))
    img[t - 1] = -t
    gens.append(SignedPerm(tuple(img)))
    return gens


def bfs_length(w: SignedPerm, generators: Iterable[SignedPerm] | None = None) -> int:
    """Shortest word length over the generators by breadth-first search.

    Exponential in the rank; meant as an independent check for rank ≤ 3.
    """
    gens = list(generators) if generators is not None else simple_reflections(w.rank)
    start = SignedPerm.identity(w.rank)
    if w == start:
        return 0
    frontier = {start.images}
    seen = {start.images}
    depth = 0
    while frontier:
        depth += 1
        nxt = set()
        for images in frontier:
            u = SignedPerm(images)
            for s in gens:
                v = u.then(s)
                if v.images == w.images:
                    return depth
                if v.images not in seen:
                    seen.add(v.images)
                    nxt.add(v.images)
        frontier = nxt
    raise WeylError("element not generated")


def all_signed_perms(t: int) -> Iterator[SignedPerm]:
    for perm in itertools.permutations(range(1, t + 1)):
        for signs in itertools.product((1, -1), repeat=t):
            yield SignedPerm(tuple(s * v for s, v in zip(signs, perm)))


# ---------------------------------------------------------------------------
# root data


_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
}


@dataclass(frozen=True)
class RootDatum:
    """Classical root datum: family A/B/C/D at a given rank.

    Type A_n is realized on n+1 coordinates (roots e_i - e_j), the other
    families on `rank` coordinates with their usual root sets.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCD":
            raise WeylError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise WeylError("rank must be positive")
        if self.family == "D" and self.rank < 2:
            raise WeylError("family D needs rank ≥ 2")

    @property
    def dim(self) -> int:
        """Number of coordinates the Weyl group permutes."""
        return self.rank + 1 if self.family == "A" else self.rank

    def positive_roots(self) -> list:
        n, fam = self.dim, self.family
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(map(Fraction, v)))
        if fam == "A":
            return roots
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i] = v[j] = 1
                roots.append(tuple(map(Fraction, v)))
        if fam == "B":
            for i in range(n):
                v = [0] * n
                v[i] = 1
                roots.append(tuple(map(Fraction, v)))
        elif fam == "C":
            for i in range(n):
                v = [0] * n
                v[i] = 2
                roots.append(tuple(map(Fraction, v)))
        return roots

    def simple_roots(self) -> list:
        n, fam = self.dim, self.family
        simples = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            simples.append(tuple(map(Fraction, v)))
        if fam == "B":
            v = [0] * n
            v[n - 1] = 1
            simples.append(tuple(map(Fraction, v)))
        elif fam == "C":
            v = [0] * n
            v[n - 1] = 2
            simples.append(tuple(map(Fraction, v)))
        elif fam == "D":
            v = [0] * n
            v[n - 2] = v[n - 1] = 1
            simples.append(tuple(map(Fraction, v)))
        return simples

    def rho(self) -> Weight:
        half = Fraction(1, 2)
        coords = [half * sum(r[i] for r in self.positive_roots()) for i in range(self.dim)]
        return Weight(tuple(coords), context=f"{self.family}{self.rank}")

    def cartan_entry(self, alpha, beta) -> Fraction:
        """⟨β, α̌⟩ = 2(β,α)/(α,α) in the standard inner product."""
        aa = sum(a * a for a in alpha)
        ab = sum(a * b for a, b in zip(alpha, beta))
        return 2 * ab / aa

    def validate(self):
        """Cartan-matrix fingerprint and positive-root count for the family."""
        simples = self.simple_roots()
        n = len(simples)
        if n != self.rank:
            raise WeylError("simple root count does not match the rank")
        cartan = [[self.cartan_entry(simples[i], simples[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            if cartan[i][i] != 2:
                raise WeylError("bad Cartan diagonal")
        expected = _POSITIVE_ROOT_COUNTS[self.family](self.rank)
        if len(self.positive_roots()) != expected:
            raise WeylError("positive root count does not match the family")
        return cartan

    def weyl_elements(self) -> Iterator[SignedPerm]:
        """Enumerate the Weyl group as (signed) coordinate permutations."""
        n = self.dim
        if self.family == "A":
            for perm in itertools.permutations(range(1, n + 1)):
                yield SignedPerm(perm)
        elif self.family in "BC":
            yield from all_signed_perms(n)
        else:  # D: even number of sign changes
            for w in all_signed_perms(n):
                if sum(1 for v in w.images if v < 0) % 2 == 0:
                    yield w

    def order(self) -> int:
        import math

        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family in "BC":
            return 2**n * math.factorial(n)
        return 2 ** (n - 1) * math.factorial(n)

    def length_of(self, w: SignedPerm) -> int:
        """Number of positive roots of this datum sent to negative roots."""
        count = 0
        for root in self.positive_roots():
            img = w.act_coords(root)
            first = next(x for x in img if x != 0)
            if first < 0:
                count += 1
        return count

    def is_dominant(self, weight: Weight) -> bool:
        return all(self.cartan_entry(a, weight.coords) >= 0 for a in self.simple_roots())


@dataclass(frozen=True)
class ParabolicShape:
    """Standard-parabolic shape: GL block sizes followed by a core of the
    ambient family.  For type A the blocks partition all coordinates and
    the core is empty."""

    gl_block_sizes: tuple
    core_rank: int
    ambient: RootDatum

    def __post_init__(self):
        object.__setattr__(self, "gl_block_sizes", tuple(int(b) for b in self.gl_block_sizes))
        if any(b < 1 for b in self.gl_block_sizes):
            raise WeylError("block sizes must be positive")
        if self.core_rank < 0:
            raise WeylError("core rank must be ≥ 0")
        total = sum(self.gl_block_sizes) + self.core_rank
        if self.ambient.family == "A":
            if self.core_rank != 0:
                raise WeylError("type A shapes have no core")
            if total != self.ambient.dim:
                raise WeylError(
                    f"blocks {self.gl_block_sizes} do not fill {self.ambient.dim} coordinates"
                )
        else:
            if total != self.ambient.rank:
                raise WeylError(
                    f"blocks+core {total} do not match ambient rank {self.ambient.rank}"
                )

    def levi_simple_roots(self) -> list:
        """Simple roots of the Levi inside the ambient coordinates."""
        n = self.ambient.dim
        simples = []
        offset = 0
        for b in self.gl_block_sizes:
            for i in range(offset, offset + b - 1):
                v = [0] * n
                v[i], v[i + 1] = 1, -1
                simples.append(tuple(map(Fraction, v)))
            offset += b
        m = self.core_rank
        if m:
            fam = self.ambient.family
            for i in range(offset, offset + m - 1):
                v = [0] * n
                v[i], v[i + 1] = 1, -1
                simples.append(tuple(map(Fraction, v)))
            v = [0] * n
            if fam == "B":
                v[n - 1] = 1
                simples.append(tuple(map(Fraction, v)))
            elif fam == "C":
                v[n - 1] = 2
                simples.append(tuple(map(Fraction, v)))
            elif fam == "D":
                if m >= 2:
                    v[n - 2] = v[n - 1] = 1
                    simples.append(tuple(map(Fraction, v)))
        return simples

    def levi_order(self) -> int:
        import math

        order = 1
        for b in self.gl_block_sizes:
            order *= math.factorial(b)
        m = self.core_rank
        if m:
            fam = self.ambient.family
            if fam in "BC":
                order *= 2**m * math.factorial(m)
            elif fam == "D":
                order *= (2 ** (m - 1) if m >= 1 else 1) * math.factorial(m)
        return order


def kostant_reps(datum: RootDatum, shape: ParabolicShape) -> list:
    """Minimal-length coset representatives for the parabolic, with lengths.

    An element w represents the minimal element of its coset iff w⁻¹ maps
    every simple root of the Levi to a positive root.  Result is sorted by
    (length, window) and its size equals |W| / |W_M|.
    """
    if shape.ambient != datum:
        raise WeylError("shape does not belong to this datum")
    levi_simples = shape.levi_simple_roots()
    positive = set(datum.positive_roots())
    reps = []
    for w in datum.weyl_elements():
        winv = w.inverse()
        if all(tuple(winv.act_coords(a)) in positive for a in levi_simples):
            reps.append((w, datum.length_of(w)))
    reps.sort(key=lambda pair: (pair[1], pair[0].images))
    expected = datum.order() // shape.levi_order()
    if len(reps) != expected:
        raise WeylError(f"found {len(reps)} representatives, expected {expected}")
    return reps


def kostant_weights(lam: Weight, datum: RootDatum, shape: ParabolicShape) -> list:
    """Degree-graded weights w(λ+ρ)-ρ over the minimal coset representatives.

    λ must be dominant; every returned weight is dominant for the Levi and
    the degree of each entry is the length of its representative.
    """
    if len(lam) != datum.dim:
        raise WeylError("weight rank does not match the datum")
    if not datum.is_dominant(lam):
        raise WeylError(f"weight {lam} is not dominant")
    rho = datum.rho()
    out = []
    levi_simples = shape.levi_simple_roots()
    for w, ell in kostant_reps(datum, shape):
        shifted = w.act_weight(lam + rho) - rho
        for a in levi_simples:
            if datum.cartan_entry(a, shifted.coords) < 0:
                raise WeylError("shifted weight is not Levi-dominant")
        out.append((ell, shifted))
    return out
