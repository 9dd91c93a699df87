"""Dual-side data: the two-step grading of the unipotent radical and the
identification of the two factor representations it carries.

The degree-2 piece is the n×n block; the group of the quadratic extension
acts on it through the signed anti-transposition x ↦ (-1)^{n+r+1} Φ_n ᵗx Φ_n⁻¹,
whose trace (-1)^r·n detects which of the two extensions of the tensor
square occurs.  The degree-1 piece pairs the two off-diagonal blocks into
the rank-nr tensor product composed with base change.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .groups import GL, RES_GL, SO_EVEN, SO_ODD, SP, UNITARY, GroupDescriptor
from .satake import Eigenvalue, SatakeClass, ev


class DualError(ValueError):
    pass


def phi_matrix(N: int) -> np.ndarray:
    """Anti-diagonal matrix with entries 1, -1, ..., (-1)^{N-1} top-down.

    Satisfies Φ² = (-1)^{N-1}·id and ᵗΦ = Φ⁻¹; both are asserted.
    """
    if N < 1:
        raise DualError("need N ≥ 1")
    phi = np.zeros((N, N), dtype=np.int64)
    for k in range(1, N + 1):
        phi[k - 1, N - k] = (-1) ** (k - 1)
    sq = phi @ phi
    assert np.array_equal(sq, (-1) ** (N - 1) * np.eye(N, dtype=np.int64))
    assert np.array_equal(phi.T @ phi, np.eye(N, dtype=np.int64))
    return phi


@dataclass(frozen=True)
class RepDescriptor:
    """A named factor representation with its degree."""

    kind: str  # std | asai | wedge2 | sym2 | rankin | trivial
    degree: int
    sign: int = 0  # ±1 for asai, 0 otherwise
    via_base_change: bool = False

    def __post_init__(self):
        if self.kind not in ("std", "asai", "wedge2", "sym2", "rankin", "trivial"):
            raise DualError(f"unknown representation kind {self.kind!r}")
        if self.kind == "asai":
            if self.sign not in (1, -1):
                raise DualError("asai needs a sign")
            root = int(round(self.degree**0.5))
            if root * root != self.degree:
                raise DualError("asai degree must be a perfect square")
        elif self.sign:
            raise DualError("only asai carries a sign")


@dataclass(frozen=True)
class GradedNilradical:
    """Map degree → (dimension, factor label).

    Degrees are consecutive; they start at 1 whenever more than one
    component is present (the degenerate no-off-diagonal case keeps its
    single component at its pairing value 2).
    """

    components: tuple  # ((degree, dim, label), ...)

    def __post_init__(self):
        comps = tuple(sorted(self.components))
        degrees = [c[0] for c in comps]
        if degrees != list(range(degrees[0], degrees[0] + len(degrees))):
            raise DualError("degrees must be consecutive")
        if len(degrees) > 1 and degrees[0] != 1:
            raise DualError("multi-component gradings start at degree 1")
        if degrees[0] not in (1, 2):
            raise DualError("grading starts at degree 1 or 2")
        object.__setattr__(self, "components", comps)

    def as_dict(self):
        return {d: (dim, label) for d, dim, label in self.components}

    @property
    def total_dim(self) -> int:
        return sum(dim for _, dim, _ in self.components)


def grade_nilradical(n: int, r: int) -> GradedNilradical:
    """Grading of the radical for the block-n Levi: degree 1 holds the two
    n×r blocks (dimension 2nr), degree 2 the n×n block (dimension n²);
    degree 1 is absent when r = 0."""
    if n < 1 or r < 0:
        raise DualError("need n ≥ 1, r ≥ 0")
    if r == 0:
        return GradedNilradical(((2, n * n, "R1"),))
    return GradedNilradical(((1, 2 * n * r, "R2"), (2, n * n, "R1")))


def grade_nilradical_by_roots(n: int, r: int) -> dict:
    """Brute-force oracle: bucket the root spaces of the radical by their
    pairing with the normalized half-sum (1^n, 0^r, -1^n)."""
    N = 2 * n + r
    rho = [1] * n + [0] * r + [-1] * n
    buckets: dict = {}
    blocks = (
        [(i, j) for i in range(n) for j in range(n + r, N)]  # n×n block
        + [(i, j) for i in range(n) for j in range(n, n + r)]  # first n×r block
        + [(i, j) for i in range(n, n + r) for j in range(n + r, N)]  # second
    )
    for i, j in blocks:
        pairing = rho[i] - rho[j]
        buckets[pairing] = buckets.get(pairing, 0) + 1
    return buckets


def asai_trace(sign: int, n: int) -> int:
    """Trace of the nontrivial coset on either extension of the tensor
    square: sign·n."""
    if sign not in (1, -1):
        raise DualError("sign must be ±1")
    if n < 0:
        raise DualError("n must be ≥ 0")
    return sign * n


def conjugation_operator(n: int, r: int) -> np.ndarray:
    """The involution x ↦ (-1)^{n+r+1} Φ_n ᵗx Φ_n⁻¹ on n×n matrices, as an
    n²×n² signed permutation matrix in the basis e_{kl} (row-major)."""
    if n < 1:
        raise DualError("need n ≥ 1")
    phi = phi_matrix(n)
    phi_inv = ((-1) ** (n - 1)) * phi  # Φ⁻¹ = (-1)^{n-1} Φ
    sign = (-1) ** (n + r + 1)
    op = np.zeros((n * n, n * n), dtype=np.int64)
    for k in range(n):
        for l in range(n):
            x = np.zeros((n, n), dtype=np.int64)
            x[k, l] = 1
            y = sign * (phi @ x.T @ phi_inv)
            op[:, k * n + l] = y.reshape(n * n)
    return op


def identify_R1(n: int, r: int):
    """The degree-2 factor: the extension of the tensor square with sign
    (-1)^r, witnessed by the explicit conjugation operator.

    Returns (descriptor, operator); the operator's trace equals the sign
    times n and it squares to the identity.
    """
    if n < 1 or r < 0:
        raise DualError("need n ≥ 1, r ≥ 0")
    sign = (-1) ** r
    op = conjugation_operator(n, r)
    tr = int(np.trace(op))
    if tr != sign * n:
        raise DualError(f"operator trace {tr} does not match {sign * n}")
    if not np.array_equal(op @ op, np.eye(n * n, dtype=np.int64)):
        raise DualError("conjugation operator is not an involution")
    return RepDescriptor("asai", n * n, sign=sign), op


def identify_R2(n: int, r: int) -> RepDescriptor:
    """The degree-1 factor: the rank-nr tensor product over the extension,
    composed with base change on the smaller unitary factor."""
    if n < 1 or r < 1:
        raise DualError("degree-1 factor needs n ≥ 1 and r ≥ 1")
    return RepDescriptor("rankin", n * r, via_base_change=True)


def std_pushforward(cls: SatakeClass, group: GroupDescriptor) -> SatakeClass:
    """Eigenvalue multiset of the standard representation of the dual side.

    Symplectic groups append the forced fixed eigenvalue 1 (odd orthogonal
    dual); unitary groups unfold the torus part by inversion, inserting 1
    in odd dimension; the linear and orthogonal families pass through.
    """
    fam = group.family

    def result(evs):
        return SatakeClass(tuple(evs), group, cls.place)

    if fam in (GL, RES_GL):
        if len(cls) != group.size:
            raise DualError(f"class size {len(cls)} does not match GL({group.size})")
        return result(cls.eigenvalues)
    if fam == SO_ODD:
        if len(cls) != 2 * group.size:
            raise DualError("class size does not match the symplectic dual degree")
        return result(cls.eigenvalues)
    if fam == SO_EVEN:
        if len(cls) != 2 * group.size:
            raise DualError("class size does not match the even orthogonal dual degree")
        return result(cls.eigenvalues)
    if fam == SP:
        if len(cls) != 2 * group.size:
            raise DualError("class size does not match twice the rank")
        if not cls.is_inversion_stable():
            raise DualError("symplectic-side classes must be inversion-stable")
        return result(cls.eigenvalues + (ev(),))
    if fam == UNITARY:
        N = group.size
        m = N // 2
        if N % 2 == 0:
            if len(cls) != m:
                raise DualError(f"unitary torus part must have {m} entries for U({N})")
            torus, middle = cls.eigenvalues, []
        else:
            if len(cls) == m:
                torus, middle = cls.eigenvalues, [ev()]
            elif len(cls) == m + 1:
                torus, middle = cls.eigenvalues[:m], [cls.eigenvalues[m]]
            else:
                raise DualError(f"unitary torus part must have {m} or {m + 1} entries for U({N})")
        unfolded = list(torus) + middle + [e.inverse() for e in torus]
        return result(unfolded)
    raise DualError(f"unsupported family {fam}")
