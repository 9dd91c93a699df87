"""Symbolic Satake-eigenvalue calculus with a modeled coefficient action.

An eigenvalue is sign·q^e·u where e is an exact half-integer, q a formal
residue-cardinality symbol attached to a place, and u a word in a free
abelian group of opaque unit symbols.  A field automorphism is modeled by
the only data the computations use: a permutation of the unit symbols
(compatible with inversion) and the sign eps = a(q^{1/2})/q^{1/2} at each
place.  Equality of eigenvalues is syntactic on the normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .groups import GL, RES_GL, SO_EVEN, SO_ODD, SP, UNITARY, GroupDescriptor
from .rationals import is_half_integer, rat, rat_str


class SatakeError(ValueError):
    pass


_UNIT_TOKEN = re.compile(r"^(?P<sym>[A-Za-z_][A-Za-z_0-9]*)(\^(?P<exp>-?\d+))?$")


def _normalize_unit(unit) -> tuple:
    """Canonical form: sorted tuple of (symbol, nonzero exponent)."""
    acc: dict = {}
    if isinstance(unit, str):
        unit = [unit] if unit else []
    for item in unit:
        if isinstance(item, str):
            m = _UNIT_TOKEN.match(item)
            if not m:
                raise SatakeError(f"bad unit token {item!r}")
            sym, exp = m.group("sym"), int(m.group("exp") or 1)
        else:
            sym, exp = item
        acc[sym] = acc.get(sym, 0) + int(exp)
    return tuple(sorted((s, e) for s, e in acc.items() if e != 0))


@dataclass(frozen=True)
class Eigenvalue:
    """sign · q^{q_exp} · unit, in normal form."""

    q_exp: Fraction
    unit: tuple = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "q_exp", rat(self.q_exp))
        object.__setattr__(self, "unit", _normalize_unit(self.unit))
        if self.sign not in (1, -1):
            raise SatakeError("sign must be ±1")
        if not is_half_integer(self.q_exp):
            raise SatakeError(f"q-exponent {self.q_exp} is not half-integral")

    def __mul__(self, other: "Eigenvalue") -> "Eigenvalue":
        return Eigenvalue(
            self.q_exp + other.q_exp,
            self.unit + other.unit,
            self.sign * other.sign,
        )

    def inverse(self) -> "Eigenvalue":
        return Eigenvalue(-self.q_exp, tuple((s, -e) for s, e in self.unit), self.sign)

    def scaled(self, sign: int = 1, q_shift: Fraction = Fraction(0)) -> "Eigenvalue":
        return Eigenvalue(self.q_exp + rat(q_shift), self.unit, self.sign * sign)

    def serialize(self) -> str:
        parts = []
        if self.q_exp:
            parts.append(f"q^{rat_str(self.q_exp)}")
        for s, e in self.unit:
            parts.append(s if e == 1 else f"{s}^{e}")
        body = "*".join(parts) if parts else "1"
        return body if self.sign == 1 else "-" + body

    def sort_key(self):
        return (self.q_exp, self.unit, self.sign)

    def __str__(self):
        return self.serialize()


def ev(q_exp=0, unit=(), sign=1) -> Eigenvalue:
    return Eigenvalue(rat(q_exp), unit, sign)


ONE = ev()


def parse_eigenvalue(text: str) -> Eigenvalue:
    """Inverse of `Eigenvalue.serialize`: "[-]q^<p/q>*u1*u2^-1" and "1"."""
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:].strip()
    if s in ("", "1"):
        return Eigenvalue(Fraction(0), (), sign)
    q_exp = Fraction(0)
    unit = []
    for token in s.split("*"):
        token = token.strip()
        if token.startswith("q^"):
            q_exp += rat(token[2:])
        elif token == "q":
            q_exp += 1
        elif token == "1":
            continue
        else:
            unit.append(token)
    return Eigenvalue(q_exp, unit, sign)


@dataclass(frozen=True)
class SatakeClass:
    """Multiset of eigenvalues tagged by group family and place."""

    eigenvalues: tuple
    family: GroupDescriptor
    place: str = "v"

    def __post_init__(self):
        evs = tuple(sorted(self.eigenvalues, key=Eigenvalue.sort_key))
        object.__setattr__(self, "eigenvalues", evs)

    def __len__(self):
        return len(self.eigenvalues)

    def multiset(self):
        return sorted(e.sort_key() for e in self.eigenvalues)

    def map_eigenvalues(self, fn) -> "SatakeClass":
        return SatakeClass(tuple(fn(e) for e in self.eigenvalues), self.family, self.place)

    def is_inversion_stable(self, skip_fixed: int = 0) -> bool:
        """Multiset equality with its eigenvalue-wise inverse; `skip_fixed`
        forced fixed eigenvalues (value 1) are allowed to pair with
        themselves and do so trivially."""
        inv = sorted(e.inverse().sort_key() for e in self.eigenvalues)
        return inv == self.multiset()

    def serialize(self) -> list:
        return [e.serialize() for e in self.eigenvalues]

    def __str__(self):
        return "{" + ", ".join(self.serialize()) + "}"


@dataclass(frozen=True)
class AutModel:
    """Coefficient automorphism through its effect on unit symbols and on
    the square root of the residue cardinality at each place.

    ``unit_map`` permutes unit symbols; ``eps`` is a single sign or a
    mapping from place labels to signs.
    """

    unit_map: tuple = ()  # tuple of (symbol, image) pairs; missing = fixed
    eps: object = 1

    def __post_init__(self):
        pairs = tuple(sorted(dict(self.unit_map).items()))
        src = [s for s, _ in pairs]
        dst = [d for _, d in pairs]
        if len(set(dst)) != len(dst):
            raise SatakeError("unit_map must be a bijection on symbols")
        object.__setattr__(self, "unit_map", pairs)
        if isinstance(self.eps, dict):
            eps = tuple(sorted(self.eps.items()))
            object.__setattr__(self, "eps", eps)
        elif isinstance(self.eps, tuple):
            pass
        elif self.eps not in (1, -1):
            raise SatakeError("eps must be ±1 or a place→±1 mapping")

    def eps_at(self, place: str) -> int:
        if isinstance(self.eps, tuple):
            table = dict(self.eps)
            if place not in table:
                raise SatakeError(f"no eps for place {place!r}")
            return table[place]
        return self.eps

    def map_symbol(self, sym: str) -> str:
        return dict(self.unit_map).get(sym, sym)

    def apply_unit(self, unit: tuple) -> tuple:
        return _normalize_unit([(self.map_symbol(s), e) for s, e in unit])

    def raw(self, e: Eigenvalue, place: str) -> Eigenvalue:
        """Plain coefficient transport a(sign·q^e·u): q^{1/2} ↦ eps·q^{1/2},
        units permuted."""
        eps = self.eps_at(place)
        twist = -1 if (eps == -1 and int(2 * e.q_exp) % 2 == 1) else 1
        return Eigenvalue(e.q_exp, self.apply_unit(e.unit), e.sign * twist)

    def compose(self, other: "AutModel") -> "AutModel":
        """self ∘ other: unit maps compose, eps values multiply."""
        table = dict(other.unit_map)
        composed = {}
        syms = set(table) | set(dict(self.unit_map))
        for s in syms:
            composed[s] = self.map_symbol(other.map_symbol(s))
        if isinstance(self.eps, tuple) or isinstance(other.eps, tuple):
            places = set(dict(self.eps if isinstance(self.eps, tuple) else ()))
            places |= set(dict(other.eps if isinstance(other.eps, tuple) else ()))
            eps = {p: self.eps_at(p) * other.eps_at(p) for p in places}
        else:
            eps = self.eps * other.eps
        return AutModel(tuple(sorted(composed.items())), eps)


IDENTITY_AUT = AutModel()


def eps_m(aut: AutModel, m: int, place: str = "v") -> int:
    """Sign a(q^{(m-1)/2})·q^{-(m-1)/2}: +1 for m odd, eps for m even."""
    return aut.eps_at(place) ** ((m - 1) % 2)


def _twist_parity(family: GroupDescriptor) -> int:
    """0 when plain transport is exact, 1 when the determinant-type square
    root twist is needed (even linear and even unitary families, and odd
    orthogonal groups through their similitude cover)."""
    fam = family.family
    if fam == SP:
        return 0
    if fam in (GL, RES_GL, UNITARY):
        return 0 if family.size % 2 == 1 else 1
    if fam == SO_EVEN:
        return 0
    if fam == SO_ODD:
        return 1
    raise SatakeError(f"unsupported family {fam}")


def act(aut: AutModel, cls: SatakeClass) -> SatakeClass:
    """Transport of a Satake class along the modeled automorphism.

    Families whose transform is rational without a twist (symplectic, odd
    linear/unitary, even orthogonal) transport eigenvalue atoms plainly:
    q-exponents and signs unchanged, units mapped.  The twisted families
    (even linear/unitary, odd orthogonal through the similitude cover)
    acquire the square-root normalization sign eps^{2e-1} on sign·q^e·u.
    """
    twist = _twist_parity(cls.family)
    eps = aut.eps_at(cls.place)

    def one(e: Eigenvalue) -> Eigenvalue:
        if twist == 0:
            sign = 1
        else:
            k = int(2 * e.q_exp) - 1
            sign = -1 if (eps == -1 and k % 2 == 1) else 1
        return Eigenvalue(e.q_exp, aut.apply_unit(e.unit), e.sign * sign)

    return cls.map_eigenvalues(one)


def twisted_shift(cls: SatakeClass, two_eps) -> SatakeClass:
    """Multiply every eigenvalue by q^{⟨ε,·⟩} for a central twist 2ε.

    ``two_eps`` is either a rational (the determinant multiplicity: every
    eigenvalue is scaled by q^{two_eps/2}) or a coordinate vector, which
    must be constant to be central.
    """
    if isinstance(two_eps, (tuple, list)):
        vals = {rat(x) for x in two_eps}
        if len(vals) > 1:
            raise SatakeError("twist is not central: nonconstant coordinates")
        two = vals.pop() if vals else Fraction(0)
    else:
        two = rat(two_eps)
    shift = two / 2
    if not is_half_integer(shift):
        raise SatakeError("central twist must scale by a half-integral power")
    return cls.map_eigenvalues(lambda e: e.scaled(q_shift=shift))


def act_twisted(aut: AutModel, cls: SatakeClass, two_eps) -> SatakeClass:
    """z^{-1}·a(z·class) with z = q^{two_eps/2}: the normalization relation
    the twisted transport satisfies by construction."""
    shifted = twisted_shift(cls, two_eps)
    moved = shifted.map_eigenvalues(lambda e: aut.raw(e, cls.place))
    neg = -rat(two_eps) if not isinstance(two_eps, (tuple, list)) else [-rat(x) for x in two_eps]
    return twisted_shift(moved, neg)


# ---------------------------------------------------------------------------
# the base-change transport chain


def _scale_class(evs: Iterable[Eigenvalue], sign: int) -> list:
    return [e.scaled(sign=sign) for e in evs]


def bc_chain_check(
    n: int,
    r: int,
    aut: AutModel,
    place: str = "v",
    pi_units: Optional[Iterable[Eigenvalue]] = None,
    rho_units: Optional[Iterable[Eigenvalue]] = None,
):
    """Replay the sign bookkeeping that identifies the transported residual
    parameter, and compare with the direct target form.

    Left side: the base change of the transported degree-(2n+r) class,
    computed step by step through the eps_m twists.  Right side:
    diag(q^{1/2}, q^{-1/2}) ⊗ (twisted transport of the degree-n class)
    ⊕ (transport of the degree-r class).  Returns (ok, steps, mismatch).
    """
    if n < 1 or r < 0:
        raise SatakeError("need n ≥ 1 and r ≥ 0")
    N = 2 * n + r
    Mpi = list(pi_units) if pi_units is not None else [ev(0, (f"u{i}",)) for i in range(1, n + 1)]
    Mrho = (
        list(rho_units) if rho_units is not None else [ev(0, (f"w{j}",)) for j in range(1, r + 1)]
    )
    eps = aut.eps_at(place)
    e_N, e_n, e_r, e_0 = (eps_m(aut, m, place) for m in (N, n, r, 0))
    half = Fraction(1, 2)

    def rawA(evs):
        return [aut.raw(e, place) for e in evs]

    steps = []
    # base change of the residual class: the two half shifts of the degree-n
    # part plus the degree-r part
    bc_residual = (
        [e.scaled(q_shift=half) for e in Mpi]
        + [e.scaled(q_shift=-half) for e in Mpi]
        + list(Mrho)
    )
    steps.append("push the residual class through base change: two half shifts plus the core")
    lhs = _scale_class(rawA(bc_residual), e_N)
    steps.append("transport and absorb the degree-(2n+r) normalization sign")

    # target form, built from the per-factor transports
    a_pi = _scale_class(rawA(Mpi), e_n)  # transported degree-n class
    a_pi_tilde = _scale_class(a_pi, eps_m(aut, n + r, place))  # half-twisted transport
    a_rho = _scale_class(rawA(Mrho), e_r)
    rhs = (
        [e.scaled(q_shift=half) for e in a_pi_tilde]
        + [e.scaled(q_shift=-half) for e in a_pi_tilde]
        + _scale_class(a_rho, e_N * e_r)
    )
    steps.append(
        "target: half shifts of the twisted transported degree-n class plus the "
        "transported degree-r class"
    )
    steps.append(f"sign identities used: e_N*e_n*e_0 = e_{{n+r}} ({e_N*e_n*e_0} = "
                 f"{eps_m(aut, n + r, place)}), e_N*e_r = 1 ({e_N * e_r})")

    left = sorted(e.sort_key() for e in lhs)
    right = sorted(e.sort_key() for e in rhs)
    if left == right:
        return True, steps, None
    mism = [k for k in left if k not in right] + [k for k in right if k not in left]
    return False, steps, mism


def eps_identities_hold(aut: AutModel, n: int, r: int, place: str = "v") -> bool:
    """e_N·e_n·e_0 = e_{n+r} and e_N·e_r = 1 for N = 2n+r."""
    N = 2 * n + r
    lhs1 = eps_m(aut, N, place) * eps_m(aut, n, place) * eps_m(aut, 0, place)
    ok1 = lhs1 == eps_m(aut, n + r, place)
    ok2 = eps_m(aut, N, place) * eps_m(aut, r, place) == 1
    return ok1 and ok2
