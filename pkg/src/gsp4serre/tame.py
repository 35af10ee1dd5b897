"""Tame inertial types τ(1, μ) and the ordinarity bookkeeping around them."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .errors import ExponentsNotOrdered, InvalidModularWeight, NotSymplecticallyBalanced
from .weights import SIMILITUDE, W_G, Weight, weyl_act


def _in_pm1_lattice(d: Weight, p: int) -> bool:
    """Is d in (p-1)X(T)? The quotient has to be a weight, parity included."""
    m = p - 1
    if d.a % m or d.b % m or d.c % m:
        return False
    return (d.c // m - d.a // m - d.b // m) % 2 == 0


def types_equivalent(mu: Weight, mu2: Weight, p: int) -> bool:
    return any(_in_pm1_lattice(mu2 - weyl_act(w, mu), p) for w in W_G)


def _candidates(mu: Weight, p: int):
    """All representatives (x, y, z mod 2(p-1)) of the class of μ in the normal region."""
    m = p - 1
    bound = (p - 1) // 2
    seen = set()
    for w in W_G:
        v = weyl_act(w, mu)
        x, y = v.a % m, v.b % m
        if not (0 <= y <= x <= bound):
            continue
        u, t = (x - v.a) // m, (y - v.b) // m
        # the c-quotient must have the parity of u + t, so z is fixed mod 2(p-1)
        z = (v.c + m * (u + t)) % (2 * m)
        seen.add((x, y, z))
    return seen


@dataclass(frozen=True)
class TameType:
    p: int
    mu: Weight
    raw_mu: Weight

    @property
    def xyz(self) -> tuple[int, int, int]:
        return (self.mu.a, self.mu.b, self.mu.c)

    @property
    def generic(self) -> bool:
        x, y, _ = self.xyz
        return 0 < y < x and 2 * x < self.p - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, TameType) and (self.p, self.mu) == (other.p, other.mu)

    def __hash__(self):
        return hash((self.p, self.mu))

    def __str__(self) -> str:
        return f"tau(1,{self.mu}) p={self.p}"


def type_from_weight(mu: Weight, p: int) -> TameType:
    if p < 2:
        raise ValueError("p must be at least 2")
    cands = _candidates(mu, p)
    if not cands:  # pragma: no cover - every class meets the region
        raise AssertionError(f"no normal representative for {mu} at p={p}")
    x, y, z = min(cands)
    return TameType(p, Weight(x, y, z), mu)


def twist_type(t: TameType, c: int) -> TameType:
    return type_from_weight(t.mu + c * SIMILITUDE, t.p)


def type_from_exponents(e, p: int) -> TameType:
    """The type with inertia exponents (e1, e2, e3, e4), e1,e4 and e2,e3 paired.

    The exponents are residues mod p-1. If the given order is not balanced the
    descending order is tried before giving up.
    """
    e = tuple(int(v) for v in e)
    if len(e) != 4:
        raise ValueError("four exponents expected")
    m = p - 1
    for order in (e, tuple(sorted(e, reverse=True))):
        e1, e2, e3, e4 = order
        if (e1 + e4 - e2 - e3) % m == 0:
            # lift e4 so that the balance holds exactly, then invert spin
            mu = Weight(e1 - e3, e1 - e2, e2 + e3)
            return type_from_weight(mu, p)
    raise NotSymplecticallyBalanced(f"{e}: e1+e4 != e2+e3 mod {m}")


def modular_weight_mu(k: int, ell: int) -> Weight:
    return Weight(k - 1, ell - 2, k + ell - 3)


def _check_kl(k: int, ell: int):
    if not (k >= ell >= 3):
        raise InvalidModularWeight(f"need k >= l >= 3, got ({k},{ell})")


def type_from_modular_weight(k: int, ell: int, p: int) -> TameType:
    _check_kl(k, ell)
    if not (k > ell > 3 and k + ell < p + 1):
        warnings.warn(f"(k,l)=({k},{ell}) is outside the generic range for p={p}", stacklevel=2)
    return type_from_weight(modular_weight_mu(k, ell), p)


# -- ordinarity -----------------------------------------------------------------

UNIT_LABELS = ("alpha", "beta", "gamma", "delta")
UNIT_RELATION = "alpha*delta = beta*gamma"


@dataclass(frozen=True)
class OrdinarityProfile:
    k: int
    ell: int
    root_valuations: tuple[int, int, int, int]
    exponents: tuple[int, int, int, int]
    unit_labels: tuple[str, str, str, str] = UNIT_LABELS
    relation: str = UNIT_RELATION


def root_valuations(k: int, ell: int) -> tuple[int, int, int, int]:
    _check_kl(k, ell)
    return (0, ell - 2, k - 1, k + ell - 3)


def ordinarity_profile(k: int, ell: int) -> OrdinarityProfile:
    v = root_valuations(k, ell)
    return OrdinarityProfile(k, ell, v, v)


def ordinarity_check(k: int, ell: int, a1_val: int, a2_val: int) -> bool:
    _check_kl(k, ell)
    return a1_val == 0 and a2_val == ell - 3


def exponents_to_modular_weight(i, p: int) -> tuple[int, int, bool]:
    i0, i1, i2, i3 = (int(v) for v in i)
    if i0 != 0 or not i1 < i2:
        raise ExponentsNotOrdered(f"need i0 = 0 and i1 < i2, got {tuple(i)}")
    k, ell = i2 + 1, i1 + 2
    p_small = i1 <= i2 <= i3 < p - 1
    if p_small and i0 + i3 == i1 + i2:
        assert k + ell - 3 < p - 1
    return k, ell, p_small


def exponent_orderings(residues, p: int) -> list[tuple[int, int, int, int]]:
    """Every admissible ordered lift (0, i1, i2, i3) of four ω-exponents.

    Admissible: one residue is twisted to i0 = 0, 0 <= i1 <= i2 <= i3,
    i_j <= j(p-2), and i0 + i3 = i1 + i2.
    """
    m = p - 1
    res = [int(r) % m for r in residues]
    if len(res) != 4:
        raise ValueError("four exponents expected")
    out = set()
    for j0 in range(4):
        rest = [(r - res[j0]) % m for j, r in enumerate(res) if j != j0]
        for perm in set(itertools.permutations(rest)):
            lifts = []
            for j, r in enumerate(perm, start=1):
                lifts.append(range(r, j * (p - 2) + 1, m))
            for i1, i2, i3 in itertools.product(*lifts):
                if i1 <= i2 <= i3 and i3 == i1 + i2:
                    out.add((0, i1, i2, i3))
    return sorted(out)


def is_motivically_odd(similitude_of_c: int, p: int) -> bool:
    if similitude_of_c not in (1, -1):
        raise ValueError("similitude of complex conjugation must be +1 or -1")
    return p == 2 or similitude_of_c == -1
