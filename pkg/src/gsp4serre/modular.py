"""Grothendieck-group bookkeeping for Weyl modules W(λ) and simple modules F(λ).

Also home to Serre weights (restricted highest weights modulo (p-1)X⁰(T)),
regular representatives and the reflection-and-regularize operator R.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .alcoves import classify, wall_reflect
from .errors import NegativeMultiplicity, NoRegularRepresentative, UnsupportedWeight
from .weights import RHO, SIMILITUDE, W0, W_G, Weight, dot_act, flags, weyl_act

TAGS = ("W", "F")


class VirtualSum:
    """A finite formal Z-combination of symbols W(λ) and F(λ)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[str, Weight], int] | Iterable = ()):
        acc: dict[tuple[str, Weight], int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (tag, lam), m in items:
            if tag not in TAGS:
                raise ValueError(f"unknown basis tag {tag!r}")
            acc[tag, lam] += m
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def W(cls, lam: Weight, m: int = 1) -> "VirtualSum":
        return cls({("W", lam): m})

    @classmethod
    def F(cls, lam: Weight, m: int = 1) -> "VirtualSum":
        return cls({("F", lam): m})

    def __add__(self, other: "VirtualSum") -> "VirtualSum":
        return VirtualSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "VirtualSum":
        return VirtualSum({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "VirtualSum") -> "VirtualSum":
        return self + (-other)

    def __rmul__(self, k: int) -> "VirtualSum":
        return VirtualSum({key: k * v for key, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, VirtualSum) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[str, Weight]]:
        return iter(sorted(self._terms))

    def items(self) -> list[tuple[tuple[str, Weight], int]]:
        return sorted(self._terms.items())

    def multiplicity(self, tag: str, lam: Weight) -> int:
        return self._terms.get((tag, lam), 0)

    def weights(self, tag: str) -> list[Weight]:
        return sorted(lam for t, lam in self._terms if t == tag)

    def is_effective(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (tag, lam), m in self.items():
            coeff = "" if m == 1 else ("-" if m == -1 else f"{m}*")
            parts.append(f"{coeff}{tag}{lam}")
        return " + ".join(parts)


# -- Weyl modules -------------------------------------------------------------


def normalize_weyl(lam: Weight, p: int | None = None) -> tuple[int, Weight | None]:
    """Return (sgn w, w•λ) with w•λ dominant, or (0, None) when W(λ) vanishes.

    ``p`` is accepted for signature symmetry but plays no role.
    """
    shifted = lam + RHO
    for w in W_G:
        v = weyl_act(w, shifted)
        if v.a > v.b > 0:
            return w.sign, v - RHO
    return 0, None


def virtual_dim(lam: Weight) -> int:
    """Signed Weyl dimension of W(λ); negative off the dominant chamber."""
    x, y = lam.xy
    return x * y * (x - y) * (x + y) // 6


def _exceptional_wall(lam: Weight, p: int) -> bool:
    x, y = lam.xy
    if x - y == p and p < 2 * y < 2 * p:
        return True
    return p == 2 and (lam.a, lam.b) == (1, 1)


def decompose_weyl(lam: Weight, p: int) -> VirtualSum:
    """W(λ) as a sum of simples, for λ dominant and p-restricted."""
    if not flags(lam, p).p_restricted:
        raise UnsupportedWeight(f"{lam} is not dominant p-restricted for p={p}")
    pos = classify(lam, p)
    out = VirtualSum.F(lam)
    if pos.kind == "interior" and pos.index > 0:
        # the second constituent sits in the next alcove down
        out = out + VirtualSum.F(wall_reflect(pos.index - 1, lam, p))
    elif pos.kind == "wall" and _exceptional_wall(lam, p):
        out = out + VirtualSum.F(wall_reflect(2, lam, p))
    return out


# -- Serre weights ------------------------------------------------------------


def _c_window(p: int) -> int:
    return 2 * (p - 1)


@dataclass(frozen=True, order=True)
class SerreWeight:
    """Canonical label of F(λ): c is reduced into [0, 2(p-1))."""

    lam: Weight
    p: int

    @property
    def regular(self) -> bool:
        return flags(self.lam, self.p).p_regular

    def shifted(self) -> Weight:
        return self.lam + RHO

    def to_json(self) -> dict:
        return {"lambda": self.lam.to_list(), "regular": self.regular}

    def __str__(self) -> str:
        return f"F{self.lam}"


def canonical_serre(lam: Weight, p: int) -> SerreWeight:
    if not flags(lam, p).p_restricted:
        raise UnsupportedWeight(f"{lam} is not p-restricted for p={p}")
    return SerreWeight(Weight(lam.a, lam.b, lam.c % _c_window(p)), p)


def regular_representative(mu: Weight, p: int) -> SerreWeight:
    """F(μ')_reg for the p-regular μ' with μ - μ' in (p-1)X(T)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    m = p - 1
    b2 = mu.b % m
    a2 = b2 + (mu.a - mu.b) % m
    u, v = (mu.a - a2) // m, (mu.b - b2) // m
    # the quotient (u, v; u+v) satisfies the lattice parity by construction
    rep = Weight(a2, b2, mu.c - m * (u + v))
    if not flags(rep, p).p_regular:  # pragma: no cover - impossible, see notes
        raise NoRegularRepresentative(f"no p-regular weight congruent to {mu}")
    return canonical_serre(rep, p)


def _as_weight(f: Union[SerreWeight, Weight]) -> Weight:
    return f.lam if isinstance(f, SerreWeight) else f


def operator_R(f: Union[SerreWeight, Weight], p: int) -> SerreWeight:
    """R(F(λ)) = F(w0 • (λ - pρ̃))_reg."""
    lam = _as_weight(f)
    if not flags(lam, p).p_restricted:
        raise UnsupportedWeight(f"{lam} is not dominant p-restricted for p={p}")
    return regular_representative(dot_act(W0, lam - p * RHO), p)


def twist_weight(f: Union[SerreWeight, Weight], c: int, p: int) -> SerreWeight:
    """F ⊗ ν^c, where ν is the similitude character."""
    return canonical_serre(_as_weight(f) + c * SIMILITUDE, p)


def enumerate_serre_weights(p: int, regular_only: bool = False) -> list[SerreWeight]:
    if p < 2:
        raise ValueError("p must be at least 2")
    out = []
    for b in range(p):
        for d in range(p):
            a = b + d
            for c in range((a + b) % 2, _c_window(p), 2):
                sw = SerreWeight(Weight(a, b, c), p)
                if sw.regular or not regular_only:
                    out.append(sw)
    return sorted(out)


def jh_semisimplify(v: VirtualSum, p: int, check_effective: bool = False) -> VirtualSum:
    """Rewrite every W-term as simples; F-keys are canonical Serre labels.

    With ``check_effective`` a negative multiplicity raises NegativeMultiplicity.
    """
    acc: dict[tuple[str, Weight], int] = defaultdict(int)
    for (tag, lam), m in v.items():
        if tag == "F":
            acc["F", canonical_serre(lam, p).lam] += m
            continue
        sign, dom = normalize_weyl(lam)
        if sign == 0:
            continue
        for (_, f), k in decompose_weyl(dom, p).items():
            acc["F", canonical_serre(f, p).lam] += sign * m * k
    out = VirtualSum(acc)
    if check_effective and not out.is_effective():
        neg = [f"F{lam}:{m}" for (_, lam), m in out.items() if m < 0]
        raise NegativeMultiplicity("negative constituents " + ", ".join(neg))
    return out
