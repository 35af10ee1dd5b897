"""The character lattice X(T) of the diagonal torus of GSp4 and its Weyl group.

A weight is a triple ``(a, b; c)`` of integers with ``c = a + b (mod 2)``.
The Weyl group acts on ``(a, b)`` by signed permutations and fixes ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ParityError


@dataclass(frozen=True, order=True)
class Weight:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"weight coordinates must be int, got {v!r}")
        if (self.c - self.a - self.b) % 2:
            raise ParityError(f"({self.a},{self.b};{self.c}) violates c = a+b mod 2")

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b, -self.c)

    def __mul__(self, k: int) -> "Weight":
        return Weight(k * self.a, k * self.b, k * self.c)

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.c})"

    @property
    def xy(self) -> tuple[int, int]:
        """The pair (x, y) = (a, b) + (2, 1), i.e. the first two coordinates of λ+ρ̃."""
        return (self.a + 2, self.b + 1)

    def shifted(self) -> "Weight":
        """λ + ρ̃."""
        return self + RHO

    @classmethod
    def from_shifted(cls, x: int, y: int, z: int) -> "Weight":
        """The weight λ with λ + ρ̃ = (x, y; z)."""
        return cls(x - 2, y - 1, z - 3)

    def to_list(self) -> list[int]:
        return [self.a, self.b, self.c]


RHO = Weight(2, 1, 3)
SIMILITUDE = Weight(0, 0, 2)
ZERO = Weight(0, 0, 0)


# -- Weyl group ---------------------------------------------------------------

_GEN = {"s0": ((0, 1), (1, 0)), "s1": ((1, 0), (0, -1))}


def _matmul(m, n):
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _word_matrix(word: str):
    m = ((1, 0), (0, 1))
    # a word acts right-to-left, like a composition of maps
    for g in _split(word):
        m = _matmul(m, _GEN[g])
    return m


def _split(word: str) -> list[str]:
    if word == "e":
        return []
    return ["s" + d for d in word.replace("s", "")]


WORDS = ("e", "s0", "s1", "s0s1", "s1s0", "s0s1s0", "s1s0s1", "s0s1s0s1")


@dataclass(frozen=True)
class WeylElement:
    word: str

    def __post_init__(self):
        if self.word not in WORDS:
            raise ValueError(f"not a canonical word of W_G: {self.word!r}")

    @property
    def matrix(self):
        return _MATRICES[self.word]

    @property
    def length(self) -> int:
        return len(_split(self.word))

    @property
    def sign(self) -> int:
        m = self.matrix
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return _TABLE[self.word, other.word]

    def inverse(self) -> "WeylElement":
        return _INVERSE[self.word]

    def __call__(self, lam: Weight) -> Weight:
        return weyl_act(self, lam)

    def __str__(self) -> str:
        return self.word


_MATRICES = {w: _word_matrix(w) for w in WORDS}
_BY_MATRIX = {m: w for w, m in _MATRICES.items()}
if len(_BY_MATRIX) != 8:  # pragma: no cover
    raise RuntimeError("Weyl group words are not distinct")

_TABLE = {
    (u, v): WeylElement(_BY_MATRIX[_matmul(_MATRICES[u], _MATRICES[v])])
    for u in WORDS
    for v in WORDS
}
_INVERSE = {u: next(WeylElement(v) for v in WORDS if _TABLE[u, v].word == "e") for u in WORDS}

E, S0, S1 = WeylElement("e"), WeylElement("s0"), WeylElement("s1")
W0 = WeylElement("s0s1s0s1")
W_G = tuple(WeylElement(w) for w in WORDS)
# Kostant representatives and the Levi Weyl group of the Siegel parabolic
W_M_KOSTANT = tuple(WeylElement(w) for w in ("e", "s1", "s1s0", "s1s0s1"))
W_M = (E, S0)


def _validate_presentation():
    s01 = S0 * S1
    p = E
    for _ in range(4):
        p = p * s01
    assert S0 * S0 == E and S1 * S1 == E and p == E
    assert s01 * s01 != E
    assert W0(Weight(3, 1, 0)) == Weight(-3, -1, 0)


def iota(w: WeylElement) -> WeylElement:
    """The automorphism of W_G exchanging s0 and s1."""
    out = E
    for g in _split(w.word):
        out = out * (S0 if g == "s1" else S1)
    return out


def weyl_act(w: WeylElement, lam: Weight) -> Weight:
    (m00, m01), (m10, m11) = w.matrix
    return Weight(m00 * lam.a + m01 * lam.b, m10 * lam.a + m11 * lam.b, lam.c)


def dot_act(w: WeylElement, lam: Weight) -> Weight:
    """w • λ = w(λ + ρ̃) − ρ̃."""
    return weyl_act(w, lam + RHO) - RHO


def coroot_pairing(lam: Weight, i: int) -> int:
    if i == 0:
        return lam.a - lam.b
    if i == 1:
        return lam.b
    raise ValueError(f"root index must be 0 or 1, got {i}")


def spin_cochar(mu: Weight) -> tuple[int, int, int, int]:
    """Exponents of the cocharacter attached to μ under the spin identification."""
    a, b, c = mu
    return ((a + b + c) // 2, (a - b + c) // 2, (-a + b + c) // 2, (-a - b + c) // 2)


@dataclass(frozen=True)
class DominanceFlags:
    dominant: bool
    p_restricted: bool
    p_regular: bool
    in_X0: bool


def flags(lam: Weight, p: int) -> DominanceFlags:
    if p < 2:
        raise ValueError("p must be at least 2")
    r0, r1 = coroot_pairing(lam, 0), coroot_pairing(lam, 1)
    return DominanceFlags(
        dominant=r0 >= 0 and r1 >= 0,
        p_restricted=0 <= r0 < p and 0 <= r1 < p,
        p_regular=0 <= r0 < p - 1 and 0 <= r1 < p - 1,
        in_X0=lam.a == 0 and lam.b == 0,
    )


_validate_presentation()
