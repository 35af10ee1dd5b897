"""The four restricted alcoves, their walls, and the upward order between them.

Everything is phrased in the coordinates (x, y) of λ + ρ̃.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutsideAlcoveRegion, TargetBelowSource
from .weights import Weight

WALLS = ("x=y", "y=0", "x+y=p", "x=p", "x+y=2p", "x-y=p", "y=p")


def _tight(x: int, y: int, p: int) -> tuple[str, ...]:
    tests = (x == y, y == 0, x + y == p, x == p, x + y == 2 * p, x - y == p, y == p)
    return tuple(w for w, t in zip(WALLS, tests) if t)


def _interior(x: int, y: int, p: int) -> int | None:
    if x > y > 0 and x + y < p:
        return 0
    if x + y > p and y < x < p:
        return 1
    if x - y < p < x and x + y < 2 * p:
        return 2
    if y < p and x + y > 2 * p and x - y < p:
        return 3
    return None


def closures_xy(x: int, y: int, p: int) -> tuple[int, ...]:
    """Indices i with (x, y) in the closure of C_i."""
    out = []
    if x >= y >= 0 and x + y <= p:
        out.append(0)
    if x + y >= p and y <= x <= p:
        out.append(1)
    if x - y <= p <= x and x + y <= 2 * p:
        out.append(2)
    if y <= p and x + y >= 2 * p and x - y <= p:
        out.append(3)
    return tuple(out)


def closures(lam: Weight, p: int) -> tuple[int, ...]:
    return closures_xy(*lam.xy, p)


@dataclass(frozen=True)
class AlcovePosition:
    """Where λ + ρ̃ sits: ``kind`` is "interior", "wall" or "outside"."""

    kind: str
    index: int | None = None
    walls: tuple[str, ...] = ()
    closures: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        if self.kind == "interior":
            return f"C{self.index}"
        if self.kind == "wall":
            return "wall:" + ",".join(self.walls)
        return "outside"

    @property
    def sort_index(self) -> int:
        if self.kind == "interior":
            return self.index
        if self.closures:
            return min(self.closures)
        return 4

    def __str__(self) -> str:
        return self.label


def classify(lam: Weight, p: int) -> AlcovePosition:
    x, y = lam.xy
    cl = closures_xy(x, y, p)
    if not cl:
        return AlcovePosition("outside")
    i = _interior(x, y, p)
    if i is not None:
        return AlcovePosition("interior", i, (), cl)
    return AlcovePosition("wall", None, _tight(x, y, p), cl)


def in_region(lam: Weight, p: int) -> bool:
    return bool(closures(lam, p))


def wall_reflect(i: int, lam: Weight, p: int) -> Weight:
    """The affine reflection in the wall between C_i and C_{i+1}."""
    x, y = lam.xy
    if i == 0:
        x2, y2 = p - y, p - x
    elif i == 1:
        x2, y2 = 2 * p - x, y
    elif i == 2:
        x2, y2 = 2 * p - y, 2 * p - x
    else:
        raise ValueError(f"wall index must be 0, 1 or 2, got {i}")
    return Weight.from_shifted(x2, y2, lam.c + 3)


def _require_region(lam: Weight, p: int):
    if not in_region(lam, p):
        raise OutsideAlcoveRegion(f"{lam} is outside the restricted alcoves for p={p}")


def up_set(lam: Weight, p: int) -> frozenset[Weight]:
    """All μ with λ ↑ μ."""
    _require_region(lam, p)
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for i in closures(mu, p):
            if i < 3:
                nu = wall_reflect(i, mu, p)
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
    return frozenset(seen)


def up_leq(lam: Weight, mu: Weight, p: int) -> bool:
    _require_region(mu, p)
    return mu in up_set(lam, p)


def up_transport(lam: Weight, j: int, p: int) -> Weight:
    """The unique λ' in the closure of C_j with λ ↑ λ'."""
    if j not in (0, 1, 2, 3):
        raise ValueError(f"alcove index must be in 0..3, got {j}")
    hits = [mu for mu in up_set(lam, p) if j in closures(mu, p)]
    if not hits:
        raise TargetBelowSource(f"{lam} does not reach the closure of C{j} for p={p}")
    if len(hits) > 1:  # pragma: no cover - excluded by exhaustive tests
        raise AssertionError(f"non-unique transport of {lam} to C{j}: {hits}")
    return hits[0]
