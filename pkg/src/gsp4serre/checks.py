"""Self-checks run by ``gsp4serre check --p P``.

Each check returns (ok, detail). They are exhaustive at the given p, so
keep p small (p <= 23 runs in seconds).
"""

from __future__ import annotations

import random
from typing import Callable

from .alcoves import classify, closures_xy, up_leq, up_set, up_transport, wall_reflect
from .modular import decompose_weyl, enumerate_serre_weights, twist_weight
from .predictor import predict, predict_direct, predict_jantzen
from .tame import TameType, twist_type, type_from_weight
from .weights import W_G, Weight


def canonical_types(p: int) -> list[TameType]:
    """Every canonical type at p, one per class."""
    seen = {}
    bound = (p - 1) // 2
    for x in range(bound + 1):
        for y in range(x + 1):
            for z in range((x + y) % 2, 2 * (p - 1), 2):
                t = type_from_weight(Weight(x, y, z), p)
                seen[t.mu] = t
    return [seen[k] for k in sorted(seen)]


def region_points(p: int):
    """(x, y) in the union of the four closures."""
    for y in range(p + 1):
        for x in range(y, y + p + 1):
            if closures_xy(x, y, p):
                yield x, y


def check_weyl_group(p: int):
    ok = len(set(W_G)) == 8 and all((u * v) in W_G for u in W_G for v in W_G)
    return ok, "8 elements, closed product"


def check_alcoves(p: int):
    pts = list(region_points(p))
    for x, y in pts:
        lam = Weight.from_shifted(x, y, x + y)
        pos = classify(lam, p)
        for i in (0, 1, 2):
            if i in pos.closures and wall_reflect(i, wall_reflect(i, lam, p), p) != lam:
                return False, f"r{i} is not an involution at {(x, y)}"
            if pos.kind == "interior" and pos.index == i:
                img = classify(wall_reflect(i, lam, p), p)
                if img.kind != "interior" or img.index != i + 1:
                    return False, f"r{i} does not send C{i} to C{i + 1} at {(x, y)}"
        ups = up_set(lam, p)
        for j in range(min(pos.closures), 4):
            up_transport(lam, j, p)
        for mu in ups:
            if mu != lam and up_leq(mu, lam, p):
                return False, f"antisymmetry fails at {(x, y)}"
            if not up_set(mu, p) <= ups:
                return False, f"transitivity fails at {(x, y)}"
    return True, f"{len(pts)} region points"


def check_counts(p: int):
    n, r = len(enumerate_serre_weights(p)), len(enumerate_serre_weights(p, True))
    ok = n == p * p * (p - 1) and r == (p - 1) ** 3
    return ok, f"{n} weights, {r} regular"


def check_decomposition(p: int):
    count = 0
    for b in range(p):
        for d in range(p):
            lam = Weight(b + d, b, b + d + b)
            pos = classify(lam, p)
            parts = decompose_weyl(lam, p).weights("F")
            if pos.kind == "interior" and pos.index > 0:
                want = {pos.index, pos.index - 1}
                got = {classify(f, p).index for f in parts}
                if got != want:
                    return False, f"W{lam} splits into alcoves {got}"
            count += 1
    return True, f"{count} restricted weights"


def check_routes(p: int):
    n = 0
    for t in canonical_types(p):
        if t.generic:
            if predict_jantzen(t) != {w.weight for w in predict_direct(t)}:
                return False, f"routes differ at {t}"
            n += 1
    return True, f"{n} generic types"


def check_degenerate(p: int):
    ts = canonical_types(p)
    for t in ts:
        for w in predict_direct(t):
            if not w.weight.regular:
                return False, f"irregular weight predicted for {t}"
    return True, f"{len(ts)} canonical types"


def check_twists(p: int, n: int = 25, seed: int = 0):
    rng = random.Random(seed)
    ts = canonical_types(p)
    for _ in range(n):
        t = rng.choice(ts)
        c = rng.randrange(-2 * p, 2 * p)
        lhs = {w.weight for w in predict(twist_type(t, c))}
        rhs = {twist_weight(w.weight, c, p) for w in predict(t)}
        if lhs != rhs:
            return False, f"twist by {c} fails at {t}"
    return True, f"{n} random twists"


CHECKS: list[tuple[str, Callable]] = [
    ("weyl-group", check_weyl_group),
    ("alcove-axioms", check_alcoves),
    ("serre-counts", check_counts),
    ("weyl-decomposition", check_decomposition),
    ("route-equivalence", check_routes),
    ("degenerate-totality", check_degenerate),
    ("twist-equivariance", check_twists),
]


def run_checks(p: int) -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn(p)
        except Exception as exc:  # report, keep going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
