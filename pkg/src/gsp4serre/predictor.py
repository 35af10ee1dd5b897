"""Predicted Serre weights of a tame type, by three independent routes.

* ``predict_jantzen``: semisimplify the twelve-term Weyl-module expansion of
  the induced representation, then apply R to every constituent.
* ``predict_direct``: transport the eight weights ν' whose shifted types
  match τ upward through the alcoves and keep the regular ones.
* ``generic_table``: the closed-form list of twenty weights valid for
  generic (k, l).

c-coordinates: the inertial types of ν'+ρ̃ in the "B" family only match τ
after an extra (p-1) on c, and the "A" terms of the Weyl expansion carry
the same extra (p-1). See the project notes for the derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alcoves import AlcovePosition, classify, closures, up_set
from .errors import DegenerateTypeUseDirectRoute, GenericityViolated, RouteDisagreement
from .modular import SerreWeight, VirtualSum, canonical_serre, jh_semisimplify, operator_R, twist_weight
from .tame import TameType, twist_type
from .weights import Weight, flags, spin_cochar

# -- the Weyl-module expansion ----------------------------------------------


def _profile_rows(x: int, y: int, p: int):
    m = p - 1
    # (label, a, b, extra c in units of p-1)
    return (
        ("3A", 2 * m - x, m - y, 1),
        ("3B", x + m, m - y, 0),
        ("2A", y + m, x, 1),
        ("2B", y + m, m - x, 0),
        ("1A", m - y, x, 1),
        ("1B", m - y, m - x, 0),
        ("0A", m - x, y, 1),
        ("0B", x, y, 0),
        ("1A'", p - 2 - y, x - 1, 1),
        ("1B'", p - 2 - y, p - 2 - x, 0),
        ("0A'", p - 3 - x, y, 1),
        ("0B'", x - 2, y, 0),
    )


def jantzen_terms(t: TameType) -> list[tuple[str, Weight]]:
    """The twelve labelled highest weights of the Weyl-module expansion."""
    x, y, z = t.xyz
    m = t.p - 1
    return [(lab, Weight(a, b, z + e * m)) for lab, a, b, e in _profile_rows(x, y, t.p)]


def jantzen_profile(t: TameType) -> VirtualSum:
    out = VirtualSum()
    for _, lam in jantzen_terms(t):
        out = out + VirtualSum.W(lam)
    return out


# -- predicted weights ------------------------------------------------------


@dataclass(frozen=True)
class PredictedWeight:
    weight: SerreWeight
    alcove: AlcovePosition
    provenance: str  # "direct" or "transported"
    source_alcove: int
    source_nu_prime: Weight
    source_label: str = ""

    @property
    def sort_key(self):
        return (self.alcove.sort_index, self.weight.lam)

    def to_json(self) -> dict:
        lam = self.weight.lam
        return {
            "lambda": lam.to_list(),
            "lambda_plus_rho": lam.shifted().to_list(),
            "regular": self.weight.regular,
            "alcove": self.alcove.label,
            "provenance": self.provenance,
            "source_alcove": f"C{self.source_alcove}",
            "source_nu_prime": self.source_nu_prime.to_list(),
        }


def _nu_prime_shifted(x: int, y: int, p: int):
    m = p - 1
    # (label, A, B, extra c in units of p-1) with ν'+ρ̃ = (A, B; z + extra)
    return (
        ("0A", x, y, 0),
        ("0B", m - x, y, 1),
        ("1A", m - y, m - x, 0),
        ("1B", m - y, x, 1),
        ("2A", y + m, m - x, 0),
        ("2B", y + m, x, 1),
        ("3A", x + m, m - y, 0),
        ("3B", 2 * m - x, m - y, 1),
    )


def nu_prime_candidates(t: TameType) -> list[tuple[str, Weight]]:
    """The eight ν' (not ν'+ρ̃) of the direct route, labelled 0A ... 3B."""
    x, y, z = t.xyz
    m = t.p - 1
    return [
        (lab, Weight.from_shifted(A, B, z + e * m)) for lab, A, B, e in _nu_prime_shifted(x, y, t.p)
    ]


def _collect(sources, p: int) -> list[PredictedWeight]:
    """sources: iterable of (label, ν', ν). Picks one provenance per weight."""
    best: dict[SerreWeight, tuple] = {}
    for lab, nup, nu in sources:
        sw = canonical_serre(nu, p)
        direct = nu == nup
        src_alc = min(closures(nup, p))
        key = (not direct, src_alc, lab)
        if sw not in best or key < best[sw][0]:
            best[sw] = (key, lab, nup, nu)
    out = []
    for sw, (key, lab, nup, nu) in best.items():
        shift = sw.lam - nu  # a pure c-shift into the canonical window
        out.append(
            PredictedWeight(
                weight=sw,
                alcove=classify(sw.lam, p),
                provenance="transported" if key[0] else "direct",
                source_alcove=key[1],
                source_nu_prime=nup + shift,
                source_label=lab,
            )
        )
    return sorted(out, key=lambda w: w.sort_key)


def predict_direct(t: TameType) -> list[PredictedWeight]:
    p = t.p
    sources = []
    for lab, nup in nu_prime_candidates(t):
        A, B = nup.xy
        if not A >= B >= 0:
            continue
        for nu in up_set(nup, p):
            if flags(nu, p).p_regular:
                sources.append((lab, nup, nu))
    return _collect(sources, p)


def predict_jantzen(t: TameType, strict: bool = True) -> frozenset[SerreWeight]:
    """R applied to the constituents of the semisimplified Weyl expansion.

    ``strict=False`` lifts the genericity requirement (useful for research;
    the production route for degenerate types is ``predict_direct``).
    """
    if strict and not t.generic:
        raise DegenerateTypeUseDirectRoute(f"{t} is not generic; use the direct route")
    jh = jh_semisimplify(jantzen_profile(t), t.p, check_effective=True)
    return frozenset(operator_R(lam, t.p) for lam in jh.weights("F"))


# -- the closed-form table --------------------------------------------------

# (row id, source alcove, target alcove, left (A,B), right (A,B)); c = x+y on the
# left and x+y+(p-1) on the right
def _table_rows(x: int, y: int, p: int):
    return (
        ("C0", 0, 0, (x, y), (p - 1 - x, y)),
        ("C1", 1, 1, (p - 1 - y, p - 1 - x), (p - 1 - y, x)),
        ("C0->C1", 0, 1, (p - y, p - x), (p - y, x + 1)),
        ("C2", 2, 2, (y + p - 1, p - 1 - x), (y + p - 1, x)),
        ("C1->C2", 1, 2, (y + p + 1, p - 1 - x), (y + p + 1, x)),
        ("C0->C2", 0, 2, (y + p, p - x), (y + p, x + 1)),
        ("C3", 3, 3, (x + p - 1, p - 1 - y), (2 * p - 2 - x, p - 1 - y)),
        ("C2->C3", 2, 3, (x + p + 1, p + 1 - y), (2 * p - x, p + 1 - y)),
        ("C1->C3", 1, 3, (x + p + 1, p - 1 - y), (2 * p - x, p - 1 - y)),
        ("C0->C3", 0, 3, (x + p, p - y), (2 * p - 1 - x, p - y)),
    )


@dataclass(frozen=True)
class TableRow:
    row: str
    side: str  # "left" or "right"
    source: int
    target: int
    nu_plus_rho: Weight
    on_wall: bool

    @property
    def nu(self) -> Weight:
        return self.nu_plus_rho - Weight(2, 1, 3)


def _check_generic_kl(k: int, ell: int, p: int):
    if not (k > ell > 3 and k + ell < p + 1):
        raise GenericityViolated(f"need k > l > 3 and k+l < p+1, got ({k},{ell}) at p={p}")


def generic_table_rows(k: int, ell: int, p: int, twist: int = 0) -> list[TableRow]:
    _check_generic_kl(k, ell, p)
    x, y = k - 1, ell - 2
    zl = x + y + 2 * twist
    out = []
    for row, src, tgt, left, right in _table_rows(x, y, p):
        for side, (A, B), z in (("left", left, zl), ("right", right, zl + p - 1)):
            w = Weight(A, B, z)
            pos = classify(Weight.from_shifted(A, B, z), p)
            out.append(TableRow(row, side, src, tgt, w, pos.kind != "interior"))
    return out


def boundary_exception(k: int, ell: int, p: int) -> bool:
    return k - ell == 1 or k + ell == p


def generic_table(k: int, ell: int, p: int, twist: int = 0) -> list[PredictedWeight]:
    out = []
    for r in generic_table_rows(k, ell, p, twist):
        nu = r.nu
        sw = canonical_serre(nu, p)
        out.append(
            PredictedWeight(
                weight=sw,
                alcove=classify(sw.lam, p),
                provenance="direct" if r.source == r.target else "transported",
                source_alcove=r.source,
                source_nu_prime=nu if r.source == r.target else sw.lam,
                source_label=f"{r.row}/{r.side}",
            )
        )
    return sorted(out, key=lambda w: w.sort_key)


def table_parameters(t: TameType):
    """(k, l, twist) when the closed-form table describes t, else None."""
    x, y, z = t.xyz
    k, ell = x + 1, y + 2
    try:
        _check_generic_kl(k, ell, t.p)
    except GenericityViolated:
        return None
    return k, ell, (z - x - y) // 2


def _weights(ws) -> frozenset[SerreWeight]:
    return frozenset(w.weight for w in ws)


def predict(t: TameType) -> list[PredictedWeight]:
    """The direct route, cross-checked against the others where they apply."""
    direct = predict_direct(t)
    got = _weights(direct)
    if t.generic:
        other = predict_jantzen(t)
        if other != got:
            raise RouteDisagreement(f"{t}: Weyl-expansion route differs by {sorted(other ^ got)}")
    params = table_parameters(t)
    if params is not None:
        other = _weights(generic_table(*params[:2], t.p, twist=params[2]))
        if other != got:
            raise RouteDisagreement(f"{t}: closed-form table differs by {sorted(other ^ got)}")
    return direct


def twist_equivariance_check(t: TameType, c: int) -> bool:
    lhs = _weights(predict(twist_type(t, c)))
    rhs = frozenset(twist_weight(w.weight, c, t.p) for w in predict(t))
    return lhs == rhs


# -- crystalline lift recipes -----------------------------------------------

_RELABEL = {"alpha": "gamma", "beta": "delta", "gamma": "alpha", "delta": "beta"}


def _left_recipes(x: int, y: int, p: int):
    """(row, shape, [(HT, unit) in the order of the diagonal], blocks)."""
    return (
        ("C0", "Diagonal", [(x + y, "alpha"), (x, "beta"), (y, "gamma"), (0, "delta")], ()),
        ("C1", "Diagonal", [(p - 1, "delta"), (x, "beta"), (y, "gamma"), (x + y - p + 1, "alpha")], ()),
        ("C2", "Diagonal", [(y + p - 1, "gamma"), (x + y, "alpha"), (0, "delta"), (x - p + 1, "beta")], ()),
        ("C3", "Diagonal", [(x + p - 1, "beta"), (x + y, "alpha"), (0, "delta"), (y - p + 1, "gamma")], ()),
        ("C0->C1", "Klingen", [(p, "delta"), (x, "beta"), (y, "gamma"), (x + y - p, "alpha")],
         (("delta", "alpha"),)),
        ("C0->C2", "Klingen", [(y + p, "gamma"), (x + y, "alpha"), (0, "delta"), (x - p, "beta")],
         (("gamma", "beta"),)),
        ("C0->C3", "Klingen", [(x + p, "beta"), (x + y, "alpha"), (0, "delta"), (y - p, "gamma")],
         (("beta", "gamma"),)),
        ("C1->C2", "Siegel", [(y + p, "gamma"), (x + y + 1, "alpha"), (-1, "delta"), (x - p, "beta")],
         (("gamma", "delta"), ("alpha", "beta"))),
        ("C1->C3", "Siegel", [(x + p, "beta"), (x + y + 1, "alpha"), (-1, "delta"), (y - p, "gamma")],
         (("beta", "delta"), ("alpha", "gamma"))),
        ("C2->C3", "Klingen", [(x + p + 1, "beta"), (x + y, "alpha"), (0, "delta"), (y - p - 1, "gamma")],
         (("beta", "gamma"),)),
    )


@dataclass(frozen=True)
class LiftRecipe:
    row: str
    side: str
    shape: str
    ht_weights: tuple[int, int, int, int]
    unit_assignment: tuple[str, str, str, str]
    blocks: tuple
    mu_row: Weight

    def balanced(self) -> bool:
        e1, e2, e3, e4 = self.ht_weights
        return e1 + e4 == e2 + e3

    def coherent(self) -> bool:
        return sorted(self.ht_weights) == sorted(spin_cochar(self.mu_row))

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "side": self.side,
            "shape": self.shape,
            "ht_weights": list(self.ht_weights),
            "units": list(self.unit_assignment),
            "blocks": [list(b) for b in self.blocks],
            "mu": self.mu_row.to_list(),
        }


def lift_recipes(t: TameType) -> list[LiftRecipe]:
    params = table_parameters(t)
    if params is None:
        raise GenericityViolated(f"{t} is outside the range of the closed-form table")
    k, ell, c0 = params
    p = t.p
    x, y = k - 1, ell - 2
    rows = {(r.row, r.side): r.nu_plus_rho for r in generic_table_rows(k, ell, p, c0)}
    out = []
    for side, (xx, yy), shift, relabel in (
        ("left", (x, y), 0, lambda u: u),
        ("right", (p - 1 - x, y), x, _RELABEL.get),
    ):
        for row, shape, diag, blocks in _left_recipes(xx, yy, p):
            pairs = sorted(((h + shift + c0, relabel(u)) for h, u in diag), key=lambda hu: (-hu[0], hu[1]))
            out.append(
                LiftRecipe(
                    row=row,
                    side=side,
                    shape=shape,
                    ht_weights=tuple(h for h, _ in pairs),
                    unit_assignment=tuple(u for _, u in pairs),
                    blocks=tuple(tuple(relabel(u) for u in b) for b in blocks),
                    mu_row=rows[row, side],
                )
            )
    return out
