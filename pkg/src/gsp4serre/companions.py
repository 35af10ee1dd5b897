"""Companion weights (twist-conjugates of the fundamental weight) and the
dual BGG complex outline for a cohomological weight (k, l)."""

from __future__ import annotations

from dataclasses import dataclass

from .alcoves import classify
from .errors import InvalidModularWeight, WeightOutOfRange
from .modular import canonical_serre
from .predictor import generic_table_rows
from .weights import Weight, WeylElement, flags

ALL_POSITIONS = frozenset((i, j) for i in range(1, 5) for j in range(i + 1, 5))


@dataclass(frozen=True)
class CompanionRecord:
    p: int
    case_id: str
    twist_exp: int
    conjugator: WeylElement
    required_zero_mask: frozenset
    k_prime: int
    ell_prime: int
    lambda_prime: Weight
    alcove_condition: str
    condition_holds: bool
    automorphic_type: str
    source_note: str = ""

    @property
    def alcove(self):
        return classify(self.lambda_prime, self.p)

    def to_json(self) -> dict:
        d = {
            "case": self.case_id,
            "twist": self.twist_exp,
            "conjugator": self.conjugator.word,
            "zero_mask": sorted(list(ij) for ij in self.required_zero_mask),
            "k_prime": self.k_prime,
            "ell_prime": self.ell_prime,
            "lambda_prime": self.lambda_prime.to_list(),
            "lambda_prime_plus_rho": self.lambda_prime.shifted().to_list(),
            "alcove": self.alcove.label,
            "alcove_condition": self.alcove_condition,
            "condition_holds": self.condition_holds,
            "automorphic_type": self.automorphic_type,
        }
        if self.source_note:
            d["source_note"] = self.source_note
        return d


def _cases(k: int, ell: int, p: int):
    a, b = k - 3, ell - 3
    m = p - 1
    # (id, twist, conjugator, zero mask, (k', l'), condition text, holds, type)
    return (
        ("Fund", 0, "e", (), (k, ell), "C0", True, "Holomorphic"),
        ("C1", 2 - ell, "s0", ((1, 2), (3, 4)), (k + m, 4 - ell + m),
         "C3 if a-b>1", a - b > 1, "Holomorphic"),
        ("C2", 1 - k, "s0s1", ((1, 3), (2, 3), (2, 4)), (ell - 1 + m, 3 - k + m),
         "C2 if b>0", b > 0, "Whittaker"),
        ("C3", 3 - k - ell, "s0s1s0", ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4)), (3 - ell + m, 3 - k + m),
         "C1 if a+b<p-5", a + b < p - 5, "Whittaker"),
        ("C0'", 0, "s1", ((2, 3),), (ell - 1 + m, k + 1),
         "C2 if b>0", b > 0, "PAdicOnly"),
        ("C1'", 2 - ell, "s1s0", ((1, 2), (1, 4), (3, 4)), (3 - ell + m, k + 1),
         "C1 if a>b", a > b, "PAdicOnly"),
        ("C2'", 1 - k, "s1s0s1", ((1, 3), (1, 4), (2, 3), (2, 4)), (2 - k + m, ell),
         "C0", True, "PAdicOnly"),
        ("C3'", 3 - k - ell, "s0s1s0s1", tuple(sorted(ALL_POSITIONS)), (2 - k + 2 * m, 4 - ell + m),
         "C3 if a+b<p-6", a + b < p - 6, "PAdicOnly"),
    )


def companion_table(k: int, ell: int, p: int) -> list[CompanionRecord]:
    """The eight companion records for (k, l) at p.

    λ' is the weight of F(λ') for the untwisted representation: the weight
    (k'-3, l'-3; k'+l'-6) of the twisted one, untwisted by ν^(-twist), with c
    reduced into [0, 2(p-1)).
    """
    if not (k >= ell >= 3 and k + ell - 3 < p - 1):
        raise WeightOutOfRange(f"need k >= l >= 3 and k+l-3 < p-1, got ({k},{ell}) at p={p}")
    out = []
    for cid, tw, conj, mask, (kp, lp), cond, holds, kind in _cases(k, ell, p):
        c = (kp + lp - 6 - 2 * tw) % (2 * (p - 1))
        lam = Weight(kp - 3, lp - 3, c)
        note = ""
        if cid == "C3'":
            note = "the source prints the second entry of (k',l') with a lowercase l; read as l"
        out.append(
            CompanionRecord(p, cid, tw, WeylElement(conj), frozenset(mask), kp, lp, lam, cond, holds, kind, note)
        )
    return out


# companion case -> (row, side) of the closed-form table
TABLE_POSITION = {
    "Fund": ("C0", "left"),
    "C1": ("C3", "left"),
    "C2": ("C2", "left"),
    "C3": ("C1", "left"),
    "C0'": ("C2", "right"),
    "C1'": ("C1", "right"),
    "C2'": ("C0", "right"),
    "C3'": ("C3", "right"),
}


def companion_matches_table(k: int, ell: int, p: int) -> bool:
    rows = {(r.row, r.side): r.nu for r in generic_table_rows(k, ell, p)}
    for rec in companion_table(k, ell, p):
        lam = rec.lambda_prime
        if not flags(lam, p).p_restricted:
            return False
        if canonical_serre(lam, p) != canonical_serre(rows[TABLE_POSITION[rec.case_id]], p):
            return False
    return True


# -- BGG ------------------------------------------------------------------


def _sheaf(r: int, s: int) -> str:
    return f"omega^({r},{s})"


@dataclass(frozen=True)
class BggOutline:
    k: int
    ell: int
    terms: tuple[tuple[int, int], ...]
    degrees: tuple[int, int, int, int]
    fil_jumps: tuple[int, int, int, int]
    graded: dict
    differential_degrees: tuple

    def labels(self) -> list[str]:
        return [_sheaf(*t) for t in self.terms]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "ell": self.ell,
            "terms": self.labels(),
            "degrees": list(self.degrees),
            "fil_jumps": list(self.fil_jumps),
            "graded": {str(j): {"H": h, "sheaf": s} for j, (h, s) in self.graded.items()},
            "differential_degrees": list(self.differential_degrees),
        }


def bgg_outline(k: int, ell: int) -> BggOutline:
    if not k >= ell >= 3:
        raise InvalidModularWeight(f"need k >= l >= 3, got ({k},{ell})")
    terms = ((3 - ell, 3 - k), (ell - 1, 3 - k), (k, 4 - ell), (k, ell))
    w = k + ell - 3  # a + b + 3
    jumps = (0, ell - 2, k - 1, k + ell - 3)
    graded = {j: (3 - n, _sheaf(*terms[n])) for n, j in enumerate(jumps)}
    # only the homogeneity degree of the last differential is known
    return BggOutline(k, ell, terms, (w, w + 1, w + 2, w + 3), jumps, graded, (None, None, ell - 1))
