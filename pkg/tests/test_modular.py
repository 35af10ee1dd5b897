import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4serre import (
    SerreWeight,
    VirtualSum,
    Weight,
    canonical_serre,
    decompose_weyl,
    enumerate_serre_weights,
    jantzen_profile,
    jh_semisimplify,
    normalize_weyl,
    operator_R,
    regular_representative,
    twist_weight,
    type_from_weight,
    virtual_dim,
)
from gsp4serre.errors import NegativeMultiplicity, UnsupportedWeight
from gsp4serre.checks import canonical_types

P = 17


def W(a, b, c):
    return Weight(a, b, c)


def test_virtual_sum_algebra():
    v = VirtualSum.W(W(4, 1, 5)) + VirtualSum.F(W(0, 0, 0), 2)
    assert v - v == VirtualSum()
    assert (3 * v).multiplicity("F", W(0, 0, 0)) == 6
    assert (-v).is_effective() is False
    assert len(v) == 2


def test_normalize_weyl():
    assert normalize_weyl(W(4, 1, 5)) == (1, W(4, 1, 5))
    assert normalize_weyl(W(-2, 0, 2)) == (0, None)
    assert normalize_weyl(W(-4, -7, 5)) == (-1, W(4, 1, 5))


def test_decompose_weyl():
    assert decompose_weyl(W(4, 1, 5), P) == VirtualSum.F(W(4, 1, 5))
    assert decompose_weyl(W(20, 13, 5), P) == VirtualSum.F(W(20, 13, 5)) + VirtualSum.F(W(18, 11, 5))
    assert len(decompose_weyl(W(1, 1, 2), 2)) == 2
    with pytest.raises(UnsupportedWeight):
        decompose_weyl(W(40, 1, 41), P)


def test_virtual_dim():
    assert [virtual_dim(W(0, 0, 0)), virtual_dim(W(1, 0, 1)), virtual_dim(W(1, 1, 2))] == [1, 4, 5]
    assert virtual_dim(W(-2, 0, 2)) == 0


def test_jh_semisimplify():
    assert jh_semisimplify(VirtualSum.W(W(4, 1, 5)), P) == VirtualSum.F(W(4, 1, 5))
    v = VirtualSum.W(W(-4, -7, 5)) + VirtualSum.W(W(4, 1, 5))
    assert jh_semisimplify(v, P) == VirtualSum()
    with pytest.raises(NegativeMultiplicity):
        jh_semisimplify(VirtualSum.W(W(-4, -7, 5)), P, check_effective=True)


def test_profile_is_effective():
    jh = jh_semisimplify(jantzen_profile(type_from_weight(W(6, 2, 8), P)), P, check_effective=True)
    assert jh.is_effective()


@pytest.mark.parametrize("p", [5, 7, 11])
def test_profile_never_needs_unsupported_weights(p):
    for t in canonical_types(p):
        jh_semisimplify(jantzen_profile(t), p, check_effective=True)


def test_canonical_serre():
    assert canonical_serre(W(26, 14, -46), P).lam == W(26, 14, 18)
    assert canonical_serre(W(4, 1, 5), P).lam == W(4, 1, 5)
    assert canonical_serre(W(0, 0, 32), P).lam == W(0, 0, 0)


def test_regular_representative():
    assert regular_representative(W(4, 1, 5), P) == SerreWeight(W(4, 1, 5), P)
    assert regular_representative(W(16, 0, 16), P) == SerreWeight(W(0, 0, 0), P)
    # two lifts of the same class give the same weight
    assert regular_representative(W(20, 17, 37), P) == regular_representative(W(4, 1, 5), P)


def test_operator_R():
    assert operator_R(SerreWeight(W(4, 1, 5), P), P).lam == W(26, 14, 18)
    # F(0,0;0) goes to the regular representative of (2p-2, p-1) - ρ̃
    p = 7
    assert operator_R(W(0, 0, 0), p) == regular_representative(Weight.from_shifted(2 * p - 2, p - 1, 3 * p - 3), p)


def test_twist_weight():
    f = SerreWeight(W(4, 1, 5), P)
    assert twist_weight(f, 0, P) == f
    assert twist_weight(f, 16, P) == f
    assert twist_weight(f, 1, P).lam == W(4, 1, 7)


@pytest.mark.parametrize("p,regular,n", [(3, False, 18), (3, True, 8), (2, False, 4)])
def test_enumerate(p, regular, n):
    ws = enumerate_serre_weights(p, regular)
    assert len(ws) == n
    assert ws == sorted(ws)


@st.composite
def restricted(draw, p=P):
    b = draw(st.integers(0, p - 1))
    a = b + draw(st.integers(0, p - 1))
    return Weight(a, b, a + b + 2 * draw(st.integers(-50, 50)))


@given(restricted(), st.integers(-100, 100))
def test_R_commutes_with_twist(lam, c):
    assert operator_R(twist_weight(lam, c, P), P) == twist_weight(operator_R(lam, P), c, P)


@given(restricted(), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_regular_rep_constant_on_cosets(lam, u, v, k):
    shift = Weight(u, v, u + v + 2 * k) * (P - 1)
    assert regular_representative(lam + shift, P) == regular_representative(lam, P)
    assert regular_representative(lam, P).regular


@given(restricted())
def test_canonical_idempotent(lam):
    sw = canonical_serre(lam, P)
    assert canonical_serre(sw.lam, P) == sw
    assert 0 <= sw.lam.c < 2 * (P - 1)
