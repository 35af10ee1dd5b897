import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4serre import (
    W_G,
    Weight,
    exponent_orderings,
    exponents_to_modular_weight,
    is_motivically_odd,
    ordinarity_check,
    root_valuations,
    spin_cochar,
    twist_type,
    type_from_exponents,
    type_from_modular_weight,
    type_from_weight,
    types_equivalent,
)
from gsp4serre.errors import ExponentsNotOrdered, InvalidModularWeight, NotSymplecticallyBalanced

from oracles import same_type

P = 17
MU = Weight(6, 2, 8)


def test_type_from_weight():
    assert type_from_weight(MU, P).mu == MU
    assert type_from_weight(Weight(18, 10, 40), P).mu == MU
    assert type_from_weight(Weight(0, 0, 0), 5).mu == Weight(0, 0, 0)
    assert type_from_weight(Weight(18, 10, 40), P).raw_mu == Weight(18, 10, 40)


def test_types_equivalent():
    assert types_equivalent(MU, Weight(18, 10, 40), P)
    assert types_equivalent(MU, Weight(6, 2, 8 + 2 * (P - 1)), P)
    assert not types_equivalent(MU, Weight(6, 3, 9), P)
    # coordinatewise divisibility alone is not enough: the quotient must be a weight
    assert not types_equivalent(MU, Weight(6, 2, 8 + (P - 1)), P)


def test_type_from_exponents():
    assert type_from_exponents((8, 6, 2, 0), P).mu == MU
    assert type_from_exponents((0, 0, 0, 0), P).mu == Weight(0, 0, 0)
    assert type_from_exponents((9, 7, 3, 1), P) == twist_type(type_from_weight(MU, P), 1)
    with pytest.raises(NotSymplecticallyBalanced):
        type_from_exponents((1, 0, 0, 0), P)


def test_type_from_modular_weight():
    assert type_from_modular_weight(7, 4, P).mu == MU
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert type_from_modular_weight(3, 3, P) == type_from_weight(Weight(2, 1, 3), P)
    assert type_from_modular_weight(9, 5, 23) == type_from_weight(Weight(8, 3, 11), 23)
    with pytest.raises(InvalidModularWeight):
        type_from_modular_weight(3, 4, P)


def test_non_generic_weight_warns():
    with pytest.warns(UserWarning):
        type_from_modular_weight(3, 3, P)


@pytest.mark.parametrize("k,ell", [(7, 4), (9, 5), (12, 6)])
def test_modular_weight_exponents(k, ell):
    t = type_from_modular_weight(k, ell, 29)
    assert spin_cochar(t.mu) == (k + ell - 3, k - 1, ell - 2, 0)


def test_twist_type():
    t = type_from_weight(MU, P)
    assert twist_type(t, 0) == t
    assert twist_type(t, P - 1) == t
    assert twist_type(t, 1) == type_from_weight(Weight(6, 2, 10), P)


def test_ordinarity():
    assert ordinarity_check(7, 4, 0, 1)
    assert not ordinarity_check(7, 4, 1, 1)
    assert root_valuations(7, 4) == (0, 2, 6, 8)


def test_exponents_to_modular_weight():
    assert exponents_to_modular_weight((0, 2, 6, 8), 17) == (7, 4, True)
    assert exponents_to_modular_weight((0, 1, 2, 3), 5) == (3, 3, True)
    assert exponents_to_modular_weight((0, 2, 6, 17), 17) == (7, 4, False)
    with pytest.raises(ExponentsNotOrdered):
        exponents_to_modular_weight((1, 2, 6, 7), 17)


def test_exponent_orderings_lists_all_choices():
    outs = exponent_orderings((8, 6, 2, 0), P)
    assert (0, 2, 6, 8) in outs
    assert len(outs) > 1
    for o in outs:
        assert o[0] == 0 and o[1] <= o[2] <= o[3] and o[3] == o[1] + o[2]


def test_motivic_oddness():
    assert is_motivically_odd(-1, 5)
    assert is_motivically_odd(1, 2)
    assert not is_motivically_odd(1, 5)


primes = st.sampled_from([2, 3, 5, 7, 11, 13])


@st.composite
def weights(draw):
    a, b = draw(st.integers(-40, 40)), draw(st.integers(-40, 40))
    return Weight(a, b, a + b + 2 * draw(st.integers(-40, 40)))


@given(primes, weights())
def test_canonical_is_idempotent_and_in_region(p, mu):
    t = type_from_weight(mu, p)
    x, y, z = t.xyz
    assert 0 <= y <= x and 2 * x <= p - 1
    assert 0 <= z < 2 * (p - 1) or p == 2
    assert type_from_weight(t.mu, p).mu == t.mu
    assert types_equivalent(mu, t.mu, p)


@given(primes, weights(), weights(), weights())
def test_equivalence_relation(p, m1, m2, m3):
    assert types_equivalent(m1, m1, p)
    assert types_equivalent(m1, m2, p) == types_equivalent(m2, m1, p)
    if types_equivalent(m1, m2, p) and types_equivalent(m2, m3, p):
        assert types_equivalent(m1, m3, p)


@given(primes, weights(), weights())
def test_equivalence_matches_exponent_oracle(p, m1, m2):
    assert types_equivalent(m1, m2, p) == same_type(tuple(m1), tuple(m2), p)


@given(primes, weights(), st.sampled_from(W_G), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_canonical_constant_on_classes(p, mu, w, u, v, k):
    moved = w(mu) + Weight(u, v, u + v + 2 * k) * (p - 1)
    assert type_from_weight(moved, p) == type_from_weight(mu, p)
