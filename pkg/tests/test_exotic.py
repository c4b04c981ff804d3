import pytest

from nilhodge.algebra import RationalPoly
from nilhodge.exotic import (
    ExoticSpec,
    component_count,
    is_prime,
    mu_char_exotic,
    mu_rep_exotic,
    mu_sl,
)
from nilhodge.invariants import mu_char, mu_rep, specialize, to_tuv
from nilhodge.weyl import classes_type_A

x, w = RationalPoly.gens(("x", "w"))
SL2 = classes_type_A(2, "SL")


@pytest.mark.parametrize("p,m,r,n", [(2, 1, 2, 1), (2, 1, 1, 0), (3, 2, 2, 2), (2, 2, 2, 1), (3, 1, 3, 26)])
def test_component_count(p, m, r, n):
    assert component_count(ExoticSpec(p, m, r)) == n


def test_mu_rep_exotic():
    assert mu_rep_exotic(ExoticSpec(2, 1, 2)) == mu_rep(SL2, 2) + (1 + x * w)
    assert mu_rep_exotic(ExoticSpec(2, 1, 1)) == mu_rep(SL2, 1)


def test_mu_sl_in_tuv():
    t, u, v = RationalPoly.gens(("t", "u", "v"))
    assert to_tuv(mu_sl(2)) == 1 + t**3 * u**2 * v**2


def test_mu_char_exotic():
    assert mu_char_exotic(ExoticSpec(2, 1, 2)) == 2 + x**2
    assert mu_char_exotic(ExoticSpec(2, 2, 2)) == (1 + x**2) ** 2 + 1


@pytest.mark.parametrize("p,m,r", [(2, 1, 3), (3, 1, 2), (3, 2, 3), (5, 1, 2)])
def test_constant_term_counts_components(p, m, r):
    spec = ExoticSpec(p, m, r)
    assert mu_char_exotic(spec).constant_term() == 1 + component_count(spec)
    assert mu_rep_exotic(spec).constant_term() == 1 + component_count(spec)


@pytest.mark.parametrize("p,m,r", [(2, 1, 2), (2, 3, 3), (3, 1, 2), (3, 2, 2)])
def test_euler_characteristic_vanishes(p, m, r):
    assert specialize("euler_char", to_tuv(mu_rep_exotic(ExoticSpec(p, m, r)))) == 0


def test_validation():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    for bad in [(4, 1, 2), (2, 0, 2), (2, 1, 0)]:
        with pytest.raises(ValueError):
            ExoticSpec(*bad)
