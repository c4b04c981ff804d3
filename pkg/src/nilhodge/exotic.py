"""Full character and representation varieties of Z^r into SL(p)^m / Delta(p).

Besides the identity component, ``M_{Z^r}(SL(p)^m/Delta(p))`` has
``N(p, m)`` isolated points; each matches a non-identity component of the
representation variety whose mixed Hodge structure is that of SL(p)^m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import RationalPoly
from .invariants import XW, mu_char, mu_rep
from .weyl import classes_type_A

__all__ = ["ExoticSpec", "is_prime", "component_count", "mu_rep_exotic", "mu_char_exotic", "mu_sl"]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ExoticSpec:
    p: int
    m: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.r < 1:
            raise ValueError(f"abelian rank r must be >= 1, got {self.r}")


def component_count(spec: ExoticSpec) -> int:
    """Number of isolated points: ``p^((m-1)(r-2)) (p^r - 1)(p^(r-1) - 1) / (p^2 - 1)``."""
    p, m, r = spec.p, spec.m, spec.r
    value = Fraction(p) ** ((m - 1) * (r - 2)) * (p**r - 1) * (p ** (r - 1) - 1) / (p**2 - 1)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"N(p={p}, m={m}) at r={r} is not a nonnegative integer: {value}")
    return value.numerator


def mu_sl(p: int) -> RationalPoly:
    """Mixed Hodge polynomial of SL(p, C) itself: ``prod_{j=2}^p (1 + t^(2j-1) u^j v^j)`` in ``(x, w)``."""
    x, w = RationalPoly.gens(XW)
    out = RationalPoly.const(1, XW)
    for j in range(2, p + 1):
        out = out * (1 + x * w ** (j - 1))
    return out


def mu_rep_exotic(spec: ExoticSpec) -> RationalPoly:
    """Whole representation variety: identity term ``mu_rep(SL(p))^m`` plus ``N * mu(SL(p))^m``."""
    ident = mu_rep(classes_type_A(spec.p, "SL"), spec.r) ** spec.m
    return ident + component_count(spec) * mu_sl(spec.p) ** spec.m


def mu_char_exotic(spec: ExoticSpec) -> RationalPoly:
    """Whole character variety: ``mu_char(SL(p))^m + N``."""
    return mu_char(classes_type_A(spec.p, "SL"), spec.r) ** spec.m + component_count(spec)
