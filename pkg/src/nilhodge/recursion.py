"""Recursions for GL(n) built on the plethystic exponential.

Two generating functions in an auxiliary variable ``y``:

* ``1 + sum_n phi_n(z, w) y^n = PE(f y)`` with ``f = (1 - z)^r / (1 - w)``,
  and ``mu_rep(GL(n)) = phi_n(-x, w) * prod_{i<=n} (1 - w^i)``;
* ``1 + sum_n psi_n(z) y^n = PE(h y)`` with ``h = (1 - z)^r``,
  and ``mu_char(GL(n)) = psi_n(-x)``.

Differentiating in ``y`` gives ``n a_n = sum_k g(z^k, w^k) a_{n-k}``.  The
phi-level recursion carries power series in ``w``; they are truncated at
the w-degree of the final answer, ``n(n-1)/2``, which makes the result exact.
"""

from __future__ import annotations

from functools import partial

from .algebra import (
    RationalPoly,
    SeriesTruncation,
    poly_div_exact,
    scale_exponents,
    series_exp,
    substitute,
    truncate,
)
from .invariants import XW

ZW = ("z", "w")

__all__ = [
    "mu_rep_gl_recursive",
    "mu_char_gl_recursive",
    "mu_char_sl",
    "plethystic_exp",
    "mu_rep_gl_pe",
    "mu_char_gl_pe",
]

_x, _w = RationalPoly.gens(XW)
_z, _zw = RationalPoly.gens(ZW)


def _check(n: int, r: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if r < 1:
        raise ValueError(f"abelian rank r must be >= 1, got {r}")


def _geometric(k: int, degree: int) -> RationalPoly:
    # 1/(1 - w^k) truncated at w-degree `degree`
    return RationalPoly(XW, {(0, k * i): 1 for i in range(degree // k + 1)})


def _coinvariant(n: int) -> RationalPoly:
    out = RationalPoly.const(1, XW)
    for i in range(1, n + 1):
        out = out * (1 - _w**i)
    return out


def _mu_rep_phi(n: int, r: int) -> RationalPoly:
    bound = n * (n - 1) // 2
    cut = partial(truncate, degree=bound, vars=("w",))
    phi = [RationalPoly.const(1, XW)]
    for j in range(1, n + 1):
        acc = RationalPoly(XW)
        for k in range(1, j + 1):
            fk = (1 - (-_x) ** k) ** r * _geometric(k, bound)
            acc = acc + cut(fk * phi[j - k])
        phi.append(acc / j)
    return cut(phi[n] * _coinvariant(n))


def _mu_rep_mu(n: int, r: int) -> RationalPoly:
    mu = [RationalPoly.const(1, XW)]
    for j in range(1, n + 1):
        acc = RationalPoly(XW)
        for k in range(1, j + 1):
            ck = RationalPoly.const(1, XW)
            for i in range(k):
                ck = ck * (1 - _w ** (j - i))
            # f((-x)^k, w^k) c_k(w) with the 1/(1 - w^k) absorbed into c_k
            ck = poly_div_exact(ck, 1 - _w**k)
            acc = acc + (1 - (-_x) ** k) ** r * ck * mu[j - k]
        mu.append(acc / j)
    return mu[n]


def mu_rep_gl_recursive(n: int, r: int, method: str = "phi") -> RationalPoly:
    """``mu_rep(GL(n))`` in ``(x, w)`` from the plethystic recursion.

    ``method="phi"`` runs the recursion on ``phi_j`` as truncated w-series and
    multiplies by ``prod (1 - w^i)`` at the end; ``method="mu"`` runs the
    equivalent polynomial recursion
    ``mu_n = 1/n sum_k f((-x)^k, w^k) c_k(w) mu_{n-k}``,
    ``c_k(w) = prod_{i<k} (1 - w^(n-i))``.
    """
    _check(n, r)
    if method == "phi":
        return _mu_rep_phi(n, r)
    if method == "mu":
        return _mu_rep_mu(n, r)
    raise ValueError(f"method must be 'phi' or 'mu', got {method!r}")


def mu_char_gl_recursive(n: int, r: int) -> RationalPoly:
    """``nu_n = 1/n sum_k h((-x)^k) nu_{n-k}`` with ``h(x) = (1 - x)^r``."""
    _check(n, r)
    nu = [RationalPoly.const(1, XW)]
    for j in range(1, n + 1):
        acc = RationalPoly(XW)
        for k in range(1, j + 1):
            acc = acc + (1 - (-_x) ** k) ** r * nu[j - k]
        nu.append(acc / j)
    return nu[n]


def mu_char_sl(n: int, r: int) -> RationalPoly:
    """``mu_char(SL(n)) = mu_char(GL(n)) / (1 + x)^r`` (exact division)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return poly_div_exact(mu_char_gl_recursive(n, r), (1 + _x) ** r)


def plethystic_exp(f: RationalPoly, order: int, trim=None) -> SeriesTruncation:
    """``PE(f y) = exp(sum_k f(v^k for all v) y^k / k)`` truncated at ``y^order``.

    ``trim`` is applied to each coefficient (use it when ``f`` is itself a
    truncated series in one of its variables).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    zero = RationalPoly(f.vars)
    trim = trim or (lambda p: p)
    terms = [zero] + [trim(scale_exponents(f, k) / k) for k in range(1, order + 1)]
    return series_exp(SeriesTruncation(order, tuple(terms)), trim=trim)


def mu_rep_gl_pe(n: int, r: int) -> RationalPoly:
    """``mu_rep(GL(n))`` read off the ``y^n`` coefficient of ``PE(f y)``."""
    _check(n, r)
    bound = n * (n - 1) // 2
    geo = RationalPoly(ZW, {(0, i): 1 for i in range(bound + 1)})
    f = (1 - _z) ** r * geo
    cut = partial(truncate, degree=bound, vars=("w",))
    phi_n = plethystic_exp(f, n, trim=cut)[n]
    phi_n = substitute(phi_n, {"z": -_x, "w": _w}, XW)
    return cut(phi_n * _coinvariant(n))


def mu_char_gl_pe(n: int, r: int) -> RationalPoly:
    """``mu_char(GL(n))`` as ``psi_n(-x)``, ``psi_n`` the ``y^n`` coefficient of ``PE((1-z)^r y)``."""
    _check(n, r)
    psi_n = plethystic_exp((1 - _z) ** r, n)[n]
    return substitute(psi_n, {"z": -_x, "w": _w}, XW)
