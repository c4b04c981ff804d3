"""Mixed Hodge polynomials of identity components, evaluated as Weyl class sums.

Internally every class term depends on ``A_g`` only through its
characteristic polynomial ``p(lam) = det(I - lam*A_g)``, so

* ``det(I + x*A) = p(-x)``,
* ``det(I - w*A) = p(w)``,
* ``det(y*I + A) = (-1)**m * R(-y)`` and ``det(A - x*I) = (-1)**m * R(x)``,
  where ``R(z) = z**m * p(1/z)`` is the reversed char poly on rank ``m``.

Results are produced in the two variables ``x = tuv`` and ``w = t^2 uv``
and expanded to ``(t, u, v)`` only on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import RationalPoly, poly_div_exact, substitute, truncate
from .weyl import LAM, GroupDescriptor, WeylClassTable

XW = ("x", "w")
TUV = ("t", "u", "v")
X_ONLY = ("x",)

_x, _w = RationalPoly.gens(XW)
_t, _u, _v = RationalPoly.gens(TUV)

KINDS = (
    "mu_rep",
    "mu_char",
    "mu_char_compact",
    "counting_poly",
    "equivariant_mu",
    "poincare",
    "e_poly",
    "euler_char",
    "total_dim",
)
SPECIALIZATIONS = ("poincare", "e_poly", "euler_char", "total_dim")
DEFAULT_SERIES_ORDER = 20

__all__ = [
    "XW",
    "TUV",
    "KINDS",
    "InvariantRequest",
    "mu_rep",
    "mu_char",
    "mu_char_compact",
    "counting_poly",
    "equivariant_terms",
    "equivariant_mu",
    "specialize",
    "to_tuv",
    "assemble",
    "IntegralityError",
]


class IntegralityError(ArithmeticError):
    """A Hodge-theoretic invariant came out with a non-integer coefficient."""


def _check_r(r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"abelian rank r must be an integer >= 1, got {r!r}")


def _integral(p: RationalPoly, what: str) -> RationalPoly:
    if not p.coefficients_integral():
        raise IntegralityError(f"{what} has non-integer coefficients: {p}")
    return p


def _at(cp: RationalPoly, image: RationalPoly) -> RationalPoly:
    return substitute(cp, {"lam": image}, image.vars)


def _reversed(cp: RationalPoly, m: int) -> RationalPoly:
    # z^m p(1/z)
    return RationalPoly(LAM, {(m - e,): c for (e,), c in cp.terms.items()})


def to_tuv(p: RationalPoly) -> RationalPoly:
    """Expand a polynomial in ``(x, w)`` via ``x = tuv``, ``w = t^2 uv``."""
    bindings = {"x": _t * _u * _v, "w": _t**2 * _u * _v}
    return substitute(p, {v: bindings[v] for v in p.vars}, TUV)


def mu_rep(table: WeylClassTable, r: int) -> RationalPoly:
    """Mixed Hodge polynomial of the identity component of Hom(Gamma, G), in ``(x, w)``.

    ``1/|W| * prod_i (1 - w^d_i) * sum_g det(I + xA_g)^r / det(I - wA_g)``.
    Each ``prod_i (1 - w^d_i) / det(I - wA_g)`` is the graded character of
    the coinvariant algebra, hence a polynomial; the division is exact per
    class and raises if it is not.
    """
    _check_r(r)
    coinv = table.coinvariant_factor()
    total = RationalPoly(XW)
    for cp, size in table.merged().items():
        quotient = poly_div_exact(coinv, cp)
        total = total + size * (_at(cp, -_x) ** r * _at(quotient, _w))
    return _integral(total / table.order, "mu_rep")


def mu_char(table: WeylClassTable, r: int) -> RationalPoly:
    """Mixed Hodge polynomial of the identity component of the character variety, in ``x``."""
    _check_r(r)
    total = RationalPoly(XW)
    for cp, size in table.merged().items():
        total = total + size * _at(cp, -_x) ** r
    return _integral(total / table.order, "mu_char")


def mu_char_compact(table: WeylClassTable, r: int) -> RationalPoly:
    """Compactly supported mixed Hodge polynomial, in ``(t, u, v)``.

    ``t^(r*m) / |W| * sum_g det(tuv*I + A_g)^r``.
    """
    _check_r(r)
    m = table.rank
    y = _t * _u * _v
    sign = (-1) ** m
    total = RationalPoly(TUV)
    for cp, size in table.merged().items():
        total = total + size * (sign * _at(_reversed(cp, m), -y)) ** r
    return _integral(_t ** (r * m) * total / table.order, "mu_char_compact")


def counting_poly(table: WeylClassTable, r: int) -> RationalPoly:
    """Point-count polynomial ``(-1)^(r*m)/|W| * sum_g det(A_g - x*I)^r``, in ``x``."""
    _check_r(r)
    m = table.rank
    x = RationalPoly.var("x", X_ONLY)
    total = RationalPoly(X_ONLY)
    for cp, size in table.merged().items():
        total = total + size * ((-1) ** m * _at(_reversed(cp, m), x)) ** r
    return _integral((-1) ** (r * m) * total / table.order, "counting_poly")


def equivariant_terms(table: WeylClassTable, r: int) -> list[tuple[int, RationalPoly, RationalPoly]]:
    """Per merged class: ``(size, det(I + xA)^r, det(I - wA))`` in ``(x, w)``."""
    _check_r(r)
    return [(size, _at(cp, -_x) ** r, _at(cp, _w)) for cp, size in table.merged().items()]


def _inverse_series(cp: RationalPoly, order: int) -> RationalPoly:
    # 1/p(lam) modulo lam^(order+1); p(0) = 1
    coeffs = [cp.terms.get((k,), 0) for k in range(order + 1)]
    inv = [Fraction(1)]
    for n in range(1, order + 1):
        inv.append(-sum(coeffs[k] * inv[n - k] for k in range(1, n + 1)))
    return RationalPoly(LAM, {(k,): c for k, c in enumerate(inv)})


def equivariant_mu(table: WeylClassTable, r: int, order: int = DEFAULT_SERIES_ORDER) -> RationalPoly:
    """G-equivariant mixed Hodge series ``1/|W| sum_g det(I + xA)^r / det(I - wA)``.

    The series is infinite; this returns every term of total ``(x, w)``-degree
    at most ``order``.
    """
    _check_r(r)
    if order < 0:
        raise ValueError(f"truncation order must be nonnegative, got {order}")
    total = RationalPoly(XW)
    for cp, size in table.merged().items():
        num = truncate(_at(cp, -_x) ** r, order)
        inv = _at(_inverse_series(cp, order), _w)
        total = total + size * truncate(num * inv, order)
    return _integral(total / table.order, "equivariant_mu")


def specialize(kind: str, mu: RationalPoly):
    """Poincare ``mu(t,1,1)``, E-polynomial ``mu(-1,u,v)``, Euler ``mu(-1,1,1)``, total ``mu(1,1,1)``."""
    if mu.vars != TUV:
        raise ValueError(f"specialize expects a (t, u, v) polynomial, got variables {mu.vars}")
    t, u, v = RationalPoly.gens(("t",))[0], *RationalPoly.gens(("u", "v"))
    if kind == "poincare":
        return substitute(mu, {"t": t, "u": 1, "v": 1}, ("t",))
    if kind == "e_poly":
        return substitute(mu, {"t": -1, "u": u, "v": v}, ("u", "v"))
    if kind == "euler_char":
        return int(mu(t=-1, u=1, v=1))
    if kind == "total_dim":
        return int(mu(t=1, u=1, v=1))
    raise ValueError(f"unknown specialization {kind!r}")


@dataclass(frozen=True)
class InvariantRequest:
    """What to compute.

    ``source`` picks the variety a specialization (poincare, e_poly,
    euler_char, total_dim) is taken of: ``rep`` or ``char``.  ``component``
    is ``identity`` or ``full``; ``full`` only differs for exotic quotients.
    """

    group: GroupDescriptor
    r: int
    kind: str = "mu_rep"
    variable_mode: str = "tuv"
    source: str = "rep"
    component: str = "identity"
    order: int = DEFAULT_SERIES_ORDER

    def __post_init__(self):
        _check_r(self.r)
        if self.kind not in KINDS:
            raise ValueError(f"unknown invariant kind {self.kind!r} (choose from {', '.join(KINDS)})")
        if self.variable_mode not in ("xw", "tuv"):
            raise ValueError(f"variable mode must be xw or tuv, got {self.variable_mode!r}")
        if self.source not in ("rep", "char"):
            raise ValueError(f"source must be rep or char, got {self.source!r}")
        if self.component not in ("identity", "full"):
            raise ValueError(f"component must be identity or full, got {self.component!r}")


def assemble(request: InvariantRequest):
    """Evaluate a request; returns a :class:`RationalPoly` or, for Euler/total, an int."""
    from . import exotic

    group, r, kind = request.group, request.r, request.kind
    full_exotic = request.component == "full" and group.quotient is not None
    if full_exotic:
        spec = exotic.ExoticSpec(*group.quotient, r)
        if kind in SPECIALIZATIONS:
            which = request.source
        elif kind in ("mu_rep", "mu_char"):
            which = kind[3:]
        else:
            raise ValueError(f"{kind} is only defined for identity components of exotic groups")
        mu = exotic.mu_rep_exotic(spec) if which == "rep" else exotic.mu_char_exotic(spec)
    else:
        table = group.table()
        if kind == "mu_char_compact":
            if request.variable_mode == "xw":
                raise ValueError("mu_char_compact depends on t separately from tuv; use --vars tuv")
            return mu_char_compact(table, r)
        if kind == "counting_poly":
            return counting_poly(table, r)
        if kind == "equivariant_mu":
            mu = equivariant_mu(table, r, request.order)
            return mu if request.variable_mode == "xw" else to_tuv(mu)
        if kind in SPECIALIZATIONS:
            mu = mu_rep(table, r) if request.source == "rep" else mu_char(table, r)
        else:
            mu = mu_rep(table, r) if kind == "mu_rep" else mu_char(table, r)
    if kind in SPECIALIZATIONS:
        return specialize(kind, to_tuv(mu))
    return mu if request.variable_mode == "xw" else to_tuv(mu)
