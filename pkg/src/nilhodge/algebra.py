"""Exact multivariate polynomials and truncated power series over the rationals.

Polynomials are immutable maps from exponent vectors to coefficients
(``int`` or :class:`fractions.Fraction`) over an ordered tuple of variable
names.  Everything here is exact; nothing ever touches a float.

>>> x, w = RationalPoly.gens(("x", "w"))
>>> str((1 + x) * (1 - x))
'1 - x^2'
>>> str(poly_div_exact(1 - x**2, 1 - x))
'1 + x'
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Union

Number = Union[int, Fraction]
Monomial = tuple[int, ...]

__all__ = [
    "RationalPoly",
    "SeriesTruncation",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_div_exact",
    "substitute",
    "scale_exponents",
    "truncate",
    "series_exp",
    "series_derivative",
    "DivisionError",
]


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _coeff(c) -> Number:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def _glex_key(mono: Monomial):
    # ascending total degree, then lexicographically larger first
    return (sum(mono), tuple(-e for e in mono))


class RationalPoly:
    """A polynomial with rational coefficients in a declared variable list."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping[Monomial, Number] | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        nv = len(self.vars)
        clean: dict[Monomial, Number] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nv:
                raise ValueError(f"exponent vector {mono} does not match variables {self.vars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _coeff(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Monomial, Number]) -> RationalPoly:
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.vars = vars
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: Number, vars: Iterable[str] = ()) -> RationalPoly:
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Iterable[str]) -> RationalPoly:
        vars = tuple(vars)
        mono = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"{name!r} is not one of {vars}")
        return cls._raw(vars, {mono: 1})

    @classmethod
    def gens(cls, vars: Iterable[str]) -> tuple[RationalPoly, ...]:
        vars = tuple(vars)
        return tuple(cls.var(v, vars) for v in vars)

    @classmethod
    def parse(cls, text: str, vars: Iterable[str]) -> RationalPoly:
        """Parse an expression such as ``1/2*(1+w)*(1+x)^3 - x*w``."""
        vars = tuple(vars)
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        return _eval_ast(tree.body, vars)

    # -- accessors --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Number]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Number:
        return self._terms.get((0,) * len(self.vars), 0)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        i = self.vars.index(var)
        return max(m[i] for m in self._terms)

    def coefficients_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def sorted_terms(self) -> list[tuple[Monomial, Number]]:
        return sorted(self._terms.items(), key=lambda kv: _glex_key(kv[0]))

    def leading_monomial(self) -> Monomial:
        return max(self._terms, key=lambda m: (sum(m), m))

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> RationalPoly:
        if isinstance(other, RationalPoly):
            if other.vars != self.vars:
                if other.is_constant():
                    return RationalPoly.const(other.constant_term(), self.vars)
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return RationalPoly.const(_coeff(other), self.vars)

    def __add__(self, other) -> RationalPoly:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = _coeff(s)
            else:
                terms.pop(m, None)
        return RationalPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return RationalPoly._raw(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> RationalPoly:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalPoly:
        return (-self) + other

    def __mul__(self, other) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            try:
                c = _coeff(other)
            except TypeError:
                return NotImplemented
            if not c:
                return RationalPoly._raw(self.vars, {})
            return RationalPoly._raw(self.vars, {m: _coeff(v * c) for m, v in self._terms.items()})
        other = self._lift(other)
        terms: dict[Monomial, Number] = {}
        get = terms.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple([a + b for a, b in zip(m1, m2)])
                terms[m] = get(m, 0) + c1 * c2
        return RationalPoly._raw(
            self.vars, {m: _coeff(c) for m, c in terms.items() if c}
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalPoly:
        if isinstance(other, RationalPoly):
            return poly_div_exact(self, other)
        c = _coeff(other)
        if not c:
            raise ZeroDivisionError("division by zero constant")
        return RationalPoly._raw(self.vars, {m: _coeff(Fraction(v) / c) for m, v in self._terms.items()})

    def __pow__(self, k: int) -> RationalPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {k!r}")
        result = RationalPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == RationalPoly.const(other, self.vars)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, **values: Number) -> Fraction:
        """Evaluate at rational values for every variable."""
        missing = set(self.vars) - values.keys()
        if missing:
            raise ValueError(f"unbound variables: {sorted(missing)}")
        point = [Fraction(values[v]) for v in self.vars]
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = Fraction(c)
            for x, e in zip(point, mono):
                if e:
                    term *= x**e
            total += term
        return total

    def with_vars(self, vars: Iterable[str]) -> RationalPoly:
        """Re-embed into a variable list that contains every variable actually used."""
        vars = tuple(vars)
        index = []
        for v in vars:
            index.append(self.vars.index(v) if v in self.vars else None)
        used = {i for m in self._terms for i, e in enumerate(m) if e}
        for i in used:
            if self.vars[i] not in vars:
                raise ValueError(f"variable {self.vars[i]!r} is used but absent from {vars}")
        terms = {
            tuple(0 if i is None else m[i] for i in index): c for m, c in self._terms.items()
        }
        return RationalPoly._raw(vars, terms)

    # -- printing ---------------------------------------------------------

    def _mono_str(self, mono: Monomial, latex: bool) -> str:
        parts = []
        for v, e in zip(self.vars, mono):
            if e == 0:
                continue
            if e == 1:
                parts.append(v)
            else:
                parts.append(f"{v}^{{{e}}}" if latex else f"{v}^{e}")
        return (" " if latex else "*").join(parts)

    def _render(self, latex: bool) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            ms = self._mono_str(mono, latex)
            if not ms:
                body = _num_str(a, latex)
            elif a == 1:
                body = ms
            else:
                body = _num_str(a, latex) + (" " if latex else "*") + ms
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self) -> str:
        return self._render(latex=False)

    def to_latex(self) -> str:
        return self._render(latex=True)

    def __repr__(self) -> str:
        return f"RationalPoly({self.vars!r}, {str(self)!r})"


def _num_str(a: Number, latex: bool) -> str:
    if isinstance(a, Fraction):
        return rf"\frac{{{a.numerator}}}{{{a.denominator}}}" if latex else f"{a.numerator}/{a.denominator}"
    return str(a)


def _eval_ast(node, vars: tuple[str, ...]):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return RationalPoly.const(node.value, vars)
    if isinstance(node, ast.Name):
        return RationalPoly.var(node.id, vars)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval_ast(node.operand, vars)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, vars)
        if isinstance(node.op, ast.Pow):
            exp = _eval_ast(node.right, vars)
            if not exp.is_constant() or not isinstance(exp.constant_term(), int):
                raise ValueError("exponents must be integer constants")
            return left ** exp.constant_term()
        right = _eval_ast(node.right, vars)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_constant():
                return left / right.constant_term()
            return poly_div_exact(left, right)
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")


# -- functional interface -------------------------------------------------


def poly_add(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    if p.vars != q.vars:
        raise ValueError(f"variable mismatch: {p.vars} vs {q.vars}")
    return p + q


def poly_mul(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    if p.vars != q.vars:
        raise ValueError(f"variable mismatch: {p.vars} vs {q.vars}")
    return p * q


def poly_pow(p: RationalPoly, k: int) -> RationalPoly:
    return p**k


def poly_div_exact(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Return ``p / q``, raising :class:`DivisionError` unless ``q`` divides ``p``."""
    if p.vars != q.vars:
        if q.is_constant():
            q = RationalPoly.const(q.constant_term(), p.vars)
        else:
            raise ValueError(f"variable mismatch: {p.vars} vs {q.vars}")
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if q.is_constant():
        return p / q.constant_term()
    lq = q.leading_monomial()
    cq = q._terms[lq]
    rest = [(m, c) for m, c in q._terms.items() if m != lq]
    rem = dict(p._terms)
    quot: dict[Monomial, Number] = {}
    key = lambda m: (sum(m), m)
    while rem:
        lead = max(rem, key=key)
        shift = tuple(a - b for a, b in zip(lead, lq))
        if any(e < 0 for e in shift):
            raise DivisionError(f"{q} does not divide {p}")
        c = _coeff(Fraction(rem.pop(lead)) / cq)
        quot[shift] = c
        for m, cm in rest:
            mm = tuple(a + b for a, b in zip(m, shift))
            v = rem.get(mm, 0) - c * cm
            if v:
                rem[mm] = _coeff(v)
            else:
                rem.pop(mm, None)
    return RationalPoly._raw(p.vars, quot)


def substitute(
    p: RationalPoly,
    bindings: Mapping[str, RationalPoly | Number],
    target_vars: Iterable[str] | None = None,
) -> RationalPoly:
    """Compose ``p`` with the given bindings, one per variable of ``p``.

    Bindings may be polynomials over ``target_vars`` or plain numbers.  When
    ``target_vars`` is omitted it is taken from the first polynomial binding.
    """
    missing = [v for v in p.vars if v not in bindings]
    if missing:
        raise ValueError(f"unbound variables: {missing}")
    if target_vars is None:
        polys = [b for b in bindings.values() if isinstance(b, RationalPoly)]
        target_vars = polys[0].vars if polys else ()
    target_vars = tuple(target_vars)
    images = []
    for v in p.vars:
        b = bindings[v]
        if isinstance(b, RationalPoly):
            if b.vars != target_vars:
                b = b.with_vars(target_vars)
        else:
            b = RationalPoly.const(b, target_vars)
        images.append(b)
    cache: list[dict[int, RationalPoly]] = [{0: RationalPoly.const(1, target_vars), 1: b} for b in images]

    def power(i: int, e: int) -> RationalPoly:
        c = cache[i]
        if e not in c:
            c[e] = power(i, e // 2) * power(i, e - e // 2)
        return c[e]

    total: dict[Monomial, Number] = {}
    for mono, coef in p._terms.items():
        term = RationalPoly.const(coef, target_vars)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
        for m, c in term._terms.items():
            total[m] = total.get(m, 0) + c
    return RationalPoly._raw(target_vars, {m: _coeff(c) for m, c in total.items() if c})


def scale_exponents(p: RationalPoly, k: int, vars: Iterable[str] | None = None) -> RationalPoly:
    """Return ``p(v**k, ...)``: multiply the exponents of ``vars`` (default all) by ``k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    sel = set(p.vars if vars is None else vars)
    flags = [v in sel for v in p.vars]
    terms: dict[Monomial, Number] = {}
    for m, c in p._terms.items():
        mm = tuple(e * k if f else e for e, f in zip(m, flags))
        terms[mm] = terms.get(mm, 0) + c
    return RationalPoly._raw(p.vars, {m: _coeff(c) for m, c in terms.items() if c})


def truncate(p: RationalPoly, degree: int, vars: Iterable[str] | None = None) -> RationalPoly:
    """Drop every term whose degree in ``vars`` (default: total degree) exceeds ``degree``."""
    sel = set(p.vars if vars is None else vars)
    idx = [i for i, v in enumerate(p.vars) if v in sel]
    return RationalPoly._raw(
        p.vars, {m: c for m, c in p._terms.items() if sum(m[i] for i in idx) <= degree}
    )


# -- truncated power series in an auxiliary variable ----------------------


@dataclass(frozen=True)
class SeriesTruncation:
    """Power series ``sum_k coeffs[k] * y**k`` known modulo ``y**(order+1)``."""

    order: int
    coeffs: tuple[RationalPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"need {self.order + 1} coefficients, got {len(self.coeffs)}")
        vs = {c.vars for c in self.coeffs}
        if len(vs) > 1:
            raise ValueError(f"coefficients over different variable lists: {vs}")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.coeffs[0].vars

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalPoly], order: int | None = None) -> SeriesTruncation:
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        vars = coeffs[0].vars
        coeffs = coeffs[: order + 1] + [RationalPoly(vars)] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    def __getitem__(self, k: int) -> RationalPoly:
        return self.coeffs[k]

    def __add__(self, other: SeriesTruncation) -> SeriesTruncation:
        n = min(self.order, other.order)
        return SeriesTruncation(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __mul__(self, other: SeriesTruncation) -> SeriesTruncation:
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = RationalPoly(self.vars)
            for i in range(k + 1):
                if self.coeffs[i] and other.coeffs[k - i]:
                    acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return SeriesTruncation(n, tuple(out))


def series_derivative(s: SeriesTruncation) -> SeriesTruncation:
    """d/dy, known to one order less."""
    if s.order == 0:
        raise ValueError("derivative of an order-0 truncation carries no information")
    return SeriesTruncation(s.order - 1, tuple(k * s.coeffs[k] for k in range(1, s.order + 1)))


def series_exp(
    s: SeriesTruncation, trim: Callable[[RationalPoly], RationalPoly] | None = None
) -> SeriesTruncation:
    """exp of a series with zero constant term, via ``n e_n = sum_k k s_k e_{n-k}``.

    ``trim`` is applied to every coefficient as it is produced; pass a
    truncation when the coefficients are themselves power series.
    """
    if s.coeffs[0]:
        raise ValueError("series_exp needs a zero constant term")
    trim = trim or (lambda p: p)
    e = [RationalPoly.const(1, s.vars)]
    for n in range(1, s.order + 1):
        acc = RationalPoly(s.vars)
        for k in range(1, n + 1):
            if s.coeffs[k] and e[n - k]:
                acc = acc + k * (s.coeffs[k] * e[n - k])
        e.append(trim(acc / n))
    return SeriesTruncation(s.order, tuple(e))
