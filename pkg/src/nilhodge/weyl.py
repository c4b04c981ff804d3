"""Conjugacy-class data for the Weyl groups of GL(n), SL(n), Sp(2n) and tori.

A class is summarised by the characteristic polynomial ``det(I - lam*A_g)``
of its action on the dual Cartan, stored as a univariate
:class:`~nilhodge.algebra.RationalPoly` in ``lam``.  Every formula in this
package sees ``A_g`` only through that polynomial, so classes with equal
char polys are interchangeable and get merged.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .algebra import RationalPoly, poly_div_exact, substitute

LAM = ("lam",)
_lam = RationalPoly.var("lam", LAM)
_one = RationalPoly.const(1, LAM)

# enumeration caps for the brute-force oracle (|W| = n! resp. 2^n n!)
BRUTE_FORCE_CAP = {"A-GL": 6, "A-SL": 6, "C": 4}

__all__ = [
    "CyclePattern",
    "WeylClass",
    "WeylClassTable",
    "GroupDescriptor",
    "partitions",
    "classes_type_A",
    "classes_type_C",
    "trivial_table",
    "char_poly",
    "brute_force_table",
    "product_table",
    "atom_table",
    "parse_group",
]


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, lexicographically decreasing."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class CyclePattern:
    """Cycle lengths of a (signed) permutation.

    A positive ``j``-cycle contributes ``1 - lam**j`` to ``det(I - lam*A)``,
    a negative one ``1 + lam**j``.  ``reduced`` marks the SL(n) action on the
    sum-zero hyperplane, where one factor ``1 - lam`` is divided out.
    """

    positive: tuple[int, ...] = ()
    negative: tuple[int, ...] = ()
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "positive", tuple(sorted(self.positive, reverse=True)))
        object.__setattr__(self, "negative", tuple(sorted(self.negative, reverse=True)))
        if any(j <= 0 for j in self.positive + self.negative):
            raise ValueError("cycle lengths must be positive")
        if self.reduced and not self.positive:
            raise ValueError("a reduced pattern needs a positive cycle to divide out")

    @property
    def size(self) -> int:
        return sum(self.positive) + sum(self.negative)

    def charpoly(self) -> RationalPoly:
        p = _one
        for j in self.positive:
            p = p * (1 - _lam**j)
        for j in self.negative:
            p = p * (1 + _lam**j)
        if self.reduced:
            p = poly_div_exact(p, 1 - _lam)
        return p


@dataclass(frozen=True)
class WeylClass:
    charpoly: RationalPoly
    size: int
    pattern: CyclePattern | tuple | None = None


@dataclass(frozen=True)
class WeylClassTable:
    """Weyl group class data acting on a space of dimension ``rank``."""

    family: str
    n: int
    rank: int
    classes: tuple[WeylClass, ...]
    order: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        total = sum(c.size for c in self.classes)
        if total != self.order:
            raise ValueError(f"class sizes sum to {total}, expected |W| = {self.order}")
        if len(self.exponents) != self.rank:
            raise ValueError(f"{len(self.exponents)} exponents for rank {self.rank}")
        for c in self.classes:
            if c.charpoly.degree() > self.rank or c.charpoly.constant_term() != 1:
                raise ValueError(f"bad characteristic polynomial {c.charpoly}")

    def merged(self) -> dict[RationalPoly, int]:
        """Class sizes summed over equal characteristic polynomials."""
        out: dict[RationalPoly, int] = {}
        for c in self.classes:
            out[c.charpoly] = out.get(c.charpoly, 0) + c.size
        return out

    def coinvariant_factor(self) -> RationalPoly:
        """``prod_i (1 - lam**d_i)`` over the characteristic exponents."""
        p = _one
        for d in self.exponents:
            p = p * (1 - _lam**d)
        return p


def classes_type_A(n: int, variant: str = "GL") -> WeylClassTable:
    """S_n acting on C^n (``GL``) or on the sum-zero hyperplane (``SL``)."""
    if n < 1:
        raise ValueError(f"type A needs n >= 1, got {n}")
    if variant not in ("GL", "SL"):
        raise ValueError(f"variant must be GL or SL, got {variant!r}")
    reduced = variant == "SL"
    classes = []
    for lam in partitions(n):
        mult = Counter(lam)
        central = math.prod(math.factorial(a) * j**a for j, a in mult.items())
        pat = CyclePattern(positive=lam, reduced=reduced)
        classes.append(WeylClass(pat.charpoly(), math.factorial(n) // central, pat))
    if reduced:
        rank, exps = n - 1, tuple(range(2, n + 1))
    else:
        rank, exps = n, tuple(range(1, n + 1))
    return WeylClassTable(f"A-{variant}", n, rank, tuple(classes), math.factorial(n), exps)


def classes_type_C(n: int) -> WeylClassTable:
    """The hyperoctahedral group C_n = (Z/2)^n x| S_n acting on C^n by signed permutations."""
    if n < 1:
        raise ValueError(f"type C needs n >= 1, got {n}")
    classes = []
    for k in range(n + 1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                central = 1
                for part in (alpha, beta):
                    for j, a in Counter(part).items():
                        central *= (2 * j) ** a * math.factorial(a)
                pat = CyclePattern(positive=alpha, negative=beta)
                size = 2**n * math.factorial(n) // central
                classes.append(WeylClass(pat.charpoly(), size, pat))
    return WeylClassTable(
        "C", n, n, tuple(classes), 2**n * math.factorial(n), tuple(range(2, 2 * n + 1, 2))
    )


def trivial_table(k: int) -> WeylClassTable:
    """Trivial Weyl group of a rank-``k`` torus (exponents all 1, as for GL(1)^k)."""
    if k < 0:
        raise ValueError("torus rank must be nonnegative")
    pat = CyclePattern(positive=(1,) * k)
    return WeylClassTable("trivial", k, k, (WeylClass(pat.charpoly(), 1, pat),), 1, (1,) * k)


def char_poly(pattern: CyclePattern | RationalPoly, sign: str, scalar: RationalPoly) -> RationalPoly:
    """``det(I - s*A)`` (sign ``minus``) or ``det(I + s*A)`` (sign ``plus``) for ``s = scalar``."""
    cp = pattern.charpoly() if isinstance(pattern, CyclePattern) else pattern
    if sign == "minus":
        image = scalar
    elif sign == "plus":
        image = -scalar
    else:
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    return substitute(cp, {"lam": image}, scalar.vars)


# -- brute-force oracle ---------------------------------------------------


def _signed_permutation_matrices(n: int, signed: bool) -> np.ndarray:
    perms = list(itertools.permutations(range(n)))
    signs = list(itertools.product((1, -1), repeat=n)) if signed else [(1,) * n]
    mats = np.zeros((len(perms) * len(signs), n, n), dtype=np.int64)
    cols = np.arange(n)
    g = 0
    for perm in perms:
        for sg in signs:
            mats[g, list(perm), cols] = sg
            g += 1
    return mats


def _interpolate(values: Sequence[int]) -> RationalPoly:
    """The polynomial of degree < len(values) taking ``values[i]`` at ``lam = i``."""
    m = len(values)
    coeffs = [Fraction(0)] * m
    for i, yi in enumerate(values):
        if not yi:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j in range(m):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= j * basis[t + 1]
            denom *= i - j
        for t in range(m):
            coeffs[t] += Fraction(yi, denom) * basis[t]
    return RationalPoly(LAM, {(t,): c for t, c in enumerate(coeffs)})


def brute_force_table(family: str, n: int) -> WeylClassTable:
    """Enumerate every group element, compute ``det(I - lam*A)`` numerically-exactly, group.

    ``family`` is ``A-GL``, ``A-SL``, ``C`` or ``trivial``.  The char poly is
    recovered by evaluating integer determinants at ``lam = 0..dim`` and
    interpolating; for ``A-SL`` it is then divided by ``1 - lam``.
    """
    if family == "trivial":
        return trivial_table(n)
    if family not in BRUTE_FORCE_CAP:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if n > BRUTE_FORCE_CAP[family]:
        raise ValueError(f"{family} n={n} exceeds the enumeration cap {BRUTE_FORCE_CAP[family]}")
    mats = _signed_permutation_matrices(n, signed=family == "C")
    values = _kernels.det_shifted(mats, np.arange(n + 1))
    rows, counts = np.unique(values, axis=0, return_counts=True)
    classes = []
    for row, count in zip(rows, counts):
        cp = _interpolate([int(v) for v in row])
        if family == "A-SL":
            cp = poly_div_exact(cp, 1 - _lam)
        classes.append(WeylClass(cp, int(count)))
    reference = classes_type_C(n) if family == "C" else classes_type_A(n, family[2:])
    return WeylClassTable(
        family, n, reference.rank, tuple(classes), len(mats), reference.exponents
    )


def product_table(tables: Sequence[WeylClassTable]) -> WeylClassTable:
    """Class data of a direct product: char polys and sizes multiply."""
    if not tables:
        raise ValueError("product of an empty list of tables")
    if len(tables) == 1:
        return tables[0]
    merged = [t.merged() for t in tables]
    classes = []
    for combo in itertools.product(*(m.items() for m in merged)):
        cp = _one
        size = 1
        for poly, s in combo:
            cp = cp * poly
            size *= s
        classes.append(WeylClass(cp, size))
    rank = sum(t.rank for t in tables)
    return WeylClassTable(
        "product",
        rank,
        rank,
        tuple(classes),
        math.prod(t.order for t in tables),
        tuple(d for t in tables for d in t.exponents),
    )


# -- group descriptors ----------------------------------------------------

_FAMILIES = ("GL", "SL", "Sp", "T")


def atom_table(family: str, size: int) -> WeylClassTable:
    if family == "GL":
        return classes_type_A(size, "GL")
    if family == "SL":
        return classes_type_A(size, "SL")
    if family == "Sp":
        return classes_type_C(size // 2)
    if family == "T":
        return trivial_table(size)
    raise ValueError(f"unsupported family {family!r}")


@dataclass(frozen=True)
class GroupDescriptor:
    """A reductive group as a product of atoms, e.g. ``(("GL", 3), ("GL", 1))``.

    ``quotient = (p, m)`` marks SL(p)^m / Delta(p), which shares its identity
    components with SL(p)^m but has extra components (see ``exotic``).
    """

    atoms: tuple[tuple[str, int], ...]
    quotient: tuple[int, int] | None = field(default=None)

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("a group needs at least one atom")
        for fam, size in self.atoms:
            if fam not in _FAMILIES:
                raise ValueError(f"unsupported family {fam!r} (choose from {', '.join(_FAMILIES)})")
            if size < 1:
                raise ValueError(f"{fam}:{size}: size must be positive")
            if fam == "Sp" and size % 2:
                raise ValueError(f"Sp:{size}: Sp(2n) needs an even size")
        if self.quotient is not None:
            p, m = self.quotient
            if self.atoms != (("SL", p),) * m:
                raise ValueError(f"exotic marker p={p}, m={m} needs exactly {m} copies of SL:{p}")

    @classmethod
    def exotic(cls, p: int, m: int) -> GroupDescriptor:
        return cls((("SL", p),) * m, (p, m))

    def table(self) -> WeylClassTable:
        return product_table([atom_table(f, s) for f, s in self.atoms])

    @property
    def torus_rank(self) -> int:
        return sum(atom_table(f, s).rank for f, s in self.atoms)

    def __str__(self) -> str:
        if self.quotient is not None:
            return "SL(%d)^%d/Z%d" % (self.quotient[0], self.quotient[1], self.quotient[0])
        return "x".join(f"{f}:{s}" for f, s in self.atoms)


_ATOM_RE = re.compile(r"^\s*([A-Za-z]+)\s*:\s*(\d+)\s*$")


def parse_group(text: str) -> GroupDescriptor:
    """Parse ``SL:4``, ``Sp:4`` or ``GL:3xGL:1`` (``*`` also separates atoms)."""
    atoms = []
    for token in re.split(r"[x*]", text):
        mt = _ATOM_RE.match(token)
        if not mt:
            raise ValueError(f"invalid group atom {token!r} in {text!r} (expected e.g. SL:3)")
        fam = {"gl": "GL", "sl": "SL", "sp": "Sp", "t": "T"}.get(mt.group(1).lower())
        if fam is None:
            raise ValueError(f"unsupported family {mt.group(1)!r} in atom {token!r}")
        atoms.append((fam, int(mt.group(2))))
    return GroupDescriptor(tuple(atoms))

