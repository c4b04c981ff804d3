"""Self-checks run by ``nilhodge verify``: each suite returns ``(ok, detail)``."""

from __future__ import annotations

from typing import Callable

from .algebra import RationalPoly, substitute
from .exotic import ExoticSpec, component_count, mu_char_exotic, mu_rep_exotic
from .goldens import CORRECTIONS, MU_REP_DISPLAYS, golden
from .invariants import (
    TUV,
    counting_poly,
    mu_char,
    mu_char_compact,
    mu_rep,
    specialize,
    to_tuv,
)
from .recursion import (
    mu_char_gl_pe,
    mu_char_gl_recursive,
    mu_rep_gl_pe,
    mu_rep_gl_recursive,
)
from .weyl import (
    BRUTE_FORCE_CAP,
    LAM,
    brute_force_table,
    classes_type_A,
    classes_type_C,
    parse_group,
)

_x = RationalPoly.var("x", ("x", "w"))


def mirror(p: RationalPoly, n: int) -> RationalPoly | None:
    """``(t^2 uv)^n * p(1/t, 1/u, 1/v)``, or None when that is not a polynomial."""
    terms = {}
    for (a, b, c), coef in p.terms.items():
        mono = (2 * n - a, n - b, n - c)
        if min(mono) < 0:
            return None
        terms[mono] = coef
    return RationalPoly(TUV, terms)


def counting_from_compact(mu_c: RationalPoly) -> RationalPoly:
    """``mu_c(-1, sqrt(x), sqrt(x))``: needs equal u and v exponents."""
    terms: dict[tuple[int], int] = {}
    for (a, b, c), coef in mu_c.terms.items():
        if b != c:
            raise ValueError(f"monomial t^{a} u^{b} v^{c} is not balanced")
        terms[(b,)] = terms.get((b,), 0) + (-1) ** a * coef
    return RationalPoly(("x",), terms)


def e_poly_closed_form(table, r: int) -> RationalPoly:
    """``1/|W| prod (1 - (uv)^d) sum_g det(I - uv A_g)^(r-1)`` in ``(u, v)``."""
    total = RationalPoly(LAM)
    for cp, size in table.merged().items():
        total = total + size * cp ** (r - 1)
    total = table.coinvariant_factor() * total / table.order
    u, v = RationalPoly.gens(("u", "v"))
    return substitute(total, {"lam": u * v}, ("u", "v"))


def is_hodge_tate(p: RationalPoly) -> bool:
    return all(b == c for (_, b, c) in p.terms)


def is_round(p: RationalPoly) -> bool:
    return all(a == b == c for (a, b, c) in p.terms)


def nonneg_integral(p: RationalPoly) -> bool:
    return p.coefficients_integral() and all(c >= 0 for c in p.terms.values())


def supported_tables(max_n: int):
    """``(label, table)`` for GL(n), SL(n) (n >= 2) and Sp(2n) up to ``max_n``."""
    for n in range(1, max_n + 1):
        yield f"GL:{n}", classes_type_A(n, "GL")
        if n >= 2:
            yield f"SL:{n}", classes_type_A(n, "SL")
        yield f"Sp:{2 * n}", classes_type_C(n)


def suite_weyl(max_n: int = 4, max_r: int = 3) -> tuple[bool, str]:
    bad = []
    checked = 0
    for fam, cap in BRUTE_FORCE_CAP.items():
        for n in range(1, min(max_n, cap) + 1):
            brute = brute_force_table(fam, n)
            ref = classes_type_C(n) if fam == "C" else classes_type_A(n, fam[2:])
            checked += 1
            if brute.merged() != ref.merged():
                bad.append(f"{fam}{n}")
    return not bad, f"{checked} tables vs enumeration" + (f"; mismatched {bad}" if bad else "")


def suite_recursion(max_n: int = 6, max_r: int = 3) -> tuple[bool, str]:
    bad = []
    for n in range(1, max_n + 1):
        table = classes_type_A(n, "GL")
        for r in range(1, max_r + 1):
            rep, char = mu_rep(table, r), mu_char(table, r)
            routes = {
                "phi": mu_rep_gl_recursive(n, r, "phi") == rep,
                "mu": mu_rep_gl_recursive(n, r, "mu") == rep,
                "pe-rep": mu_rep_gl_pe(n, r) == rep,
                "nu": mu_char_gl_recursive(n, r) == char,
                "pe-char": mu_char_gl_pe(n, r) == char,
            }
            bad += [f"{k}(n={n},r={r})" for k, ok in routes.items() if not ok]
    return not bad, f"n<={max_n}, r<={max_r}" + (f"; failed {bad}" if bad else "")


def suite_gl_sl(max_n: int = 6, max_r: int = 4) -> tuple[bool, str]:
    bad = []
    for n in range(1, max_n + 1):
        gl, sl = classes_type_A(n, "GL"), classes_type_A(n, "SL")
        for r in range(1, max_r + 1):
            torus = (1 + _x) ** r
            if mu_rep(gl, r) != torus * mu_rep(sl, r):
                bad.append(f"rep(n={n},r={r})")
            if mu_char(gl, r) != torus * mu_char(sl, r):
                bad.append(f"char(n={n},r={r})")
    return not bad, f"n<={max_n}, r<={max_r}" + (f"; failed {bad}" if bad else "")


def _duality_tables(max_n: int):
    for n in range(2, max_n + 1):
        yield f"SL:{n}", classes_type_A(n, "SL")
    yield "Sp:4", classes_type_C(2)


def suite_duality(max_n: int = 4, max_r: int = 3) -> tuple[bool, str]:
    bad = []
    for label, table in _duality_tables(max_n):
        for r in range(1, max_r + 1):
            mc = mu_char_compact(table, r)
            if mirror(to_tuv(mu_char(table, r)), r * table.rank) != mc:
                bad.append(f"dual {label} r={r}")
            if counting_from_compact(mc) != counting_poly(table, r):
                bad.append(f"count {label} r={r}")
    return not bad, f"SL(n<={max_n}), Sp(4), r<={max_r}" + (f"; failed {bad}" if bad else "")


def suite_specializations(max_n: int = 4, max_r: int = 4) -> tuple[bool, str]:
    bad = []
    for label, table in supported_tables(max_n):
        for r in range(1, max_r + 1):
            mu = to_tuv(mu_rep(table, r))
            if specialize("euler_char", mu) != 0:
                bad.append(f"euler {label} r={r}")
            if specialize("total_dim", mu) != 2 ** (table.rank * r):
                bad.append(f"total {label} r={r}")
            if specialize("e_poly", mu) != e_poly_closed_form(table, r):
                bad.append(f"E {label} r={r}")
    return not bad, f"n<={max_n}, r<={max_r}" + (f"; failed {bad}" if bad else "")


def suite_integrality(max_n: int = 5, max_r: int = 4) -> tuple[bool, str]:
    # mu_* raise IntegralityError on fractional output; nonnegativity checked here
    bad = []
    for label, table in supported_tables(max_n):
        for r in range(1, max_r + 1):
            for name, fn in (("rep", mu_rep), ("char", mu_char)):
                if not nonneg_integral(fn(table, r)):
                    bad.append(f"{name} {label} r={r}")
    return not bad, f"n<={max_n}, r<={max_r}" + (f"; failed {bad}" if bad else "")


def suite_hodge_tate(max_n: int = 5, max_r: int = 4) -> tuple[bool, str]:
    bad = []
    for label, table in supported_tables(max_n):
        for r in range(1, max_r + 1):
            if not is_hodge_tate(to_tuv(mu_rep(table, r))):
                bad.append(f"rep {label} r={r}")
            if not is_round(to_tuv(mu_char(table, r))):
                bad.append(f"char {label} r={r}")
    return not bad, f"n<={max_n}, r<={max_r}" + (f"; failed {bad}" if bad else "")


def suite_paper_golden(max_n: int = 4, max_r: int = 4) -> tuple[bool, str]:
    bad = []
    for key in MU_REP_DISPLAYS:
        table = parse_group(key).table()
        for r in range(1, max_r + 1):
            if mu_rep(table, r) != golden(key, r):
                bad.append(f"{key} r={r}")
    detail = f"{len(MU_REP_DISPLAYS)} displays, r<={max_r}"
    if CORRECTIONS:
        fixed = ", ".join(f"{k} ({len(v)} factors)" for k, v in CORRECTIONS.items())
        detail += f"; misprints corrected in {fixed}"
    return not bad, detail + (f"; failed {bad}" if bad else "")


def suite_exotic(max_n: int = 4, max_r: int = 6) -> tuple[bool, str]:
    bad = []
    for p in (2, 3, 5, 7, 11, 13):
        for m in range(1, 5):
            for r in range(1, max_r + 1):
                try:
                    component_count(ExoticSpec(p, m, r))
                except ArithmeticError:
                    bad.append(f"N({p},{m}) r={r}")
    for p, m, r in ((2, 1, 2), (2, 2, 2), (3, 1, 3), (3, 2, 2)):
        spec = ExoticSpec(p, m, r)
        mu = to_tuv(mu_rep_exotic(spec))
        if specialize("euler_char", mu) != 0:
            bad.append(f"euler {spec}")
        n_comp = component_count(spec)
        if specialize("total_dim", mu) != 2 ** ((p - 1) * r * m) + n_comp * 2 ** ((p - 1) * m):
            bad.append(f"total {spec}")
    x = RationalPoly.var("x", ("x", "w"))
    if mu_char_exotic(ExoticSpec(2, 1, 2)) != 2 + x**2:
        bad.append("mu_char_exotic(2,1,2)")
    return not bad, "N integral for p<=13, m<=4" + (f"; failed {bad}" if bad else "")


SUITES: dict[str, Callable[..., tuple[bool, str]]] = {
    "weyl": suite_weyl,
    "recursion": suite_recursion,
    "gl-sl": suite_gl_sl,
    "duality": suite_duality,
    "specializations": suite_specializations,
    "integrality": suite_integrality,
    "hodge-tate": suite_hodge_tate,
    "paper-golden": suite_paper_golden,
    "exotic": suite_exotic,
}


def run(names, max_n: int | None = None, max_r: int | None = None) -> list[tuple[str, bool, str]]:
    results = []
    for name in names:
        fn = SUITES[name]
        kwargs = {}
        if max_n is not None:
            kwargs["max_n"] = max_n
        if max_r is not None:
            kwargs["max_r"] = max_r
        ok, detail = fn(**kwargs)
        results.append((name, ok, detail))
    return results

