"""Closed-form reference displays for mu_rep in (x, w), transcribed factor by factor.

Each entry is a template in the abelian rank ``r``; :func:`golden` expands
it into a polynomial.  Poincare goldens are the same displays at ``x = t``,
``w = t^2``.

The published SL(4) display has two misprinted factors: as printed it has
fractional coefficients already at r = 1.  ``CORRECTIONS`` lists the
replacements; the (2,2) class has ``det(I + xA) = (1 - x)(1 - x^2)`` and the
4-cycle ``det(I + xA) = 1 - x + x^2 - x^3``.
"""

from __future__ import annotations

from .algebra import RationalPoly, substitute

MU_REP_DISPLAYS = {
    "SL:2": "1/2*((1+w)*(1+x)^{r} + (1-w)*(1-x)^{r})",
    "SL:3": (
        "1/6*(1+2*w+2*w^2+w^3)*(1+x)^{2r}"
        " + 1/2*(1-w^3)*(1-x^2)^{r}"
        " + 1/3*(1-w-w^2+w^3)*(1-x+x^2)^{r}"
    ),
    "SL:4": (
        "1/24*(1+w)*(1+w+w^2)*(1+w+w^2+w^3)*(1+x)^{3r}"
        " + 1/4*(1+w+w^2)*(1-w^4)*(1+x)^{r}*(1-x^2)^{r}"
        " + 1/8*(1-w^3)*(1-w+w^2-w^3)*(1-x)^{r}*(1-x^2)^{2r}"
        " + 1/3*(1-w^2)*(1-w^4)*(1+x^3)^{r}"
        " + 1/4*(1-w)*(1-w^2)*(1-w^3)*(1+x+x^2+x^3)^{r}"
    ),
    "Sp:4": (
        "1/8*(1+w)*(1+w+w^2+w^3)*(1+x)^{2r}"
        " + 1/4*(1-w^2)^2*(1+x^2)^{r}"
        " + 1/8*(1-w)*(1-w+w^2-w^3)*(1-x)^{2r}"
        " + 1/2*(1-w^4)*(1-x^2)^{r}"
    ),
}


CORRECTIONS = {
    "SL:4": (
        ("(1-x)^{r}*(1-x^2)^{2r}", "(1-x)^{r}*(1-x^2)^{r}"),
        ("(1+x+x^2+x^3)^{r}", "(1-x+x^2-x^3)^{r}"),
    ),
}


def display(group: str, corrected: bool = True) -> str:
    text = MU_REP_DISPLAYS[group]
    if corrected:
        for printed, fixed in CORRECTIONS.get(group, ()):
            text = text.replace(printed, fixed)
    return text


def _instantiate(template: str, r: int) -> str:
    for k in (3, 2):
        template = template.replace("{%dr}" % k, str(k * r))
    return template.replace("{r}", str(r))


def golden(group: str, r: int, corrected: bool = True) -> RationalPoly:
    """The display for ``group`` (a key of ``MU_REP_DISPLAYS``) at abelian rank ``r``."""
    return RationalPoly.parse(_instantiate(display(group, corrected), r), ("x", "w"))


def golden_poincare(group: str, r: int, corrected: bool = True) -> RationalPoly:
    t = RationalPoly.var("t", ("t",))
    return substitute(golden(group, r, corrected), {"x": t, "w": t**2}, ("t",))
