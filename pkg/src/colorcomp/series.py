"""Truncated power series over exact rationals.

Kept deliberately naive: these routines serve as an independent check on
the recurrence-based transforms.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence


def series_mul(f: Sequence, g: Sequence, n_terms: int) -> List[Fraction]:
    out = [Fraction(0)] * n_terms
    for i, fi in enumerate(f[:n_terms]):
        if fi == 0:
            continue
        for j, gj in enumerate(g[: n_terms - i]):
            out[i + j] += fi * gj
    return out


def series_div(num: Sequence, den: Sequence, n_terms: int) -> List[Fraction]:
    """Long division ``num / den`` to ``n_terms`` coefficients.

    ``den[0]`` must be non-zero.
    """
    if not den or den[0] == 0:
        raise ZeroDivisionError("series denominator has zero constant term")
    rem = [Fraction(c) for c in num[:n_terms]] + [Fraction(0)] * max(0, n_terms - len(num))
    lead = Fraction(den[0])
    quot = []
    for i in range(n_terms):
        q = rem[i] / lead
        quot.append(q)
        if q:
            for j in range(1, min(len(den), n_terms - i)):
                rem[i + j] -= q * den[j]
    return quot


def interpolated_invert_series(a: Sequence[int], x, n_terms: int) -> List[Fraction]:
    """Coefficients of ``a(t) / (1 - x t a(t))``."""
    x = Fraction(x)
    den = [Fraction(1)] + [-x * Fraction(c) for c in a[: n_terms - 1]]
    return series_div(a, den, n_terms)
