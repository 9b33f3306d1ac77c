"""The Invert transform, its interpolated family and the coloration test."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .seqcore import Coloration, IntSequence, SeqLike, as_sequence

Scalar = Union[int, Fraction]


class InsufficientTermsError(ValueError):
    pass


class RepresentationError(ValueError):
    """A rational result was requested as an integer sequence."""


def invert_interpolated_exact(a: SeqLike, x: Scalar, n_terms: int) -> Tuple[Fraction, ...]:
    """``b_0 = a_0``, ``b_n = a_n + x * sum_{j<n} a_{n-1-j} b_j`` in rationals.

    Input terms may themselves be rationals.
    """
    a = tuple(a)
    if n_terms > len(a):
        raise InsufficientTermsError(f"need {n_terms} input terms, got {len(a)}")
    x = Fraction(x)
    b = []
    for n in range(n_terms):
        acc = sum((a[n - 1 - j] * b[j] for j in range(n)), Fraction(0))
        b.append(a[n] + x * acc)
    return tuple(b)


def invert_interpolated(a: SeqLike, x: Scalar, n_terms: Optional[int] = None) -> IntSequence:
    """Interpolated Invert with generating function ``a(t)/(1 - x t a(t))``.

    ``n_terms`` defaults to the input length.
    """
    a = as_sequence(a)
    n_terms = len(a) if n_terms is None else n_terms
    if isinstance(x, int) or Fraction(x).denominator == 1:
        # integral fast path; same recurrence
        x = int(x)
        b: list = []
        if n_terms > len(a):
            raise InsufficientTermsError(f"need {n_terms} input terms, got {len(a)}")
        t = a.terms
        for n in range(n_terms):
            b.append(t[n] + x * sum(t[n - 1 - j] * b[j] for j in range(n)))
        return IntSequence(tuple(b))
    exact = invert_interpolated_exact(a, x, n_terms)
    for i, v in enumerate(exact):
        if v.denominator != 1:
            raise RepresentationError(f"term {i} is {v}, not an integer")
    return IntSequence(tuple(int(v) for v in exact))


def invert(a: SeqLike, n_terms: Optional[int] = None) -> IntSequence:
    return invert_interpolated(a, 1, n_terms)


def inverse_invert(a: SeqLike, n_terms: Optional[int] = None) -> IntSequence:
    return invert_interpolated(a, -1, n_terms)


@dataclass(frozen=True)
class ColorationVerdict:
    """Outcome of testing whether a prefix counts colored compositions.

    The verdict only concerns the supplied prefix. ``inverse`` is the
    inverse-Invert of that prefix; when it has a negative term
    ``witness_index``/``witness_value`` name the first one.
    """

    inverse: IntSequence
    coloration: Optional[Coloration] = None
    witness_index: Optional[int] = None
    witness_value: Optional[int] = None

    @property
    def is_coloration(self) -> bool:
        return self.coloration is not None


def coloration_of(a: SeqLike) -> ColorationVerdict:
    """Recover the coloration whose counts ``A_1, A_2, ...`` are ``a``."""
    a = as_sequence(a)
    if len(a) < 1:
        raise InsufficientTermsError("need at least one term")
    c = inverse_invert(a)
    for i, v in enumerate(c):
        if v < 0:
            return ColorationVerdict(c, witness_index=i, witness_value=v)
    return ColorationVerdict(c, coloration=Coloration.finite(c.terms))


def count_from_coloration(X: Coloration, n_terms: int) -> IntSequence:
    """``(A_1(X), ..., A_{n_terms}(X))`` via the Invert transform.

    Output index ``n`` holds the count for the integer ``n + 1``.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    return invert(X.as_sequence(n_terms), n_terms)
