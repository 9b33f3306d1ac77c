"""Linear recurrence sequences and how the Invert family acts on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .seqcore import Coloration, IntSequence
from .transforms import Scalar, invert_interpolated_exact

Number = Union[int, Fraction]


def _norm(v) -> Number:
    v = Fraction(v)
    return int(v) if v.denominator == 1 else v


@dataclass(frozen=True)
class LinearRecurrence:
    """``a_m = h_1 a_{m-1} + ... + h_r a_{m-r}`` with initials ``a_0..a_{r-1}``."""

    coeffs: Tuple[Number, ...]
    initials: Tuple[Number, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_norm(h) for h in self.coeffs)
        initials = tuple(_norm(a) for a in self.initials)
        if not coeffs or len(coeffs) != len(initials):
            raise ValueError("need equally many (>= 1) coefficients and initial terms")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "initials", initials)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def terms(self, n_terms: int) -> List[Number]:
        out = list(self.initials[:n_terms])
        r = self.order
        while len(out) < n_terms:
            m = len(out)
            out.append(_norm(sum(Fraction(h) * out[m - i] for i, h in enumerate(self.coeffs, 1))))
        return out

    def characteristic_polynomial(self) -> Tuple[Number, ...]:
        """Coefficients of ``t^r - h_1 t^{r-1} - ... - h_r``, highest degree first."""
        return (1,) + tuple(-h for h in self.coeffs)


def generate(rec: LinearRecurrence, n_terms: int) -> IntSequence:
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    vals = rec.terms(n_terms)
    if any(isinstance(v, Fraction) for v in vals):
        raise ValueError("recurrence has non-integer terms; use rec.terms()")
    return IntSequence(vals)


def invert_linrec(rec: LinearRecurrence, x: Scalar) -> LinearRecurrence:
    """Recurrence satisfied by the interpolated Invert (parameter ``x``) of ``rec``.

    New coefficients are ``h_1 + x a_0`` and
    ``h_{i+1} + x (a_i - sum_{j=1}^{i} h_j a_{i-j})``; the initial terms are
    obtained by running the Invert recurrence on the first ``r`` terms.
    """
    x = Fraction(x)
    h, a, r = rec.coeffs, rec.initials, rec.order
    new = [h[0] + x * a[0]]
    for i in range(1, r):
        u_i = a[i] - sum(h[j - 1] * a[i - j] for j in range(1, i + 1))
        new.append(h[i] + x * u_i)
    inits = invert_interpolated_exact(a, x, r)
    return LinearRecurrence(tuple(new), inits)


def constant_recurrence(k: int) -> LinearRecurrence:
    """``(k, k, k, ...)``: characteristic polynomial ``t - 1``."""
    return LinearRecurrence((1,), (k,))


def avoid_part_coloration(k: int) -> Coloration:
    """One color for every part size except ``k``, which is forbidden."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Coloration((1,) * (k - 1) + (0,), (1,))


def avoid_part_recurrence(k: int) -> LinearRecurrence:
    """The coloration ``(1, ..., 1, 0, 1, 1, ...)`` as an order ``k+1`` recurrence
    with characteristic polynomial ``t^{k+1} - t^k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return LinearRecurrence((1,) + (0,) * k, (1,) * (k - 1) + (0, 1))


def rbonacci_recurrence(r: int) -> LinearRecurrence:
    if r < 2:
        raise ValueError("r-bonacci needs r >= 2")
    return LinearRecurrence((1,) * r, (0,) * (r - 1) + (1,))


def rbonacci(r: int, n_terms: int) -> IntSequence:
    """First ``n_terms`` r-bonacci numbers, 0-based.

    Stored index ``i`` is ``F^{(r)}_{i+1}`` in the 1-based convention where
    the first ``r`` terms are ``0, ..., 0, 1``.
    """
    return generate(rbonacci_recurrence(r), n_terms)


def rbonacci_inverse_identity_check(r: int, n_terms: int, shift: int = 0) -> bool:
    """Check ``I^{(-1)}(F^{(r+1)}) == (0, F^{(r)}_1, F^{(r)}_2, ...)`` on a prefix.

    ``shift`` drops leading terms of the ``F^{(r+1)}`` input; anything but 0
    misaligns the identity.
    """
    if r < 2 or n_terms < 3:
        raise ValueError("need r >= 2 and n_terms >= 3")
    src = rbonacci(r + 1, n_terms + shift)[shift:]
    lhs = invert_interpolated_exact(src, -1, n_terms)
    rhs = (0,) + rbonacci(r, n_terms - 1).terms
    return list(lhs) == list(rhs)


def satisfies_recurrence(seq: Sequence[int], coeffs: Sequence[int], start: int) -> bool:
    """True when ``seq[m] == sum_i coeffs[i-1] * seq[m-i]`` for every ``m >= start``."""
    r = len(coeffs)
    start = max(start, r)
    return all(
        seq[m] == sum(h * seq[m - i] for i, h in enumerate(coeffs, 1))
        for m in range(start, len(seq))
    )
