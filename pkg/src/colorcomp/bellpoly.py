"""Ordinary Bell polynomials as exact sparse multivariate polynomials."""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

Exponents = Tuple[int, ...]


def multiplicity_vectors(n: int, nparts: Optional[int] = None) -> Iterator[Exponents]:
    """Yield every ``(k_1, ..., k_n) >= 0`` with ``sum j*k_j == n``.

    With ``nparts`` given, only vectors with ``sum k_j == nparts`` are kept.
    Part sizes are chosen largest first; ``k_1`` absorbs the remainder.
    """
    if n == 0:
        if not nparts:
            yield ()
        return
    k = [0] * n

    def descend(size: int, remaining: int, used: int) -> Iterator[Exponents]:
        if size == 1:
            if nparts is None or used + remaining == nparts:
                k[0] = remaining
                yield tuple(k)
            return
        for c in range(remaining // size + 1):
            if nparts is not None and used + c > nparts:
                break
            k[size - 1] = c
            yield from descend(size - 1, remaining - c * size, used + c)
        k[size - 1] = 0

    yield from descend(n, n, 0)


def multinomial(ks: Sequence[int]) -> int:
    """``(k_1 + ... + k_m)! / (k_1! ... k_m!)``."""
    return factorial(sum(ks)) // prod(factorial(k) for k in ks)


class SparseMultiPoly:
    """Polynomial with integer coefficients in ``nvars`` variables.

    Terms map dense exponent vectors to non-zero coefficients. Instances are
    treated as immutable.
    """

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[Exponents, int], nvars: int):
        clean: Dict[Exponents, int] = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != nvars or any(v < 0 for v in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars: int) -> "SparseMultiPoly":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> "SparseMultiPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparseMultiPoly":
        """The variable with 1-based index ``i``."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls({tuple(e): 1}, nvars)

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: "SparseMultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparseMultiPoly") -> "SparseMultiPoly":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparseMultiPoly(out, self.nvars)

    def __mul__(self, other) -> "SparseMultiPoly":
        if isinstance(other, int):
            return SparseMultiPoly({e: c * other for e, c in self._terms.items()}, self.nvars)
        self._check(other)
        out: Dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparseMultiPoly(out, self.nvars)

    __rmul__ = __mul__

    def derivative(self, var_index: int) -> "SparseMultiPoly":
        """Formal partial derivative in the variable with 1-based index."""
        if not 1 <= var_index <= self.nvars:
            raise IndexError(f"variable index {var_index} out of range 1..{self.nvars}")
        i = var_index - 1
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return SparseMultiPoly(out, self.nvars)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        return sum(c * prod(p**k for p, k in zip(point, e) if k) for e, c in self._terms.items())

    def sorted_terms(self):
        """Terms by descending total degree, then ascending exponent vector."""
        return sorted(self._terms.items(), key=lambda ec: (-sum(ec[0]), ec[0]))

    def render(self, symbol: str = "t") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = [f"{symbol}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SparseMultiPoly({self.render()!r}, nvars={self.nvars})"


def bell_partial(n: int, k: int) -> SparseMultiPoly:
    """Partial ordinary Bell polynomial ``B_{n,k}(t_1, ..., t_n)``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return SparseMultiPoly({e: multinomial(e) for e in multiplicity_vectors(n, k)}, n)


def bell_complete(n: int) -> SparseMultiPoly:
    if n < 1:
        raise ValueError("n must be >= 1")
    total = SparseMultiPoly.zero(n)
    for k in range(1, n + 1):
        total = total + bell_partial(n, k)
    return total


@lru_cache(maxsize=None)
def _composition_polys(n: int) -> Tuple[SparseMultiPoly, ...]:
    # A_m over n variables for m = 0..n
    xs = [SparseMultiPoly.variable(i, n) for i in range(1, n + 1)]
    A = [SparseMultiPoly.constant(1, n)]
    for m in range(1, n + 1):
        acc = SparseMultiPoly.zero(n)
        for i in range(1, m + 1):
            acc = acc + xs[i - 1] * A[m - i]
        A.append(acc)
    return tuple(A)


def composition_polynomial(n: int) -> SparseMultiPoly:
    """``A_n(x_1, ..., x_n)`` from ``A_m = x_1 A_{m-1} + ... + x_m``, ``A_0 = 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _composition_polys(n)[n]


def partial_derivative(p: SparseMultiPoly, var_index: int) -> SparseMultiPoly:
    return p.derivative(var_index)


def evaluate(p: SparseMultiPoly, point: Sequence[int]) -> int:
    return p.evaluate(point)
