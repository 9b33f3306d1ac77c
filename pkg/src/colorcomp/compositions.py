"""Colored and black-tie compositions: enumeration and counting formulas.

A colored composition is a tuple of ``(size, color)`` parts with colors
numbered from 1. A black-tie composition additionally holds exactly one
part ``(1, BLACK)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from math import prod
from typing import Iterator, List, Optional, Tuple

from .bellpoly import multinomial, multiplicity_vectors
from .seqcore import Coloration, IntSequence, convolve

BLACK = 0
DEFAULT_CAP = 10**6

Part = Tuple[int, int]


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded cap of {cap} objects")
        self.cap = cap


@dataclass(frozen=True)
class ColoredComposition:
    parts: Tuple[Part, ...] = ()

    @property
    def total(self) -> int:
        return sum(size for size, _ in self.parts)

    @property
    def nparts(self) -> int:
        """p(b): number of parts, the black square included."""
        return len(self.parts)

    @property
    def breakpoints(self) -> int:
        return len(self.parts) + 1

    @property
    def has_black(self) -> bool:
        return any(color == BLACK for _, color in self.parts)

    def is_valid(self, X: Coloration) -> bool:
        blacks = 0
        for size, color in self.parts:
            if size < 1:
                return False
            if color == BLACK:
                blacks += 1
                if size != 1:
                    return False
            elif not 1 <= color <= X.value_at(size):
                return False
        return blacks <= 1

    def render(self) -> str:
        return " ".join("B" if c == BLACK else f"{s}_{c}" for s, c in self.parts)

    def __str__(self) -> str:
        return self.render()


def iter_compositions(X: Coloration, n: int) -> Iterator[ColoredComposition]:
    """Every element of L_n(X), first part ascending by size then color."""
    if n < 0:
        raise ValueError("n must be >= 0")
    colors = X.values(n)

    def walk(remaining: int, acc: Tuple[Part, ...]) -> Iterator[Tuple[Part, ...]]:
        if remaining == 0:
            yield acc
            return
        for size in range(1, remaining + 1):
            for color in range(1, colors[size - 1] + 1):
                yield from walk(remaining - size, acc + ((size, color),))

    for parts in walk(n, ()):
        yield ColoredComposition(parts)


def _capped(it: Iterator[ColoredComposition], cap: int) -> List[ColoredComposition]:
    out = []
    for c in it:
        if len(out) >= cap:
            raise EnumerationCapExceeded(cap)
        out.append(c)
    return out


def enumerate_compositions(X: Coloration, n: int, cap: int = DEFAULT_CAP) -> List[ColoredComposition]:
    """L_n(X) as a list; ``n = 0`` gives the single empty composition."""
    return _capped(iter_compositions(X, n), cap)


def iter_blacktie(X: Coloration, n: int) -> Iterator[ColoredComposition]:
    """M_n(X): a black square inserted at each break point of each b in L_{n-1}(X)."""
    if n < 1:
        raise ValueError("black-tie compositions need n >= 1")
    for b in iter_compositions(X, n - 1):
        for pos in range(b.breakpoints):
            yield ColoredComposition(b.parts[:pos] + ((1, BLACK),) + b.parts[pos:])


def enumerate_blacktie(X: Coloration, n: int, cap: int = DEFAULT_CAP) -> List[ColoredComposition]:
    return _capped(iter_blacktie(X, n), cap)


def counts_upto(X: Coloration, n: int) -> IntSequence:
    """``(A_0, ..., A_n)`` by ``A_m = x_1 A_{m-1} + ... + x_m A_0``."""
    xs = X.values(n)
    A = [1]
    for m in range(1, n + 1):
        A.append(sum(xs[i - 1] * A[m - i] for i in range(1, m + 1)))
    return IntSequence(A)


def count_recurrence(X: Coloration, n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return counts_upto(X, n)[n]


def count_multinomial(X: Coloration, n: int) -> int:
    """A_n as a sum of multinomial terms over part multiplicities."""
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = X.values(n)
    return sum(
        multinomial(ks) * prod(x**k for x, k in zip(xs, ks) if k)
        for ks in multiplicity_vectors(n)
    )


def _self_convolution(X: Coloration, n: int) -> IntSequence:
    A = counts_upto(X, n)
    return convolve(A, A)


def parts_total(X: Coloration, n: int) -> int:
    """P_n(X) = (A*A)_n - A_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    A = counts_upto(X, n)
    return convolve(A, A)[n] - A[n]


def breakpoints_total(X: Coloration, n: int) -> int:
    if n < 1:
        raise ValueError("break-points are counted for n >= 1")
    return parts_total(X, n) + count_recurrence(X, n)


def blacktie_count(X: Coloration, n: int) -> int:
    """B_0 = 0 and B_n = (A*A)_{n-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    return _self_convolution(X, n - 1)[n - 1]


def blacktie_count_t5(X: Coloration, n: int) -> int:
    """B_n as a sum over compositions of n-1, each weighted by 1 + #parts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n - 1
    if m == 0:
        return 1
    xs = X.values(m)
    return sum(
        multinomial(ks) * prod(x**k for x, k in zip(xs, ks) if k) * (1 + sum(ks))
        for ks in multiplicity_vectors(m)
    )


def blacktie_count_t6(X: Coloration, n: int) -> int:
    """B_n by replacing one size-1 part of a composition of n with the black square."""
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = X.values(n)
    total = 0
    for ks in multiplicity_vectors(n):
        k1 = ks[0]
        if not k1:
            continue
        weight = xs[0] ** (k1 - 1) * prod(x**k for x, k in zip(xs[1:], ks[1:]) if k)
        total += multinomial(ks) * weight * k1
    return total


@dataclass(frozen=True)
class CountBundle:
    n: int
    A: int
    P: int
    R: int
    B: int


def count_bundle(X: Coloration, n: int) -> CountBundle:
    if n < 1:
        raise ValueError("n must be >= 1")
    A = counts_upto(X, n)
    AA = convolve(A, A)
    P = AA[n] - A[n]
    return CountBundle(n=n, A=A[n], P=P, R=P + A[n], B=AA[n - 1])


def _shapes(n: int) -> Iterator[Tuple[int, ...]]:
    # uncolored compositions of n via the 2^(n-1) cut patterns
    if n == 0:
        yield ()
        return
    for cuts in cartesian((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def shape_totals(X: Coloration, n: int) -> Tuple[int, int, Optional[int]]:
    """Brute-force ``(A_n, P_n, B_n)`` by walking every uncolored composition.

    Each shape is weighted by its number of colorings. Black-tie tilings are
    counted straight from the definition: pick one size-1 part of a shape of
    ``n`` to paint black and color the rest. ``B`` is ``None`` for ``n = 0``
    and 0 otherwise when no size-1 part exists.
    """
    xs = X.values(n)
    A = P = B = 0
    for shape in _shapes(n):
        w = prod(xs[s - 1] for s in shape)
        A += w
        P += w * len(shape)
        for i, s in enumerate(shape):
            if s == 1:
                B += prod(xs[t - 1] for j, t in enumerate(shape) if j != i)
    return A, P, (B if n >= 1 else None)
