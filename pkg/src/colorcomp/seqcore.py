"""Integer sequence prefixes, colorations, convolution and shift."""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Iterator, Sequence, Tuple, Union, overload


class ShapeError(ValueError):
    """Raised when sequence lengths do not fit an operation."""


def _as_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, Integral):
        raise TypeError(f"expected an integer term, got {v!r}")
    return int(v)


@dataclass(frozen=True)
class IntSequence:
    """Finite prefix of an integer sequence, indexed from 0."""

    terms: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(_as_int(t) for t in self.terms))

    @property
    def length(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    @overload
    def __getitem__(self, i: int) -> int: ...
    @overload
    def __getitem__(self, i: slice) -> "IntSequence": ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return IntSequence(self.terms[i])
        return self.terms[i]

    def __repr__(self) -> str:
        return f"IntSequence({list(self.terms)})"


SeqLike = Union[IntSequence, Sequence[int]]


def as_sequence(a: SeqLike) -> IntSequence:
    return a if isinstance(a, IntSequence) else IntSequence(tuple(a))


@dataclass(frozen=True)
class Coloration:
    """Color counts ``x_1, x_2, ...`` as a finite prefix followed by a
    tail block repeated forever.

    ``Coloration((1, 1), (0,))`` is ``(1, 1, 0, 0, ...)`` and
    ``Coloration((), (1,))`` is ``(1, 1, 1, ...)``.
    """

    prefix: Tuple[int, ...] = ()
    tail: Tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        prefix = tuple(_as_int(v) for v in self.prefix)
        tail = tuple(_as_int(v) for v in self.tail)
        if not tail:
            raise ValueError("coloration tail must be non-empty")
        if any(v < 0 for v in prefix + tail):
            raise ValueError("color counts must be non-negative")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def finite(cls, values: Iterable[int]) -> "Coloration":
        """Coloration with the given leading values and zeros afterwards."""
        return cls(tuple(values), (0,))

    @classmethod
    def constant(cls, k: int) -> "Coloration":
        return cls((), (k,))

    def value_at(self, i: int) -> int:
        if i < 1:
            raise IndexError(f"coloration index must be >= 1, got {i}")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.tail[(i - 1 - len(self.prefix)) % len(self.tail)]

    def values(self, n: int) -> Tuple[int, ...]:
        """``(x_1, ..., x_n)``."""
        return tuple(self.value_at(i) for i in range(1, n + 1))

    def as_sequence(self, n_terms: int) -> IntSequence:
        """The sequence ``a_n = x_{n+1}`` for ``n < n_terms``."""
        return IntSequence(self.values(n_terms))


def convolve(a: SeqLike, b: SeqLike) -> IntSequence:
    """Cauchy product, truncated to the shorter input."""
    a, b = as_sequence(a).terms, as_sequence(b).terms
    n = min(len(a), len(b))
    return IntSequence(tuple(sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n)))


def sigma(a: SeqLike) -> IntSequence:
    """Drop the index-0 term: ``(a_0, a_1, ...) -> (a_1, a_2, ...)``."""
    a = as_sequence(a)
    if not a.terms:
        raise ShapeError("sigma needs at least one term")
    return IntSequence(a.terms[1:])


def subtract(a: SeqLike, b: SeqLike) -> IntSequence:
    a, b = as_sequence(a), as_sequence(b)
    if len(a) != len(b):
        raise ShapeError(f"length mismatch: {len(a)} vs {len(b)}")
    return IntSequence(tuple(x - y for x, y in zip(a, b)))
