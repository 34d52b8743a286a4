"""Dimension tuples and the castling invariant N.

All arithmetic is on Python ints, so products of large entries never
overflow.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import InvalidTuple

__all__ = [
    "TensorTuple",
    "canonicalize",
    "dimension",
    "invariant_n",
    "necessary_condition",
    "parse_tuple",
]


@dataclass(frozen=True)
class TensorTuple:
    """The space C^{a_1} x ... x C^{a_n}, stored as its dimension tuple.

    ``entries`` keeps the order the tuple was given in; use
    :meth:`canonical` (ascending sort) to compare spaces. Two tuples
    describe the same space iff their canonical forms are equal.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if len(entries) < 3:
            raise InvalidTuple(f"need at least 3 entries, got {len(entries)}")
        for a in entries:
            if isinstance(a, bool) or not isinstance(a, int):
                raise InvalidTuple(f"entry {a!r} is not an integer")
            if a < 0:
                raise InvalidTuple(f"entry {a} is negative")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> TensorTuple:
        return cls(tuple(entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_canonical(self) -> bool:
        e = self.entries
        return all(e[i] <= e[i + 1] for i in range(len(e) - 1))

    def canonical(self) -> TensorTuple:
        return self if self.is_canonical else TensorTuple(tuple(sorted(self.entries)))

    def same_space(self, other: TensorTuple) -> bool:
        return self.canonical().entries == other.canonical().entries

    def has_zero(self) -> bool:
        return 0 in self.entries

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def canonicalize(t: TensorTuple) -> TensorTuple:
    return t.canonical()


def dimension(t: TensorTuple) -> int:
    """Dimension of the tensor space, i.e. the product of the entries."""
    return math.prod(t.entries)


def invariant_n(t: TensorTuple) -> int:
    """``sum(a_i^2) - prod(a_i) - n + 1``, exact for any entry size."""
    return sum(a * a for a in t.entries) - math.prod(t.entries) - len(t.entries) + 1


def necessary_condition(t: TensorTuple) -> bool:
    """``N >= 0``; every prehomogeneous tuple satisfies it."""
    return invariant_n(t) >= 0


_TUPLE_RE = re.compile(r"^\s*\(?\s*(\d+(?:\s*,\s*\d+)*)\s*\)?\s*$")


def parse_tuple(text: str) -> TensorTuple:
    """Parse ``"3,35,92"`` (whitespace and surrounding parens tolerated).

    The returned tuple keeps the input order; callers canonicalize.
    """
    m = _TUPLE_RE.match(text)
    if not m:
        raise InvalidTuple(f"cannot parse tuple {text!r}; expected comma-separated non-negative integers")
    return TensorTuple(tuple(int(x) for x in m.group(1).split(",")))
