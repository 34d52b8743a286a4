"""Kac's Fibonacci-block decomposition of generic tensors in C^a x C^b x C^c.

For ``a >= 2`` the sequence ``a_0 = 0, a_1 = 1, a_i = a*a_{i-1} - a_{i-2}``
satisfies ``a_i*a_{i+2} - a_{i+1}^2 = -1``, so each 2x2 system

    b = n*a_i + m*a_{i+1}
    c = n*a_{i+1} + m*a_{i+2}

has a unique integer solution; we scan ``i`` and keep the non-negative ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BaseTooSmall, NotAdmissible, UniquenessViolation

__all__ = [
    "Block",
    "BlockLayout",
    "FibSequence",
    "KacDecomposition",
    "block_layout",
    "fib_sequence",
    "kac_admissible",
    "kac_decompose",
    "kac_value",
    "sparsity_pattern",
]


@dataclass(frozen=True)
class FibSequence:
    base: int
    terms: tuple[int, ...]

    def __getitem__(self, i):
        return self.terms[i]

    def __len__(self):
        return len(self.terms)


def fib_sequence(a: int, count: int) -> FibSequence:
    if a < 2:
        raise BaseTooSmall(f"base must be >= 2, got {a}")
    if count < 2:
        raise ValueError("count must be >= 2")
    terms = [0, 1]
    while len(terms) < count:
        terms.append(a * terms[-1] - terms[-2])
    return FibSequence(a, tuple(terms))


def kac_value(a: int, b: int, c: int) -> int:
    return c * c + b * b - a * b * c


def kac_admissible(a: int, b: int, c: int) -> bool:
    return 2 <= a <= b <= c and kac_value(a, b, c) >= 1


@dataclass(frozen=True)
class KacDecomposition:
    a: int
    b: int
    c: int
    n: int
    m: int
    i: int
    sequence: FibSequence

    @property
    def small(self) -> tuple[int, int]:
        """(a_i, a_{i+1}): the b- and c-widths of a small block."""
        s = self.sequence
        return s[self.i], s[self.i + 1]

    @property
    def large(self) -> tuple[int, int]:
        s = self.sequence
        return s[self.i + 1], s[self.i + 2]

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "n": self.n,
            "m": self.m,
            "i": self.i,
            "sequence": list(self.sequence.terms),
            "blocks": [blk.to_dict() for blk in block_layout(self).blocks],
        }


def _solutions(a, b, c, seq):
    out = []
    i = 0
    while seq[i] <= b:
        x, y, z = seq[i], seq[i + 1], seq[i + 2]
        # inverse of [[x, y], [y, z]] with determinant -1
        n = c * y - b * z
        m = b * y - c * x
        if n >= 0 and m >= 0:
            out.append((n, m, i))
        i += 1
    return out


def kac_decompose(a: int, b: int, c: int) -> KacDecomposition:
    """Block multiplicities ``(n, m, i)`` for an admissible triple.

    ``(0, m, i)`` and ``(m, 0, i+1)`` describe the same blocks; the form
    with ``n >= 1`` is kept.
    """
    if not kac_admissible(a, b, c):
        raise NotAdmissible(f"({a},{b},{c}) needs 2 <= a <= b <= c and c^2+b^2-abc >= 1")
    seq = [0, 1]
    # enough terms that seq[i+2] exists for every i with seq[i] <= b
    while seq[-2] <= b:
        seq.append(a * seq[-1] - seq[-2])
    sols = set(_solutions(a, b, c, seq))
    for n, m, i in list(sols):
        if n == 0 and (m, 0, i + 1) in sols:
            sols.discard((n, m, i))
    if len(sols) != 1:
        raise UniquenessViolation(f"({a},{b},{c}) has {len(sols)} canonical decompositions: {sorted(sols)}")
    n, m, i = sols.pop()
    return KacDecomposition(a, b, c, n, m, i, FibSequence(a, tuple(seq[: i + 3])))


@dataclass(frozen=True)
class Block:
    kind: str  # "small" (a x a_i x a_{i+1}) or "large" (a x a_{i+1} x a_{i+2})
    k: tuple[int, int]  # inclusive, 1-based; hi < lo means empty
    l: tuple[int, int]

    @property
    def k_width(self) -> int:
        return self.k[1] - self.k[0] + 1

    @property
    def l_width(self) -> int:
        return self.l[1] - self.l[0] + 1

    def to_dict(self) -> dict:
        return {"kind": self.kind, "k": list(self.k), "l": list(self.l)}


@dataclass(frozen=True)
class BlockLayout:
    a: int
    b: int
    c: int
    blocks: tuple[Block, ...]


def block_layout(d: KacDecomposition) -> BlockLayout:
    """Index ranges of the Fibonacci blocks: n small blocks, then m large ones."""
    x, y = d.small
    _, z = d.large
    blocks = []
    for t in range(1, d.n + 1):
        blocks.append(Block("small", (x * (t - 1) + 1, x * t), (y * (t - 1) + 1, y * t)))
    k0, l0 = x * d.n, y * d.n
    for s in range(1, d.m + 1):
        blocks.append(Block("large", (k0 + y * (s - 1) + 1, k0 + y * s), (l0 + z * (s - 1) + 1, l0 + z * s)))
    return BlockLayout(d.a, d.b, d.c, tuple(blocks))


def sparsity_pattern(layout: BlockLayout):
    """Yield every 1-based ``(j, k, l)`` allowed to be non-zero."""
    for j in range(1, layout.a + 1):
        for blk in layout.blocks:
            for k in range(blk.k[0], blk.k[1] + 1):
                for l in range(blk.l[0], blk.l[1] + 1):
                    yield j, k, l
