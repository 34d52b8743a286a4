"""Castling transformations, descent to the minimal tuple, and castling trees.

A castling step replaces one entry ``a_j`` by ``q - a_j`` where ``q`` is the
product of the other entries. "Minimal" always means minimal *positive*
dimension: steps that land on a zero entry are never taken by the descent.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import InvalidTuple, NegativeResult
from .tuples import TensorTuple, dimension, invariant_n

__all__ = [
    "CastlingStep",
    "DescentTrace",
    "TreeNode",
    "castle_at",
    "decreasing_positions",
    "enumerate_tree",
    "equivalent",
    "is_minimal",
    "minimize",
]


@dataclass(frozen=True)
class CastlingStep:
    source: TensorTuple
    replaced_index: int
    complement_product: int
    old_value: int
    new_value: int
    result: TensorTuple

    def to_dict(self) -> dict:
        return {
            "source": list(self.source),
            "replaced_index": self.replaced_index,
            "complement_product": self.complement_product,
            "old_value": self.old_value,
            "new_value": self.new_value,
            "result": list(self.result),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CastlingStep:
        return cls(
            source=TensorTuple(tuple(d["source"])),
            replaced_index=d["replaced_index"],
            complement_product=d["complement_product"],
            old_value=d["old_value"],
            new_value=d["new_value"],
            result=TensorTuple(tuple(d["result"])),
        )


@dataclass(frozen=True)
class DescentTrace:
    steps: tuple[CastlingStep, ...]
    terminal: TensorTuple

    def __len__(self):
        return len(self.steps)

    def chain(self) -> list[TensorTuple]:
        """Input tuple followed by every intermediate result."""
        if not self.steps:
            return [self.terminal]
        return [self.steps[0].source] + [s.result for s in self.steps]

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps], "terminal": list(self.terminal)}

    @classmethod
    def from_dict(cls, d: dict) -> DescentTrace:
        return cls(
            steps=tuple(CastlingStep.from_dict(s) for s in d["steps"]),
            terminal=TensorTuple(tuple(d["terminal"])),
        )


def _require_positive(t: TensorTuple) -> None:
    if t.has_zero():
        raise InvalidTuple(f"{t} has a zero entry; castling descent needs entries >= 1")


def castle_at(t: TensorTuple, j: int) -> CastlingStep:
    """Castle ``t`` (canonicalized) at position ``j`` of its canonical order."""
    src = t.canonical()
    e = src.entries
    if not 0 <= j < len(e):
        raise IndexError(f"position {j} out of range for {src}")
    q = math.prod(e[:j] + e[j + 1:])
    new = q - e[j]
    if new < 0:
        raise NegativeResult(f"castling {src} at position {j}: {q} - {e[j]} = {new} < 0")
    result = TensorTuple(tuple(sorted(e[:j] + (new,) + e[j + 1:])))
    return CastlingStep(src, j, q, e[j], new, result)


def decreasing_positions(t: TensorTuple) -> list[int]:
    """Positions (canonical order) whose castle gives a smaller positive dimension.

    Castling at ``j`` shrinks the dimension iff ``0 < q_j - a_j < a_j``.
    Only the last index of a run of equal values is reported.
    """
    e = t.canonical().entries
    p = math.prod(e)
    out = []
    for j, a in enumerate(e):
        if j + 1 < len(e) and e[j + 1] == a:
            continue
        if a == 0:
            continue
        new = p // a - a
        if 0 < new < a:
            out.append(j)
    return out


def is_minimal(t: TensorTuple) -> bool:
    """True iff no castling step reaches a strictly smaller positive dimension."""
    _require_positive(t)
    return not decreasing_positions(t)


def minimize(t: TensorTuple, rng: random.Random | None = None) -> DescentTrace:
    """Descend by product-decreasing castling steps to the minimal tuple.

    By default the largest entry admitting a decreasing step is castled.
    Passing ``rng`` picks a random decreasing position instead; the
    terminal tuple does not depend on the choice.
    """
    _require_positive(t)
    cur = t.canonical()
    steps = []
    while True:
        cand = decreasing_positions(cur)
        if not cand:
            return DescentTrace(tuple(steps), cur)
        j = cand[-1] if rng is None else rng.choice(cand)
        step = castle_at(cur, j)
        steps.append(step)
        cur = step.result


def equivalent(t1: TensorTuple, t2: TensorTuple) -> bool:
    """Castling-equivalence. Tuples of different length are never equivalent."""
    if t1.n != t2.n:
        return False
    return minimize(t1).terminal == minimize(t2).terminal


@dataclass
class TreeNode:
    tuple: TensorTuple
    depth: int
    step: CastlingStep | None = None  # edge from the parent
    children: list[TreeNode] = field(default_factory=list)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def to_dict(self) -> dict:
        d = {"node": list(self.tuple), "N": invariant_n(self.tuple), "children": [c.to_dict() for c in self.children]}
        if self.step is not None:
            d["replaced_index"] = self.step.replaced_index
            d["q"] = self.step.complement_product
        return d


def enumerate_tree(
    root: TensorTuple,
    max_dimension: int,
    max_depth: int,
    dedup_global: bool = False,
) -> TreeNode:
    """Expand the castling tree of ``root`` breadth-first.

    Children are the distinct canonical results of valid castles with all
    entries >= 1 and dimension <= ``max_dimension``. A result equal to a
    tuple already on the root path is dropped, which removes the trivial
    back-and-forth of the involution. With ``dedup_global`` a tuple seen
    anywhere in the tree is dropped as well.
    """
    _require_positive(root)
    top = TreeNode(root.canonical(), 0)
    seen = {top.tuple.entries}
    frontier = [(top, frozenset(seen))]
    while frontier:
        nxt = []
        for node, path in frontier:
            if node.depth >= max_depth:
                continue
            e = node.tuple.entries
            done = set()
            for j in range(len(e)):
                if j + 1 < len(e) and e[j + 1] == e[j]:
                    continue
                try:
                    step = castle_at(node.tuple, j)
                except NegativeResult:
                    continue
                key = step.result.entries
                if step.new_value == 0 or key in done or key in path:
                    continue
                if dimension(step.result) > max_dimension:
                    continue
                if dedup_global and key in seen:
                    continue
                done.add(key)
                seen.add(key)
                child = TreeNode(step.result, node.depth + 1, step)
                node.children.append(child)
                nxt.append((child, path | {key}))
        frontier = nxt
    return top
