"""Decide prehomogeneity of a tensor space from its dimension tuple.

Outside the ``N == 2`` case the verdict is read off the invariant N alone.
For ``N == 2`` the tuple is reduced to its minimal form and, after dropping
the 1-entries, either matches ``{2, k, k}`` (prehomogeneous iff ``k <= 3``)
or has at least four entries all ``>= 2`` (prehomogeneous).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .castling import DescentTrace, minimize
from .errors import InternalInvariantError
from .tuples import TensorTuple, invariant_n

__all__ = [
    "Classification",
    "ResidueReport",
    "Rule",
    "Verdict",
    "classify",
    "match_weierstrass_pattern",
    "residue_obstruction_check",
    "scan",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = "1"


class Verdict(str, enum.Enum):
    PREHOMOGENEOUS = "Prehomogeneous"
    NOT_PREHOMOGENEOUS = "NotPrehomogeneous"
    TRIVIALLY_PREHOMOGENEOUS = "TriviallyPrehomogeneous"

    def __str__(self):
        return self.value

    @property
    def is_prehomogeneous(self) -> bool:
        return self is not Verdict.NOT_PREHOMOGENEOUS


class Rule(str, enum.Enum):
    ZERO_ENTRY = "ZeroEntry"
    N_NEGATIVE = "N_Negative"
    N_ZERO_OR_ONE = "N_ZeroOrOne"
    N_TWO_WEIERSTRASS = "N_Two_WeierstrassPattern"
    N_TWO_ALL_AT_LEAST_TWO = "N_Two_AllAtLeastTwo"
    N_AT_LEAST_THREE = "N_AtLeastThree"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    input: TensorTuple
    verdict: Verdict
    rule: Rule
    n_value: int
    minimal: TensorTuple | None = None
    weierstrass_k: int | None = None
    trace: DescentTrace | None = None

    def summary(self) -> str:
        parts = [f"N={self.n_value}"]
        if self.minimal is not None:
            parts.append(f"minimal {self.minimal}")
        if self.weierstrass_k is not None:
            parts.append(f"k={self.weierstrass_k}")
        else:
            parts.append(f"rule {self.rule}")
        return f"{self.verdict} ({', '.join(parts)})"

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "input": list(self.input),
            "verdict": self.verdict.value,
            "rule": self.rule.value,
            "n_value": self.n_value,
            "minimal": None if self.minimal is None else list(self.minimal),
            "weierstrass_k": self.weierstrass_k,
            "trace": None if self.trace is None else self.trace.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> Classification:
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(
            input=TensorTuple(tuple(d["input"])),
            verdict=Verdict(d["verdict"]),
            rule=Rule(d["rule"]),
            n_value=d["n_value"],
            minimal=None if d["minimal"] is None else TensorTuple(tuple(d["minimal"])),
            weierstrass_k=d["weierstrass_k"],
            trace=None if d["trace"] is None else DescentTrace.from_dict(d["trace"]),
        )


def match_weierstrass_pattern(minimal: TensorTuple) -> int | None:
    """Return k if ``minimal`` is ``(1,...,1,2,k,k)``, else None.

    After removing the 1-entries, ``{2}`` counts as k=1 and ``{2,2,2}`` as
    k=2, so k is unique whenever it exists.
    """
    rest = sorted(a for a in minimal.entries if a != 1)
    if rest == [2]:
        return 1
    if len(rest) == 3 and rest[0] == 2 and rest[1] == rest[2]:
        return rest[1]
    return None


def classify(t: TensorTuple) -> Classification:
    n_value = invariant_n(t)
    if t.has_zero():
        return Classification(t, Verdict.TRIVIALLY_PREHOMOGENEOUS, Rule.ZERO_ENTRY, n_value)

    trace = minimize(t)
    minimal = trace.terminal

    def done(verdict, rule, k=None):
        return Classification(t, verdict, rule, n_value, minimal, k, trace)

    if n_value <= -1:
        return done(Verdict.NOT_PREHOMOGENEOUS, Rule.N_NEGATIVE)
    if n_value in (0, 1):
        return done(Verdict.PREHOMOGENEOUS, Rule.N_ZERO_OR_ONE)
    if n_value >= 3:
        return done(Verdict.PREHOMOGENEOUS, Rule.N_AT_LEAST_THREE)

    k = match_weierstrass_pattern(minimal)
    if k is not None:
        verdict = Verdict.PREHOMOGENEOUS if k <= 3 else Verdict.NOT_PREHOMOGENEOUS
        return done(verdict, Rule.N_TWO_WEIERSTRASS, k)
    rest = [a for a in minimal.entries if a != 1]
    if len(rest) >= 4 and min(rest) >= 2:
        return done(Verdict.PREHOMOGENEOUS, Rule.N_TWO_ALL_AT_LEAST_TWO)
    raise InternalInvariantError(f"N=2 tuple {t} has minimal form {minimal} matching neither N=2 shape")


@dataclass(frozen=True)
class ResidueReport:
    max: int
    scanned: int
    violations: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"max": self.max, "scanned": self.scanned, "violations": [list(v) for v in self.violations]}


def residue_obstruction_check(max_entry: int) -> ResidueReport:
    """Check that no triple ``1 <= a <= b <= c <= max_entry`` has N = 1 or 4 mod 9."""
    scanned = 0
    bad = []
    for a, b, c in itertools.combinations_with_replacement(range(1, max_entry + 1), 3):
        scanned += 1
        if (a * a + b * b + c * c - a * b * c - 2) % 9 in (1, 4):
            bad.append((a, b, c))
    return ResidueReport(max_entry, scanned, tuple(bad))


def scan(n: int, max_entry: int) -> list[Classification]:
    """Classify every non-decreasing n-tuple with entries in ``[1, max_entry]``.

    Rows come out in lexicographic order of the tuple.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    return [
        classify(TensorTuple(e))
        for e in itertools.combinations_with_replacement(range(1, max_entry + 1), n)
    ]
