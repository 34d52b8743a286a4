"""Independent prehomogeneity check via the generic orbit dimension.

The tangent space to the orbit of a tensor T under GL_{a_1} x ... x GL_{a_n}
is spanned by ``X .i T`` (X applied along mode i) for X running over the
elementary matrices E_pq of every factor. Its dimension, the rank of the
linearized action, is the orbit dimension at T; at a random T it equals
the generic value with high probability. The space is prehomogeneous iff
that rank reaches ``prod(a_i)``.

Ranks are computed exactly over Z/pZ. Reduction mod p can only lower a
rank, so a full rank mod p certifies a dense orbit; a deficient rank is
re-checked at a second prime before it is reported.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import gmpy2
import numpy as np

from .classifier import Verdict, classify
from .errors import BadPrime, DimensionTooLarge, InvalidTuple, InvariantBreach
from .linalg import MAX_PRIME, rank_mod_p, row_basis_mod_p
from .tuples import TensorTuple, dimension

__all__ = [
    "DEFAULT_PRIME",
    "DEFAULT_TRIALS",
    "DEFAULT_MAX_DIM",
    "CrossCheckRow",
    "OrbitRankReport",
    "action_matrix",
    "confirm_prime_for",
    "cross_check_rows",
    "cross_validate",
    "isotropy_dimension",
    "orbit_rank",
    "tuples_up_to_dimension",
]

DEFAULT_PRIME = 2**31 - 1
DEFAULT_TRIALS = 3
DEFAULT_MAX_DIM = 5000


def default_prime() -> int:
    return int(os.environ.get("PREHOM_PRIME", DEFAULT_PRIME))


def default_trials() -> int:
    return int(os.environ.get("PREHOM_TRIALS", DEFAULT_TRIALS))


@dataclass(frozen=True)
class OrbitRankReport:
    tuple: TensorTuple
    prime: int
    trials: int
    seed: int
    dim_v: int
    dim_g: int
    max_rank: int
    confirm_prime: int | None = None  # set when a deficient rank was re-checked

    @property
    def isotropy_dim_estimate(self) -> int:
        return self.dim_g - self.max_rank

    @property
    def verdict(self) -> Verdict:
        return Verdict.PREHOMOGENEOUS if self.max_rank == self.dim_v else Verdict.NOT_PREHOMOGENEOUS

    def to_dict(self) -> dict:
        return {
            "schema_version": "1",
            "tuple": list(self.tuple),
            "prime": self.prime,
            "confirm_prime": self.confirm_prime,
            "trials": self.trials,
            "seed": self.seed,
            "dim_v": self.dim_v,
            "dim_g": self.dim_g,
            "max_rank": self.max_rank,
            "isotropy_dim_estimate": self.isotropy_dim_estimate,
            "verdict": self.verdict.value,
        }


def _check_prime(p: int, bound: int) -> None:
    if not gmpy2.is_prime(p):
        raise BadPrime(f"{p} is not prime")
    if p <= bound:
        raise BadPrime(f"prime {p} must exceed max(dim_v, dim_g) = {bound}")
    if p >= MAX_PRIME:
        raise BadPrime(f"prime {p} must be below 2**31")


def confirm_prime_for(p: int, bound: int) -> int:
    """Second prime for re-checking a deficient rank: the largest prime <= p - 98,
    or the next prime above p if that one is too small."""
    q = int(gmpy2.prev_prime(p - 97)) if p - 97 > 2 else 2
    if q <= bound:
        q = int(gmpy2.next_prime(p))
    return q


def _trial_rng(seed: int, t: TensorTuple) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=tuple(t.entries)))


def action_matrix(T: np.ndarray, p: int, compact: bool = True) -> np.ndarray:
    """Rows are the flattened images ``E_pq .i T``, modes in order, (p, q) row-major.

    ``E_pq .i T`` puts slice q of T (along mode i) into slice p and zeros
    elsewhere. With ``compact`` the slices of each mode are first replaced
    by a row basis of their span mod p; this keeps the row space identical
    while bounding the row count by ``sum(a_i * min(a_i, dim_v / a_i))``.
    """
    shape = T.shape
    dim_v = T.size
    blocks = []
    for mode, a in enumerate(shape):
        unf = np.moveaxis(T, mode, 0).reshape(a, -1)  # row q = slice q
        slices = row_basis_mod_p(unf, p) if compact else unf
        r = slices.shape[0]
        # img[x, s] has unfolding with row x equal to slices[s]
        img = np.zeros((a, r, a, unf.shape[1]), dtype=np.int64)
        for x in range(a):
            img[x, :, x, :] = slices
        rest = tuple(s for k, s in enumerate(shape) if k != mode)
        img = img.reshape((a * r, a) + rest)
        img = np.moveaxis(img, 1, mode + 1)
        blocks.append(img.reshape(a * r, dim_v))
    return np.concatenate(blocks, axis=0)


def _random_tensor(rng: np.random.Generator, shape, p: int) -> np.ndarray:
    while True:
        T = rng.integers(0, p, size=shape, dtype=np.int64)
        if T.any():
            return T


def _max_rank(t: TensorTuple, p: int, trials: int, seed: int, compact: bool) -> int:
    rng = _trial_rng(seed, t)
    dim_v = dimension(t)
    best = 0
    for _ in range(trials):
        T = _random_tensor(rng, t.entries, p)
        best = max(best, rank_mod_p(action_matrix(T, p, compact), p, stop_at=dim_v))
        if best == dim_v:
            break  # the rank can never exceed dim_v
    return best


def orbit_rank(
    t: TensorTuple,
    prime: int | None = None,
    trials: int | None = None,
    seed: int = 0,
    max_dim: int = DEFAULT_MAX_DIM,
    confirm: bool = True,
    compact: bool = True,
) -> OrbitRankReport:
    """Best rank of the linearized action over ``trials`` random tensors.

    If the rank stays below ``dim_v`` and ``confirm`` is set, the trials
    are repeated at a second prime and the larger rank is kept.
    """
    prime = default_prime() if prime is None else prime
    trials = default_trials() if trials is None else trials
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t = t.canonical()
    if t.has_zero():
        raise InvalidTuple(f"{t} has a zero entry; the oracle needs entries >= 1")
    dim_v = dimension(t)
    dim_g = sum(a * a for a in t.entries)
    if dim_v > max_dim:
        raise DimensionTooLarge(f"dim_v = {dim_v} exceeds the bound {max_dim}")
    _check_prime(prime, max(dim_v, dim_g))

    best = _max_rank(t, prime, trials, seed, compact)
    second = None
    if best < dim_v and confirm:
        second = confirm_prime_for(prime, max(dim_v, dim_g))
        best = max(best, _max_rank(t, second, trials, seed, compact))
    return OrbitRankReport(t, prime, trials, seed, dim_v, dim_g, best, second)


def isotropy_dimension(report: OrbitRankReport) -> int:
    """``dim_g - max_rank``; never below n - 1 since the scalar torus fixes every point."""
    d = report.isotropy_dim_estimate
    floor = report.tuple.n - 1
    if d < floor:
        raise InvariantBreach(f"isotropy estimate {d} below n-1 = {floor} for {report.tuple}")
    return d


def tuples_up_to_dimension(n: int, max_dimension: int):
    """Non-decreasing n-tuples with entries >= 1 and product <= max_dimension, in lexicographic order."""

    def rec(prefix, lo, prod, left):
        if left == 0:
            yield tuple(prefix)
            return
        a = lo
        while prod * a ** left <= max_dimension:
            prefix.append(a)
            yield from rec(prefix, a, prod * a, left - 1)
            prefix.pop()
            a += 1

    yield from rec([], 1, 1, n)


@dataclass(frozen=True)
class CrossCheckRow:
    tuple: TensorTuple
    classifier_verdict: Verdict
    oracle_verdict: Verdict
    max_rank: int
    dim_v: int
    isotropy_dim_estimate: int

    @property
    def agrees(self) -> bool:
        return self.classifier_verdict is self.oracle_verdict

    def to_dict(self) -> dict:
        return {
            "tuple": list(self.tuple),
            "classifier_verdict": self.classifier_verdict.value,
            "oracle_verdict": self.oracle_verdict.value,
            "max_rank": self.max_rank,
            "dim_v": self.dim_v,
        }


def cross_check_rows(
    tuples,
    prime: int | None = None,
    trials: int | None = None,
    seed: int = 0,
    max_dim: int = DEFAULT_MAX_DIM,
):
    """Classifier vs oracle verdict for each tuple; seeds derive from (seed, tuple)."""
    for e in tuples:
        t = TensorTuple(tuple(e))
        cls = classify(t)
        rep = orbit_rank(t, prime, trials, seed, max_dim)
        yield CrossCheckRow(t, cls.verdict, rep.verdict, rep.max_rank, rep.dim_v, rep.isotropy_dim_estimate)


def cross_validate(
    n_values,
    max_dimension: int,
    prime: int | None = None,
    trials: int | None = None,
    seed: int = 0,
    rows: list | None = None,
) -> list[CrossCheckRow]:
    """Rows where the classifier and the oracle disagree (expected: none).

    Every checked row is also appended to ``rows`` when a list is given.
    """
    bad = []
    for n in n_values:
        for row in cross_check_rows(tuples_up_to_dimension(n, max_dimension), prime, trials, seed, max(max_dimension, 1)):
            if rows is not None:
                rows.append(row)
            if not row.agrees:
                bad.append(row)
    return bad
