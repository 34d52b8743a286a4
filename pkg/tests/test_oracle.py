from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from prehom.classifier import Verdict
from prehom.errors import BadPrime, DimensionTooLarge, InvariantBreach
from prehom.linalg import rank_mod_p
from prehom.oracle import (
    DEFAULT_PRIME,
    action_matrix,
    confirm_prime_for,
    cross_check_rows,
    cross_validate,
    default_prime,
    isotropy_dimension,
    orbit_rank,
    tuples_up_to_dimension,
)
from prehom.tuples import TensorTuple

T = TensorTuple.of
P, NP = Verdict.PREHOMOGENEOUS, Verdict.NOT_PREHOMOGENEOUS


def rational_rank(rows):
    """Rank over Q by fraction-exact elimination."""
    M = [[Fraction(int(x)) for x in r] for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize(
    "t, dim_v, dim_g, rank, verdict",
    [
        ((1, 1, 1), 1, 3, 1, P),
        ((2, 3, 3), 18, 22, 18, P),
        ((2, 5, 5), 50, 54, 48, NP),
        ((2, 2, 2), 8, 12, 8, P),
    ],
)
def test_orbit_rank_examples(t, dim_v, dim_g, rank, verdict):
    r = orbit_rank(T(*t))
    assert (r.dim_v, r.dim_g, r.max_rank, r.verdict) == (dim_v, dim_g, rank, verdict)
    assert r.max_rank <= min(r.dim_v, r.dim_g)


@pytest.mark.parametrize("t, iso", [((2, 5, 5), 6), ((1, 1, 1), 2), ((2, 2, 2), 4), ((2, 3, 3), 4)])
def test_isotropy_dimension(t, iso):
    assert isotropy_dimension(orbit_rank(T(*t))) == iso


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_weierstrass_isotropy_is_k_plus_one(k):
    assert orbit_rank(T(2, k, k)).isotropy_dim_estimate == k + 1


def test_isotropy_breach_detected():
    r = orbit_rank(T(2, 3, 3))
    with pytest.raises(InvariantBreach):
        isotropy_dimension(replace(r, max_rank=r.dim_g - 1))


def test_deficient_rank_is_confirmed_at_second_prime():
    r = orbit_rank(T(2, 5, 5))
    assert r.confirm_prime == 2**31 - 99
    assert orbit_rank(T(2, 3, 3)).confirm_prime is None


@pytest.mark.parametrize("t", [(2, 2, 2), (2, 3, 3), (1, 2, 3, 4), (2, 2, 2, 2), (3, 3, 4), (2, 4, 4)])
def test_compact_matrix_has_full_matrix_rank(t):
    p = 10007
    T_ = np.random.default_rng(7).integers(0, p, size=t)
    full = action_matrix(T_, p, compact=False)
    assert full.shape == (sum(a * a for a in t), int(np.prod(t)))
    assert rank_mod_p(action_matrix(T_, p, compact=True), p) == rank_mod_p(full, p)


@pytest.mark.parametrize("t", [(2, 2, 2), (2, 2, 3), (2, 3, 3), (1, 2, 2, 2)])
def test_modular_rank_matches_rational_rank(t):
    T_ = np.random.default_rng(3).integers(-5, 6, size=t)
    full = action_matrix(T_ % DEFAULT_PRIME, DEFAULT_PRIME, compact=False)
    # same integer matrix, signed representatives for the rational computation
    signed = np.where(full > DEFAULT_PRIME // 2, full - DEFAULT_PRIME, full)
    assert rank_mod_p(full, DEFAULT_PRIME) == rational_rank(signed.tolist())


def test_rank_mod_p_small_cases():
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), 7) == 1
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), 2) == 1
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), 7) == 2
    assert rank_mod_p(np.eye(5, dtype=np.int64), 3, stop_at=2) == 2
    assert rank_mod_p(np.zeros((3, 4), dtype=np.int64), 5) == 0


def test_errors():
    with pytest.raises(DimensionTooLarge):
        orbit_rank(T(10, 10, 60))
    with pytest.raises(BadPrime):
        orbit_rank(T(2, 3, 3), prime=1001)
    with pytest.raises(BadPrime):
        orbit_rank(T(2, 3, 3), prime=13)
    with pytest.raises(BadPrime):
        orbit_rank(T(2, 3, 3), prime=2**31 + 11)


def test_confirm_prime_choice():
    assert confirm_prime_for(DEFAULT_PRIME, 100) == 2**31 - 99
    assert confirm_prime_for(101, 60) == 103


def test_reproducible_and_monotone_in_trials():
    a = orbit_rank(T(2, 4, 4), trials=3, seed=11, confirm=False)
    b = orbit_rank(T(2, 4, 4), trials=3, seed=11, confirm=False)
    assert a == b
    one = orbit_rank(T(2, 4, 4), trials=1, seed=11, confirm=False)
    assert one.max_rank <= a.max_rank


def test_env_override(monkeypatch):
    monkeypatch.setenv("PREHOM_PRIME", "1000003")
    assert default_prime() == 1000003
    assert orbit_rank(T(2, 3, 3)).prime == 1000003


def test_tuples_up_to_dimension():
    got = list(tuples_up_to_dimension(3, 8))
    brute = sorted(
        (a, b, c) for a in range(1, 9) for b in range(a, 9) for c in range(b, 9) if a * b * c <= 8
    )
    assert got == brute


def test_cross_validate_small():
    assert cross_validate([3], 50) == []
    rows = {r.tuple.entries: r for r in cross_check_rows([(2, 5, 5)])}
    assert rows[(2, 5, 5)].classifier_verdict is NP and rows[(2, 5, 5)].oracle_verdict is NP


def test_cross_check_order_independent():
    ts = list(tuples_up_to_dimension(3, 30))
    fwd = list(cross_check_rows(ts, seed=5))
    rev = list(cross_check_rows(reversed(ts), seed=5))
    assert fwd == rev[::-1]
