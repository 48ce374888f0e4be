import itertools
import random

import numpy as np
import pytest

from cotorsion_workbench.exactla import (
    FieldSpec,
    PrimeMatrix,
    kernel_a,
    kernel_basis,
    quotient_by_rowspace,
    rank,
    rank_a,
    rref,
    rref_a,
    solve,
    solve_a,
    solve_many_a,
)


def test_field_spec_rejects_nonprime():
    FieldSpec(2)
    FieldSpec(13)
    for bad in (0, 1, 4, 6, 9, -3):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_rref_all_ones_over_f2():
    m = PrimeMatrix.from_rows(2, [[1, 1], [1, 1]])
    red, pivots = rref(m)
    assert red.tolist() == [[1, 1], [0, 0]]
    assert pivots == [0]


def test_rref_identity_fixed_point():
    m = PrimeMatrix.identity(3, 4)
    red, pivots = rref(m)
    assert red == m
    assert pivots == [0, 1, 2, 3]


def test_rref_scales_pivot_rows():
    red, pivots = rref_a([[2, 1], [0, 2]], 5)
    # 2^-1 = 3 mod 5
    assert red.tolist() == [[1, 0], [0, 1]]
    assert pivots == [0, 1]


def test_kernel_of_sum_map_over_f2():
    k = kernel_basis(PrimeMatrix.from_rows(2, [[1, 1]]))
    assert k.tolist() == [[1], [1]]


def test_kernel_of_injective_map_is_empty():
    k = kernel_a([[1, 0], [0, 1], [1, 1]], 2)
    assert k.shape == (2, 0)


def test_kernel_of_zero_matrix_is_identity():
    k = kernel_a(np.zeros((3, 3), dtype=np.int64), 3)
    assert k.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_solve_upper_triangular():
    m = PrimeMatrix.from_rows(2, [[1, 1], [0, 1]])
    x = solve(m, [0, 1])
    assert x.tolist() == [1, 1]


def test_solve_inconsistent_returns_none():
    assert solve_a([[1, 1], [1, 1]], [0, 1], 2) is None


def test_solve_rejects_bad_shapes():
    with pytest.raises(ValueError):
        solve_a([[1, 0]], [1, 0], 2)
    with pytest.raises(ValueError):
        solve_many_a([[1, 0]], [[1], [0]], 2)


def test_rank_examples():
    assert rank(PrimeMatrix.from_rows(2, [[1, 1], [1, 1]])) == 1
    assert rank_a(np.zeros((2, 5), dtype=np.int64), 2) == 0
    assert rank_a([[1, 2], [2, 4]], 5) == 1
    assert rank_a([[1, 2], [2, 4]], 3) == 1
    assert rank_a([[1, 2], [2, 5]], 7) == 2


def _random_matrix(rng, p, rows, cols):
    flat = [rng.randrange(p) for _ in range(rows * cols)]
    return np.array(flat, dtype=np.int64).reshape(rows, cols)


def test_rref_is_idempotent():
    rng = random.Random(20240817)
    for _ in range(120):
        p = rng.choice([2, 3, 5])
        m = _random_matrix(rng, p, rng.randrange(1, 6), rng.randrange(1, 6))
        red, pivots = rref_a(m, p)
        again, pivots2 = rref_a(red, p)
        assert np.array_equal(red, again)
        assert pivots == pivots2
        assert pivots == sorted(pivots)


def test_rank_plus_nullity_matches_columns():
    rng = random.Random(7151)
    for _ in range(120):
        p = rng.choice([2, 3, 5])
        m = _random_matrix(rng, p, rng.randrange(0, 6), rng.randrange(0, 6))
        k = kernel_a(m, p)
        assert rank_a(m, p) + k.shape[1] == m.shape[1]
        if k.shape[1]:
            assert not ((m @ k) % p).any()
            assert rank_a(k, p) == k.shape[1]


def test_solve_agrees_with_brute_force_on_small_systems():
    # exhaustively checked against all candidate vectors, cols <= 8, p <= 3
    rng = random.Random(99)
    for _ in range(60):
        p = rng.choice([2, 3])
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 4)
        m = _random_matrix(rng, p, rows, cols)
        b = np.array([rng.randrange(p) for _ in range(rows)], dtype=np.int64)
        x = solve_a(m, b, p)
        brute = [
            v
            for v in itertools.product(range(p), repeat=cols)
            if np.array_equal((m @ np.array(v)) % p, b)
        ]
        if x is None:
            assert brute == []
        else:
            assert np.array_equal((m @ x) % p, b)
            assert brute != []


def test_solve_many_stacks_columns():
    m = [[1, 0], [1, 1]]
    x = solve_many_a(m, [[1, 0], [0, 1]], 2)
    assert ((np.array(m) @ x) % 2).tolist() == [[1, 0], [0, 1]]


def test_quotient_projection_section_identity():
    rng = random.Random(424)
    for _ in range(80):
        p = rng.choice([2, 3])
        amb = rng.randrange(0, 6)
        rows = _random_matrix(rng, p, rng.randrange(0, 4), amb)
        proj, sect = quotient_by_rowspace(rows, amb, p)
        q = proj.shape[0]
        assert q == amb - rank_a(rows, p) if amb else q == 0
        assert np.array_equal((proj @ sect) % p, np.eye(q, dtype=np.int64))
        if rows.size:
            assert not ((proj @ rows.T) % p).any()
