"""Tensors: flattenings, minors, the matrix-multiplication cube, the pencil."""

import random

from fractions import Fraction

import pytest

from apolar.linalg import det_fraction_gauss, mat_det, mat_rank, rank_fraction_gauss
from apolar.tensor import (DenseTensor, InvalidModeSet, WrongShape, flatten,
                           format_rational, gss_minor_test, matmul_tensor,
                           multilinear_rank, parse_rational,
                           strassen_det_symbolic, strassen_matrix,
                           tensor_from_json, tensor_to_json)


def rand_rank_one(rng, shape, lo=-9, hi=9):
    return DenseTensor.rank_one([[rng.randint(lo, hi) for _ in range(d)] for d in shape])


def rand_sum(rng, shape, r):
    total = rand_rank_one(rng, shape)
    for _ in range(r - 1):
        total = total + rand_rank_one(rng, shape)
    return total


def test_rank_one_flattenings():
    rng = random.Random(30)
    t = DenseTensor.rank_one([[1, 2], [3, 4, 5], [6, 7]])
    for mode in (1, 2, 3):
        assert mat_rank(flatten(t, [mode])) == 1
    assert multilinear_rank(t) == (1, 1, 1)
    assert gss_minor_test(t, 1)


def test_zero_tensor_flattening():
    t = DenseTensor.zero((2, 2, 2))
    m = flatten(t, [1])
    assert m.rows == 2 and m.cols == 4
    assert mat_rank(m) == 0


def test_flatten_layout_and_transpose_rank():
    rng = random.Random(31)
    t = DenseTensor((2, 3, 2), [rng.randint(-5, 5) for _ in range(12)])
    left = flatten(t, [1])
    right = flatten(t, [2, 3])
    assert left.rows == 2 and left.cols == 6
    assert right.rows == 6 and right.cols == 2
    # explicit entry: row (i), col (j, k) lexicographic
    assert left.at(1, 4) == t.at((1, 2, 0))
    assert mat_rank(left) == mat_rank(right)


def test_flatten_mode_validation():
    t = DenseTensor.zero((2, 2, 2))
    with pytest.raises(InvalidModeSet):
        flatten(t, [])
    with pytest.raises(InvalidModeSet):
        flatten(t, [1, 2, 3])
    with pytest.raises(InvalidModeSet):
        flatten(t, [4])


def test_flatten_is_linear():
    rng = random.Random(32)
    a = rand_sum(rng, (2, 3, 2), 2)
    b = rand_sum(rng, (2, 3, 2), 2)
    fa = flatten(a, [2])
    fb = flatten(b, [2])
    fsum = flatten(a + b.scale(3), [2])
    assert fsum.entries == [x + 3 * y for x, y in zip(fa.entries, fb.entries)]


def test_multilinear_rank_of_sums():
    rng = random.Random(33)
    for r in (1, 2, 3):
        t = rand_sum(rng, (3, 3, 3), r)
        ranks = multilinear_rank(t)
        assert all(rk <= r for rk in ranks)
    # wider entries make degenerate factor draws vanishingly rare; this
    # seeded instance is checked to realize the generic value (r, r, r)
    rng = random.Random(133)
    for r in (1, 2, 3):
        t = DenseTensor.rank_one([[rng.randint(-99, 99) for _ in range(3)]
                                  for _ in range(3)])
        for _ in range(r - 1):
            t = t + DenseTensor.rank_one([[rng.randint(-99, 99) for _ in range(3)]
                                          for _ in range(3)])
        assert multilinear_rank(t) == (r, r, r)


def test_multilinear_rank_subadditive():
    rng = random.Random(34)
    for _ in range(30):
        order = rng.choice((3, 4))
        shape = tuple(rng.randint(2, 4) for _ in range(order))
        r = rng.randint(1, 3)
        t = rand_sum(rng, shape, r)
        assert all(rk <= r for rk in multilinear_rank(t))
        assert gss_minor_test(t, r)


def test_gss_examples():
    rng = random.Random(35)
    two = rand_sum(rng, (2, 2, 2), 2)
    assert not gss_minor_test(two, 1)
    any_cube = rand_sum(rng, (3, 3, 3), 5)
    assert gss_minor_test(any_cube, 3)  # flattenings are 3 x 9


def test_matmul_tensor_basics():
    t1 = matmul_tensor(1)
    assert t1.shape == (1, 1, 1) and t1.entries == [Fraction(1)]
    t2 = matmul_tensor(2)
    assert sum(1 for e in t2.entries if e != 0) == 8
    assert multilinear_rank(t2) == (4, 4, 4)
    m = flatten(t2, [1])
    assert mat_rank(m) == rank_fraction_gauss(m) == 4


def test_matmul_tensor_contracts_to_products():
    rng = random.Random(36)
    for n in (1, 2, 3):
        t = matmul_tensor(n)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        prod = [[0] * n for _ in range(n)]
        for p in range(n):
            for q in range(n):
                for i in range(n):
                    for j in range(n):
                        for k in range(n):
                            for l in range(n):
                                prod[p][q] += int(t.at((i * n + j, k * n + l, p * n + q))
                                                  ) * a[i][j] * b[k][l]
        want = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]
        assert prod == want


def test_pencil_structure_and_rank_two():
    rng = random.Random(37)
    t = rand_rank_one(rng, (3, 3, 3), lo=1, hi=9)
    pencil = strassen_matrix(t)
    m = pencil.matrix
    for r in range(9):
        for c in range(9):
            if r // 3 == c // 3:
                assert m.at(r, c) == 0
    # antisymmetric block pattern: the (1,0) block is minus the (0,1) block
    for i in range(3):
        for j in range(3):
            assert m.at(3 + i, j) == -m.at(i, 3 + j)
            assert m.at(6 + i, j) == -m.at(i, 6 + j)
            assert m.at(6 + i, 3 + j) == -m.at(3 + i, 6 + j)
    assert pencil.rank() == 2


def test_pencil_additivity_and_rank_bound():
    rng = random.Random(38)
    a = rand_rank_one(rng, (3, 3, 3))
    b = rand_rank_one(rng, (3, 3, 3))
    pa = strassen_matrix(a).matrix
    pb = strassen_matrix(b).matrix
    psum = strassen_matrix(a + b).matrix
    assert psum.entries == [x + y for x, y in zip(pa.entries, pb.entries)]
    for r in (1, 2, 3, 4):
        t = rand_sum(rng, (3, 3, 3), r)
        assert strassen_matrix(t).rank() <= 2 * r


def test_pencil_det_rank_four_vs_five():
    rng = random.Random(39)
    for _ in range(10):
        assert strassen_matrix(rand_sum(rng, (3, 3, 3), 4)).det() == 0
    nonzero = 0
    for _ in range(10):
        if strassen_matrix(rand_sum(rng, (3, 3, 3), 5)).det() != 0:
            nonzero += 1
    assert nonzero == 10


def test_pencil_requires_cube():
    with pytest.raises(WrongShape):
        strassen_matrix(DenseTensor.zero((2, 3, 3)))


def test_symbolic_expansion_basics():
    sd = strassen_det_symbolic()
    assert sd.term_count == 9216
    assert sd.total_degree == 9
    assert all(sum(mono) == 9 for mono in sd.terms)


def test_symbolic_expansion_specializes():
    rng = random.Random(40)
    sd = strassen_det_symbolic()
    for _ in range(100):
        t = rand_sum(rng, (3, 3, 3), rng.randint(1, 5))
        direct = mat_det(strassen_matrix(t).matrix)
        assert sd.evaluate(t) == direct
    t4 = rand_sum(rng, (3, 3, 3), 4)
    assert sd.evaluate(t4) == 0


def test_symbolic_det_agrees_with_rational_gauss():
    rng = random.Random(41)
    t = rand_sum(rng, (3, 3, 3), 5)
    m = strassen_matrix(t).matrix
    assert mat_det(m) == det_fraction_gauss(m)


def test_json_round_trip():
    rng = random.Random(42)
    t = rand_sum(rng, (2, 3, 2), 2).scale(Fraction(1, 3))
    obj = tensor_to_json(t)
    assert tensor_from_json(obj) == t
    assert obj["shape"] == [2, 3, 2]


def test_json_rank_one_sum_format():
    obj = {"rank_one_sum": [
        {"factors": [[1, 0], [0, 1], [1, 1]], "coeff": "1/2"},
        {"factors": [[0, 1], [1, 0], [1, -1]]},
    ]}
    t = tensor_from_json(obj)
    want = (DenseTensor.rank_one([[1, 0], [0, 1], [1, 1]], Fraction(1, 2))
            + DenseTensor.rank_one([[0, 1], [1, 0], [1, -1]]))
    assert t == want


def test_json_errors_and_rationals():
    with pytest.raises(ValueError):
        tensor_from_json({"shape": [2]})
    with pytest.raises(ValueError):
        tensor_from_json({"shape": [2], "entries": [1.5, 2]})
    with pytest.raises(WrongShape):
        DenseTensor((2, 2), [1, 2, 3])
    assert parse_rational("7/2") == Fraction(7, 2)
    assert format_rational(Fraction(4, 2)) == 2
    assert format_rational(Fraction(-1, 3)) == "-1/3"
