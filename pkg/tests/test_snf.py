import random

from topocert import smith_normal_form
from topocert.snf import diagonal, matmul

from oracles import exact_det


def test_identity():
    u, d, v = smith_normal_form([[1, 0], [0, 1]])
    assert d == [[1, 0], [0, 1]]


def test_worked_2x2():
    u, d, v = smith_normal_form([[2, 4], [6, 8]])
    assert diagonal(d) == [2, 4]


def test_zero_matrix():
    _, d, _ = smith_normal_form([[0, 0], [0, 0], [0, 0]])
    assert all(x == 0 for row in d for x in row)


def test_empty_shapes():
    u, d, v = smith_normal_form([])
    assert (u, d, v) == ([], [], [])
    u, d, v = smith_normal_form([[], []])
    assert d == [[], []] and len(u) == 2 and v == []


def test_nonsquare():
    _, d, _ = smith_normal_form([[4, 6, 10]])
    assert diagonal(d) == [2]


def test_random_matrices_identity_unimodularity_divisibility():
    rng = random.Random(1234)
    for _ in range(1000):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        u, d, v = smith_normal_form(mat)
        assert matmul(matmul(u, mat), v) == d
        assert abs(exact_det(u)) == 1
        assert abs(exact_det(v)) == 1
        diag = diagonal(d)
        assert all(x >= 0 for x in diag)
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a != 0 and b % a == 0
        # off-diagonal must vanish
        for i, row in enumerate(d):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0


def test_big_entries_stay_exact():
    mat = [[10**30, 1], [0, 10**30]]
    u, d, v = smith_normal_form(mat)
    assert matmul(matmul(u, mat), v) == d
    assert diagonal(d)[0] == 1
    assert diagonal(d)[1] == 10**60
