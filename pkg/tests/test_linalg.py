import random
from fractions import Fraction

from multihilb import linalg


def test_rank_simple():
    assert linalg.rational_rank([[1, 2], [2, 4]]) == 1
    assert linalg.rational_rank([[1, 0], [0, 1]]) == 2
    assert linalg.rational_rank([]) == 0


def test_det_int_matches_fraction_path():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        frac = [[Fraction(x) for x in row] for row in m]
        assert linalg.det_exact(m) == linalg.det_exact(frac)


def test_det_permutation_sign():
    assert linalg.det_exact([[0, 1], [1, 0]]) == -1


def test_solve_unique():
    sol = linalg.solve_unique([[2, 0], [0, 3]], [4, 9])
    assert sol == [Fraction(2), Fraction(3)]
    assert linalg.solve_unique([[1, 1], [1, 1]], [0, 1]) is None


def test_smith_normal_form_transforms():
    rng = random.Random(5)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        d, u, v = linalg.smith_normal_form(a)
        # u * a * v == d
        ua = [[sum(u[i][k] * a[k][j] for k in range(rows)) for j in range(cols)]
              for i in range(rows)]
        uav = [[sum(ua[i][k] * v[k][j] for k in range(cols)) for j in range(cols)]
               for i in range(rows)]
        assert uav == d
        assert abs(linalg.det_exact(u)) == 1
        assert abs(linalg.det_exact(v)) == 1
        # divisibility chain on the diagonal
        diag = [d[i][i] for i in range(min(rows, cols))]
        for x, y in zip(diag, diag[1:]):
            if x != 0 and y != 0:
                assert y % x == 0
            if x == 0:
                assert y == 0


def test_kernel_basis():
    ker = linalg.kernel_basis([[1, 2]], 2)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] + 2 * v[1] == 0 and any(v)


def test_lattice_row_basis_rank():
    rows = [[2, 0, 0], [0, 3, 0], [2, 3, 0]]
    basis = linalg.lattice_row_basis(rows)
    assert len(basis) == 2


def test_fourier_motzkin_feasible():
    # lambda with lambda . (1,0) >= 1, lambda . (0,1) >= 1
    w = linalg.fourier_motzkin_witness([((1, 0), 1), ((0, 1), 1)], 2)
    assert w is not None
    assert w[0] >= 1 and w[1] >= 1


def test_fourier_motzkin_infeasible():
    assert linalg.fourier_motzkin_witness([((1,), 1), ((-1,), 1)], 1) is None


def test_fourier_motzkin_random_soundness():
    rng = random.Random(9)
    for _ in range(40):
        dim = rng.randint(1, 3)
        cons = [([rng.randint(-3, 3) for _ in range(dim)], rng.randint(-2, 2))
                for _ in range(rng.randint(1, 5))]
        w = linalg.fourier_motzkin_witness(cons, dim)
        if w is not None:
            for c, r in cons:
                assert sum(Fraction(a) * b for a, b in zip(c, w)) >= r


def test_polyhedron_simplex():
    # u1 + u2 = 2, u >= 0: segment with vertices (2,0), (0,2)
    verts, rays, empty = linalg.polyhedron_vertices_and_rays([[1, 1]], [2], 2)
    assert not empty and not rays
    assert sorted(verts) == [(Fraction(0), Fraction(2)), (Fraction(2), Fraction(0))]


def test_polyhedron_with_ray():
    # u1 - u2 = 1: vertex (1,0), recession ray (1,1)
    verts, rays, empty = linalg.polyhedron_vertices_and_rays([[1, -1]], [1], 2)
    assert not empty
    assert verts == [(Fraction(1), Fraction(0))]
    assert rays == [(1, 1)]


def test_polyhedron_empty():
    verts, rays, empty = linalg.polyhedron_vertices_and_rays([[1, 1]], [-1], 2)
    assert empty and not verts


def test_polyhedron_fractional_vertex():
    # 2u1 + u2... single eq 2u = 1 in one variable: vertex 1/2
    verts, rays, empty = linalg.polyhedron_vertices_and_rays([[2]], [1], 1)
    assert verts == [(Fraction(1, 2),)]
