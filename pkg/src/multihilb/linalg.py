"""Exact linear algebra over the integers and rationals.

Everything here works on plain lists/tuples of ints or Fractions; no floats
anywhere.  These routines back the rank/nullspace computations, Smith normal
form (torsion handling and kernel lattices), rational LP feasibility for
positivity certificates, and exact vertex enumeration of fiber polyhedra.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rational_rank(rows):
    """Rank of a matrix (rows of ints/Fractions) over the rationals."""
    if not rows:
        return 0
    m = _as_fraction_rows(rows)
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for r in range(row + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def nullspace_dimension(rows, ncols):
    return ncols - rational_rank(rows)


def solve_unique(rows, rhs):
    """Solve A x = b expecting a unique solution.

    Returns the solution as a list of Fractions, or None if the system is
    inconsistent.  Raises ValueError when the solution is not unique.
    """
    if not rows:
        if any(b != 0 for b in rhs):
            return None
        return []
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(aug)):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [a / pv for a in aug[row]]
        for r in range(len(aug)):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, len(aug)):
        if aug[r][ncols] != 0:
            return None
    if len(pivots) < ncols:
        raise ValueError("solution is not unique")
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][ncols]
    return sol


def det_exact(rows):
    """Determinant of a square matrix of ints/Fractions (fraction-free for ints)."""
    n = len(rows)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in rows for x in row):
        return _det_bareiss([list(r) for r in rows])
    m = _as_fraction_rows(rows)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def _det_bareiss(m):
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = None
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    piv = r
                    break
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix):
    """Smith normal form with transforms: returns (d, u, v) with u*A*v = d.

    u and v are unimodular; d is diagonal with d[i][i] dividing d[i+1][i+1].
    All matrices are lists of lists of ints.
    """
    a = [list(row) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(nrows):
            a[r][i] -= q * a[r][j]
        for r in range(ncols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(nrows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(ncols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    s = 0
    while s < min(nrows, ncols):
        # find a pivot of least absolute value in the trailing block
        piv = None
        best = None
        for i in range(s, nrows):
            for j in range(s, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(s, piv[0])
        swap_cols(s, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(s + 1, nrows):
                if a[i][s] != 0:
                    q = a[i][s] // a[s][s]
                    row_op(i, s, q)
                    if a[i][s] != 0:
                        swap_rows(s, i)
                        dirty = True
            for j in range(s + 1, ncols):
                if a[s][j] != 0:
                    q = a[s][j] // a[s][s]
                    col_op(j, s, q)
                    if a[s][j] != 0:
                        swap_cols(s, j)
                        dirty = True
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            u[s] = [-x for x in u[s]]
        # enforce divisibility of the remaining block by the pivot
        fixed = False
        for i in range(s + 1, nrows):
            for j in range(s + 1, ncols):
                if a[i][j] % a[s][s] != 0:
                    # add row i to row s and restart elimination at s
                    a[s] = [x + y for x, y in zip(a[s], a[i])]
                    u[s] = [x + y for x, y in zip(u[s], u[i])]
                    fixed = True
                    break
            if fixed:
                break
        if not fixed:
            s += 1
    return a, u, v


def kernel_basis(matrix, ncols=None):
    """Integer basis of the kernel lattice {x : A x = 0}, as a list of rows."""
    nrows = len(matrix)
    if ncols is None:
        ncols = len(matrix[0]) if nrows else 0
    if nrows == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    d, _u, v = smith_normal_form(matrix)
    rank = 0
    for i in range(min(nrows, ncols)):
        if d[i][i] != 0:
            rank += 1
    basis = []
    for j in range(rank, ncols):
        basis.append([v[r][j] for r in range(ncols)])
    return basis


def lattice_row_basis(rows):
    """A basis (as rows) of the lattice generated by the given integer rows."""
    rows = [list(r) for r in rows if any(x != 0 for x in r)]
    if not rows:
        return []
    ncols = len(rows[0])
    # integer row echelon (Hermite-style, no column ops)
    basis = []
    work = rows
    col = 0
    while work and col < ncols:
        piv_rows = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not piv_rows:
            col += 1
            continue
        while len(piv_rows) > 1:
            piv_rows.sort(key=lambda r: abs(r[col]))
            p = piv_rows[0]
            out = [p]
            for r in piv_rows[1:]:
                q = r[col] // p[col]
                r2 = [x - q * y for x, y in zip(r, p)]
                if r2[col] != 0:
                    out.append(r2)
                elif any(x != 0 for x in r2):
                    rest.append(r2)
            piv_rows = out
        basis.append(piv_rows[0])
        work = rest
        col += 1
    return basis


def primitive_vector(vec):
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g <= 1:
        return list(vec)
    return [x // g for x in vec]


def fourier_motzkin_witness(constraints, dim):
    """Find a rational point satisfying c . x >= r for every (c, r) given.

    Returns a list of Fractions of length dim, or None when infeasible.
    """
    system = [([Fraction(x) for x in c], Fraction(r)) for c, r in constraints]
    stack = []
    for var in range(dim - 1, -1, -1):
        lower, upper, rest = [], [], []
        for c, r in system:
            coef = c[var]
            if coef > 0:
                # x_var >= (r - sum others)/coef
                lower.append(([x / coef for x in c[:var]], r / coef))
            elif coef < 0:
                upper.append(([x / -coef for x in c[:var]], r / -coef))
            else:
                rest.append((c[:var], r))
        stack.append((var, lower, upper))
        new = rest
        for cl, rl in lower:
            for cu, ru in upper:
                # lower <= upper: rl - cl.x' <= cu.x' - ru, i.e. (cl+cu).x' >= rl+ru
                new.append(([a + b for a, b in zip(cl, cu)], rl + ru))
        system = new
    for c, r in system:
        if r > 0:  # 0 >= r fails
            return None
    point = []
    for var, lower, upper in reversed(stack):
        lo = None
        hi = None
        for c, r in lower:
            val = r - sum(a * b for a, b in zip(c, point))
            if lo is None or val > lo:
                lo = val
        for c, r in upper:
            val = -(r - sum(a * b for a, b in zip(c, point)))
            if hi is None or val < hi:
                hi = val
        if lo is None and hi is None:
            point.append(Fraction(0))
        elif lo is None:
            point.append(hi)
        elif hi is None:
            point.append(lo)
        else:
            point.append((lo + hi) / 2)
    return point


def polyhedron_vertices_and_rays(eq_matrix, rhs, n):
    """Exact vertex/ray enumeration for P = {u in R^n, u >= 0 : A u = b}.

    Works through the homogenization cone {(u, t) >= 0 : A u = t b} and
    enumerates its extreme rays combinatorially (the cone is pointed because
    it sits inside the nonnegative orthant).  Returns (vertices, rays, empty)
    with vertices as tuples of Fractions and rays as primitive integer tuples.
    """
    homog = [list(row) + [-b] for row, b in zip(eq_matrix, rhs)]
    ncols = n + 1
    if homog:
        sol_basis = kernel_basis(homog, ncols)
    else:
        sol_basis = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    k = len(sol_basis)
    if k == 0:
        return [], [], True
    # cone in parameter space: rows of P map y to (u, t) coordinates
    p_rows = [[sol_basis[j][i] for j in range(k)] for i in range(ncols)]
    rays_param = []
    if k == 1:
        for sgn in (1, -1):
            y = [sgn]
            coords = [sum(pr[j] * y[j] for j in range(k)) for pr in p_rows]
            if all(c >= 0 for c in coords) and any(c != 0 for c in coords):
                rays_param.append(coords)
    else:
        seen = set()
        for subset in combinations(range(ncols), k - 1):
            sub = [p_rows[i] for i in subset]
            if rational_rank(sub) != k - 1:
                continue
            line = kernel_basis(sub, k)
            if len(line) != 1:
                continue
            y = line[0]
            for sgn in (1, -1):
                coords = [sgn * sum(pr[j] * y[j] for j in range(k)) for pr in p_rows]
                if all(c >= 0 for c in coords) and any(c != 0 for c in coords):
                    prim = tuple(primitive_vector(coords))
                    if prim not in seen:
                        seen.add(prim)
                        rays_param.append(list(prim))
    vertices = []
    rays = []
    seen_v = set()
    seen_r = set()
    for coords in rays_param:
        u, t = coords[:n], coords[n]
        if t > 0:
            vert = tuple(Fraction(x, t) for x in u)
            if vert not in seen_v:
                seen_v.add(vert)
                vertices.append(vert)
        else:
            prim = tuple(primitive_vector(u))
            if prim not in seen_r and any(prim):
                seen_r.add(prim)
                rays.append(prim)
    return vertices, rays, not vertices
