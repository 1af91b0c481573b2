"""Gradings of polynomial rings by finitely generated abelian groups.

A grading assigns each variable a degree in A = Z^d + Z/m_1 + ... + Z/m_t.
Degrees are stored in that canonical form; other presentations should be
brought to it with the Smith normal form utility first.  Positivity (only the
constant monomial has degree zero) is decided by exact rational linear
programming on the free parts: torsion cannot rescue a zero free degree, since
scaling by the lcm of the moduli kills it.
"""

from typing import NamedTuple

from .errors import UnboundedFiberError, ValidationError
from . import linalg


class Degree(NamedTuple):
    free: tuple
    torsion: tuple

    def flat(self):
        return list(self.free) + list(self.torsion)


class FiberBox(NamedTuple):
    """Per-variable exponent caps; None means unbounded in that coordinate."""

    bounds: tuple

    def is_finite(self):
        return all(b is not None for b in self.bounds)


class Fiber(NamedTuple):
    monomials: tuple
    exhaustive: bool
    method: str  # "certificate" | "box-stable" | "box"


def uniform_box(n, bound):
    return FiberBox(tuple([bound] * n))


class Grading:
    """Degree map N^n -> Z^d + sum Z/m_j given by one Degree per variable."""

    def __init__(self, n, free_rank, moduli, columns, check=True):
        self.n = n
        self.free_rank = free_rank
        self.moduli = tuple(moduli)
        cols = []
        for col in columns:
            if isinstance(col, Degree):
                free, tors = col.free, col.torsion
            else:
                free = tuple(col[:free_rank])
                tors = tuple(col[free_rank:])
            if len(free) != free_rank or len(tors) != len(self.moduli):
                raise ValidationError("grading column has wrong length")
            tors = tuple(t % m for t, m in zip(tors, self.moduli))
            cols.append(Degree(tuple(int(x) for x in free), tors))
        if len(cols) != n:
            raise ValidationError("expected %d columns, got %d" % (n, len(cols)))
        self.columns = tuple(cols)
        self._positive = None
        self._certificate = None
        self._deg0_gens = None
        if check and not self.columns_generate_group():
            raise ValidationError("grading columns do not generate the group")

    # -- structure ---------------------------------------------------------

    def columns_generate_group(self):
        if self.n == 0:
            return self.free_rank == 0 and not self.moduli
        d, t = self.free_rank, len(self.moduli)
        if d + t == 0:
            return True
        rows = []
        for i in range(d):
            rows.append([c.free[i] for c in self.columns] + [0] * t)
        for j in range(t):
            row = [c.torsion[j] for c in self.columns]
            row += [self.moduli[j] if k == j else 0 for k in range(t)]
            rows.append(row)
        diag, _, _ = linalg.smith_normal_form(rows)
        for i in range(d + t):
            if i >= len(diag) or i >= len(diag[i]) or abs(diag[i][i]) != 1:
                return False
        return True

    def zero_degree(self):
        return Degree((0,) * self.free_rank, (0,) * len(self.moduli))

    def degree(self, free=(), torsion=()):
        free = tuple(int(x) for x in free)
        tors = tuple(int(x) % m for x, m in zip(torsion, self.moduli))
        if len(free) != self.free_rank or len(tors) != len(self.moduli):
            raise ValidationError("degree has wrong shape for this grading")
        return Degree(free, tors)

    def degree_from_flat(self, values):
        values = list(values)
        return self.degree(values[: self.free_rank], values[self.free_rank:])

    def add(self, a, b):
        return Degree(
            tuple(x + y for x, y in zip(a.free, b.free)),
            tuple((x + y) % m for x, y, m in zip(a.torsion, b.torsion, self.moduli)),
        )

    def sub(self, a, b):
        return Degree(
            tuple(x - y for x, y in zip(a.free, b.free)),
            tuple((x - y) % m for x, y, m in zip(a.torsion, b.torsion, self.moduli)),
        )

    def neg(self, a):
        return Degree(
            tuple(-x for x in a.free),
            tuple((-x) % m for x, m in zip(a.torsion, self.moduli)),
        )

    def scale(self, k, a):
        return Degree(
            tuple(k * x for x in a.free),
            tuple((k * x) % m for x, m in zip(a.torsion, self.moduli)),
        )

    def deg_of(self, u):
        """Degree of the monomial with exponent vector u."""
        if len(u) != self.n:
            raise ValidationError("exponent vector has length %d, expected %d" % (len(u), self.n))
        if any(e < 0 for e in u):
            raise ValidationError("exponent vector must be nonnegative")
        free = [0] * self.free_rank
        tors = [0] * len(self.moduli)
        for e, col in zip(u, self.columns):
            if e:
                for i in range(self.free_rank):
                    free[i] += e * col.free[i]
                for j in range(len(self.moduli)):
                    tors[j] += e * col.torsion[j]
        tors = [t % m for t, m in zip(tors, self.moduli)]
        return Degree(tuple(free), tuple(tors))

    # -- positivity --------------------------------------------------------

    def is_positive(self):
        """True iff the constant monomial is the only one of degree zero."""
        if self._positive is None:
            if self.n == 0:
                self._positive, self._certificate = True, ()
            elif self.free_rank == 0:
                self._positive = False
            else:
                constraints = [(c.free, 1) for c in self.columns]
                witness = linalg.fourier_motzkin_witness(constraints, self.free_rank)
                if witness is None:
                    self._positive = False
                else:
                    for c in self.columns:
                        assert sum(w * x for w, x in zip(witness, c.free)) >= 1
                    self._positive = True
                    self._certificate = tuple(witness)
        return self._positive

    def positivity_certificate(self):
        return self._certificate if self.is_positive() else None

    def weight(self, a):
        """Certificate weight of a degree's free part (requires positivity)."""
        cert = self.positivity_certificate()
        if cert is None:
            raise ValidationError("grading has no positivity certificate")
        return sum(w * x for w, x in zip(cert, a.free))

    # -- fibers ------------------------------------------------------------

    def fiber(self, a, box=None):
        """All exponent vectors of degree a, in monomial-lex order.

        With a positivity certificate the search is exact; otherwise a finite
        box is required and exhaustiveness is the box-stability heuristic
        (growing the box by one in every coordinate finds nothing new).
        """
        mons = self._fiber_list(a, box)
        if self.is_positive() and box is None:
            return Fiber(tuple(mons), True, "certificate")
        if box is None or not box.is_finite():
            raise UnboundedFiberError(
                "fiber enumeration needs a positive grading or a finite box")
        bigger = FiberBox(tuple(b + 1 for b in box.bounds))
        stable = self._fiber_list(a, bigger) == mons
        return Fiber(tuple(mons), stable, "box-stable" if stable else "box")

    def _fiber_list(self, a, box):
        cert = self.positivity_certificate() if box is None else None
        if cert is None and (box is None or not box.is_finite()):
            raise UnboundedFiberError(
                "fiber enumeration needs a positive grading or a finite box")
        out = []
        u = [0] * self.n

        def rec(idx, rem_free):
            if idx == self.n:
                if all(x == 0 for x in rem_free) and self.deg_of(u) == a:
                    out.append(tuple(u))
                return
            col = self.columns[idx].free
            if cert is not None:
                wrem = sum(w * x for w, x in zip(cert, rem_free))
                if wrem < 0:
                    return
                wcol = sum(w * x for w, x in zip(cert, col))
                hi = int(wrem // wcol)
            else:
                hi = box.bounds[idx]
            for e in range(hi, -1, -1):
                u[idx] = e
                rec(idx + 1, tuple(r - e * c for r, c in zip(rem_free, col)))
            u[idx] = 0

        if self.n == 0:
            if a == self.zero_degree():
                out.append(())
            return out
        rec(0, a.free)
        out.sort(reverse=True)
        return out

    def semigroup_contains(self, c, box=None):
        """True iff some monomial has degree c (i.e. c lies in A_+)."""
        if self.is_positive() and box is None:
            return bool(self._fiber_list(c, None))
        if box is None or not box.is_finite():
            raise UnboundedFiberError("semigroup test needs positivity or a box")
        return bool(self._fiber_list(c, box))

    def le(self, a, b, box=None):
        """Partial order a <= b, meaning b - a lies in A_+."""
        return self.semigroup_contains(self.sub(b, a), box)

    def degree_zero_generators(self, box=None, cap=64):
        """Hilbert basis of the degree-zero monomial semigroup.

        Computed as the divisibility-minimal nonnegative Graver elements of
        the kernel lattice; every Hilbert basis element is Graver.
        """
        if self._deg0_gens is None:
            if self.is_positive():
                self._deg0_gens = ()
            else:
                from .lattices import graver_completion
                rows = self.kernel_lattice_basis()
                graver = graver_completion(rows, cap=cap)
                nonneg = [g for g in graver if all(x >= 0 for x in g)]
                minimal = []
                for g in nonneg:
                    if not any(h != g and all(x <= y for x, y in zip(h, g))
                               for h in nonneg):
                        minimal.append(g)
                self._deg0_gens = tuple(sorted(minimal, reverse=True))
        return self._deg0_gens

    def kernel_lattice_basis(self):
        """Rows spanning ker(Z^n -> A), torsion congruences included."""
        d, t = self.free_rank, len(self.moduli)
        rows = []
        for i in range(d):
            rows.append([c.free[i] for c in self.columns] + [0] * t)
        for j in range(t):
            rows.append([c.torsion[j] for c in self.columns]
                        + [self.moduli[j] if k == j else 0 for k in range(t)])
        if not rows:
            return [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        kern = linalg.kernel_basis(rows, self.n + t)
        projected = [row[: self.n] for row in kern]
        return linalg.lattice_row_basis(projected)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "n": self.n,
            "free_rank": self.free_rank,
            "moduli": list(self.moduli),
            "columns": [c.flat() for c in self.columns],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], data["free_rank"], data.get("moduli", []),
                   data["columns"])

    def __repr__(self):
        return "Grading(n=%d, columns=%r)" % (self.n, [c.flat() for c in self.columns])
