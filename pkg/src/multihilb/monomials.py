"""Monomial ideals as antichains of minimal generators.

Monomials are exponent tuples; the canonical order everywhere is the monomial
lex order with x1 > x2 > ... > xn, i.e. descending order on exponent tuples.
Hilbert function values count standard monomials per degree, with honest
detection of infinite counts for nonpositive gradings via recurrent standard
monomials.
"""

from itertools import combinations

from .errors import InfiniteSetError, ValidationError
from . import linalg


class Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = Infinite()


def divides(m, target):
    return all(a <= b for a, b in zip(m, target))


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def total_degree(m):
    return sum(m)


class MonomialIdeal:
    """A monomial ideal, stored by its antichain of minimal generators."""

    def __init__(self, generators, n=None):
        gens = [tuple(int(e) for e in g) for g in generators]
        for g in gens:
            if any(e < 0 for e in g):
                raise ValidationError("negative exponent in generator")
        if gens:
            n = len(gens[0])
            if any(len(g) != n for g in gens):
                raise ValidationError("mixed generator lengths")
        elif n is None:
            raise ValidationError("zero ideal needs an explicit variable count")
        self.n = n
        self.generators = tuple(sorted(_minimalize(gens), reverse=True))

    @classmethod
    def zero(cls, n):
        return cls([], n=n)

    @classmethod
    def unit(cls, n):
        return cls([(0,) * n])

    def is_unit(self):
        return self.generators == ((0,) * self.n,)

    def is_zero(self):
        return not self.generators

    def contains(self, m):
        return any(divides(g, m) for g in self.generators)

    def with_extra(self, new_gens):
        return MonomialIdeal(list(self.generators) + list(new_gens), n=self.n)

    def contains_ideal(self, other):
        """self contains other as an ideal (every generator of other is in self)."""
        return all(self.contains(g) for g in other.generators)

    def to_json(self):
        return [list(g) for g in self.generators]

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "MonomialIdeal(%r)" % (list(self.generators),)


def _minimalize(gens):
    out = []
    for g in sorted(set(gens), key=total_degree):
        if not any(divides(h, g) for h in out):
            out.append(g)
    return out


def minimalize(monomials, n=None):
    """Divisibility-minimal subset of a monomial set, as an ideal."""
    mons = list(monomials)
    if not mons and n is None:
        raise ValidationError("empty set needs an explicit variable count")
    return MonomialIdeal(mons, n=n if n is not None else len(mons[0]))


def _recurrence_horizon(ideal):
    return max([total_degree(g) for g in ideal.generators], default=1) + 1


def is_recurrent(ideal, m, deg0_gens, horizon=None):
    """True iff m * g^k stays standard for all k, for some degree-zero g.

    Divisibility of m * g^k by a fixed generator is monotone in k and stable
    from k = max generator exponent onward, so one check at the horizon
    decides the whole tail.
    """
    if not deg0_gens:
        return False
    k = horizon if horizon is not None else _recurrence_horizon(ideal)
    for g in deg0_gens:
        probe = tuple(x + k * y for x, y in zip(m, g))
        if not ideal.contains(probe):
            return True
    return False


def hilbert_value_flagged(ideal, grading, a, box=None):
    """(count or INFINITE, exhaustive flag) for standard monomials of degree a.

    For nonpositive gradings the count is taken over the boxed fiber; a
    standard monomial with a recurrent degree-zero tail makes the true count
    infinite and is reported as such.  The flag is False when the boxed fiber
    failed its stability check, meaning the count may be an undercount.
    """
    fib = grading.fiber(a, box)
    deg0 = grading.degree_zero_generators() if not grading.is_positive() else ()
    horizon = _recurrence_horizon(ideal)
    count = 0
    for m in fib.monomials:
        if ideal.contains(m):
            continue
        if deg0 and is_recurrent(ideal, m, deg0, horizon):
            return INFINITE, True
        count += 1
    return count, fib.exhaustive


def hilbert_value(ideal, grading, a, box=None):
    """Number of standard monomials of degree a, or INFINITE."""
    return hilbert_value_flagged(ideal, grading, a, box)[0]


def standard_monomials(ideal, grading, a, box=None):
    """The standard monomials of degree a in monomial-lex order."""
    value = hilbert_value(ideal, grading, a, box)
    if value is INFINITE:
        raise InfiniteSetError("infinitely many standard monomials in this degree")
    fib = grading.fiber(a, box)
    return tuple(m for m in fib.monomials if not ideal.contains(m))


def standard_downset(ideal, grading, budget):
    """All standard monomials of an ideal with finite colength.

    Enumerates the complement downset breadth-first; returns None as soon as
    more than budget standard monomials exist.
    """
    n = ideal.n
    origin = (0,) * n
    if ideal.contains(origin):
        return []
    seen = {origin}
    queue = [origin]
    out = []
    while queue:
        m = queue.pop()
        out.append(m)
        if len(out) > budget:
            return None
        for i in range(n):
            nxt = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
            if nxt not in seen and not ideal.contains(nxt):
                seen.add(nxt)
                queue.append(nxt)
    return sorted(out, reverse=True)


def pairwise_lcm_degrees(ideal, grading):
    """Degrees of all pairwise lcms of generators (S-pair degree superset)."""
    out = set()
    for g, h in combinations(ideal.generators, 2):
        out.add(grading.deg_of(mon_lcm(g, h)))
    return out


def minimal_syzygy_degrees(ideal, grading):
    """Degrees of a minimal generating set of the first syzygy module.

    Multigraded Betti numbers are read off the Taylor complex tensored down to
    the ground field: the degree-b strand of the differential from triples to
    pairs has 0/+-1 entries, and beta_{1,b} of the ideal is the rank deficiency
    there (pair-to-single entries vanish because generators form an antichain).
    """
    gens = ideal.generators
    out = set()
    pairs = list(combinations(range(len(gens)), 2))
    triples = list(combinations(range(len(gens)), 3))
    lcm_pair = {p: mon_lcm(gens[p[0]], gens[p[1]]) for p in pairs}
    lcm_tri = {t: mon_lcm(lcm_pair[(t[0], t[1])], gens[t[2]]) for t in triples}
    for b in sorted(set(lcm_pair.values()), reverse=True):
        strand_pairs = [p for p in pairs if lcm_pair[p] == b]
        strand_tris = [t for t in triples if lcm_tri[t] == b]
        if not strand_pairs:
            continue
        col_of = {p: j for j, p in enumerate(strand_pairs)}
        rows = []
        for t in strand_tris:
            row = [0] * len(strand_pairs)
            faces = [(t[1], t[2]), (t[0], t[2]), (t[0], t[1])]
            for sgn_idx, face in enumerate(faces):
                if lcm_pair[face] == b and face in col_of:
                    row[col_of[face]] = (-1) ** sgn_idx
            rows.append(row)
        betti = len(strand_pairs) - linalg.rational_rank(rows)
        if betti > 0:
            out.add(grading.deg_of(b))
    return out


def taylor_betti(ideal):
    """All multigraded Betti numbers of S/I from the Taylor complex.

    Returns a dict {(homological degree k, multidegree b): beta}.  Exponential
    in the number of generators; meant for small verification instances such
    as regularity oracles.
    """
    gens = ideal.generators
    s = len(gens)
    subsets = {}
    for k in range(1, s + 1):
        for J in combinations(range(s), k):
            m = gens[J[0]]
            for i in J[1:]:
                m = mon_lcm(m, gens[i])
            subsets.setdefault(k, []).append((J, m))
    betti = {}
    degrees = sorted({m for lst in subsets.values() for _, m in lst}, reverse=True)
    for b in degrees:
        for k in range(1, s + 1):
            strand = [J for J, m in subsets.get(k, []) if m == b]
            if not strand:
                continue
            lower = {J: m for J, m in subsets.get(k - 1, [])} if k > 1 else {}
            ker_dim = len(strand) - _strand_rank(strand, lower, b)
            img_dim = _strand_rank([J for J, m in subsets.get(k + 1, []) if m == b],
                                   {J: m for J, m in subsets.get(k, [])}, b)
            val = ker_dim - img_dim
            if val:
                betti[(k, b)] = val
    return betti


def _strand_rank(sources, target_mdeg, b):
    """Rank of the Taylor differential restricted to multidegree b."""
    if not sources:
        return 0
    cols = {}
    rows = []
    for J in sources:
        row = {}
        for pos in range(len(J)):
            face = J[:pos] + J[pos + 1:]
            if target_mdeg.get(face) == b:
                row[face] = (-1) ** pos
        rows.append(row)
    for row in rows:
        for face in row:
            if face not in cols:
                cols[face] = len(cols)
    if not cols:
        return 0
    mat = [[row.get(face, 0) for face in cols] for row in rows]
    return linalg.rational_rank(mat)


def regularity(ideal):
    """Castelnuovo-Mumford regularity of a monomial ideal (total degree).

    reg(I) = max(total_degree(b) - k) over nonzero beta_{k,b}(S/I), k >= 1,
    shifted so that generators count at homological degree zero of I.
    """
    betti = taylor_betti(ideal)
    if not betti:
        return 0
    return max(total_degree(b) - (k - 1) for (k, b) in betti)
