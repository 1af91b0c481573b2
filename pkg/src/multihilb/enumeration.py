"""Enumeration of monomial ideals with a prescribed Hilbert function.

Two strategies back the public operations.  When the Hilbert function has
finite total colength the standard-monomial downsets are enumerated directly
(exact, no fiber boxes needed).  Otherwise ideals are grown degree by degree:
at each degree of the target set the branch chooses which fiber monomials stay
standard, which forces the complementary generators.
"""

from math import comb

from .errors import IterationCapError, ValidationError
from .grading import Degree
from .monomials import (INFINITE, MonomialIdeal, divides, hilbert_value,
                        hilbert_value_flagged, standard_downset)


class HilbertSpec:
    """Hilbert function: finite table of values plus a tail rule.

    Tail rules: ("zero",) vanishes off the table; ("const", c) takes the value
    c on the whole degree semigroup; ("poly", coeffs, d0, n) is the standard
    graded rule, full below d0 and polynomial from d0 on.
    """

    def __init__(self, table, tail=("zero",)):
        self.table = dict(table)
        for a, v in self.table.items():
            if not isinstance(a, Degree):
                raise ValidationError("table keys must be Degree values")
            if v < 0:
                raise ValidationError("Hilbert values must be nonnegative")
        self.tail = tuple(tail)
        kind = self.tail[0]
        if kind not in ("zero", "const", "poly"):
            raise ValidationError("unknown tail rule %r" % (kind,))
        if kind == "const" and self.tail[1] < 0:
            raise ValidationError("constant tail must be nonnegative")

    def value(self, grading, a, box=None):
        if a in self.table:
            return self.table[a]
        kind = self.tail[0]
        if kind == "zero":
            return 0
        if kind == "const":
            return self.tail[1] if grading.semigroup_contains(a, box) else 0
        coeffs, d0, n = self.tail[1], self.tail[2], self.tail[3]
        if grading.free_rank != 1 or grading.moduli or \
                any(c.free != (1,) for c in grading.columns):
            raise ValidationError("polynomial tail requires the standard grading")
        d = a.free[0]
        if d < 0:
            return 0
        if d < d0:
            return comb(n + d - 1, d)
        val = _eval_poly(coeffs, d)
        if val.denominator != 1 or val < 0:
            raise ValidationError("polynomial tail is not integral at %d" % d)
        return int(val)

    def support_degrees(self):
        return sorted(self.table, reverse=True)

    def total_colength(self, grading):
        """Sum of all values, or INFINITE when the tail never vanishes."""
        kind = self.tail[0]
        if kind == "zero":
            return sum(self.table.values())
        if kind == "const" and self.tail[1] == 0:
            return sum(self.table.values())
        if grading.free_rank == 0:
            # finite group: finitely many degrees overall
            degrees = _all_torsion_degrees(grading)
            return sum(self.value(grading, a) for a in degrees)
        return INFINITE

    def to_json(self):
        data = {"table": [[list(a.flat()), v] for a, v in
                          sorted(self.table.items())]}
        kind = self.tail[0]
        if kind == "zero":
            data["tail"] = {"kind": "zero"}
        elif kind == "const":
            data["tail"] = {"kind": "constant", "value": self.tail[1]}
        else:
            data["tail"] = {"kind": "polynomial",
                            "coeffs": [str(c) for c in self.tail[1]],
                            "threshold": self.tail[2], "n": self.tail[3]}
        return data

    @classmethod
    def from_json(cls, data, grading):
        from fractions import Fraction
        table = {grading.degree_from_flat(a): v for a, v in data.get("table", [])}
        tail_data = data.get("tail", {"kind": "zero"})
        kind = tail_data.get("kind", "zero")
        if kind == "zero":
            tail = ("zero",)
        elif kind == "constant":
            tail = ("const", tail_data["value"])
        elif kind == "polynomial":
            tail = ("poly", tuple(Fraction(c) for c in tail_data["coeffs"]),
                    tail_data["threshold"], tail_data["n"])
        else:
            raise ValidationError("unknown tail kind %r" % kind)
        return cls(table, tail)


def _eval_poly(coeffs, d):
    from fractions import Fraction
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * d + Fraction(c)
    return acc


def _all_torsion_degrees(grading):
    from itertools import product
    ranges = [range(m) for m in grading.moduli]
    return [Degree((), tors) for tors in product(*ranges)]


def constant_hilbert(grading, c):
    """h identically c on the degree semigroup."""
    return HilbertSpec({}, ("const", c))


# ---------------------------------------------------------------------------
# finite-colength path: enumerate standard-monomial downsets directly

def _profile_of(grading, monomials):
    prof = {}
    for m in monomials:
        a = grading.deg_of(m)
        prof[a] = prof.get(a, 0) + 1
    return prof


def _ideal_from_downset(n, downset):
    std = set(downset)
    candidates = set()
    for i in range(n):
        candidates.add(tuple(1 if j == i else 0 for j in range(n)))
    for m in std:
        for i in range(n):
            candidates.add(tuple(e + (1 if j == i else 0) for j, e in enumerate(m)))
    gens = [m for m in candidates if m not in std]
    if not gens and not std:
        return MonomialIdeal.unit(n)
    if not std:
        return MonomialIdeal.unit(n)
    return MonomialIdeal(gens, n=n)


def enumerate_finite_colength(grading, h):
    """All ideals whose standard set is a downset with the given profile."""
    n = grading.n
    targets = {}
    if h.tail[0] == "zero":
        targets = {a: v for a, v in h.table.items() if v > 0}
    else:
        for a in _all_torsion_degrees(grading):
            v = h.value(grading, a)
            if v > 0:
                targets[a] = v
    total = sum(targets.values())
    if total == 0:
        return [MonomialIdeal.unit(n)]
    origin = (0,) * n
    zero = grading.deg_of(origin)
    results = []

    def rec(std, counts, last):
        if len(std) == total:
            results.append(_ideal_from_downset(n, std))
            return
        frontier = set()
        for m in std:
            for i in range(n):
                nxt = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
                if nxt not in std and nxt > last:
                    frontier.add(nxt)
        for nxt in sorted(frontier):
            ok = True
            for i in range(n):
                if nxt[i] == 0:
                    continue
                below = tuple(e - (1 if j == i else 0) for j, e in enumerate(nxt))
                if below not in std:
                    ok = False
                    break
            if not ok:
                continue
            a = grading.deg_of(nxt)
            if counts.get(a, 0) >= targets.get(a, 0):
                continue
            counts[a] = counts.get(a, 0) + 1
            std.add(nxt)
            rec(std, counts, nxt)
            std.discard(nxt)
            counts[a] -= 1

    if targets.get(zero, 0) == 0:
        return []
    rec({origin}, {zero: 1}, origin)
    return sorted(set(results), key=lambda I: I.generators)


# ---------------------------------------------------------------------------
# degree-by-degree path

def _down_closed_subsets(free, size):
    """Down-closed (within the fiber) subsets of the given size.

    Divisibility inside a fiber goes through degree-zero monomials, so for a
    positive grading every subset qualifies.
    """
    free_set = set(free)
    divisors = {}
    for m in free:
        divisors[m] = [d for d in free_set
                       if d != m and divides(d, m)]
    items = sorted(free)  # ascending: divisors come first
    out = []

    def rec(idx, chosen):
        if len(chosen) == size:
            out.append(frozenset(chosen))
            return
        if idx == len(items) or len(chosen) + (len(items) - idx) < size:
            return
        m = items[idx]
        if all(d in chosen for d in divisors[m]):
            chosen.add(m)
            rec(idx + 1, chosen)
            chosen.discard(m)
        rec(idx + 1, chosen)

    rec(0, set())
    return out


def sort_degrees(grading, degrees):
    """A processing order compatible with the degree partial order."""
    if grading.is_positive():
        return sorted(degrees, key=lambda a: (grading.weight(a), a))
    return sorted(degrees)


def enumerate_on(grading, h, degrees, box=None):
    """All ideals generated in the given degrees whose Hilbert function
    matches h there.

    Branches over the choice of standard monomials per degree; every output
    is rechecked against h on the whole degree set.
    """
    degs = sort_degrees(grading, set(degrees))
    n = grading.n
    states = {MonomialIdeal.zero(n)}
    for a in degs:
        target = h.value(grading, a, box)
        fib = grading.fiber(a, box)
        new_states = set()
        for ideal in states:
            free = [m for m in fib.monomials if not ideal.contains(m)]
            if len(free) < target:
                continue
            for sigma in _down_closed_subsets(free, target):
                candidate = ideal.with_extra(
                    [m for m in free if m not in sigma])
                if hilbert_value(candidate, grading, a, box) == target:
                    new_states.add(candidate)
        states = new_states
        if not states:
            break
    out = []
    for ideal in states:
        ok = True
        for a in degs:
            if hilbert_value(ideal, grading, a, box) != h.value(grading, a, box):
                ok = False
                break
        if ok:
            out.append(ideal)
    out = sorted(set(out), key=lambda I: I.generators)
    _assert_antichain(out)
    return out


def _assert_antichain(ideals):
    for i, a in enumerate(ideals):
        for b in ideals[i + 1:]:
            if a.contains_ideal(b) or b.contains_ideal(a):
                raise AssertionError("enumeration output is not an antichain")


# ---------------------------------------------------------------------------
# global certification

def hilbert_matches(ideal, grading, h, box=None, frontier=None):
    """Compare h_I with h.  Returns (verdict, witness, exact).

    verdict is one of "match", "mismatch", "le" (everywhere <= but somewhere
    <).  For finite-colength h the answer is exact; otherwise the comparison
    runs over the supplied frontier degrees and exact is False.
    """
    total = h.total_colength(grading)
    if total is not INFINITE:
        std = standard_downset(ideal, grading, total)
        if std is None:
            return "mismatch", None, True
        prof = _profile_of(grading, std)
        mismatch = None
        strictly_less = False
        degrees = set(prof) | {a for a, v in h.table.items() if v > 0}
        if grading.free_rank == 0:
            degrees |= set(_all_torsion_degrees(grading))
        for a in sorted(degrees):
            hv = prof.get(a, 0)
            target = h.value(grading, a)
            if hv > target:
                return "mismatch", a, True
            if hv < target:
                strictly_less = True
                mismatch = a
        if strictly_less:
            return "le", mismatch, True
        return "match", None, True
    if frontier is None:
        raise ValidationError("frontier required for infinite-support h")
    strictly_less = False
    witness = None
    for a in frontier:
        hv, stable = hilbert_value_flagged(ideal, grading, a, box)
        target = h.value(grading, a, box)
        if hv is INFINITE or hv > target:
            # overcounts and infinitude are definitive even in a small box
            return "mismatch", a, False
        if hv < target and stable:
            strictly_less = True
            witness = a
    if strictly_less:
        return "le", witness, False
    return "match", None, False


def default_frontier(grading, h, ideals=(), radius=3, cap=200):
    """Degrees to scan when certifying Hilbert agreement.

    Takes the table support, generator and pairwise-lcm degrees of the given
    ideals, and a ball of semigroup sums of column degrees.
    """
    from .monomials import mon_lcm
    out = set(h.table)
    zero = grading.zero_degree()
    out.add(zero)
    shell = {zero}
    for _ in range(radius):
        nxt = set()
        for a in shell:
            for col in grading.columns:
                nxt.add(grading.add(a, col))
        shell = nxt - out
        out |= shell
        if len(out) > cap:
            break
    for ideal in ideals:
        for g in ideal.generators:
            out.add(grading.deg_of(g))
        gens = ideal.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                out.add(grading.deg_of(mon_lcm(gens[i], gens[j])))
    return sorted(out)[:cap]


def certified_enumeration(grading, h, box=None, max_rounds=16, frontier_radius=4):
    """The set C of all monomial ideals with Hilbert function h, plus the
    degree set that certifies it.

    Follows the supportive-set iteration: enumerate ideals generated in the
    current degrees that match h there, extend the degree set by disagreement
    witnesses, and stop when every survivor certifies globally.  For finite
    colength the certificates are exact; otherwise they are frontier checks.
    """
    total = h.total_colength(grading)
    if total is not INFINITE:
        ideals = enumerate_finite_colength(grading, h)
        degrees = set()
        for ideal in ideals:
            for g in ideal.generators:
                degrees.add(grading.deg_of(g))
        for a, v in h.table.items():
            degrees.add(a)
        return ideals, sorted(degrees), True

    degrees = set(a for a in h.table)
    degrees.add(grading.zero_degree())
    for _ in range(max_rounds):
        degs = sort_degrees(grading, degrees)
        candidates = enumerate_on(grading, h, degs, box)
        frontier = default_frontier(grading, h, candidates, radius=frontier_radius)
        certified = []
        witnesses = set()
        for ideal in candidates:
            verdict, witness, _exact = hilbert_matches(
                ideal, grading, h, box, frontier)
            if verdict == "match":
                certified.append(ideal)
            elif witness is not None:
                witnesses.add(witness)
        if len(certified) == len(candidates):
            _assert_antichain(certified)
            return certified, sorted(degrees), False
        if not witnesses - degrees:
            raise IterationCapError(
                "no fresh witness degrees; box or frontier too small")
        degrees |= witnesses
    raise IterationCapError("supportive iteration exceeded %d rounds" % max_rounds)


def enumerate_admissible(grading, h, box=None, max_rounds=16):
    """All monomial ideals with Hilbert function h (globally certified)."""
    ideals, _degrees, _exact = certified_enumeration(grading, h, box, max_rounds)
    return ideals
