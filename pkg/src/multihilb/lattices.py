"""Graver bases of integer lattices by Pottier-style completion.

The Graver basis of a lattice M is the set of sign-compatibly minimal nonzero
vectors: u is dominated by v (v conforms to u) when v_i u_i >= 0 and
|v_i| <= |u_i| in every coordinate.  Completion starts from a lattice basis
closed under negation, reduces pairwise sums to normal form, and filters the
result to the dominance-minimal vectors.
"""

from .errors import CapExceededError


def conforms(v, u):
    """v sign-compatibly divides u (componentwise, same signs)."""
    return all(x * y >= 0 and abs(x) <= abs(y) for x, y in zip(v, u))


def _normal_form(r, gens):
    changed = True
    while changed and any(r):
        changed = False
        for g in gens:
            if any(g) and conforms(g, r):
                r = tuple(x - y for x, y in zip(r, g))
                changed = True
                break
    return r


def graver_completion(basis_rows, cap=64):
    """Graver basis of the lattice spanned by the given integer rows.

    cap bounds the 1-norm of any vector entering the completion; exceeding it
    raises CapExceededError rather than returning a truncated answer.
    """
    vecs = []
    for row in basis_rows:
        v = tuple(int(x) for x in row)
        if any(v):
            vecs.append(v)
            vecs.append(tuple(-x for x in v))
    gens = []
    for v in vecs:
        if v not in gens:
            gens.append(v)
    pending = [(f, g) for i, f in enumerate(gens) for g in gens[i:]]
    while pending:
        f, g = pending.pop()
        s = tuple(x + y for x, y in zip(f, g))
        if not any(s):
            continue
        s = _normal_form(s, gens)
        if not any(s):
            continue
        if sum(abs(x) for x in s) > cap:
            raise CapExceededError(
                "Graver completion exceeded 1-norm cap %d" % cap)
        pending.extend((s, h) for h in gens)
        pending.append((s, s))
        gens.append(s)
    minimal = []
    for v in gens:
        if not any(w != v and conforms(w, v) for w in gens):
            minimal.append(v)
    return sorted(set(minimal), reverse=True)


def graver_brute_force(member_test, n, norm_bound):
    """Oracle: all dominance-minimal nonzero lattice vectors with 1-norm bound.

    member_test decides lattice membership of an integer vector.  Intended for
    tests on small lattices; exponential in n and the bound.
    """
    from itertools import product

    candidates = []
    rng = range(-norm_bound, norm_bound + 1)
    for vec in product(rng, repeat=n):
        if not any(vec):
            continue
        if sum(abs(x) for x in vec) > norm_bound:
            continue
        if member_test(vec):
            candidates.append(vec)
    minimal = [v for v in candidates
               if not any(w != v and conforms(w, v) for w in candidates)]
    return sorted(minimal, reverse=True)
