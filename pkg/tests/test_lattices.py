from multihilb.lattices import conforms, graver_brute_force, graver_completion


def member_test_from_grading(g):
    def test(vec):
        pos = tuple(max(x, 0) for x in vec)
        neg = tuple(max(-x, 0) for x in vec)
        return g.deg_of(pos) == g.deg_of(neg)
    return test


def test_conforms():
    assert conforms((1, -1), (2, -3))
    assert not conforms((1, 1), (2, -3))
    assert not conforms((3, 0), (2, 0))


def test_graver_standard_n2():
    basis = [[1, -1]]
    gb = graver_completion(basis)
    assert set(gb) == {(1, -1), (-1, 1)}


def test_graver_weighted():
    # lattice of (1,2)-grading kernel: spanned by (2,-1)
    gb = graver_completion([[2, -1]])
    assert set(gb) == {(2, -1), (-2, 1)}


def test_graver_hyperbolic_rank1():
    gb = graver_completion([[1, 0, 1]])
    assert set(gb) == {(1, 0, 1), (-1, 0, -1)}


def test_graver_matches_brute_force():
    from multihilb.grading import Grading
    cases = [
        Grading(2, 1, [], [[1], [2]]),
        Grading(2, 1, [], [[1], [1]]),
        Grading(2, 0, [2], [[1], [1]]),
        Grading(3, 1, [], [[1], [1], [-1]]),
        Grading(4, 2, [], [[1, 0], [1, 0], [0, 1], [2, 1]]),
        Grading(3, 2, [], [[1, 0], [1, 1], [0, 1]]),
    ]
    for g in cases:
        basis = g.kernel_lattice_basis()
        gb = set(graver_completion(basis, cap=64))
        oracle = set(graver_brute_force(member_test_from_grading(g), g.n, 6))
        # within the oracle's norm bound the two sets agree
        assert {v for v in gb if sum(abs(x) for x in v) <= 6} == oracle


def test_graver_pairwise_minimal():
    gb = graver_completion([[1, 1, -1, 0], [0, 1, 1, -1]], cap=64)
    for v in gb:
        for w in gb:
            if v != w:
                assert not conforms(w, v) or not conforms(v, w)
                assert not conforms(w, v)
