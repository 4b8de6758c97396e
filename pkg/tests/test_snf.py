import pytest
from hypothesis import given, settings, strategies as st

from loopchain.chains import ZZ, F2, F5, Element, GradedBasis, ChainComplex, generator, map_from_table, zero_map
from loopchain.snf import smith_normal_form, mat_mul, homology, HomologyBasis, modp_rank


def test_identity():
    assert smith_normal_form([[1, 0], [0, 1]]).factors == [1, 1]


def test_single_entry():
    assert smith_normal_form([[2]]).factors == [2]


def test_divisibility_example():
    # gcd of entries 2, gcd of 2x2 minors 8 -> factors 2, 4
    assert smith_normal_form([[2, 4], [6, 8]]).factors == [2, 4]


def test_empty():
    assert smith_normal_form([]).factors == []


_small_matrices = st.lists(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=4),
    min_size=1, max_size=4,
).filter(lambda m: len({len(r) for r in m}) == 1)


@settings(max_examples=60, deadline=None)
@given(_small_matrices)
def test_snf_postconditions(matrix):
    res = smith_normal_form(matrix)
    rows, cols = len(matrix), len(matrix[0])
    # U M V is the diagonal of invariant factors
    D = mat_mul(mat_mul(res.U, matrix), res.V)
    for i in range(rows):
        for j in range(cols):
            expected = res.diagonal[i] if i == j and i < len(res.diagonal) else 0
            assert D[i][j] == expected
    # divisibility chain
    facs = res.factors
    for a, b in zip(facs, facs[1:]):
        assert b % a == 0
    # transforms are inverse pairs (hence unimodular)
    assert mat_mul(res.U, res.Uinv) == [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    assert mat_mul(res.V, res.Vinv) == [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]


def _complex(diffs, maxdeg, ring=ZZ):
    """diffs: {degree: matrix} acting on named generators e{n}_{i}."""
    dims = {}
    for n, m in diffs.items():
        if m:
            dims[n] = len(m[0])
            dims[n - 1] = max(dims.get(n - 1, 0), len(m))
    toks = {n: [generator("e%d_%d" % (n, i), n) for i in range(dims.get(n, 0))] for n in range(maxdeg + 1)}
    table = {}
    for n, m in diffs.items():
        for j, t in enumerate(toks[n]):
            img = Element(ring)
            for i, row in enumerate(m):
                if row[j]:
                    img = img + Element.from_token(ring, toks[n - 1][i], row[j])
            table[t] = img
    d = map_from_table(ring, -1, table)
    return ChainComplex(GradedBasis(ring, toks, maxdeg), d)


def test_sphere_homology():
    # S^2 model: generators in degrees 0 and 2, zero differential
    toks = {0: [generator("pt", 0)], 2: [generator("top", 2)]}
    X = ChainComplex(GradedBasis(ZZ, toks, 4), zero_map(ZZ, -1))
    h = homology(X, range(0, 3))
    assert [(s.betti, s.torsion) for s in h] == [(1, []), (0, []), (1, [])]


def test_multiplication_by_two():
    X = _complex({1: [[2]]}, 2)
    h = homology(X, range(0, 2))
    assert (h[0].betti, h[0].torsion) == (0, [2])
    assert (h[1].betti, h[1].torsion) == (0, [])


def test_modp_matches_integral_on_torsion_free():
    X = _complex({1: [[0, 0]], 2: [[1], [-1]]}, 3)
    Xp = _complex({1: [[0, 0]], 2: [[1], [-1]]}, 3, ring=F5)
    hz = homology(X, range(0, 3))
    hp = homology(Xp, range(0, 3))
    assert all(a.torsion == [] for a in hz)
    assert [a.betti for a in hz] == [a.betti for a in hp]


def test_homology_basis_representatives_and_coordinates():
    X = _complex({1: [[2]]}, 2)
    hb = HomologyBasis(X, 0)
    assert hb.generators == [("torsion", 0, 2)]
    rep = hb.representatives[0]
    # the representative generates H_0 = Z/2
    assert hb.coordinates(rep) == [1]
    assert hb.coordinates([2 * v for v in rep]) == [0]


def test_homology_basis_free_part():
    toks = {0: [generator("pt", 0)], 2: [generator("top", 2)]}
    X = ChainComplex(GradedBasis(ZZ, toks, 4), zero_map(ZZ, -1))
    hb = HomologyBasis(X, 2)
    assert hb.generators == [("free", 0)]
    assert hb.coordinates([3]) == [3]


def test_modp_rank():
    assert modp_rank([[2, 4], [6, 8]], 2) == 0
    assert modp_rank([[1, 4], [6, 8]], 2) == 1
    assert modp_rank([[2, 4], [6, 8]], 5) == 2
