import pytest

from loopchain.chains import (
    ZZ, Element, generator, suspend, desuspend, tensor_token, word_token,
    verify_chain_map, identity_map, zero_map,
)
from loopchain.dg import check_twisting, tensor_algebra, universal_twisting
from loopchain.fixtures import (
    exterior_two, small_commutative, free_hopf_one, group_ring_hopf, monomial_algebra,
)
from loopchain.groups import BUILTIN_GROUPS
from loopchain.perturbation import (
    SDRData, check_sdr, bar_sdr, bar_eilenberg_zilber, bar_alexander_whitney,
    bar_em_homotopy, transferred_twisting, dcsh_realization, BarHopfStructure,
    PerturbationDivergence,
)


def w(*letters):
    return word_token(tuple(letters))


def _gen(A, data):
    for n in range(A.max_degree + 1):
        for t in A.complex.basis.basis(n):
            if t.data == data:
                return t
    raise KeyError(data)


# --- the three maps on small words -------------------------------------------


def test_nabla_on_single_letters():
    A, Ap = exterior_two(), small_commutative()
    nabla = bar_eilenberg_zilber(A, Ap)
    a = _gen(A, ("mono", 1, 0))
    img = nabla(tensor_token(w(suspend(a)), w()))
    assert img == Element.from_token(ZZ, w(suspend(tensor_token(a, Ap.unit))))


def test_nabla_two_shuffles_with_koszul_sign():
    A, Ap = exterior_two(), small_commutative()
    nabla = bar_eilenberg_zilber(A, Ap)
    a = _gen(A, ("mono", 1, 0))      # degree 1, letter degree 2
    x = _gen(Ap, ("mono", 1, 0))     # degree 1, letter degree 2
    img = nabla(tensor_token(w(suspend(a)), w(suspend(x))))
    u = suspend(tensor_token(a, Ap.unit))
    v = suspend(tensor_token(A.unit, x))
    expected = Element(ZZ)
    expected._accumulate(w(u, v), 1)
    expected._accumulate(w(v, u), 1)  # (-1)^(2*2) = +1
    assert img == expected
    # odd letter degrees (even generators) flip the transposed shuffle
    ab = _gen(A, ("mono", 1, 1))     # degree 2, letter degree 3
    y = _gen(Ap, ("mono", 0, 1))     # degree 2, letter degree 3
    img2 = nabla(tensor_token(w(suspend(ab)), w(suspend(y))))
    u2, v2 = suspend(tensor_token(ab, Ap.unit)), suspend(tensor_token(A.unit, y))
    expected2 = Element(ZZ)
    expected2._accumulate(w(u2, v2), 1)
    expected2._accumulate(w(v2, u2), -1)  # (-1)^(3*3)
    assert img2 == expected2


def test_aw_on_single_letters():
    A, Ap = exterior_two(), small_commutative()
    f = bar_alexander_whitney(A, Ap)
    a = _gen(A, ("mono", 1, 0))
    x = _gen(Ap, ("mono", 1, 0))
    assert f(w(suspend(tensor_token(a, Ap.unit)))) == \
        Element.from_token(ZZ, tensor_token(w(suspend(a)), w()))
    assert f(w(suspend(tensor_token(A.unit, x)))) == \
        Element.from_token(ZZ, tensor_token(w(), w(suspend(x))))
    # mixed letter with both coordinates positive dies
    assert f(w(suspend(tensor_token(a, x)))).is_zero()


def test_aw_respects_word_length_split():
    A, Ap = exterior_two(), exterior_two()
    f = bar_alexander_whitney(A, Ap)
    a = _gen(A, ("mono", 1, 0))
    b = _gen(A, ("mono", 0, 1))
    word = w(suspend(tensor_token(a, Ap.unit)), suspend(tensor_token(b, Ap.unit)),
             suspend(tensor_token(A.unit, a)))
    img = f(word)
    for t, _ in img.items():
        left, right = t.data
        assert len(left.data) + len(right.data) == 3


def test_em_homotopy_vanishing_cases():
    A, Ap = exterior_two(), small_commutative()
    h = bar_em_homotopy(A, Ap)
    x = _gen(Ap, ("mono", 1, 0))
    y = _gen(Ap, ("mono", 0, 1))
    a = _gen(A, ("mono", 1, 0))
    # pure second-coordinate words
    assert h(w(suspend(tensor_token(A.unit, x)), suspend(tensor_token(A.unit, y)))).is_zero()
    # first-block / second-block words
    assert h(w(suspend(tensor_token(a, Ap.unit)), suspend(tensor_token(A.unit, y)))).is_zero()


# --- the five SDR identities -------------------------------------------------


@pytest.mark.parametrize("make_a,make_b", [
    (exterior_two, exterior_two),
    (exterior_two, small_commutative),
    (small_commutative, exterior_two),
    (small_commutative, small_commutative),
])
def test_sdr_identities_through_degree_8(make_a, make_b):
    sdr = bar_sdr(make_a(), make_b(), max_degree=9)
    assert check_sdr(sdr, 8) == []


def test_sdr_identities_with_units_in_degree_zero():
    # group rings put augmentation-ideal classes in degree 0
    A = group_ring_hopf(BUILTIN_GROUPS["c2"]).algebra
    sdr = bar_sdr(A, A, max_degree=7)
    assert check_sdr(sdr, 6) == []


def test_nabla_and_f_are_chain_maps():
    sdr = bar_sdr(exterior_two(), small_commutative(), max_degree=9)
    ok, tok = verify_chain_map(sdr.nabla, sdr.X.complex, sdr.Y.complex, 7)
    assert ok, tok
    ok, tok = verify_chain_map(sdr.f, sdr.Y.complex, sdr.X.complex, 7)
    assert ok, tok


def test_nabla_is_a_coalgebra_map():
    sdr = bar_sdr(exterior_two(), exterior_two(), max_degree=8)
    ring = sdr.Y.ring
    for n in range(7):
        for tok in sdr.X.complex.basis.basis(n):
            lhs = Element(ring)
            for t, c in sdr.X.comult(tok).items():
                u, v = t.data
                for a, ca in sdr.nabla(u).items():
                    for b, cb in sdr.nabla(v).items():
                        lhs._accumulate(tensor_token(a, b), c * ca * cb)
            rhs = Element(ring)
            for t, c in sdr.nabla(tok).items():
                for u, cu in sdr.Y.comult(t).items():
                    rhs._accumulate(u, c * cu)
            assert lhs == rhs, tok


# --- transferred twisting cochain --------------------------------------------


def test_trivial_sdr_gives_universal_twisting():
    from loopchain.dg import bar_construction
    B = bar_construction(exterior_two(), max_degree=8)
    sdr = SDRData(B, B, identity_map(ZZ), identity_map(ZZ), zero_map(ZZ, 1))
    F = transferred_twisting(sdr, cap=1)
    t = universal_twisting(B)
    for n in range(7):
        for tok in B.complex.basis.basis(n):
            assert F.map(tok) == t.map(tok)


def test_transferred_twisting_satisfies_brown_condition():
    sdr = bar_sdr(exterior_two(), small_commutative(), max_degree=9)
    F = transferred_twisting(sdr)
    ok, tok = check_twisting(F, 8)
    assert ok, tok


def test_zeta_certificate_bounds_the_insertions():
    # transferred_twisting raises if an insertion survives past the bound;
    # computing F through degree 8 therefore verifies the certificate.
    sdr = bar_sdr(exterior_two(), exterior_two(), max_degree=9)
    F = transferred_twisting(sdr)
    for n in range(9):
        for tok in sdr.Y.complex.basis.basis(n):
            F.map(tok)


def test_missing_cap_is_rejected():
    from loopchain.dg import bar_construction
    B = bar_construction(exterior_two(), max_degree=6)
    sdr = SDRData(B, B, identity_map(ZZ), identity_map(ZZ), zero_map(ZZ, 1))
    F = transferred_twisting(sdr)
    tok = B.complex.basis.basis(2)[0]
    with pytest.raises(PerturbationDivergence):
        F.map(tok)


# --- the loop comultiplication on Cobar Bar H --------------------------------


def _primitive_part_check(bh, a):
    ring = bh.ring
    sa = word_token((desuspend(word_token((suspend(a),))),))
    img = bh.psi(sa)
    empty = word_token(())
    expected = Element(ring)
    expected._accumulate(tensor_token(sa, empty), 1)
    expected._accumulate(tensor_token(empty, sa), 1)
    return img == expected


def test_bar_hopf_generators_are_primitive_on_primitives():
    # psi(s^{-1}(s a)) is primitive exactly when a is; checked on the
    # algebra generators (counit claims pin the general case)
    for H, gen_data in ((free_hopf_one(1, max_degree=8), ("pow", "x", 1)),
                        (free_hopf_one(2, max_degree=10), ("pow", "x", 1))):
        bh = BarHopfStructure(H, max_degree=9)
        a = next(t for n in range(1, 4) for t in H.algebra.aug_ideal_basis(n)
                 if t.data == gen_data)
        assert _primitive_part_check(bh, a), H.name


def test_bar_hopf_cross_terms_match_comultiplication():
    # for a = x^2 (even x), claim (1) forces the cross terms 2 x(x)x
    H = free_hopf_one(2, max_degree=10)
    bh = BarHopfStructure(H, max_degree=9)
    x2 = next(t for t in H.algebra.aug_ideal_basis(4))
    sa = word_token((desuspend(word_token((suspend(x2),))),))
    assert bh.counit_pair(bh.psi(sa)) == H.comult(x2)
    assert not _primitive_part_check(bh, x2)


def test_bar_hopf_grouplike_correction_for_group_rings():
    # R[C2] is not connected: psi picks up the group-like term g (x) g,
    # mirroring delta[g] = [g](x)[g] + [g](x)1 + 1(x)[g]
    H = group_ring_hopf(BUILTIN_GROUPS["c2"])
    bh = BarHopfStructure(H, max_degree=8)
    ring = bh.ring
    g = H.algebra.aug_ideal_basis(0)[0]
    ghat = word_token((desuspend(word_token((suspend(g),))),))
    empty = word_token(())
    expected = Element(ring)
    expected._accumulate(tensor_token(ghat, empty), 1)
    expected._accumulate(tensor_token(empty, ghat), 1)
    expected._accumulate(tensor_token(ghat, ghat), 1)
    assert bh.psi(ghat) == expected


def test_bar_hopf_counit_claims():
    for H in (group_ring_hopf(BUILTIN_GROUPS["c2"]),
              free_hopf_one(2, max_degree=10)):
        bh = BarHopfStructure(H, max_degree=9)
        ring = bh.ring
        # claim 1: (eps (x) eps) psi (s^{-1}(s a)) = delta(a)
        for n in range(0, 5):
            for a in H.algebra.aug_ideal_basis(n):
                sa = word_token((desuspend(word_token((suspend(a),))),))
                assert bh.counit_pair(bh.psi(sa)) == H.comult(a), a
        # claim 2: zero on longer bar words
        barH = bh.barH
        for n in range(2, 6):
            for tok in barH.complex.basis.basis(n):
                if len(tok.data) < 2:
                    continue
                gen = word_token((desuspend(tok),))
                assert bh.counit_pair(bh.psi(gen)).is_zero(), tok


def test_bar_hopf_psi_is_coassociative_on_generators():
    fixtures = [(free_hopf_one(2, max_degree=10), 7),
                (group_ring_hopf(BUILTIN_GROUPS["c2"]), 6)]
    for H, topdeg in fixtures:
        bh = BarHopfStructure(H, max_degree=topdeg + 2)
        ring = bh.ring
        for n in range(1, topdeg):
            for tok in bh.barH.complex.basis.basis(n):
                gen = word_token((desuspend(tok),))
                img = bh.psi(gen)
                lhs = Element(ring)
                rhs = Element(ring)
                for t, c in img.items():
                    u, v = t.data
                    for s, cs in bh.psi(u).items():
                        lhs._accumulate(tensor_token(*(s.data + (v,))), c * cs)
                    for s, cs in bh.psi(v).items():
                        rhs._accumulate(tensor_token(*((u,) + s.data)), c * cs)
                assert lhs == rhs, (H.name, tok)


def test_bar_hopf_psi_is_an_algebra_map_on_products():
    H = group_ring_hopf(BUILTIN_GROUPS["c2"])
    bh = BarHopfStructure(H, max_degree=8)
    O = bh.cobar_barH
    ring = bh.ring
    sq = bh.square
    gens = []
    for n in range(1, 4):
        for tok in bh.barH.complex.basis.basis(n):
            gens.append(word_token((desuspend(tok),)))
    for u in gens[:6]:
        for v in gens[:6]:
            prod = word_token(u.data + v.data)
            assert bh.psi(prod) == sq.multiply(bh.psi(u), bh.psi(v))
