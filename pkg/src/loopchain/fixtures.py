"""Shipped algebraic fixtures and the declarative fixture-file parser.

The Hopf fixtures exercise the commutative/cocommutative flags
independently: free algebra on one primitive (even and odd generator),
exterior algebra on two generators, truncated polynomial algebras, and
group rings of C_2 and S_3 in an augmentation-aligned basis.
"""

import json

from .chains import (
    ChainComplex, Element, GradedBasis, LinearMap, generator, reorder_sign,
    tensor_token, word_token, desuspend, zero_map, RINGS, ZZ, F2,
)
from .dg import (
    DGAlgebra, DGCoalgebra, HopfAlgebra, HirschCoalgebra, hirsch_primitive,
    tensor_algebra, cobar_construction,
)
from .groups import BUILTIN_GROUPS


# ---------------------------------------------------------------------------
# Coalgebra fixtures


def sphere_coalgebra(n, ring=ZZ, max_degree=None):
    """Chains model of an n-sphere: unit and one primitive generator."""
    if max_degree is None:
        max_degree = 2 * n + 10
    one = generator("1", 0)
    y = generator("y", n)
    basis = GradedBasis(ring, {0: [one], n: [y]}, max_degree, "C(S%d)" % n)
    cx = ChainComplex(basis, zero_map(ring, -1), "C(S%d)" % n)

    def comult(tok):
        out = Element(ring)
        if tok == one:
            out._accumulate(tensor_token(one, one), 1)
        else:
            out._accumulate(tensor_token(one, y), 1)
            out._accumulate(tensor_token(y, one), 1)
        return out

    return DGCoalgebra(cx, one, comult, name="C(S%d)" % n)


def nonreal_aw_coalgebra(ring=ZZ, max_degree=16):
    """Five-generator coalgebra with dy = 2x, dy' = 3x and a non-primitive
    top class; cocommutative only up to homotopy."""
    u = generator("u", 0)
    x = generator("x", 3)
    y = generator("y", 4)
    yp = generator("y'", 4)
    z = generator("z", 7)
    basis = GradedBasis(ring, {0: [u], 3: [x], 4: [y, yp], 7: [z]}, max_degree, "Cnaw")
    dtable = {y: Element.from_token(ring, x, 2), yp: Element.from_token(ring, x, 3)}

    def dfn(tok):
        return dtable.get(tok, Element(ring))

    cx = ChainComplex(basis, LinearMap(ring, -1, dfn, "d"), "Cnaw")

    def comult(tok):
        out = Element(ring)
        if tok == u:
            out._accumulate(tensor_token(u, u), 1)
            return out
        out._accumulate(tensor_token(u, tok), 1)
        out._accumulate(tensor_token(tok, u), 1)
        if tok == z:
            out._accumulate(tensor_token(x, y), 3)
            out._accumulate(tensor_token(x, yp), -2)
        return out

    return DGCoalgebra(cx, u, comult, name="Cnaw")


def nonreal_aw_hirsch(ring=ZZ, max_degree=16):
    """The balanced Hirsch structure on the five-generator coalgebra:
    primitive on all cobar generators except the top one."""
    C = nonreal_aw_coalgebra(ring, max_degree)
    omega = cobar_construction(C)
    toks = {t.data: t for t in [C.complex.basis.basis(3)[0]] + C.complex.basis.basis(4) + C.complex.basis.basis(7)}
    x, y, yp, z = toks["x"], toks["y"], toks["y'"], toks["z"]
    empty = word_token(())

    def w(tok):
        return word_token((desuspend(tok),))

    img = Element(ring)
    img._accumulate(tensor_token(w(z), empty), 1)
    img._accumulate(tensor_token(w(yp), w(y)), 1)
    img._accumulate(tensor_token(w(y), w(yp)), -1)
    img._accumulate(tensor_token(empty, w(z)), 1)
    return C, hirsch_primitive(C, omega, overrides={desuspend(z): img}, name="Hirsch(Cnaw)")


def rp_suspension_coalgebra(ring=F2, max_degree=8):
    """Chains of the suspension of the infinite real projective space model:
    one primitive generator y_k in each degree k+1, zero differential mod 2."""
    def basis_fn(n):
        if n == 0:
            return [generator("1", 0)]
        if n >= 2:
            return [generator(("y", n - 1), n)]
        return []

    one = generator("1", 0)
    basis = GradedBasis(ring, basis_fn, max_degree, "C(E RP)")
    cx = ChainComplex(basis, zero_map(ring, -1), "C(E RP)")

    def comult(tok):
        out = Element(ring)
        if tok == one:
            out._accumulate(tensor_token(one, one), 1)
            return out
        out._accumulate(tensor_token(one, tok), 1)
        out._accumulate(tensor_token(tok, one), 1)
        return out

    return DGCoalgebra(cx, one, comult, name="C(E RP)")


def rp_hirsch(ring=F2, max_degree=8):
    """The suspension Hirsch structure: psi(z_k) = sum z_i (x) z_{k-i},
    transported from the binomial diagonal one level down."""
    from .dg import suspension_hirsch
    C = rp_suspension_coalgebra(ring, max_degree)

    def lower_comult(tok):
        out = Element(ring)
        k = tok.degree - 1
        for i in range(1, k):
            out._accumulate(tensor_token(generator(("y", i), i + 1),
                                         generator(("y", k - i), k - i + 1)), 1)
        return out

    return C, suspension_hirsch(C, lower_comult, name="Hirsch(E RP)")


# ---------------------------------------------------------------------------
# Monomial algebras (graded-commutative with truncated generators)


def _monomial_token(gens, exponents):
    deg = sum(g[1] * e for g, e in zip(gens, exponents))
    return generator(("mono",) + tuple(exponents), deg)


def monomial_algebra(ring, gens, max_degree, name, truncations=None):
    """Graded-commutative algebra on generators (name, degree) with
    exponent truncations (odd generators square to zero)."""
    if truncations is None:
        truncations = [2 if g[1] % 2 else max_degree + 1 for g in gens]

    def basis_fn(n):
        out = []

        def build(i, deg, exps):
            if i == len(gens):
                if deg == n:
                    out.append(_monomial_token(gens, exps))
                return
            e = 0
            while deg + e * gens[i][1] <= n and e < truncations[i]:
                build(i + 1, deg + e * gens[i][1], exps + [e])
                e += 1

        build(0, 0, [])
        return out

    basis = GradedBasis(ring, basis_fn, max_degree, name)
    cx = ChainComplex(basis, zero_map(ring, -1), name)
    unit = _monomial_token(gens, [0] * len(gens))

    def symbols(exps):
        out = []
        for i, e in enumerate(exps):
            out.extend([i] * e)
        return out

    def mult(s, t):
        es = list(s.data[1:])
        et = list(t.data[1:])
        combined = [a + b for a, b in zip(es, et)]
        for i, e in enumerate(combined):
            if e >= truncations[i] or (gens[i][1] % 2 and e > 1):
                return Element(ring)
        # Koszul sign of sorting the concatenated generator symbols
        seq = symbols(es) + symbols(et)
        degrees = [gens[i][1] for i in seq]
        order = sorted(range(len(seq)), key=lambda k: (seq[k], k))
        sign = reorder_sign(degrees, order)
        return Element.from_token(ring, _monomial_token(gens, combined), sign)

    return DGAlgebra(cx, unit, mult, name=name)


def primitive_hopf(algebra, through_degree=None):
    """Hopf structure with all algebra generators primitive.

    Valid for graded-commutative monomial algebras and for the free
    algebra on one generator; the comultiplication is the algebra-map
    extension of delta(g) = g(x)1 + 1(x)g.
    """
    ring = algebra.ring
    square = tensor_algebra(algebra, algebra)
    cache = {}

    def comult(tok):
        if tok in cache:
            return cache[tok]
        if tok == algebra.unit:
            out = Element.from_token(ring, tensor_token(tok, tok))
        elif tok.kind == "atom" and isinstance(tok.data, tuple) and tok.data[0] == "mono":
            exps = tok.data[1:]
            out = Element.from_token(ring, tensor_token(algebra.unit, algebra.unit))
            for i, e in enumerate(exps):
                gen_exps = [0] * len(exps)
                gen_exps[i] = 1
                g = _monomial_token_from(algebra, gen_exps)
                prim = Element(ring)
                prim._accumulate(tensor_token(g, algebra.unit), 1)
                prim._accumulate(tensor_token(algebra.unit, g), 1)
                for _ in range(e):
                    out = square.multiply(out, prim)
        elif tok.kind == "atom" and isinstance(tok.data, tuple) and tok.data[0] == "pow":
            name, k = tok.data[1], tok.data[2]
            g = generator(("pow", name, 1), tok.degree // k if k else 0)
            prim = Element(ring)
            prim._accumulate(tensor_token(g, algebra.unit), 1)
            prim._accumulate(tensor_token(algebra.unit, g), 1)
            out = Element.from_token(ring, tensor_token(algebra.unit, algebra.unit))
            for _ in range(k):
                out = square.multiply(out, prim)
        else:
            raise ValueError("no primitive comultiplication for %r" % (tok,))
        cache[tok] = out
        return out

    return HopfAlgebra(algebra, comult, name=algebra.name)


def _monomial_token_from(algebra, exps):
    for n in range(algebra.max_degree + 1):
        for t in algebra.complex.basis.basis(n):
            if t.data[1:] == tuple(exps):
                return t
    raise ValueError("monomial not found")


def exterior_two(ring=ZZ, degrees=(1, 1), max_degree=10):
    """Exterior algebra on two odd generators."""
    return monomial_algebra(ring, [("a", degrees[0]), ("b", degrees[1])],
                            max_degree, "E(a,b)")


def small_commutative(ring=ZZ, max_degree=10):
    """E(x) (x) a square-zero even class: basis 1, x, y, xy."""
    return monomial_algebra(ring, [("x", 1), ("y", 2)], max_degree,
                            "E(x)P'(y)", truncations=[2, 2])


def free_hopf_one(degree, ring=ZZ, max_degree=None, name="x"):
    """Free algebra on one primitive generator (polynomial when even)."""
    if max_degree is None:
        max_degree = 8 * degree
    toks = {}

    def tok(k):
        if k not in toks:
            toks[k] = generator(("pow", name, k), k * degree)
        return toks[k]

    def basis_fn(n):
        if n % degree == 0 and n // degree >= 0:
            return [tok(n // degree)]
        return []

    label = "T(%s_%d)" % (name, degree)
    basis = GradedBasis(ring, basis_fn, max_degree, label)
    cx = ChainComplex(basis, zero_map(ring, -1), label)

    def mult(s, t):
        return Element.from_token(ring, tok(s.data[2] + t.data[2]))

    A = DGAlgebra(cx, tok(0), mult, name=label)
    return primitive_hopf(A)


def group_ring_hopf(group, ring=ZZ, max_degree=8):
    """Group ring R[G] in the augmentation basis {1} u {[g] = g - e}.

    [g][h] = [gh] - [g] - [h] (with [e] = 0); delta[g] = [g](x)[g] +
    [g](x)1 + 1(x)[g]; zero differential, everything in degree 0.
    """
    unit = generator(("grp", group.name, "1"), 0)

    def tok(g):
        return generator(("grp", group.name, g), 0)

    nontrivial = [g for g in group.elements if g != group.unit]
    basis = GradedBasis(ring, {0: [unit] + [tok(g) for g in nontrivial]},
                        max_degree, "R[%s]" % group.name)
    cx = ChainComplex(basis, zero_map(ring, -1), "R[%s]" % group.name)

    def as_element(g, coeff=1):
        out = Element(ring)
        if g != group.unit:
            out._accumulate(tok(g), coeff)
        return out

    def mult(s, t):
        if s == unit:
            return Element.from_token(ring, t)
        if t == unit:
            return Element.from_token(ring, s)
        g, h = s.data[2], t.data[2]
        out = as_element(group.mul(g, h))
        out = out - as_element(g) - as_element(h)
        return out

    A = DGAlgebra(cx, unit, mult, name="R[%s]" % group.name)

    def comult(t):
        out = Element(ring)
        if t == unit:
            out._accumulate(tensor_token(unit, unit), 1)
            return out
        out._accumulate(tensor_token(t, t), 1)
        out._accumulate(tensor_token(t, unit), 1)
        out._accumulate(tensor_token(unit, t), 1)
        return out

    return HopfAlgebra(A, comult, name="R[%s]" % group.name)


def hopf_fixtures(ring=ZZ):
    """The shipped Hopf fixtures keyed by name."""
    return {
        "free-even": free_hopf_one(2, ring),
        "free-odd": free_hopf_one(1, ring),
        "exterior-two": primitive_hopf(exterior_two(ring)),
        "poly-even": free_hopf_one(4, ring, name="u"),
        "group-c2": group_ring_hopf(BUILTIN_GROUPS["c2"], ring),
        "group-s3": group_ring_hopf(BUILTIN_GROUPS["s3"], ring),
    }


def algebra_fixtures(ring=ZZ):
    return {
        "exterior-two": exterior_two(ring),
        "small-commutative": small_commutative(ring),
    }


# ---------------------------------------------------------------------------
# Declarative fixture files


class FixtureError(ValueError):
    pass


def dg_fixture_from_dict(doc):
    """Build a DGAlgebra / DGCoalgebra / HopfAlgebra from a declarative
    document; rejects tables failing the (co)algebra axioms."""
    ring = RINGS.get(doc.get("ring", "Z"))
    if ring is None:
        raise FixtureError("unknown ring %r" % doc.get("ring"))
    max_degree = int(doc.get("max_degree", 10))
    kind = doc.get("kind", "algebra")
    names = {}
    per_degree = {}
    unit_name = doc.get("unit", "1")
    unit = generator(unit_name, 0)
    names[unit_name] = unit
    per_degree.setdefault(0, []).append(unit)
    for g in doc.get("generators", []):
        t = generator(g["name"], int(g["degree"]))
        if g["name"] in names:
            raise FixtureError("duplicate generator %r" % g["name"])
        names[g["name"]] = t
        per_degree.setdefault(t.degree, []).append(t)

    def parse_element(entries):
        out = Element(ring)
        for coeff, name in entries:
            if isinstance(name, list):
                out._accumulate(tensor_token(*[names[n] for n in name]), coeff)
            else:
                out._accumulate(names[name], coeff)
        return out

    dtable = {names[k]: parse_element(v) for k, v in doc.get("differential", {}).items()}

    def dfn(tok):
        return dtable.get(tok, Element(ring))

    basis = GradedBasis(ring, per_degree, max_degree, doc.get("name", "fixture"))
    cx = ChainComplex(basis, LinearMap(ring, -1, dfn, "d"), doc.get("name", "fixture"))
    bad = cx.check_d_squared(max_degree)
    if bad is not None:
        raise FixtureError("differential does not square to zero at %r" % (bad,))

    if kind in ("algebra", "hopf"):
        mtable = {}
        for key, entries in doc.get("multiplication", {}).items():
            a, b = key.split("|")
            mtable[(names[a], names[b])] = parse_element(entries)

        def mult(s, t):
            if s == unit:
                return Element.from_token(ring, t)
            if t == unit:
                return Element.from_token(ring, s)
            if (s, t) in mtable:
                return mtable[(s, t)]
            return Element(ring)

        A = DGAlgebra(cx, unit, mult, name=doc.get("name", "fixture"))
        bad = A.check_associativity(max_degree)
        if bad is not None:
            raise FixtureError("multiplication table fails associativity at %r" % (bad,))
        bad = A.check_mult_is_chain_map(max_degree)
        if bad is not None:
            raise FixtureError("multiplication is not a chain map at %r" % (bad,))
        if kind == "algebra":
            return A
        ctable = {names[k]: parse_element(v) for k, v in doc.get("comultiplication", {}).items()}

        def comult(tok):
            if tok in ctable:
                return ctable[tok]
            if tok == unit:
                return Element.from_token(ring, tensor_token(unit, unit))
            out = Element(ring)
            out._accumulate(tensor_token(unit, tok), 1)
            out._accumulate(tensor_token(tok, unit), 1)
            return out

        H = HopfAlgebra(A, comult, name=doc.get("name", "fixture"))
        bad = H.check_comult_is_algebra_map(max_degree)
        if bad is not None:
            raise FixtureError("comultiplication is not an algebra map at %r" % (bad,))
        return H

    if kind == "coalgebra":
        ctable = {names[k]: parse_element(v) for k, v in doc.get("comultiplication", {}).items()}

        def comult(tok):
            if tok in ctable:
                return ctable[tok]
            if tok == unit:
                return Element.from_token(ring, tensor_token(unit, unit))
            out = Element(ring)
            out._accumulate(tensor_token(unit, tok), 1)
            out._accumulate(tensor_token(tok, unit), 1)
            return out

        C = DGCoalgebra(cx, unit, comult, name=doc.get("name", "fixture"))
        bad = C.check_coassociativity(max_degree)
        if bad is not None:
            raise FixtureError("comultiplication table fails coassociativity at %r" % (bad,))
        bad = C.check_comult_is_chain_map(max_degree)
        if bad is not None:
            raise FixtureError("comultiplication is not a chain map at %r" % (bad,))
        return C

    raise FixtureError("unknown fixture kind %r" % kind)


def load_dg_fixture(path):
    with open(path) as fh:
        return dg_fixture_from_dict(json.load(fh))
