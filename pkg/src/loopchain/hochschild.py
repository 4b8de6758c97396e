"""The Hochschild complex of a twisting cochain and its power maps.

For a twisting cochain t: C -> A the twisted complex (C (x) A, d_t)
interpolates between the classical Hochschild complex of an algebra and
the coHochschild complex of a coalgebra.  This module provides the
construction with general bicomodule/bimodule coefficients, strict and
strong-homotopy functoriality, the monoidal isomorphism, the induced
(co)multiplications, and the r-th power maps with their homology action.
"""

from .chains import (
    ChainComplex, Element, GradedBasis, LinearMap, generator,
    operator_application_sign, reorder_sign, suspend, desuspend,
    tensor_token, word_token,
)
from .dg import (
    DGCoalgebra, HopfAlgebra, TwistingCochain, algebra_realization,
    bar_construction, cobar_construction, coalgebra_realization,
    couniversal_twisting, hopf_tensor_power, tensor_algebra,
    tensor_coalgebra, universal_twisting,
)
from .snf import HomologyBasis


def _signed(exp):
    return -1 if exp % 2 else 1


class CompatibilityError(ValueError):
    """A morphism's commuting square fails on a witness token."""

    def __init__(self, message, token):
        super().__init__("%s at %r" % (message, token))
        self.token = token


class Bicomodule:
    """Chain complex with left and right coactions over a coalgebra C."""

    def __init__(self, complex_, left_coaction, right_coaction, counit_token=None):
        self.complex = complex_
        self.left_coaction = left_coaction    # tok -> Element of (C, N) pairs
        self.right_coaction = right_coaction  # tok -> Element of (N, C) pairs
        self.counit_token = counit_token


class Bimodule:
    """Chain complex with left and right actions of an algebra A."""

    def __init__(self, complex_, left_action, right_action, unit=None):
        self.complex = complex_
        self.left_action = left_action    # (a_tok, m_tok) -> Element
        self.right_action = right_action  # (m_tok, a_tok) -> Element
        self.unit = unit


def coalgebra_as_bicomodule(C):
    return Bicomodule(C.complex, C.comult, C.comult, C.counit_token)


def algebra_as_bimodule(A):
    return Bimodule(A.complex, A.mult, A.mult, A.unit)


class HochschildComplex:
    """The twisted complex (N (x) M, d_t)."""

    def __init__(self, t, N, M, complex_, name=""):
        self.t = t
        self.N = N
        self.M = M
        self.complex = complex_
        self.name = name

    @property
    def ring(self):
        return self.complex.ring

    def include_fiber(self, x):
        """M -> H, x |-> counit (x) x."""
        out = Element(self.ring)
        for tok, c in x.items():
            out._accumulate(tensor_token(self.N.counit_token, tok), c)
        return out

    def project_base(self, x):
        """H -> N, unit-augmentation component of the M factor."""
        out = Element(self.ring)
        for tok, c in x.items():
            n_tok, m_tok = tok.data
            if m_tok == self.M.unit:
                out._accumulate(n_tok, c)
        return out


def hochschild_general(t, N=None, M=None, max_degree=None, name=""):
    """Hochschild complex of t with coefficients in a bicomodule and a
    bimodule (defaults: the source and target of t over themselves).

    d_t(y (x) x) = dy (x) x + (-1)^|y| y (x) dx
                   - (-1)^|y_j| y_j (x) t(c^j).x
                   + (-1)^((|c_i|-1)(|y^i|+|x|)) y^i (x) x.t(c_i),
    all signs produced by the Koszul engine.
    """
    ring = t.ring
    if N is None:
        N = coalgebra_as_bicomodule(t.source)
    if M is None:
        M = algebra_as_bimodule(t.target)
    if max_degree is None:
        max_degree = min(N.complex.max_degree, M.complex.max_degree)
    label = name or "H(%s)" % t.name

    def basis_fn(n):
        out = []
        for i in range(n + 1):
            for y in N.complex.basis.basis(i):
                for x in M.complex.basis.basis(n - i):
                    out.append(tensor_token(y, x))
        return out

    basis = GradedBasis(ring, basis_fn, max_degree, label)

    def differential(tok):
        y, x = tok.data
        out = Element(ring)
        for u, c in N.complex.d(y).items():
            out._accumulate(tensor_token(u, x), c)
        sign = _signed(y.degree)
        for u, c in M.complex.d(x).items():
            out._accumulate(tensor_token(y, u), sign * c)
        # - (Id (x) m(t (x) Id)) (rho (x) Id): t passes y_j
        for pair, c in N.right_coaction(y).items():
            yj, cj = pair.data
            tv = t.map(cj)
            if tv.is_zero():
                continue
            passage = operator_application_sign([0, -1], [yj.degree, cj.degree])
            for a, ca in tv.items():
                for m, cm in M.left_action(a, x).items():
                    out._accumulate(tensor_token(yj, m), -passage * c * ca * cm)
        # + move c_i to the end, then apply t there
        for pair, c in N.left_coaction(y).items():
            ci, yi = pair.data
            tv = t.map(ci)
            if tv.is_zero():
                continue
            rot = reorder_sign([ci.degree, yi.degree, x.degree], [1, 2, 0])
            app = operator_application_sign([0, 0, -1], [yi.degree, x.degree, ci.degree])
            for a, ca in tv.items():
                for m, cm in M.right_action(x, a).items():
                    out._accumulate(tensor_token(yi, m), rot * app * c * ca * cm)
        return out

    cx = ChainComplex(basis, LinearMap(ring, -1, differential, "d_t"), label)
    return HochschildComplex(t, N, M, cx, label)


def hochschild_complex(t, max_degree=None):
    """H(t) = (C (x) A, d_t)."""
    return hochschild_general(t, max_degree=max_degree)


def cohochschild_complex(C, cobar=None, max_degree=None):
    """The coHochschild complex: H of the universal twisting cochain."""
    t = universal_twisting(C, cobar)
    return hochschild_general(t, max_degree=max_degree,
                              name="coHoch(%s)" % C.name)


def hochschild_of_algebra(A, bar=None, max_degree=None):
    """The classical Hochschild complex: H of the couniversal cochain."""
    t = couniversal_twisting(A, bar)
    return hochschild_general(t, max_degree=max_degree,
                              name="Hoch(%s)" % A.name)


# ---------------------------------------------------------------------------
# Functoriality


def induced_map(f, g, t, tprime, check_degree=None):
    """H(f, g): strict functoriality for a Twist morphism (f, g)."""
    ring = t.ring
    if check_degree is not None:
        for n in range(check_degree + 1):
            for c in t.source.complex.basis.basis(n):
                if g(t.map(c)) != tprime.map(f(c)):
                    raise CompatibilityError("g t != t' f", c)

    def fn(tok):
        c, a = tok.data
        out = Element(ring)
        for u, cu in f(c).items():
            for v, cv in g(a).items():
                out._accumulate(tensor_token(u, v), cu * cv)
        return out

    return LinearMap(ring, 0, fn, "H(f,g)")


def cohoch_to_hoch(t, max_degree=None):
    """beta_t (x) alpha_t: coHoch(C) -> Hoch(A) for a twisting cochain t."""
    return induced_map(coalgebra_realization(t), algebra_realization(t),
                       universal_twisting(t.source), couniversal_twisting(t.target))


def sh_map(phi, g, t, tprime, check_degree=None):
    """Extended functoriality for (phi, g) with phi: Cobar C -> Cobar C'
    an algebra map and g an algebra map satisfying g alpha_t = alpha_t' phi.

    On c (x) a the image is the cyclic-rotation sum over the word expansion
    of phi(s^{-1}c), with the kept piece in C' and the t'-images of the
    others multiplied around g(a)."""
    ring = t.ring
    A2 = tprime.target
    if check_degree is not None:
        alpha = algebra_realization(t)
        alpha2 = algebra_realization(tprime)
        for n in range(1, check_degree + 1):
            for c in t.source.complex.basis.basis(n):
                gen = word_token((desuspend(c),))
                if g(alpha(gen)) != alpha2(phi(gen)):
                    raise CompatibilityError("g alpha_t != alpha_t' phi", c)

    def fn(tok):
        c, a = tok.data
        out = Element(ring)
        if c.degree == 0:
            for v, cv in g(Element.from_token(ring, a)).items():
                out._accumulate(tensor_token(tprime.source.counit_token, v), cv)
            return out
        expansion = phi(word_token((desuspend(c),)))
        ga = g(Element.from_token(ring, a))
        for wtok, kappa in expansion.items():
            # work on the native cobar letters: alpha_t' on a single letter
            # is t' of its suspension (degree 0), the kept letter is
            # re-suspended at the front, so the cyclic reorder is the only
            # sign source
            letters = wtok.data
            k = len(letters)
            if k == 0:
                continue
            degs = [l.degree for l in letters] + [a.degree]
            for i in range(1, k + 1):
                order = list(range(i - 1, k)) + [k] + list(range(0, i - 1))
                sign = reorder_sign(degs, order)
                factors = [tprime.map(suspend(letters[j])) for j in range(i, k)] + \
                          [ga] + \
                          [tprime.map(suspend(letters[j])) for j in range(0, i - 1)]
                prod = A2.multiply_all(factors)
                coeff = kappa * sign
                kept = suspend(letters[i - 1])
                for v, cv in prod.items():
                    out._accumulate(tensor_token(kept, v), coeff * cv)
        return out

    return LinearMap(ring, 0, fn, "Hsh")


def cohoch_retraction(C, cobar=None, max_degree=None):
    """rho-hat: Hoch(Cobar C) -> coHoch(C), a retraction of eta (x) Id."""
    from .dg import cobar_bar_counit, bar_construction as _bar
    omega = cobar if cobar is not None else cobar_construction(C)
    bar_omega = _bar(omega)
    t = couniversal_twisting(omega, bar_omega)
    tprime = universal_twisting(C, omega)
    eps = cobar_bar_counit(omega, bar_omega)
    return sh_map(eps, LinearMap(C.ring, 0, lambda tok: Element.from_token(C.ring, tok), "Id"),
                  t, tprime)


def sh_map_dual(f, gamma, t, tprime, check_degree=None):
    """Extended functoriality for (f, gamma) with gamma: Bar A -> Bar A'
    a coalgebra map satisfying gamma beta_t = beta_t' f.

    Computed by the transposed formula: split c by iterated comultiplication,
    keep one piece through f, and feed the t-images of the others, cyclically
    arranged around a, to the DASH family of gamma."""
    ring = t.ring
    A, A2 = t.target, tprime.target
    C2 = tprime.source
    if check_degree is not None:
        beta = coalgebra_realization(t)
        beta2 = coalgebra_realization(tprime)
        for n in range(check_degree + 1):
            for c in t.source.complex.basis.basis(n):
                if gamma(beta(c)) != beta2(f(c)):
                    raise CompatibilityError("gamma beta_t != beta_t' f", c)

    def evaluate_family(elements):
        """t_Bar' gamma on the bar word of suspensions of the elements."""
        out = Element(ring)
        stack = [((), 1)]
        for e in elements:
            nxt = []
            for prefix, coeff in stack:
                for x, cx in e.items():
                    if x == A.unit:
                        continue
                    nxt.append((prefix + (suspend(x),), coeff * cx))
            stack = nxt
            if not stack:
                return out
        for letters, coeff in stack:
            img = gamma(word_token(letters))
            for wt, cw in img.items():
                if len(wt.data) == 1:
                    out._accumulate(desuspend(wt.data[0]), coeff * cw)
        return out

    def fn(tok):
        c, a = tok.data
        out = Element(ring)
        if a == A.unit:
            # the counit-covector term of the transposed formula
            for u, cu in f(Element.from_token(ring, c)).items():
                out._accumulate(tensor_token(u, A2.unit), cu)
        a_el = Element.from_token(ring, a)
        src = t.source
        # native-letter discipline: the slot operators s t (degree 0) and f
        # (degree 0) are sign-free; the suspension over the a slot passes
        # everything before it, the cyclic reorder acts on the resulting
        # letter degrees, and the final desuspension passes the kept piece.
        for k in range(1, c.degree + 2):
            for tens, cd in src.comult_iterated(c, k).items():
                pieces = tens.data
                degs = [p.degree for p in pieces] + [a.degree + 1]
                base = _signed(c.degree)
                for i in range(1, k + 1):
                    tail = [t.map(pieces[j]) for j in range(i, k)] + [a_el] + \
                           [t.map(pieces[j]) for j in range(0, i - 1)]
                    if any(e.is_zero() for e in tail):
                        continue
                    fc = f(Element.from_token(ring, pieces[i - 1]))
                    if fc.is_zero():
                        continue
                    order = list(range(i - 1, k)) + [k] + list(range(0, i - 1))
                    rot = reorder_sign(degs, order)
                    gk = evaluate_family(tail)
                    if gk.is_zero():
                        continue
                    kept_sign = _signed(pieces[i - 1].degree)
                    coeff = cd * base * rot * kept_sign
                    for u, cu in fc.items():
                        for v, cv in gk.items():
                            out._accumulate(tensor_token(u, v), coeff * cu * cv)
        return out

    return LinearMap(ring, 0, fn, "Hsh_dual")


def hoch_section(A, bar=None, max_degree=None):
    """sigma-hat: Hoch(A) -> coHoch(Bar A), a section of Id (x) eps."""
    from .dg import bar_cobar_unit
    barA = bar if bar is not None else bar_construction(A)
    omega_barA = cobar_construction(barA)
    t = couniversal_twisting(A, barA)
    tprime = universal_twisting(barA, omega_barA)
    eta = bar_cobar_unit(barA, omega_barA)
    ident = LinearMap(A.ring, 0, lambda tok: Element.from_token(A.ring, tok), "Id")
    return sh_map_dual(ident, eta, t, tprime)


# ---------------------------------------------------------------------------
# Monoidal structure


def monoidal_iso(t, tprime):
    """H(t * t') = H(t) (x) H(t'): the Koszul middle swap, both ways."""
    ring = t.ring

    def fwd(tok):
        cc, aa = tok.data
        c, cp = cc.data
        a, ap = aa.data
        sign = _signed(cp.degree * a.degree)
        return Element.from_token(
            ring, tensor_token(tensor_token(c, a), tensor_token(cp, ap)), sign)

    def bwd(tok):
        ca, cpap = tok.data
        c, a = ca.data
        cp, ap = cpap.data
        sign = _signed(cp.degree * a.degree)
        return Element.from_token(
            ring, tensor_token(tensor_token(c, cp), tensor_token(a, ap)), sign)

    return (LinearMap(ring, 0, fwd, "monoidal"),
            LinearMap(ring, 0, bwd, "monoidal_inv"))


def hochschild_comultiplication(t, omega, H, check_degree=None):
    """delta-hat: H(t) -> H(t) (x) H(t) for t: C -> H with omega realizing
    the DCSH structure of the comultiplication of C.

    Hypothesis: (alpha_t (x) alpha_t) q omega = delta alpha_t (checked on
    generators when check_degree is given)."""
    from .dg import cobar_tensor_splitting, cartesian_product
    ring = t.ring
    C = t.source
    q, _ = cobar_tensor_splitting(C, C)
    if check_degree is not None:
        alpha = algebra_realization(t)
        for n in range(1, check_degree + 1):
            for c in C.complex.basis.basis(n):
                gen = word_token((desuspend(c),))
                lhs = Element(ring)
                for tok, cf in q(omega(gen)).items():
                    u, v = tok.data
                    for x, cx in alpha(u).items():
                        for y, cy in alpha(v).items():
                            lhs._accumulate(tensor_token(x, y), cf * cx * cy)
                if lhs != H.comult_element(alpha(gen)):
                    raise CompatibilityError("(alpha (x) alpha) q omega != delta alpha", c)
    tt = cartesian_product(t, t)
    delta = LinearMap(ring, 0, lambda tok: H.comult(tok), "delta")
    hs = sh_map(omega, delta, t, tt)
    fwd, _ = monoidal_iso(t, t)

    def fn(tok):
        return fwd(hs(tok))

    return LinearMap(ring, 0, fn, "delta-hat")


def hochschild_multiplication(t, nu, H, check_degree=None):
    """mu-hat: H(t) (x) H(t) -> H(t) for t: H -> A with nu realizing the
    DASH structure of the multiplication of H.

    Computed through the transposed extended functoriality applied to
    (mu, nu): t*t -> t."""
    from .dg import cartesian_product
    ring = t.ring
    tt = cartesian_product(t, t)

    def mu_fn(tok):
        u, v = tok.data
        return H.algebra.mult(u, v)

    mu = LinearMap(ring, 0, mu_fn, "mu")
    hs = sh_map_dual(mu, nu, tt, t, check_degree=check_degree)
    _, bwd = monoidal_iso(t, t)

    def fn(tok):
        return hs(bwd(tok))

    return LinearMap(ring, 0, fn, "mu-hat")


# ---------------------------------------------------------------------------
# Power maps


def check_power_hypotheses(t, hirsch, H, through_degree):
    """Hypotheses of the power-map theorem: alpha_t is a coalgebra map
    from (Cobar C, psi) to (H, delta), and delta t is symmetric.

    Returns None or the first counterexample token."""
    from .dg import twist_tensor
    ring = t.ring
    alpha = algebra_realization(t)
    C = t.source
    for n in range(1, min(through_degree + 2, C.max_degree + 1)):
        for c in C.complex.basis.basis(n):
            gen = word_token((desuspend(c),))
            lhs = Element(ring)
            for tok, cf in hirsch.psi(gen).items():
                u, v = tok.data
                for x, cx in alpha(u).items():
                    for y, cy in alpha(v).items():
                        lhs._accumulate(tensor_token(x, y), cf * cx * cy)
            if lhs != H.comult_element(alpha(gen)):
                return ("alpha_t is not a coalgebra map", c)
            dt = H.comult_element(t.map(c))
            if twist_tensor(ring, dt) != dt:
                return ("delta t is not symmetric", c)
    return None


def power_domain(t, H, r, max_degree=None):
    """H(delta^(r) t): the Hochschild complex of the composed twisting
    cochain delta^(r) t: C -> H^(x)r."""
    ring = t.ring
    Hr = hopf_tensor_power(H, r, max_degree=max_degree)

    def fn(tok):
        out = Element(ring)
        for a, ca in t.map(tok).items():
            for u, cu in H.comult_power(a, r).items():
                out._accumulate(u, ca * cu)
        return out

    tr = TwistingCochain(t.source, Hr.algebra, LinearMap(ring, -1, fn, "d(r)t"),
                         "delta^%d %s" % (r, t.name))
    return tr, Hr


def power_concatenation(t, hirsch, H, r, check_degree=None, unsafe_skip_checks=False):
    """mu-tilde_r: H(delta^(r) t) -> H(t), the loop-concatenation map.

    On c (x) (w_1 (x) ... (x) w_r), for each term of the iterated loop
    comultiplication psi^(r)(s^{-1}c) = u_1 (x) ... (x) u_r with u_1 the
    word l_1|...|l_k, sums the cyclic rotations

        s(l_j) (x) alpha(l_{j+1})...alpha(l_k) . w_1 . alpha(u_2) . w_2
                   ... alpha(u_r) . w_r . alpha(l_1)...alpha(l_{j-1}),

    with signs from the Koszul engine on the symbol rearrangement."""
    ring = t.ring
    if not unsafe_skip_checks:
        bad = check_power_hypotheses(t, hirsch, H, check_degree if check_degree is not None else 4)
        if bad is not None:
            raise CompatibilityError(*bad)
    alpha = algebra_realization(t)
    A = H.algebra

    def fn(tok):
        c, wbar = tok.data
        ws = wbar.data
        out = Element(ring)
        if c.degree == 0:
            prod = A.multiply_all([Element.from_token(ring, w) for w in ws])
            for v, cv in prod.items():
                out._accumulate(tensor_token(c, v), cv)
            return out
        expansion = hirsch.iterated_psi(word_token((desuspend(c),)), r)
        for tens, kappa in expansion.items():
            u1 = tens.data[0]
            us = tens.data[1:]
            letters = u1.data
            k = len(letters)
            if k == 0:
                continue
            ldegs = [l.degree for l in letters]
            udegs = [u.degree for u in us]
            wdegs = [w.degree for w in ws]
            degrees = ldegs + udegs + wdegs
            u_idx = [k + q for q in range(r - 1)]
            w_idx = [k + (r - 1) + q for q in range(r)]
            for j in range(1, k + 1):
                order = [j - 1] + list(range(j, k)) + [w_idx[0]]
                for q in range(r - 1):
                    order.append(u_idx[q])
                    order.append(w_idx[q + 1])
                order += list(range(0, j - 1))
                sign = reorder_sign(degrees, order)
                factors = [alpha(word_token((l,))) for l in letters[j:]]
                factors.append(Element.from_token(ring, ws[0]))
                for q in range(r - 1):
                    factors.append(alpha(us[q]))
                    factors.append(Element.from_token(ring, ws[q + 1]))
                factors += [alpha(word_token((l,))) for l in letters[:j - 1]]
                prod = A.multiply_all(factors)
                coeff = kappa * sign
                kept = suspend(letters[j - 1])
                for v, cv in prod.items():
                    out._accumulate(tensor_token(kept, v), coeff * cv)
        return out

    return LinearMap(ring, 0, fn, "mu-tilde_%d" % r)


def power_map(t, hirsch, H, r, check_degree=None, unsafe_skip_checks=False):
    """lambda-tilde_r = mu-tilde_r (Id (x) delta^(r)): H(t) -> H(t)."""
    ring = t.ring
    mu = power_concatenation(t, hirsch, H, r, check_degree=check_degree,
                             unsafe_skip_checks=unsafe_skip_checks)

    def fn(tok):
        c, w = tok.data
        out = Element(ring)
        for u, cu in H.comult_power(w, r).items():
            for v, cv in mu(tensor_token(c, u)).items():
                out._accumulate(v, cu * cv)
        return out

    return LinearMap(ring, 0, fn, "lambda-tilde_%d" % r)


def power_map_on_homology(hoch, lam, degrees):
    """Matrices of a chain self-map on homology, in the SNF-lifted basis.

    Returns a list of {degree, generators, matrix} with matrix columns the
    coordinates of the image of each homology representative."""
    out = []
    for n in degrees:
        hb = HomologyBasis(hoch.complex, n)
        idx = hoch.complex.basis.index(n)
        toks = hoch.complex.basis.basis(n)
        cols = []
        for rep in hb.representatives:
            chain = Element(hoch.ring)
            for i, coeff in enumerate(rep):
                if coeff:
                    chain._accumulate(toks[i], coeff)
            img = lam(chain)
            vec = [0] * len(toks)
            for tok, c in img.items():
                vec[idx[tok]] = c
            cols.append(hb.coordinates(vec))
        matrix = [[cols[j][i] for j in range(len(cols))]
                  for i in range(len(hb.generators))]
        out.append({"degree": n, "generators": list(hb.generators), "matrix": matrix})
    return out
