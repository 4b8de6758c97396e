"""Differential graded algebras, coalgebras, Hopf algebras, and twisting cochains.

Includes the bar and cobar constructions, the canonical twisting cochains
and their induced maps, bar/cobar adjunction maps, cartesian products of
twisting cochains, tensor products of (co)algebras, convolution powers,
and Hirsch coalgebra structures on cobar constructions.
"""

from .chains import (
    ChainComplex, Element, GradedBasis, InfiniteTypeError, LinearMap,
    add_maps, compose, identity_map, operator_application_sign,
    reorder_sign, suspend, desuspend, tensor_token, word_token,
)


def _signed(exp):
    return -1 if exp % 2 else 1


def unit_augmentation(ring, unit_token):
    def aug(tok):
        return 1 if tok == unit_token else 0
    return aug


class DGAlgebra:
    """Augmented chain algebra with a basis-aligned augmentation.

    mult(tok, tok) returns an Element; non-unit basis tokens must be
    killed by the augmentation (fixtures are stated in such a basis).
    """

    def __init__(self, complex_, unit, mult, augmentation=None, name=""):
        self.complex = complex_
        self.unit = unit
        self._mult = mult
        self.augmentation = augmentation or unit_augmentation(complex_.ring, unit)
        self.name = name or complex_.name

    @property
    def ring(self):
        return self.complex.ring

    @property
    def d(self):
        return self.complex.d

    @property
    def max_degree(self):
        return self.complex.max_degree

    def mult(self, a, b):
        return self._mult(a, b)

    def multiply(self, x, y):
        """Product of two elements (no Koszul signs: values, not maps)."""
        out = Element(self.ring)
        for s, c in x.items():
            for t, c2 in y.items():
                for u, c3 in self._mult(s, t).items():
                    out._accumulate(u, c * c2 * c3)
        return out

    def multiply_all(self, elements):
        out = Element.from_token(self.ring, self.unit)
        for e in elements:
            out = self.multiply(out, e)
        return out

    def mult_on_pairs(self, x):
        """Apply multiplication to an element of binary tensor tokens."""
        out = Element(self.ring)
        for t, c in x.items():
            a, b = t.data
            for u, c2 in self._mult(a, b).items():
                out._accumulate(u, c * c2)
        return out

    def aug_ideal_basis(self, n):
        toks = self.complex.basis.basis(n)
        return [t for t in toks if t != self.unit]

    def is_connected(self):
        return self.complex.basis.basis(0) == [self.unit]

    def element(self, tok, c=1):
        return Element.from_token(self.ring, tok, c)

    def check_associativity(self, through_degree):
        """First violating triple, or None."""
        toks = []
        for n in range(through_degree + 1):
            toks.extend(self.aug_ideal_basis(n))
        for a in toks:
            for b in toks:
                for c in toks:
                    if a.degree + b.degree + c.degree > through_degree:
                        continue
                    lhs = self.multiply(self.mult_elem(a, b), self.element(c))
                    rhs = self.multiply(self.element(a), self.mult_elem(b, c))
                    if lhs != rhs:
                        return (a, b, c)
        return None

    def mult_elem(self, a, b):
        return self._mult(a, b)

    def check_mult_is_chain_map(self, through_degree):
        """d(ab) = (da)b + (-1)^|a| a(db) on basis pairs."""
        for n in range(through_degree + 1):
            for m in range(through_degree + 1 - n):
                for a in self.complex.basis.basis(n):
                    for b in self.complex.basis.basis(m):
                        lhs = self.d(self._mult(a, b))
                        rhs = self.multiply(self.d(a), self.element(b)) + \
                            self.multiply(self.element(a), self.d(b)).scale(_signed(n))
                        if lhs != rhs:
                            return (a, b)
        return None


class DGCoalgebra:
    """Coaugmented chain coalgebra; connected when degree 0 is R*1."""

    def __init__(self, complex_, counit_token, comult, counit=None, name=""):
        self.complex = complex_
        self.counit_token = counit_token
        self._comult = comult
        self.counit = counit or unit_augmentation(complex_.ring, counit_token)
        self.name = name or complex_.name

    @property
    def ring(self):
        return self.complex.ring

    @property
    def d(self):
        return self.complex.d

    @property
    def max_degree(self):
        return self.complex.max_degree

    def comult(self, tok):
        return self._comult(tok)

    def comult_element(self, x):
        out = Element(self.ring)
        for t, c in x.items():
            for u, c2 in self._comult(t).items():
                out._accumulate(u, c * c2)
        return out

    def reduced_comult(self, tok):
        """Drop terms with a degree-0 factor; valid for connected coalgebras."""
        out = Element(self.ring)
        if tok.degree == 0:
            return out
        for t, c in self._comult(tok).items():
            a, b = t.data
            if a.degree > 0 and b.degree > 0:
                out._accumulate(t, c)
        return out

    def reduced_comult_iterated(self, tok, k):
        """Delta-bar^(k): element with k-fold tensor tokens (left-iterated)."""
        ring = self.ring
        if k == 1:
            return Element.from_token(ring, tensor_token(tok)) if tok.degree > 0 else Element(ring)
        prev = self.reduced_comult_iterated(tok, k - 1)
        out = Element(ring)
        for t, c in prev.items():
            first, rest = t.data[0], t.data[1:]
            for u, c2 in self.reduced_comult(first).items():
                out._accumulate(tensor_token(*(u.data + rest)), c * c2)
        return out

    def comult_iterated(self, tok, k):
        """Full Delta^(k) as an element of k-fold tensor tokens."""
        ring = self.ring
        if k == 1:
            return Element.from_token(ring, tensor_token(tok))
        prev = self.comult_iterated(tok, k - 1)
        out = Element(ring)
        for t, c in prev.items():
            first, rest = t.data[0], t.data[1:]
            for u, c2 in self._comult(first).items():
                out._accumulate(tensor_token(*(u.data + rest)), c * c2)
        return out

    def is_connected(self):
        return self.complex.basis.basis(0) == [self.counit_token]

    def element(self, tok, c=1):
        return Element.from_token(self.ring, tok, c)

    def check_coassociativity(self, through_degree):
        for n in range(through_degree + 1):
            for tok in self.complex.basis.basis(n):
                lhs = Element(self.ring)
                rhs = Element(self.ring)
                for t, c in self._comult(tok).items():
                    a, b = t.data
                    for u, c2 in self._comult(a).items():
                        lhs._accumulate(tensor_token(*(u.data + (b,))), c * c2)
                    for u, c2 in self._comult(b).items():
                        rhs._accumulate(tensor_token(*((a,) + u.data)), c * c2)
                if lhs != rhs:
                    return tok
        return None

    def check_comult_is_chain_map(self, through_degree):
        dT = add_maps(tensor_maps_pair(self.d, identity_map(self.ring)),
                      tensor_maps_pair(identity_map(self.ring), self.d))
        for n in range(through_degree + 1):
            for tok in self.complex.basis.basis(n):
                if dT(self._comult(tok)) != self.comult_element(self.d(tok)):
                    return tok
        return None

    def is_cocommutative(self, through_degree):
        for n in range(through_degree + 1):
            for tok in self.complex.basis.basis(n):
                if twist_tensor(self.ring, self._comult(tok)) != self._comult(tok):
                    return False
        return True


def tensor_maps_pair(f, g):
    from .chains import tensor_map
    return tensor_map(f, g)


def twist_tensor(ring, x):
    """Symmetry isomorphism on binary tensor tokens with Koszul sign."""
    out = Element(ring)
    for t, c in x.items():
        a, b = t.data
        out._accumulate(tensor_token(b, a), c * _signed(a.degree * b.degree))
    return out


class HopfAlgebra:
    """Chain Hopf algebra: a DGAlgebra with a comultiplication."""

    def __init__(self, algebra, comult, counit=None, name=""):
        self.algebra = algebra
        self._comult = comult
        self.counit = counit or unit_augmentation(algebra.ring, algebra.unit)
        self.name = name or algebra.name

    @property
    def ring(self):
        return self.algebra.ring

    @property
    def complex(self):
        return self.algebra.complex

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def d(self):
        return self.algebra.d

    def comult(self, tok):
        return self._comult(tok)

    def comult_element(self, x):
        out = Element(self.ring)
        for t, c in x.items():
            for u, c2 in self._comult(t).items():
                out._accumulate(u, c * c2)
        return out

    def as_coalgebra(self):
        return DGCoalgebra(self.complex, self.unit, self._comult, self.counit, self.name)

    def comult_power(self, tok, r):
        """Full Delta^(r) with values in flat r-fold tensor tokens."""
        return self.as_coalgebra().comult_iterated(tok, r)

    def is_cocommutative(self, through_degree):
        return self.as_coalgebra().is_cocommutative(through_degree)

    def check_comult_is_algebra_map(self, through_degree):
        """delta(ab) = delta(a)delta(b) in the Koszul-signed tensor square."""
        A = self.algebra
        sq = tensor_algebra(A, A, max_degree=through_degree)
        for n in range(through_degree + 1):
            for m in range(through_degree + 1 - n):
                for a in A.complex.basis.basis(n):
                    for b in A.complex.basis.basis(m):
                        lhs = self.comult_element(A.mult(a, b))
                        rhs = sq.multiply(self._comult(a), self._comult(b))
                        if lhs != rhs:
                            return (a, b)
        return None


# ---------------------------------------------------------------------------
# Twisting cochains


class TwistingCochain:
    """Degree -1 map from a connected coalgebra to an augmented algebra
    satisfying d t + t d = m (t (x) t) Delta, vanishing on the coaugmentation.
    """

    def __init__(self, source, target, tmap, name=""):
        self.source = source
        self.target = target
        self.map = tmap
        self.name = name

    @property
    def ring(self):
        return self.source.ring

    def __call__(self, x):
        return self.map(x)

    def brown_defect(self, tok):
        """d t(c) + t(d c) - m (t (x) t) Delta(c)."""
        from .chains import tensor_map
        t2 = tensor_map(self.map, self.map)
        lhs = self.target.d(self.map(tok)) + self.map(self.source.d(tok))
        rhs = self.target.mult_on_pairs(t2(self.source.comult(tok)))
        return lhs - rhs


def check_twisting(t, through_degree):
    """Verify the twisting condition on source tokens <= through_degree.

    Returns (True, None) or (False, first counterexample token).
    """
    for n in range(through_degree + 1):
        for tok in t.source.complex.basis.basis(n):
            if not t.brown_defect(tok).is_zero():
                return False, tok
    return True, None


# ---------------------------------------------------------------------------
# Bar construction


def _word_basis(letter_basis, n, min_letter_degree=1):
    """All words of letters (from letter_basis(d)) with total degree n."""
    if n == 0:
        return [word_token(())]
    out = []

    def extend(prefix, remaining):
        if remaining == 0:
            out.append(word_token(tuple(prefix)))
            return
        for d in range(min_letter_degree, remaining + 1):
            for letter in letter_basis(d):
                prefix.append(letter)
                extend(prefix, remaining - d)
                prefix.pop()

    extend([], n)
    return out


def bar_construction(A, max_degree=None):
    """Tensor coalgebra on the suspended augmentation ideal with the
    two-term bar differential; comultiplication splits words."""
    ring = A.ring
    if max_degree is None:
        max_degree = A.max_degree + 1

    def letter_basis(d):
        # letters s(a), a in the augmentation ideal of degree d-1
        return [suspend(a) for a in A.aug_ideal_basis(d - 1)]

    basis = GradedBasis(ring, lambda n: _word_basis(letter_basis, n), max_degree,
                        name="Bar(%s)" % A.name)

    def differential(tok):
        letters = tok.data
        out = Element(ring)
        prefix_deg = 0
        for j, letter in enumerate(letters):
            a = desuspend(letter)
            passage = _signed(prefix_deg)
            # internal part: s(da_j), entering with operator degree -1
            for u, c in A.d(a).items():
                if u != A.unit:
                    out._accumulate(
                        word_token(letters[:j] + (suspend(u),) + letters[j + 1:]),
                        -passage * c)
            # merge part: s(a_j a_{j+1})
            if j + 1 < len(letters):
                b = desuspend(letters[j + 1])
                merge_sign = passage * _signed(letter.degree)
                for u, c in A.mult(a, b).items():
                    if u != A.unit:
                        out._accumulate(
                            word_token(letters[:j] + (suspend(u),) + letters[j + 2:]),
                            merge_sign * c)
            prefix_deg += letter.degree
        return out

    d = LinearMap(ring, -1, differential, "d_Bar")
    cx = ChainComplex(basis, d, name="Bar(%s)" % A.name)
    empty = word_token(())

    def comult(tok):
        letters = tok.data
        out = Element(ring)
        for k in range(len(letters) + 1):
            out._accumulate(tensor_token(word_token(letters[:k]), word_token(letters[k:])), 1)
        return out

    return DGCoalgebra(cx, empty, comult, name="Bar(%s)" % A.name)


def bar_map(g, A, Aprime, max_degree=None):
    """Bar functor on an algebra map g: letterwise application."""
    ring = A.ring

    def fn(tok):
        out = Element.from_token(ring, word_token(()))
        for letter in tok.data:
            a = desuspend(letter)
            img = g(a)
            nxt = Element(ring)
            for w, c in out.items():
                for u, c2 in img.items():
                    if u == Aprime.unit:
                        continue
                    nxt._accumulate(word_token(w.data + (suspend(u),)), c * c2)
            out = nxt
        return out

    return LinearMap(ring, 0, fn, "Bar(g)")


# ---------------------------------------------------------------------------
# Cobar construction


def cobar_construction(C, max_degree=None):
    """Tensor algebra on the desuspended coaugmentation coideal with the
    cobar differential; multiplication concatenates."""
    ring = C.ring
    if not C.is_connected():
        raise ValueError("cobar needs a connected coalgebra, got %s" % C.name)
    if max_degree is None:
        max_degree = max(C.max_degree - 1, 0)
    one_reduced = True
    try:
        one_reduced = not C.complex.basis.basis(1)
    except Exception:
        one_reduced = False

    if one_reduced:
        def letter_basis(d):
            return [desuspend(c) for c in C.complex.basis.basis(d + 1)]
        basis_fn = lambda n: _word_basis(letter_basis, n)
    else:
        def basis_fn(n):
            raise InfiniteTypeError(
                "cobar of %s is not finite type per degree (C_1 != 0)" % C.name)

    basis = GradedBasis(ring, basis_fn, max_degree, name="Cobar(%s)" % C.name)

    def letter_image(letter):
        """d on a generator: -s^{-1}(dc) + sum +- s^{-1}c_i | s^{-1}c^i."""
        c = suspend(letter)
        out = Element(ring)
        for u, coeff in C.d(c).items():
            if u.degree > 0:
                out._accumulate(word_token((desuspend(u),)), -coeff)
        for t, coeff in C.reduced_comult(c).items():
            a, b = t.data
            sign = _signed(a.degree)
            out._accumulate(word_token((desuspend(a), desuspend(b))), sign * coeff)
        return out

    def differential(tok):
        letters = tok.data
        out = Element(ring)
        prefix_deg = 0
        for j, letter in enumerate(letters):
            passage = _signed(prefix_deg)
            for w, c in letter_image(letter).items():
                out._accumulate(word_token(letters[:j] + w.data + letters[j + 1:]),
                                passage * c)
            prefix_deg += letter.degree
        return out

    d = LinearMap(ring, -1, differential, "d_Cobar")
    cx = ChainComplex(basis, d, name="Cobar(%s)" % C.name)
    empty = word_token(())

    def mult(u, v):
        return Element.from_token(ring, word_token(u.data + v.data))

    return DGAlgebra(cx, empty, mult, name="Cobar(%s)" % C.name)


def cobar_map(f, C, Cprime, max_degree=None):
    """Cobar functor on a coalgebra map f: letterwise application."""
    ring = C.ring

    def fn(tok):
        out = Element.from_token(ring, word_token(()))
        for letter in tok.data:
            c = suspend(letter)
            img = f(c)
            nxt = Element(ring)
            for w, cf in out.items():
                for u, c2 in img.items():
                    if u.degree == 0:
                        continue
                    nxt._accumulate(word_token(w.data + (desuspend(u),)), cf * c2)
            out = nxt
        return out

    return LinearMap(ring, 0, fn, "Cobar(f)")


# ---------------------------------------------------------------------------
# Canonical twisting cochains, alpha/beta, adjunction maps


def universal_twisting(C, cobar=None):
    """t: C -> Cobar C, c |-> s^{-1}c (0 in degree 0)."""
    omega = cobar if cobar is not None else cobar_construction(C)
    ring = C.ring

    def fn(tok):
        if tok.degree == 0:
            return Element(ring)
        return Element.from_token(ring, word_token((desuspend(tok),)))

    return TwistingCochain(C, omega, LinearMap(ring, -1, fn, "t_univ"), "t_univ")


def couniversal_twisting(A, bar=None):
    """t: Bar A -> A, s a |-> a, longer words |-> 0."""
    barA = bar if bar is not None else bar_construction(A)
    ring = A.ring

    def fn(tok):
        if len(tok.data) != 1:
            return Element(ring)
        return Element.from_token(ring, desuspend(tok.data[0]))

    return TwistingCochain(barA, A, LinearMap(ring, -1, fn, "t_couniv"), "t_couniv")


def algebra_realization(t):
    """alpha_t: Cobar C -> A, the multiplicative extension of t."""
    ring = t.ring
    A = t.target

    def fn(tok):
        out = Element.from_token(ring, A.unit)
        for letter in tok.data:
            out = A.multiply(out, t.map(suspend(letter)))
        return out

    return LinearMap(ring, 0, fn, "alpha_t")


def coalgebra_realization(t):
    """beta_t: C -> Bar A via iterated reduced comultiplications.

    beta(c) = sum_k (s t)^{(x)k} applied to Delta-bar^(k)(c); the operator
    s t has degree 0 so no Koszul signs arise.
    """
    ring = t.ring
    C = t.source
    A = t.target

    def fn(tok):
        if tok.degree == 0:
            return Element.from_token(ring, word_token(()))
        out = Element(ring)
        for k in range(1, tok.degree + 1):
            for tens, c in C.reduced_comult_iterated(tok, k).items():
                acc = Element.from_token(ring, word_token(()))
                ok = True
                for factor in tens.data:
                    img = t.map(factor)
                    nxt = Element(ring)
                    for w, cw in acc.items():
                        for u, cu in img.items():
                            if u == A.unit:
                                continue
                            nxt._accumulate(word_token(w.data + (suspend(u),)), cw * cu)
                    acc = nxt
                    if acc.is_zero():
                        ok = False
                        break
                if ok:
                    for w, cw in acc.items():
                        out._accumulate(w, c * cw)
        return out

    return LinearMap(ring, 0, fn, "beta_t")


def bar_cobar_unit(C, cobar=None):
    """eta_C: C -> Bar Cobar C (= beta of the universal twisting cochain)."""
    return coalgebra_realization(universal_twisting(C, cobar))


def cobar_bar_counit(A, bar=None):
    """eps_A: Cobar Bar A -> A (= alpha of the couniversal twisting cochain)."""
    return algebra_realization(couniversal_twisting(A, bar))


def bar_cobar_retraction(C):
    """rho_C: Bar Cobar C -> C, s(s^{-1}c) |-> c, all other words |-> 0."""
    ring = C.ring

    def fn(tok):
        if tok.data == ():
            return Element.from_token(ring, C.counit_token)
        if len(tok.data) == 1:
            inner = desuspend(tok.data[0])  # a cobar word
            if inner.kind == "word" and len(inner.data) == 1:
                return Element.from_token(ring, suspend(inner.data[0]))
        return Element(ring)

    return LinearMap(ring, 0, fn, "rho_C")


def cobar_bar_section(A):
    """sigma_A: A -> Cobar Bar A, a |-> s^{-1}(s a)."""
    ring = A.ring

    def fn(tok):
        if tok == A.unit:
            return Element.from_token(ring, word_token(()))
        return Element.from_token(ring, word_token((desuspend(word_token((suspend(tok),))),)))

    return LinearMap(ring, 0, fn, "sigma_A")


# ---------------------------------------------------------------------------
# Tensor products of algebras and coalgebras


def tensor_algebra(*algebras, max_degree=None):
    """Componentwise algebra on flat tensor tokens with Koszul signs."""
    ring = algebras[0].ring
    if max_degree is None:
        max_degree = min(a.max_degree for a in algebras)
    n_factors = len(algebras)

    def basis_fn(n):
        out = []

        def build(i, remaining, prefix):
            if i == n_factors:
                if remaining == 0:
                    out.append(tensor_token(*prefix))
                return
            for d in range(0, remaining + 1):
                if i == n_factors - 1 and d != remaining:
                    continue
                for t in algebras[i].complex.basis.basis(d):
                    build(i + 1, remaining - d, prefix + [t])

        build(0, n, [])
        return out

    name = "(x)".join(a.name for a in algebras)
    basis = GradedBasis(ring, basis_fn, max_degree, name)
    maps = [a.complex.d for a in algebras]
    from .chains import tensor_maps
    d = None
    for i in range(n_factors):
        slot = [identity_map(ring)] * n_factors
        slot[i] = maps[i]
        term = tensor_maps(slot)
        d = term if d is None else add_maps(d, term)
    cx = ChainComplex(basis, d, name)
    unit = tensor_token(*[a.unit for a in algebras])

    def mult(s, t):
        a_parts, b_parts = s.data, t.data
        degrees = [x.degree for x in a_parts] + [x.degree for x in b_parts]
        order = []
        for i in range(n_factors):
            order.extend([i, n_factors + i])
        sign = reorder_sign(degrees, order)
        factor_products = [algebras[i].mult(a_parts[i], b_parts[i]) for i in range(n_factors)]
        out = Element.from_token(ring, tensor_token())
        for img in factor_products:
            nxt = Element(ring)
            for t1, c1 in out.items():
                for t2, c2 in img.items():
                    nxt._accumulate(tensor_token(*(t1.data + (t2,))), c1 * c2)
            out = nxt
        return out.scale(sign)

    def aug(tok):
        v = 1
        for a, part in zip(algebras, tok.data):
            v *= a.augmentation(part)
        return v

    return DGAlgebra(cx, unit, mult, aug, name)


def tensor_coalgebra(*coalgebras, max_degree=None):
    """Componentwise coalgebra on flat tensor tokens with Koszul signs."""
    ring = coalgebras[0].ring
    if max_degree is None:
        max_degree = min(c.max_degree for c in coalgebras)
    n_factors = len(coalgebras)

    def basis_fn(n):
        out = []

        def build(i, remaining, prefix):
            if i == n_factors:
                if remaining == 0:
                    out.append(tensor_token(*prefix))
                return
            for d in range(0, remaining + 1):
                if i == n_factors - 1 and d != remaining:
                    continue
                for t in coalgebras[i].complex.basis.basis(d):
                    build(i + 1, remaining - d, prefix + [t])

        build(0, n, [])
        return out

    name = "(x)".join(c.name for c in coalgebras)
    basis = GradedBasis(ring, basis_fn, max_degree, name)
    from .chains import tensor_maps
    d = None
    for i in range(n_factors):
        slot = [identity_map(ring)] * n_factors
        slot[i] = coalgebras[i].complex.d
        term = tensor_maps(slot)
        d = term if d is None else add_maps(d, term)
    cx = ChainComplex(basis, d, name)
    counit_tok = tensor_token(*[c.counit_token for c in coalgebras])

    def comult(tok):
        # expand factorwise, then unshuffle (x1,y1,...,xn,yn) -> (x..., y...)
        parts = tok.data
        out = Element(ring)
        expansions = [list(coalgebras[i].comult(parts[i]).items()) for i in range(n_factors)]

        def build(i, acc_tokens, acc_coeff):
            if i == n_factors:
                degrees = []
                for x, y in acc_tokens:
                    degrees.extend([x.degree, y.degree])
                order = [2 * i for i in range(n_factors)] + [2 * i + 1 for i in range(n_factors)]
                sign = reorder_sign(degrees, order)
                left = tensor_token(*[x for x, _ in acc_tokens])
                right = tensor_token(*[y for _, y in acc_tokens])
                out._accumulate(tensor_token(left, right), acc_coeff * sign)
                return
            for t, c in expansions[i]:
                x, y = t.data
                build(i + 1, acc_tokens + [(x, y)], acc_coeff * c)

        build(0, [], 1)
        return out

    def counit(tok):
        v = 1
        for c, part in zip(coalgebras, tok.data):
            v *= c.counit(part)
        return v

    return DGCoalgebra(cx, counit_tok, comult, counit, name)


def hopf_tensor_power(H, r, max_degree=None):
    """H^{(x)r} with componentwise Hopf structure."""
    algebra = tensor_algebra(*([H.algebra] * r), max_degree=max_degree)
    coalgebra = tensor_coalgebra(*([H.as_coalgebra()] * r), max_degree=max_degree)
    return HopfAlgebra(algebra, coalgebra.comult, coalgebra.counit, name=algebra.name)


# ---------------------------------------------------------------------------
# Cartesian product of twisting cochains; Milgram splitting


def cartesian_product(t, tprime, source=None, target=None):
    """t * t' = t (x) eta' eps' + eta eps (x) t' on C (x) C' -> A (x) A'."""
    if t.ring != tprime.ring:
        raise ValueError("ring mismatch")
    ring = t.ring
    C = source if source is not None else tensor_coalgebra(t.source, tprime.source)
    A = target if target is not None else tensor_algebra(t.target, tprime.target)

    def fn(tok):
        c, cprime = tok.data
        out = Element(ring)
        if cprime.degree == 0:
            eps = tprime.source.counit(cprime)
            if eps:
                for u, coeff in t.map(c).items():
                    out._accumulate(tensor_token(u, tprime.target.unit), coeff * eps)
        if c.degree == 0:
            eps = t.source.counit(c)
            if eps:
                for u, coeff in tprime.map(cprime).items():
                    out._accumulate(tensor_token(t.target.unit, u), coeff * eps)
        return out

    return TwistingCochain(C, A, LinearMap(ring, -1, fn, "t*t'"), "%s*%s" % (t.name, tprime.name))


def cobar_tensor_splitting(C, Cprime, cobars=None):
    """Milgram's algebra map q: Cobar(C (x) C') -> Cobar C (x) Cobar C'."""
    omega_c = cobars[0] if cobars else cobar_construction(C)
    omega_cp = cobars[1] if cobars else cobar_construction(Cprime)
    target = tensor_algebra(omega_c, omega_cp)
    t = cartesian_product(universal_twisting(C, omega_c), universal_twisting(Cprime, omega_cp),
                          target=target)
    return algebra_realization(t), target


# ---------------------------------------------------------------------------
# Convolution powers


def convolution(H, f, g):
    """f * g = mu (f (x) g) delta on a Hopf algebra."""
    from .chains import tensor_map
    ring = H.ring
    fg = tensor_map(f, g)

    def fn(tok):
        return H.algebra.mult_on_pairs(fg(H.comult(tok)))

    return LinearMap(ring, f.shift + g.shift, fn, "%s*%s" % (f.name, g.name))


def convolution_power(H, r):
    """lambda_r = mu^(r) delta^(r); only positive powers are defined."""
    if r < 1:
        raise ValueError("convolution power requires r >= 1")
    ring = H.ring

    def fn(tok):
        out = Element(ring)
        for t, c in H.comult_power(tok, r).items():
            prod = H.algebra.multiply_all([Element.from_token(ring, u) for u in t.data])
            for u, c2 in prod.items():
                out._accumulate(u, c * c2)
        return out

    return LinearMap(ring, 0, fn, "lambda_%d" % r)


# ---------------------------------------------------------------------------
# Hirsch coalgebras


class HirschCoalgebra:
    """Connected coalgebra C with a coassociative loop comultiplication:
    an algebra map psi: Cobar C -> Cobar C (x) Cobar C, given on generators.
    """

    def __init__(self, C, cobar, generator_images, name=""):
        self.C = C
        self.cobar = cobar
        self.square = tensor_algebra(cobar, cobar)
        self._gen = generator_images  # letter token -> Element in the square
        self.name = name or "Hirsch(%s)" % C.name

    @property
    def ring(self):
        return self.C.ring

    def psi(self, tok):
        """Algebra-map extension to cobar words."""
        ring = self.ring
        out = Element.from_token(ring, tensor_token(word_token(()), word_token(())))
        for letter in tok.data:
            out = self.square.multiply(out, self._gen(letter))
        return out

    def psi_map(self):
        return LinearMap(self.ring, 0, self.psi, "psi")

    def iterated_psi(self, tok, r):
        """psi^(r)(word) as an element of flat r-fold tensor tokens."""
        ring = self.ring
        out = Element.from_token(ring, tensor_token(tok))
        while r > 1:
            nxt = Element(ring)
            for t, c in out.items():
                first, rest = t.data[0], t.data[1:]
                for u, c2 in self.psi(first).items():
                    nxt._accumulate(tensor_token(*(u.data + rest)), c * c2)
            out = nxt
            r -= 1
        return out

    def loop_hopf(self):
        """The chain Hopf algebra (Cobar C, psi)-with values through pairs."""
        def comult(tok):
            return self.psi(tok)
        return HopfAlgebra(self.cobar, comult, name="(Cobar %s, psi)" % self.C.name)

    def is_balanced(self, through_degree):
        """tau psi = psi on generators through the given degree."""
        for n in range(1, min(through_degree + 2, self.C.max_degree + 1)):
            for c in self.C.complex.basis.basis(n):
                letter = desuspend(c)
                img = self._gen(letter)
                if twist_tensor(self.ring, img) != img:
                    return False
        return True

    def check_chain_algebra_map(self, through_degree):
        """psi d = d psi on generators (algebra-map extension handles words)."""
        dsq = self.square.complex.d
        for n in range(1, min(through_degree + 2, self.C.max_degree + 1)):
            for c in self.C.complex.basis.basis(n):
                w = word_token((desuspend(c),))
                if dsq(self.psi(w)) != self.psi_map()(self.cobar.d(w)):
                    return c
        return None

    def check_coassociative(self, through_degree):
        for n in range(1, min(through_degree + 2, self.C.max_degree + 1)):
            for c in self.C.complex.basis.basis(n):
                w = word_token((desuspend(c),))
                lhs = self.iterated_psi(w, 3)
                # right-iterated for comparison
                ring = self.ring
                rhs = Element(ring)
                for t, cf in self.psi(w).items():
                    a, b = t.data
                    for u, c2 in self.psi(b).items():
                        rhs._accumulate(tensor_token(a, *u.data), cf * c2)
                if lhs != rhs:
                    return c
        return None


def hirsch_primitive(C, cobar=None, overrides=None, name=""):
    """Hirsch structure with primitive generators, with optional overrides.

    Covers double-suspension chains (trivial reduced comultiplication) and
    explicitly given loop comultiplications like hand-built fixtures.
    """
    ring = C.ring
    omega = cobar if cobar is not None else cobar_construction(C)
    overrides = overrides or {}
    empty = word_token(())

    def gen(letter):
        if letter in overrides:
            return overrides[letter]
        w = word_token((letter,))
        out = Element(ring)
        out._accumulate(tensor_token(w, empty), 1)
        out._accumulate(tensor_token(empty, w), 1)
        return out

    return HirschCoalgebra(C, omega, gen, name=name)


def suspension_hirsch(EL_chains, lower_comult, cobar=None, name=""):
    """Hirsch structure on the chains of a simplicial suspension.

    lower_comult maps a positive-degree token c to the part of the loop
    comultiplication coming one level down: an Element of binary tensor
    tokens (u, v) of C-tokens with |u| + |v| = |c| + 1, to be read as
    s^{-1}u (x) s^{-1}v.  Primitive terms are added automatically.
    """
    ring = EL_chains.ring
    omega = cobar if cobar is not None else cobar_construction(EL_chains)
    empty = word_token(())

    def gen(letter):
        c = suspend(letter)
        out = Element(ring)
        out._accumulate(tensor_token(word_token((letter,)), empty), 1)
        out._accumulate(tensor_token(empty, word_token((letter,))), 1)
        for t, coeff in lower_comult(c).items():
            u, v = t.data
            out._accumulate(
                tensor_token(word_token((desuspend(u),)), word_token((desuspend(v),))),
                coeff)
        return out

    return HirschCoalgebra(EL_chains, omega, gen, name=name)
