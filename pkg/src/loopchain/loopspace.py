"""Element-level simplicial groups and free-loop-space models.

The loop group of a reduced simplicial set acts on itself by conjugation
over the universal twisting function, giving the free-loop model over the
base; classifying spaces, cyclic bar constructions and Artin-Mazur
totalization give the corresponding models over a simplicial group, and
edgewise subdivision realizes the power maps.
"""

from .simplicial import SimplicialSet, encode_nondegenerate, simplex_dim


# ---------------------------------------------------------------------------
# Free-group words


class FreeWord:
    """Reduced word in a free group: tuple of (generator, exponent)."""

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        self.syllables = tuple(syllables)

    @classmethod
    def unit(cls):
        return cls(())

    @classmethod
    def gen(cls, g, exp=1):
        return cls(((g, exp),)) if exp else cls(())

    def mul(self, other):
        out = list(self.syllables)
        for g, e in other.syllables:
            if out and out[-1][0] == g:
                merged = out[-1][1] + e
                out.pop()
                if merged:
                    out.append((g, merged))
            else:
                out.append((g, e))
        return FreeWord(out)

    def inv(self):
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def power(self, r):
        out = FreeWord()
        base = self if r >= 0 else self.inv()
        for _ in range(abs(r)):
            out = out.mul(base)
        return out

    def is_unit(self):
        return not self.syllables

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __repr__(self):
        if not self.syllables:
            return "e"
        return "*".join("%r^%d" % (g, e) if e != 1 else "%r" % (g,)
                        for g, e in self.syllables)


# ---------------------------------------------------------------------------
# Simplicial groups (element level)


class ConstantGroup:
    """The constant simplicial group on a finite group."""

    def __init__(self, group):
        self.group = group
        self.name = "C(%s)" % group.name

    def face(self, n, i, g):
        return g

    def degen(self, n, i, g):
        return g

    def mul(self, n, a, b):
        return self.group.mul(a, b)

    def inv(self, n, a):
        return self.group.inv(a)

    def unit(self, n):
        return self.group.unit

    def power(self, n, a, r):
        return self.group.power(a, r)

    def elements(self, n):
        return list(self.group.elements)

    def sample(self, rng, n):
        return self.group.elements[rng.randrange(len(self.group.elements))]


class LoopGroup:
    """Kan loop group of a reduced simplicial set, elementwise.

    Level n is the free group on the (n+1)-simplices of K not in the image
    of the first degeneracy; the faces and degeneracies of generators are
    forced by the twisting-function identities and extended as group
    homomorphisms."""

    def __init__(self, K):
        if not K.is_reduced():
            raise ValueError("loop group needs a reduced simplicial set")
        self.K = K
        self.name = "G(%s)" % K.name

    def bar(self, enc):
        """Generator image of a K-simplex; the unit on s_0-degeneracies."""
        core, phi = enc
        if len(phi) >= 2 and phi[0] == phi[1]:
            return FreeWord.unit()
        return FreeWord.gen(enc)

    def _on_generators(self, word, fn):
        out = FreeWord.unit()
        for g, e in word.syllables:
            img = fn(g)
            out = out.mul(img if e > 0 else img.inv())
            if abs(e) > 1:
                step = img if e > 0 else img.inv()
                for _ in range(abs(e) - 1):
                    out = out.mul(step)
        return out

    def face(self, n, i, word):
        K = self.K

        def on_gen(enc):
            m = simplex_dim(enc)
            if i == 0:
                first = self.bar(K.face(m, 0, enc))
                second = self.bar(K.face(m, 1, enc))
                return first.inv().mul(second)
            return self.bar(K.face(m, i + 1, enc))

        return self._on_generators(word, on_gen)

    def degen(self, n, i, word):
        K = self.K

        def on_gen(enc):
            m = simplex_dim(enc)
            return self.bar(K.degen(m, i + 1, enc))

        return self._on_generators(word, on_gen)

    def mul(self, n, a, b):
        return a.mul(b)

    def inv(self, n, a):
        return a.inv()

    def unit(self, n):
        return FreeWord.unit()

    def power(self, n, a, r):
        return a.power(r)

    def sample(self, rng, n, max_length=3):
        length = rng.randrange(1, max_length + 1)
        out = FreeWord.unit()
        for _ in range(length):
            enc = self.K.sample(rng, n + 1)
            core, phi = enc
            if len(phi) >= 2 and phi[0] == phi[1]:
                continue
            out = out.mul(FreeWord.gen(enc, rng.choice((-1, 1))))
        return out


def universal_twisting_function(GK):
    """tau_K: K_n -> (GK)_{n-1}, x |-> x-bar."""

    def tau(n, enc):
        return GK.bar(enc)

    return tau


def check_twisting_function(base, G, tau, n, x):
    """The four twisting identities at a single simplex x of degree n."""
    failures = []
    tx = tau(n, x)
    if n >= 2:
        lhs = G.face(n - 1, 0, tx)
        rhs = G.mul(n - 2, G.inv(n - 2, tau(n - 1, base.face(n, 0, x))),
                    tau(n - 1, base.face(n, 1, x)))
        if lhs != rhs:
            failures.append(("d0", x))
        for i in range(1, n):
            if G.face(n - 1, i, tx) != tau(n - 1, base.face(n, i + 1, x)):
                failures.append(("d%d" % i, x))
    for i in range(n):
        if G.degen(n - 1, i, tx) != tau(n + 1, base.degen(n, i + 1, x)):
            failures.append(("s%d" % i, x))
    if tau(n + 1, base.degen(n, 0, x)) != G.unit(n):
        failures.append(("s0-unit", x))
    return failures


# ---------------------------------------------------------------------------
# Twisted cartesian products


def conjugation_action(G):
    def act(n, g, h):
        return G.mul(n, G.mul(n, g, h), G.inv(n, g))
    return act


def left_mult_action(G):
    def act(n, g, h):
        return G.mul(n, g, h)
    return act


class TwistedProduct:
    """base x_tau fiber with d_0 twisted through a left action."""

    def __init__(self, base, tau, fiber, action, name=""):
        self.base = base
        self.tau = tau
        self.fiber = fiber
        self.action = action
        self.name = name or "twisted(%s)" % getattr(base, "name", "K")

    def face(self, n, i, elem):
        x, y = elem
        if i == 0:
            fx = self.base.face(n, 0, x)
            fy = self.fiber.face(n, 0, y)
            return (fx, self.action(n - 1, self.tau(n, x), fy))
        return (self.base.face(n, i, x), self.fiber.face(n, i, y))

    def degen(self, n, i, elem):
        x, y = elem
        return (self.base.degen(n, i, x), self.fiber.degen(n, i, y))

    def sample(self, rng, n):
        return (self.base.sample(rng, n), self.fiber.sample(rng, n))


def free_loop_model(K, GK=None):
    """The simplicial free-loop model over a reduced K: the universal
    twisted product with conjugation fiber."""
    G = GK if GK is not None else LoopGroup(K)
    return TwistedProduct(K, universal_twisting_function(G), G,
                          conjugation_action(G), name="FreeLoops(%s)" % K.name)


def fiber_power_map(space, r):
    """(x, a) |-> (x, a^r) on a twisted product with group fiber."""

    def fn(n, elem):
        x, a = elem
        return (x, space.fiber.power(n, a, r))

    return fn


# ---------------------------------------------------------------------------
# Classifying space


class ClassifyingSpace:
    """W-bar of a simplicial group: n-simplices are tuples
    (a_0, ..., a_{n-1}) with a_i in G_i."""

    def __init__(self, G):
        self.G = G
        self.name = "Wbar(%s)" % G.name

    def face(self, n, i, a):
        G = self.G
        if i == 0:
            return a[:-1]
        if i == n:
            return tuple(G.face(j, j, a[j]) for j in range(1, n))
        merged = G.mul(n - i - 1, a[n - i - 1], G.face(n - i, 0, a[n - i]))
        return a[:n - i - 1] + (merged,) + tuple(
            G.face(n - i + j, j + 1, a[n - i + j]) for j in range(1, i))

    def degen(self, n, i, a):
        G = self.G
        return a[:n - i] + (G.unit(n - i),) + tuple(
            G.degen(n - i + j, j, a[n - i + j]) for j in range(i))

    def sample(self, rng, n):
        return tuple(self.G.sample(rng, j) for j in range(n))

    def elements(self, n):
        from itertools import product
        levels = [self.G.elements(j) for j in range(n)]
        return [tuple(t) for t in product(*levels)]


def couniversal_twisting_function(G):
    """upsilon: Wbar(G)_n -> G_{n-1}, the last entry."""

    def tau(n, a):
        return a[n - 1]

    return tau


def loop_model_of_group(G):
    """HG = Wbar(G) x_upsilon (conjugation G)."""
    W = ClassifyingSpace(G)
    return TwistedProduct(W, couniversal_twisting_function(G), G,
                          conjugation_action(G), name="H(%s)" % G.name)


def comparison_embedding(K, GK=None):
    """eta_K: K -> Wbar(GK), x |-> (bar(d_0^{n-1}x), ..., bar(x))."""
    G = GK if GK is not None else LoopGroup(K)

    def eta(n, enc):
        entries = []
        for j in range(n):
            y = enc
            for _ in range(n - 1 - j):
                y = K.face(simplex_dim(y), 0, y)
            entries.append(G.bar(y))
        return tuple(entries)

    return eta, G


# ---------------------------------------------------------------------------
# Bisimplicial bar constructions and totalization


class CyclicNerve:
    """ZG: bidegree (p, q) holds (a_1, ..., a_q, b) with entries in G_p."""

    def __init__(self, G):
        self.G = G
        self.name = "Z(%s)" % G.name

    def hface(self, p, q, i, x):
        return tuple(self.G.face(p, i, v) for v in x)

    def hdegen(self, p, q, i, x):
        return tuple(self.G.degen(p, i, v) for v in x)

    def vface(self, p, q, i, x):
        G = self.G
        a, b = x[:-1], x[-1]
        if i == 0:
            return a[1:] + (G.mul(p, b, a[0]),)
        if i == q:
            return a[:-1] + (G.mul(p, a[-1], b),)
        return a[:i - 1] + (G.mul(p, a[i - 1], a[i]),) + a[i + 1:] + (b,)

    def vdegen(self, p, q, i, x):
        a, b = x[:-1], x[-1]
        return a[:i] + (self.G.unit(p),) + a[i:] + (b,)

    def power_map(self, p, q, x, r):
        """(a_1,...,a_q, b) |-> (a_1,...,a_q, b (a b)^{r-1})."""
        G = self.G
        a_all = self.G.unit(p)
        for v in x[:-1]:
            a_all = G.mul(p, a_all, v)
        ab = G.mul(p, a_all, x[-1])
        out = x[-1]
        for _ in range(r - 1):
            out = G.mul(p, out, ab)
        # b (a b)^{r-1} = b a b a b ... : note (ab) multiplied on the right
        return x[:-1] + (out,)


class BarBisimplicial:
    """BG: bidegree (p, q) holds (a_1, ..., a_q)."""

    def __init__(self, G):
        self.G = G
        self.name = "B(%s)" % G.name

    def hface(self, p, q, i, x):
        return tuple(self.G.face(p, i, v) for v in x)

    def hdegen(self, p, q, i, x):
        return tuple(self.G.degen(p, i, v) for v in x)

    def vface(self, p, q, i, x):
        G = self.G
        if i == 0:
            return x[1:]
        if i == q:
            return x[:-1]
        return x[:i - 1] + (G.mul(p, x[i - 1], x[i]),) + x[i + 1:]

    def vdegen(self, p, q, i, x):
        return x[:i] + (self.G.unit(p),) + x[i:]


class ConstantBisimplicial:
    """CG: constant in the vertical direction."""

    def __init__(self, G):
        self.G = G
        self.name = "Cb(%s)" % G.name

    def hface(self, p, q, i, x):
        return self.G.face(p, i, x)

    def hdegen(self, p, q, i, x):
        return self.G.degen(p, i, x)

    def vface(self, p, q, i, x):
        return x

    def vdegen(self, p, q, i, x):
        return x


class Totalization:
    """Artin-Mazur totalization of a bisimplicial set.

    Elements at level n: tuples (x_0, ..., x_n) with x_i in bidegree
    (i, n-i) and d_0^v x_i = d^h_{i+1} x_{i+1}."""

    def __init__(self, X):
        self.X = X
        self.name = "Tot(%s)" % X.name

    def is_element(self, n, xs):
        for i in range(n):
            if self.X.vface(i, n - i, 0, xs[i]) != \
                    self.X.hface(i + 1, n - i - 1, i + 1, xs[i + 1]):
                return False
        return True

    def face(self, n, i, xs):
        out = []
        for j in range(i):
            out.append(self.X.vface(j, n - j, i - j, xs[j]))
        for j in range(i + 1, n + 1):
            out.append(self.X.hface(j, n - j, i, xs[j]))
        return tuple(out)

    def degen(self, n, i, xs):
        out = []
        for j in range(i + 1):
            out.append(self.X.vdegen(j, n - j, i - j, xs[j]))
        for j in range(i, n + 1):
            out.append(self.X.hdegen(j, n - j, i, xs[j]))
        return tuple(out)


def loop_model_iso(G):
    """kappa: Tot(ZG) -> HG and its inverse.

    kappa reads off the first entries and the final cyclic coordinate;
    the inverse reconstructs the tuple from the compatibility equations."""
    Z = CyclicNerve(G)

    def kappa(n, xs):
        entries = tuple(xs[i][0] for i in range(n))
        return (entries, xs[n][-1])

    def kappa_inv(n, elem):
        a, b_n = elem
        rows = {}
        for i in range(n):
            rows[(i, 1)] = a[i]
            for j in range(2, n - i + 1):
                v = a[i + j - 1]
                for step in range(i + j - 1, i, -1):
                    v = G.face(step, step, v)
                rows[(i, j)] = v
        bs = {n: b_n}
        for i in range(n - 1, -1, -1):
            # b_i = d_{i+1} b_{i+1} . a_{i,1}^{-1}
            v = G.face(i + 1, i + 1, bs[i + 1])
            bs[i] = G.mul(i, v, G.inv(i, rows[(i, 1)]))
        xs = []
        for i in range(n):
            xs.append(tuple(rows[(i, j)] for j in range(1, n - i + 1)) + (bs[i],))
        xs.append((b_n,))
        return tuple(xs)

    return Z, kappa, kappa_inv


def power_map_loops(G, r):
    """lambda on HG: (a_0, ..., a_{n-1}, b) |-> (..., b^r)."""

    def fn(n, elem):
        a, b = elem
        return (a, G.power(n, b, r))

    return fn


# ---------------------------------------------------------------------------
# Edgewise subdivision


class Subdivision:
    """sd_r K: level n is level r(n+1)-1 of K."""

    def __init__(self, K, r):
        self.K = K
        self.r = r
        self.name = "sd%d(%s)" % (r, K.name)

    def face(self, n, i, x):
        N = self.r * (n + 1) - 1
        for j in range(self.r - 1, -1, -1):
            x = self.K.face(N, i + j * (n + 1), x)
            N -= 1
        return x

    def degen(self, n, i, x):
        N = self.r * (n + 1) - 1
        for j in range(self.r):
            x = self.K.degen(N, i + j * (n + 2), x)
            N += 1
        return x


class GroupCyclicBar:
    """The cyclic bar construction of a plain group, as a simplicial set:
    level n holds (a_1, ..., a_n, b)."""

    def __init__(self, group):
        self.group = group
        self.name = "Zgrp(%s)" % group.name

    def face(self, n, i, x):
        g = self.group
        a, b = x[:-1], x[-1]
        if i == 0:
            return a[1:] + (g.mul(b, a[0]),) if a else (b,)
        if i == n:
            return a[:-1] + (g.mul(a[-1], b),)
        return a[:i - 1] + (g.mul(a[i - 1], a[i]),) + a[i + 1:] + (b,)

    def degen(self, n, i, x):
        a, b = x[:-1], x[-1]
        return a[:i] + (self.group.unit,) + a[i:] + (b,)

    def elements(self, n):
        from itertools import product
        return [tuple(t) for t in product(self.group.elements, repeat=n + 1)]

    def sample(self, rng, n):
        els = self.group.elements
        return tuple(els[rng.randrange(len(els))] for _ in range(n + 1))


def subdivision_diagonal(Z, r):
    """iota_r: ZG -> sd_r ZG, repeating the cyclic tuple r times."""

    def fn(n, x):
        return x * r

    return fn


def last_copy_projection(Z, r):
    """e: sd_r ZG -> ZG, the iterated zeroth face onto the final copy."""

    def fn(n, x):
        N = r * (n + 1) - 1
        for _ in range((r - 1) * (n + 1)):
            x = Z.face(N, 0, x)
            N -= 1
        return x

    return fn


def power_map_cyclic(group, r):
    """lambda on the cyclic bar of a group:
    (a_1, ..., a_n, b) |-> (a_1, ..., a_n, b(ab)^{r-1})."""

    def fn(n, x):
        a_all = group.unit
        for v in x[:-1]:
            a_all = group.mul(a_all, v)
        ab = group.mul(a_all, x[-1])
        out = x[-1]
        for _ in range(r - 1):
            out = group.mul(out, ab)
        return x[:-1] + (out,)

    return fn


# ---------------------------------------------------------------------------
# Identity checking for element-level simplicial objects


def check_element_identities(S, n, x):
    """All simplicial identities involving an element x of level n."""
    failures = []
    if n >= 2:
        for j in range(n + 1):
            for i in range(j):
                if S.face(n - 1, i, S.face(n, j, x)) != \
                        S.face(n - 1, j - 1, S.face(n, i, x)):
                    failures.append(("dd", i, j))
    for j in range(n + 1):
        for i in range(n + 2):
            img = S.face(n + 1, i, S.degen(n, j, x))
            if i < j:
                want = S.degen(n - 1, j - 1, S.face(n, i, x))
            elif i in (j, j + 1):
                want = x
            else:
                want = S.degen(n - 1, j, S.face(n, i - 1, x))
            if img != want:
                failures.append(("ds", i, j))
        for i in range(j + 1):
            if S.degen(n + 1, j + 1, S.degen(n, i, x)) != \
                    S.degen(n + 1, i, S.degen(n, j, x)):
                failures.append(("ss", i, j))
    return failures


def check_simplicial_map(src, dst, fn, n, x):
    """fn commutes with all faces and degeneracies at x; returns failures."""
    failures = []
    if n >= 1:
        for i in range(n + 1):
            if fn(n - 1, src.face(n, i, x)) != dst.face(n, i, fn(n, x)):
                failures.append(("d%d" % i,))
    for i in range(n + 1):
        if fn(n + 1, src.degen(n, i, x)) != dst.degen(n, i, fn(n, x)):
            failures.append(("s%d" % i,))
    return failures
