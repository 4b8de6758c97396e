"""Finite simplicial sets with explicit degeneracy bookkeeping.

A simplex is encoded as (core id, phi) where core is a nondegenerate
simplex and phi is a monotone surjection onto its vertex set, stored as a
tuple of values; the encoding is the Eilenberg-Zilber normal form, so
degeneracy is decidable syntactically (phi is the identity iff the simplex
is nondegenerate).  Spaces provide face tables on nondegenerate simplices
only; the operator algebra extends them to all encodings.
"""

from .chains import (
    ChainComplex, Element, GradedBasis, LinearMap, generator, tensor_token, ZZ,
)
from .dg import DGCoalgebra


def identity_phi(n):
    return tuple(range(n + 1))


def encode_nondegenerate(core, dim):
    return (core, identity_phi(dim))


def simplex_dim(enc):
    return len(enc[1]) - 1


def is_degenerate(enc):
    core, phi = enc
    return len(phi) != phi[-1] + 1 if phi else False


class SimplicialSet:
    """Base: subclasses provide nondegenerate simplex ids and their faces."""

    name = "K"

    def nondegenerate(self, n):
        raise NotImplementedError

    def core_dim(self, core):
        raise NotImplementedError

    def face_core(self, core, dim, i):
        """i-th face of a nondegenerate simplex, as an encoding."""
        raise NotImplementedError

    # -- operator algebra on encodings --

    def face(self, n, i, enc):
        core, phi = enc
        psi = phi[:i] + phi[i + 1:]
        dropped = phi[i]
        if dropped in psi:
            return (core, psi)
        # the face reaches into the core
        core2, phiF = self.face_core(core, len(set(phi)) - 1, dropped)
        collapsed = tuple(v if v < dropped else v - 1 for v in psi)
        return (core2, tuple(phiF[v] for v in collapsed))

    def degen(self, n, i, enc):
        core, phi = enc
        return (core, phi[:i + 1] + (phi[i],) + phi[i + 1:])

    def simplices(self, n):
        """All n-simplices (including degenerate) of a finite space."""
        out = []
        for m in range(n + 1):
            for core in self.nondegenerate(m):
                for phi in _surjections(n, m):
                    out.append((core, phi))
        return out

    def sample(self, rng, n):
        choices = []
        for m in range(n + 1):
            choices.extend((core, m) for core in self.nondegenerate(m))
        core, m = choices[rng.randrange(len(choices))]
        enc = encode_nondegenerate(core, m)
        for _ in range(n - m):
            k = simplex_dim(enc)
            enc = self.degen(k, rng.randrange(k + 1), enc)
        return enc

    def is_reduced(self):
        return len(self.nondegenerate(0)) == 1


def _surjections(n, m):
    """Monotone surjections [n] -> [m] as value tuples."""
    if m > n:
        return []
    out = []

    def build(prefix, last):
        if len(prefix) == n + 1:
            if last == m:
                out.append(tuple(prefix))
            return
        remaining = n + 1 - len(prefix)
        for v in (last, last + 1):
            if v > m or m - v > remaining - 1:
                continue
            build(prefix + [v], v)

    build([0], 0)
    return out


class StandardSimplex(SimplicialSet):
    """Delta[n]: nondegenerate simplices are vertex subsets."""

    def __init__(self, n):
        self.n = n
        self.name = "delta:%d" % n

    def nondegenerate(self, k):
        if k > self.n:
            return []
        from itertools import combinations
        return [tuple(c) for c in combinations(range(self.n + 1), k + 1)]

    def core_dim(self, core):
        return len(core) - 1

    def face_core(self, core, dim, i):
        return encode_nondegenerate(core[:i] + core[i + 1:], dim - 1)


class Sphere(SimplicialSet):
    """S^n with one nondegenerate simplex in degrees 0 and n."""

    def __init__(self, n):
        self.n = n
        self.name = "sphere:%d" % n

    def nondegenerate(self, k):
        if k == 0:
            return ["*"]
        if k == self.n:
            return ["top"]
        return []

    def core_dim(self, core):
        return 0 if core == "*" else self.n

    def face_core(self, core, dim, i):
        return ("*", (0,) * dim)


class EmptySpace(SimplicialSet):
    name = "empty"

    def nondegenerate(self, n):
        return []

    def core_dim(self, core):
        raise KeyError(core)

    def face_core(self, core, dim, i):
        raise KeyError(core)


class PointSpace(SimplicialSet):
    name = "point"

    def nondegenerate(self, n):
        return ["pt"] if n == 0 else []

    def core_dim(self, core):
        return 0

    def face_core(self, core, dim, i):
        raise ValueError("a vertex has no faces")


class Nerve(SimplicialSet):
    """Nerve of a finite group: one nondegenerate simplex per tuple of
    non-identity elements."""

    def __init__(self, group):
        self.group = group
        self.name = "nerve-%s" % group.name.lower()

    def nondegenerate(self, n):
        if n == 0:
            return [()]
        from itertools import product
        nontrivial = [g for g in self.group.elements if g != self.group.unit]
        return [tup for tup in product(nontrivial, repeat=n)]

    def core_dim(self, core):
        return len(core)

    def encode(self, entries):
        """Encoding of a possibly-degenerate nerve simplex."""
        core = tuple(g for g in entries if g != self.group.unit)
        phi = [0]
        v = 0
        for g in entries:
            if g != self.group.unit:
                v += 1
            phi.append(v)
        return (core, tuple(phi))

    def face_core(self, core, dim, i):
        if i == 0:
            return encode_nondegenerate(core[1:], dim - 1)
        if i == dim:
            return encode_nondegenerate(core[:-1], dim - 1)
        merged = core[:i - 1] + (self.group.mul(core[i - 1], core[i]),) + core[i + 1:]
        return self.encode(merged)


class UnreducedSuspension(SimplicialSet):
    """Cone(M)/M: two vertices (base b0, apex c0) and a shifted copy of M."""

    def __init__(self, M):
        self.M = M
        self.name = "Eu(%s)" % M.name

    def nondegenerate(self, n):
        if n == 0:
            return ["b0", "c0"]
        return [("up", core) for core in self.M.nondegenerate(n - 1)]

    def core_dim(self, core):
        if core in ("b0", "c0"):
            return 0
        return self.M.core_dim(core[1]) + 1

    def lift(self, k, enc_m):
        """Encoding of (k, y) for a possibly-degenerate y in M."""
        core_m, phi_m = enc_m
        return (("up", core_m), (0,) * k + tuple(v + 1 for v in phi_m))

    def face_core(self, core, dim, i):
        x = core[1]
        if i == 0:
            return ("b0", (0,) * dim)
        if dim == 1 and i == 1:
            return encode_nondegenerate("c0", 0)
        if i == dim and self.M.core_dim(x) == 0:
            return encode_nondegenerate("c0", 0)
        face_m = self.M.face_core(x, dim - 1, i - 1)
        return self.lift(1, face_m)


class ReducedSuspension(SimplicialSet):
    """Unreduced suspension with the sub-suspension of the basepoint collapsed."""

    def __init__(self, L, basepoint):
        self.L = L
        self.basepoint = basepoint
        self.name = "E(%s)" % L.name

    def nondegenerate(self, n):
        if n == 0:
            return ["a0"]
        return [("up", core) for core in self.L.nondegenerate(n - 1)
                if core != self.basepoint]

    def core_dim(self, core):
        if core == "a0":
            return 0
        return self.L.core_dim(core[1]) + 1

    def _collapse(self, enc):
        core, phi = enc
        if core in ("b0", "c0") or (isinstance(core, tuple) and core[0] == "up"
                                    and core[1] == self.basepoint):
            return ("a0", (0,) * len(phi))
        return enc

    def lift(self, k, enc_l):
        core_l, phi_l = enc_l
        if core_l == self.basepoint:
            return ("a0", (0,) * (k + len(phi_l)))
        return (("up", core_l), (0,) * k + tuple(v + 1 for v in phi_l))

    def face_core(self, core, dim, i):
        x = core[1]
        if i == 0:
            return ("a0", (0,) * dim)
        if dim == 1 and i == 1:
            return encode_nondegenerate("a0", 0)
        if i == dim and self.L.core_dim(x) == 0:
            return encode_nondegenerate("a0", 0)
        face_l = self.L.face_core(x, dim - 1, i - 1)
        face_l = (face_l[0], face_l[1])
        lifted = self.lift(1, face_l)
        return self._collapse(lifted)


def double_suspension(M):
    """S M = E E^u M, pointed at the base vertex of the inner suspension."""
    Eu = UnreducedSuspension(M)
    S = ReducedSuspension(Eu, "b0")
    S.name = "SS(%s)" % M.name
    return S


def circle():
    return double_suspension(EmptySpace())


def height(S, enc):
    """||-||: the dimension of the inner simplex of a double suspension
    simplex, -1 on the degeneracies of the cone/base points."""
    core, phi = enc
    if core == "a0":
        return -1
    inner = core[1]
    if inner == "c0":
        return -1
    return S.L.core_dim(inner) - 1


# ---------------------------------------------------------------------------
# Normalized chains


def simplex_token(K, enc):
    core, phi = enc
    return generator(("sx", K.name, core), len(phi) - 1)


def normalized_chains(K, ring=ZZ, max_degree=10):
    """Free module on nondegenerate simplices with the alternating-sum
    differential and the front/back-face diagonal."""

    def basis_fn(n):
        return [generator(("sx", K.name, core), n) for core in K.nondegenerate(n)]

    basis = GradedBasis(ring, basis_fn, max_degree, "C(%s)" % K.name)

    def differential(tok):
        core = tok.data[2]
        n = tok.degree
        out = Element(ring)
        if n == 0:
            return out
        for i in range(n + 1):
            enc = K.face_core(core, n, i)
            if not is_degenerate(enc):
                out._accumulate(generator(("sx", K.name, enc[0]), n - 1),
                                -1 if i % 2 else 1)
        return out

    cx = ChainComplex(basis, LinearMap(ring, -1, differential, "d"),
                      "C(%s)" % K.name)
    vertices = K.nondegenerate(0)
    counit_tok = generator(("sx", K.name, vertices[0]), 0)

    def comult(tok):
        core = tok.data[2]
        n = tok.degree
        out = Element(ring)
        enc = encode_nondegenerate(core, n)
        for i in range(n + 1):
            front = enc
            for j in range(n, i, -1):
                front = K.face(simplex_dim(front), j, front)
            back = enc
            for _ in range(i):
                back = K.face(simplex_dim(back), 0, back)
            if is_degenerate(front) or is_degenerate(back):
                continue
            out._accumulate(tensor_token(simplex_token(K, front),
                                         simplex_token(K, back)), 1)
        return out

    def counit(tok):
        return 1 if tok.degree == 0 else 0

    return DGCoalgebra(cx, counit_tok, comult, counit, "C(%s)" % K.name)


def is_symmetric(K, max_degree):
    """Mod-2 cocommutativity of the normalized chains (finite check)."""
    from .chains import F2
    return normalized_chains(K, F2, max_degree).is_cocommutative(max_degree)


def check_simplicial_set(K, max_degree):
    """Exhaustive simplicial identities on all simplices; returns failures."""
    failures = []
    for n in range(2, max_degree + 1):
        for enc in K.simplices(n):
            for j in range(n + 1):
                for i in range(j):
                    lhs = K.face(n - 1, i, K.face(n, j, enc))
                    rhs = K.face(n - 1, j - 1, K.face(n, i, enc))
                    if lhs != rhs:
                        failures.append(("dd", n, i, j, enc))
    for n in range(0, max_degree):
        for enc in K.simplices(n):
            for j in range(n + 1):
                for i in range(n + 2):
                    img = K.face(n + 1, i, K.degen(n, j, enc))
                    if i < j:
                        want = K.degen(n - 1, j - 1, K.face(n, i, enc))
                    elif i in (j, j + 1):
                        want = enc
                    else:
                        want = K.degen(n - 1, j, K.face(n, i - 1, enc))
                    if img != want:
                        failures.append(("ds", n, i, j, enc))
            for j in range(n + 1):
                for i in range(j + 1):
                    lhs = K.degen(n + 1, j + 1, K.degen(n, i, enc))
                    rhs = K.degen(n + 1, i, K.degen(n, j, enc))
                    if lhs != rhs:
                        failures.append(("ss", n, i, j, enc))
    return failures


BUILTIN_SPACES = {}


def get_space(name):
    """Fixture registry: delta:n, sphere:n, circle, nerve-z2, rpinfty-base."""
    if name in BUILTIN_SPACES:
        return BUILTIN_SPACES[name]
    if name.startswith("delta:"):
        return StandardSimplex(int(name.split(":")[1]))
    if name.startswith("sphere:"):
        return Sphere(int(name.split(":")[1]))
    if name == "circle":
        return circle()
    if name == "nerve-z2":
        from .groups import BUILTIN_GROUPS
        return Nerve(BUILTIN_GROUPS["c2"])
    if name == "rpinfty":
        from .groups import BUILTIN_GROUPS
        K = ReducedSuspension(Nerve(BUILTIN_GROUPS["c2"]), ())
        K.name = "rpinfty"
        return K
    raise KeyError("unknown space fixture %r" % name)
