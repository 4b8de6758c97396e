"""Exact integer linear algebra: Smith normal form and homology.

Matrices are dense lists of lists of Python ints (arbitrary precision);
problem sizes here are desk scale.  Over a prime field, row reduction
replaces SNF.
"""

from .chains import DegreeOverflowError


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class SNFResult:
    """U * M * V = D diagonal with divisibility d_1 | d_2 | ...

    U, V are unimodular; Uinv, Vinv their inverses, tracked alongside.
    factors lists the nonzero diagonal entries.
    """

    def __init__(self, diagonal, U, V, Uinv, Vinv, rows, cols):
        self.diagonal = diagonal
        self.U = U
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv
        self.rows = rows
        self.cols = cols

    @property
    def factors(self):
        return [d for d in self.diagonal if d != 0]

    @property
    def rank(self):
        return len(self.factors)


def smith_normal_form(matrix, rows=None, cols=None):
    """SNF with transforms; smallest-|pivot| pivoting with full gcd reduction."""
    if rows is None:
        rows = len(matrix)
    if cols is None:
        cols = len(matrix[0]) if matrix else 0
    M = [list(r) for r in matrix]
    U, Uinv = _identity(rows), _identity(rows)
    V, Vinv = _identity(cols), _identity(cols)

    def row_op(i, j, c):
        # row_i += c * row_j ; U tracks it, Uinv the inverse op
        for k in range(cols):
            M[i][k] += c * M[j][k]
        for k in range(rows):
            U[i][k] += c * U[j][k]
        for k in range(rows):
            Uinv[k][j] -= c * Uinv[k][i]

    def col_op(j, i, c):
        # col_j += c * col_i
        for k in range(rows):
            M[k][j] += c * M[k][i]
        for k in range(cols):
            V[k][j] += c * V[k][i]
        for k in range(cols):
            Vinv[i][k] -= c * Vinv[j][k]

    def row_swap(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]
        for k in range(rows):
            Uinv[k][i], Uinv[k][j] = Uinv[k][j], Uinv[k][i]

    def col_swap(i, j):
        for k in range(rows):
            M[k][i], M[k][j] = M[k][j], M[k][i]
        for k in range(cols):
            V[k][i], V[k][j] = V[k][j], V[k][i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_negate(i):
        for k in range(cols):
            M[i][k] = -M[i][k]
        for k in range(rows):
            U[i][k] = -U[i][k]
        for k in range(rows):
            Uinv[k][i] = -Uinv[k][i]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(M[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        row_swap(t, pi)
        col_swap(t, pj)
        if M[t][t] < 0:
            row_negate(t)
        # clear row and column t by gcd reduction
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    row_op(i, t, -q)
                    if M[i][t]:
                        row_swap(t, i)
                        if M[t][t] < 0:
                            row_negate(t)
                        dirty = True
            for j in range(t + 1, cols):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    col_op(j, t, -q)
                    if M[t][j]:
                        col_swap(t, j)
                        if M[t][t] < 0:
                            row_negate(t)
                        dirty = True
        t += 1

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if a and b % a != 0:
                # fold b into position i via gcd
                col_op(i, i + 1, 1)
                dirty = True
                while dirty:
                    dirty = False
                    if M[i + 1][i]:
                        q = M[i + 1][i] // M[i][i] if M[i][i] else 0
                        row_op(i + 1, i, -q)
                        if M[i + 1][i]:
                            row_swap(i, i + 1)
                            if M[i][i] < 0:
                                row_negate(i)
                            dirty = True
                    if M[i][i + 1]:
                        q = M[i][i + 1] // M[i][i]
                        col_op(i + 1, i, -q)
                        if M[i][i + 1]:
                            col_swap(i, i + 1)
                            dirty = True
                if M[i + 1][i + 1] < 0:
                    row_negate(i + 1)
                changed = True

    diagonal = [M[i][i] for i in range(min(rows, cols))]
    return SNFResult(diagonal, U, V, Uinv, Vinv, rows, cols)


def mat_mul(A, B):
    n, m = len(A), len(B[0]) if B else 0
    k = len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def modp_rank(matrix, p):
    """Rank of a matrix over F_p by Gaussian elimination."""
    M = [[v % p for v in row] for row in matrix]
    rows = len(M)
    cols = len(M[0]) if M else 0
    rank = 0
    col = 0
    while rank < rows and col < cols:
        piv = next((i for i in range(rank, rows) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], p - 2, p)
        M[rank] = [(v * inv) % p for v in M[rank]]
        for i in range(rows):
            if i != rank and M[i][col]:
                c = M[i][col]
                M[i] = [(a - c * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


class HomologySummary:
    def __init__(self, degree, betti, torsion):
        self.degree = degree
        self.betti = betti
        self.torsion = torsion

    def as_dict(self):
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}

    def __eq__(self, other):
        return (self.degree, self.betti, self.torsion) == (other.degree, other.betti, other.torsion)

    def __repr__(self):
        parts = ["Z"] * self.betti + ["Z/%d" % t for t in self.torsion]
        return "H_%d = %s" % (self.degree, " + ".join(parts) if parts else "0")


def homology(complex_, degrees):
    """Homology of a chain complex over Z or F_p per degree.

    Over Z, torsion coefficients in degree n are the nontrivial invariant
    factors of the boundary matrix out of degree n+1.  Requires finite
    bases in the requested degrees and the flanking ones.
    """
    if complex_.d.shift != -1:
        raise ValueError("homology expects a chain differential (shift -1)")
    ring = complex_.ring
    if ring.p is not None and ring.p < 2:
        raise ValueError("composite or invalid modulus")
    out = []
    for n in degrees:
        dim_n = complex_.basis.dimension(n)
        d_n = complex_.matrix(n)
        try:
            d_n1 = complex_.matrix(n + 1)
        except DegreeOverflowError:
            raise DegreeOverflowError(
                "homology at degree %d needs basis at degree %d" % (n, n + 1)
            )
        if ring.p is None:
            rank_n = smith_normal_form(d_n, cols=dim_n).rank if dim_n else 0
            snf1 = smith_normal_form(d_n1, rows=dim_n)
            betti = dim_n - rank_n - snf1.rank
            torsion = [d for d in snf1.factors if abs(d) > 1]
            out.append(HomologySummary(n, betti, [abs(t) for t in torsion]))
        else:
            p = ring.p
            rank_n = modp_rank(d_n, p) if dim_n else 0
            rank_n1 = modp_rank(d_n1, p)
            out.append(HomologySummary(n, dim_n - rank_n - rank_n1, []))
    return out


class HomologyBasis:
    """Homology of one degree with chain-level representatives.

    Over Z: generators are labelled ('free', i) or ('torsion', i, order);
    representatives are integer coordinate vectors in the degree-n basis.
    coordinates(cycle_vector) expresses a cycle in those generators
    (torsion coordinates reduced mod the order).
    """

    def __init__(self, complex_, n):
        self.complex = complex_
        self.n = n
        ring = complex_.ring
        dim_n = complex_.basis.dimension(n)
        d_n = complex_.matrix(n)
        d_n1 = complex_.matrix(n + 1)
        if ring.p is None:
            self._build_integral(d_n, d_n1, dim_n)
        else:
            self._build_modp(d_n, d_n1, dim_n, ring.p)

    def _build_integral(self, d_n, d_n1, dim_n):
        snf_n = smith_normal_form(d_n, cols=dim_n)
        rank_n = snf_n.rank
        nullity = dim_n - rank_n
        # kernel basis: last `nullity` columns of V
        V, Vinv = snf_n.V, snf_n.Vinv
        kernel_cols = list(range(rank_n, dim_n))
        m = len(d_n1[0]) if d_n1 else 0
        # image of d_{n+1} in kernel coordinates: rows of Vinv * d_n1 at kernel indices
        C = [[0] * m for _ in kernel_cols]
        if m:
            VinvB = mat_mul(Vinv, d_n1) if d_n1 else []
            for r, idx in enumerate(kernel_cols):
                C[r] = VinvB[idx]
        snf_c = smith_normal_form(C, rows=nullity, cols=m)
        self._V = V
        self._Vinv = Vinv
        self._kernel_cols = kernel_cols
        self._Uc = snf_c.U
        self._Ucinv = snf_c.Uinv
        self._orders = snf_c.diagonal + [0] * (nullity - len(snf_c.diagonal))
        self.generators = []
        self.representatives = []
        for i in range(nullity):
            order = abs(self._orders[i]) if i < len(self._orders) else 0
            if order == 1:
                continue
            label = ("free", i) if order == 0 else ("torsion", i, order)
            self.generators.append(label)
            # representative chain: K * (i-th column of Ucinv)
            rep = [0] * dim_n
            for r, idx in enumerate(self._kernel_cols):
                col = self._Ucinv[r][i]
                if col:
                    for row in range(dim_n):
                        rep[row] += V[row][idx] * col
            self.representatives.append(rep)

    def _build_modp(self, d_n, d_n1, dim_n, p):
        M = [[v % p for v in row] for row in d_n] if d_n else []
        kernel = _modp_kernel(M, dim_n, p)
        img = _modp_column_space(d_n1, dim_n, p)
        # echelonized reducers: image vectors first, then surviving cycles.
        # Each entry is (lead, vector, generator index or None); a vector is
        # reduced against all earlier reducers, so its lead is fresh.
        reducers = []
        gen_count = 0
        self.representatives = []
        for vec, is_cycle in [(v, False) for v in img] + [(v, True) for v in kernel]:
            vec = [x % p for x in vec]
            for lead, rv, _ in reducers:
                if vec[lead]:
                    c = vec[lead]
                    vec = [(a - c * b) % p for a, b in zip(vec, rv)]
            lead = next((i for i, x in enumerate(vec) if x), None)
            if lead is None:
                continue
            inv = pow(vec[lead], p - 2, p)
            vec = [(x * inv) % p for x in vec]
            if is_cycle:
                reducers.append((lead, vec, gen_count))
                self.representatives.append(vec)
                gen_count += 1
            else:
                reducers.append((lead, vec, None))
        self._p = p
        self._reducers = reducers
        self.generators = [("free", i) for i in range(gen_count)]

    def coordinates(self, cycle):
        """Coordinates of a cycle (vector in the degree-n basis) in homology."""
        ring = self.complex.ring
        if ring.p is None:
            w = [0] * len(self._kernel_cols)
            full = [sum(self._Vinv[i][j] * cycle[j] for j in range(len(cycle)))
                    for i in range(len(cycle))]
            for r, idx in enumerate(self._kernel_cols):
                w[r] = full[idx]
            coords_all = [sum(self._Uc[i][r] * w[r] for r in range(len(w)))
                          for i in range(len(w))]
            out = []
            gi = 0
            for i in range(len(w)):
                order = abs(self._orders[i]) if i < len(self._orders) else 0
                if order == 1:
                    continue
                c = coords_all[i]
                out.append(c % order if order else c)
                gi += 1
            return out
        # mod p: reduce against the echelon in insertion order
        p = self._p
        vec = [x % p for x in cycle]
        coords = [0] * len(self.representatives)
        for lead, rv, gen in self._reducers:
            if vec[lead]:
                c = vec[lead]
                if gen is not None:
                    coords[gen] = c
                vec = [(a - c * b) % p for a, b in zip(vec, rv)]
        if any(vec):
            raise ValueError("vector is not a cycle modulo the image")
        return coords


def _modp_kernel(M, cols, p):
    rows = len(M)
    A = [list(r) for r in M]
    pivots = []
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if A[i][col] % p), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][col] % p, p - 2, p)
        A[rank] = [(v * inv) % p for v in A[rank]]
        for i in range(rows):
            if i != rank and A[i][col] % p:
                c = A[i][col] % p
                A[i] = [(a - c * b) % p for a, b in zip(A[i], A[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(cols) if c not in pivots]
    kernel = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-A[r][fc]) % p
        kernel.append(v)
    return kernel


def _modp_column_space(M, dim, p):
    if not M:
        return []
    cols = len(M[0])
    vecs = [[M[i][j] % p for i in range(dim)] for j in range(cols)]
    basis = []
    pivots = {}
    for v in vecs:
        vec = list(v)
        for pi, pv in pivots.items():
            if vec[pi]:
                c = vec[pi]
                vec = [(a - c * b) % p for a, b in zip(vec, pv)]
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            continue
        inv = pow(vec[lead], p - 2, p)
        vec = [(x * inv) % p for x in vec]
        pivots[lead] = vec
        basis.append(vec)
    return basis
