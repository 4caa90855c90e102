"""Finite-dimensional left modules: Hom spaces, decomposition,
isomorphism testing, simples/projectives/injectives, duality, and the
triple form of modules over triangular matrix algebras.

A Module stores one action matrix per algebra basis element, in a basis
adapted to the idempotent grading (coordinates grouped block by block,
with each idempotent acting as the coordinate projector of its block).
Hom computations then only constrain the diagonal blocks against the
radical generators, which keeps the linear systems small.

Modules and maps are immutable; expensive invariants are cached on the
object.
"""

from __future__ import annotations

import random
import warnings

from .algebra import Algebra
from .linalg import Matrix

DEFAULT_SEED = 20240915


class ModuleError(ValueError):
    pass


class Module:
    def __init__(self, algebra: Algebra, actions, validate=True):
        """actions: one (d x d) Matrix per algebra basis element, in any
        basis; the constructor re-bases to idempotent-adapted coordinates."""
        self.algebra = algebra
        self.dim = actions[0].rows if actions else 0
        if len(actions) != algebra.dim:
            raise ModuleError("need one action matrix per algebra basis element")
        f = algebra.field
        d = self.dim
        if d == 0:
            self.actions = [Matrix(f, 0, 0) for _ in range(algebra.dim)]
            self.blocks = [(0, 0)] * algebra.n_idempotents
            self._from_raw = None
            self._cache = {}
            return
        # unit must act as identity
        unit_act = _combine(f, d, actions, algebra.unit)
        if unit_act != Matrix.identity(f, d):
            raise ModuleError("unit does not act as the identity")
        # adapted basis: group coordinates by idempotent blocks
        cols = []
        blocks = []
        off = 0
        for e in algebra.idempotents:
            pe = _combine(f, d, actions, e)
            img = pe.image_basis()
            blocks.append((off, img.cols))
            off += img.cols
            for j in range(img.cols):
                cols.append(img.col(j))
        if off != d:
            raise ModuleError("idempotent images do not decompose the module")
        U = Matrix.from_cols(f, cols, nrows=d)
        if U == Matrix.identity(f, d):
            self.actions = actions
            self._from_raw = None
        else:
            Uinv = U.inverse()
            if Uinv is None:
                raise ModuleError("idempotent images do not decompose the module")
            self.actions = [Uinv @ a @ U for a in actions]
            self._from_raw = Uinv
        self.blocks = blocks
        self._cache = {}
        if validate:
            self.validate()

    # -- basics ----------------------------------------------------------

    @property
    def field(self):
        return self.algebra.field

    def dim_vector(self):
        return tuple(b[1] for b in self.blocks)

    def to_raw(self):
        if self._from_raw is None:
            return Matrix.identity(self.field, self.dim)
        if "to_raw" not in self._cache:
            self._cache["to_raw"] = self._from_raw.inverse()
        return self._cache["to_raw"]

    def from_raw_matrix(self):
        if self._from_raw is None:
            return Matrix.identity(self.field, self.dim)
        return self._from_raw

    def action_of(self, vec) -> Matrix:
        """Action matrix of an arbitrary algebra element."""
        return _combine(self.field, self.dim, self.actions, vec)

    def generator_actions(self):
        if "gen_actions" not in self._cache:
            self._cache["gen_actions"] = [
                self.action_of(g) for g in self.algebra.generators()
            ]
        return self._cache["gen_actions"]

    def validate(self):
        a = self.algebra
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.actions[i] @ self.actions[j]
                rhs = self.action_of(a.mult[i][j])
                if lhs != rhs:
                    raise ModuleError(
                        "action violates structure constants on basis pair "
                        "(%s, %s)" % (a.basis_labels[i], a.basis_labels[j])
                    )

    def block_of_coord(self, k):
        for i, (off, d) in enumerate(self.blocks):
            if off <= k < off + d:
                return i
        raise IndexError(k)

    def __repr__(self):
        return "Module(dim=%d, dv=%s over %r)" % (
            self.dim,
            self.dim_vector(),
            self.algebra,
        )


def _combine(f, d, actions, vec):
    out = Matrix(f, d, d)
    for c, m in zip(vec, actions):
        if c:
            out = out + m.scale(c)
    return out


class ModuleMap:
    """Intertwiner between modules over the same algebra."""

    def __init__(self, source: Module, target: Module, matrix: Matrix,
                 validate=False):
        if source.algebra is not target.algebra:
            raise ModuleError("source and target live over different algebras")
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ModuleError("map matrix has the wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            self.validate()

    def validate(self):
        for ga, gb in zip(
            self.source.generator_actions(), self.target.generator_actions()
        ):
            if self.matrix @ ga != gb @ self.matrix:
                raise ModuleError("map does not intertwine the actions")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self o other."""
        if other.target is not self.source:
            raise ModuleError("composition target/source mismatch")
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def is_isomorphism(self):
        return self.matrix.is_invertible()

    def kernel(self):
        return submodule(self.source, self.matrix.kernel_basis())

    def image(self):
        return submodule(self.target, self.matrix.image_basis())

    def cokernel(self):
        return quotient_module(self.target, self.matrix.image_basis())

    def is_zero(self):
        return self.matrix.is_zero()

    def __repr__(self):
        return "ModuleMap(%d -> %d)" % (self.source.dim, self.target.dim)


# -- constructions ------------------------------------------------------


def zero_module(algebra: Algebra) -> Module:
    return Module(algebra, [Matrix(algebra.field, 0, 0)] * algebra.dim,
                  validate=False)


def regular_module(algebra: Algebra) -> Module:
    """The algebra as a left module over itself."""
    if "regular_module" not in algebra._cache:
        acts = [
            algebra.left_mult_matrix(algebra._basis_vec(i))
            for i in range(algebra.dim)
        ]
        algebra._cache["regular_module"] = Module(algebra, acts, validate=False)
    return algebra._cache["regular_module"]


def direct_sum(algebra: Algebra, mods):
    """Direct sum with inclusion and projection maps."""
    f = algebra.field
    total = sum(m.dim for m in mods)
    acts = []
    for i in range(algebra.dim):
        big = Matrix(f, total, total)
        off = 0
        for m in mods:
            a = m.actions[i]
            for r in range(m.dim):
                row = big.data[off + r]
                arow = a.data[r]
                for c in range(m.dim):
                    row[off + c] = arow[c]
            off += m.dim
        acts.append(big)
    M = Module(algebra, acts, validate=False)
    fr = M.from_raw_matrix()
    to = M.to_raw()
    incls, projs = [], []
    off = 0
    for m in mods:
        inc = Matrix(f, total, m.dim)
        for r in range(m.dim):
            inc.data[off + r][r] = f.one()
        incls.append(ModuleMap(m, M, fr @ inc))
        prj = Matrix(f, m.dim, total)
        for r in range(m.dim):
            prj.data[r][off + r] = f.one()
        projs.append(ModuleMap(M, m, prj @ to))
        off += m.dim
    return M, incls, projs


def submodule(m: Module, basis: Matrix):
    """(S, inclusion) for an invariant subspace given by basis columns."""
    basis = basis.image_basis()
    if basis.cols == 0:
        S = zero_module(m.algebra)
        return S, ModuleMap(S, m, Matrix(m.field, m.dim, 0))
    acts = []
    for a in m.actions:
        x = basis.solve_matrix(a @ basis)
        if x is None:
            raise ModuleError("subspace is not invariant under the action")
        acts.append(x)
    S = Module(m.algebra, acts, validate=False)
    return S, ModuleMap(S, m, basis @ S.to_raw())


def quotient_module(m: Module, basis: Matrix):
    """(Q, projection) for the quotient by an invariant subspace."""
    f = m.field
    basis = basis.image_basis()
    k = basis.cols
    if k == m.dim:
        Q = zero_module(m.algebra)
        return Q, ModuleMap(m, Q, Matrix(f, 0, m.dim))
    full = basis.hstack(Matrix.identity(f, m.dim))
    _, pivots = full.rref()
    comp_cols = [p - k for p in pivots if p >= k]
    C = Matrix.from_cols(f, [[f.one() if i == c else f.zero()
                              for i in range(m.dim)] for c in comp_cols],
                         nrows=m.dim)
    BC = basis.hstack(C)
    BCinv = BC.inverse()
    proj_raw = Matrix.from_rows(f, BCinv.data[k:]) if m.dim - k else Matrix(
        f, 0, m.dim
    )
    acts = [proj_raw @ a @ C for a in m.actions]
    Q = Module(m.algebra, acts, validate=False)
    return Q, ModuleMap(m, Q, Q.from_raw_matrix() @ proj_raw)


def base_change(m: Module, u: Matrix) -> Module:
    """Same module in a new basis (u invertible, new = u^-1 . old)."""
    uinv = u.inverse()
    if uinv is None:
        raise ModuleError("base change matrix is singular")
    return Module(m.algebra, [uinv @ a @ u for a in m.actions], validate=False)


# -- quiver-presented conversion -----------------------------------------


def module_from_dimvector(algebra: Algebra, dims, arrow_mats, validate=True):
    """Module over a quiver-presented algebra from per-vertex dimensions
    and per-arrow matrices (matrix for a: i->j has shape d_j x d_i)."""
    qd = algebra.quiver_data
    if qd is None:
        raise ModuleError("algebra has no quiver presentation")
    q = qd["quiver"]
    f = algebra.field
    nv = len(q.vertices)
    if len(dims) != nv:
        raise ModuleError("dimension vector length mismatch")
    total = sum(dims)
    offs = []
    off = 0
    for d in dims:
        offs.append(off)
        off += d
    src = {a[0]: q.vertex_index(a[1]) for a in q.arrows}
    tgt = {a[0]: q.vertex_index(a[2]) for a in q.arrows}
    for name, mat in arrow_mats.items():
        if mat.rows != dims[tgt[name]] or mat.cols != dims[src[name]]:
            raise ModuleError(
                "arrow %s matrix must be %d x %d"
                % (name, dims[tgt[name]], dims[src[name]])
            )
    acts = []
    for s, arrows in qd["paths"]:
        big = Matrix(f, total, total)
        if not arrows:
            for r in range(dims[s]):
                big.data[offs[s] + r][offs[s] + r] = f.one()
        else:
            prod = None
            for ai in reversed(arrows):  # apply rightmost arrow first
                name = q.arrows[ai][0]
                mat = arrow_mats.get(name)
                if mat is None:
                    mat = Matrix(f, dims[tgt[name]], dims[src[name]])
                prod = mat if prod is None else mat @ prod
            sv = s
            tv = tgt[q.arrows[arrows[0]][0]]
            for r in range(prod.rows):
                for c in range(prod.cols):
                    big.data[offs[tv] + r][offs[sv] + c] = prod.data[r][c]
        acts.append(big)
    return Module(algebra, acts, validate=validate)


def module_to_dimvector(m: Module):
    """(dims, arrow matrices) for a module over a quiver-presented algebra."""
    qd = m.algebra.quiver_data
    if qd is None:
        raise ModuleError("algebra has no quiver presentation")
    q = qd["quiver"]
    dims = list(m.dim_vector())
    out = {}
    for name, bi in qd["arrow_basis_index"].items():
        a = m.actions[bi]
        si = q.vertex_index(q.arrows[q.arrow_index(name)][1])
        ti = q.vertex_index(q.arrows[q.arrow_index(name)][2])
        so, sd = m.blocks[si]
        to, td = m.blocks[ti]
        sub = Matrix(m.field, td, sd)
        for r in range(td):
            for c in range(sd):
                sub.data[r][c] = a.data[to + r][so + c]
        out[name] = sub
    return dims, out


# -- Hom spaces ----------------------------------------------------------


def hom(m: Module, n: Module):
    """Basis of Hom(m, n) as a list of ModuleMaps (one kernel solve).
    Cached per (source, target) object pair."""
    if m.algebra is not n.algebra:
        raise ModuleError("hom requires modules over the same algebra")
    if m.dim == 0 or n.dim == 0:
        return []
    key = ("hom", id(n))
    hit = m._cache.get(key)
    if hit is not None and hit[0] is n:
        return hit[1]
    f = m.field
    # unknowns: diagonal blocks f_i : e_i m -> e_i n
    offsets = []
    u = 0
    for (mo, md), (no, nd) in zip(m.blocks, n.blocks):
        offsets.append(u)
        u += md * nd
    if u == 0:
        return []

    def uidx(i, r, c):
        return offsets[i] + r * m.blocks[i][1] + c

    rows = []
    zero = f.zero()
    mb = m.blocks
    nb = n.blocks
    nblocks = len(mb)
    for gm, gn in zip(m.generator_actions(), n.generator_actions()):
        for r in range(n.dim):
            ib = n.block_of_coord(r)
            for c in range(m.dim):
                jb = m.block_of_coord(c)
                row = [zero] * u
                nonzero = False
                # sum_k F[r,k] gm[k,c]  with k in block ib of m
                ko, kd = mb[ib]
                for k in range(ko, ko + kd):
                    v = gm.data[k][c]
                    if v:
                        row[uidx(ib, r - nb[ib][0], k - ko)] = (
                            row[uidx(ib, r - nb[ib][0], k - ko)] + v
                        )
                        nonzero = True
                # - sum_k gn[r,k] F[k,c]  with k in block jb of n
                ko2, kd2 = nb[jb]
                for k in range(ko2, ko2 + kd2):
                    v = gn.data[r][k]
                    if v:
                        idx = uidx(jb, k - ko2, c - mb[jb][0])
                        row[idx] = row[idx] - v
                        nonzero = True
                if nonzero:
                    rows.append(row)
    sys = Matrix.from_rows(f, rows) if rows else Matrix(f, 0, u)
    ker = sys.kernel_basis()
    out = []
    for j in range(ker.cols):
        x = ker.col(j)
        mat = Matrix(f, n.dim, m.dim)
        for i in range(nblocks):
            mo, md = mb[i]
            no, nd = nb[i]
            for r in range(nd):
                for c in range(md):
                    mat.data[no + r][mo + c] = x[uidx(i, r, c)]
        out.append(ModuleMap(m, n, mat))
    m._cache[key] = (n, out)
    return out


def hom_dim(m: Module, n: Module) -> int:
    return len(hom(m, n))


def end_basis(m: Module):
    if "end_basis" not in m._cache:
        m._cache["end_basis"] = hom(m, m)
    return m._cache["end_basis"]


def _end_stack(m: Module):
    """Flattened endomorphism basis as columns, with cached RREF."""
    if "end_stack" not in m._cache:
        ends = end_basis(m)
        cols = [[x for row in e.matrix.data for x in row] for e in ends]
        m._cache["end_stack"] = Matrix.from_cols(
            m.field, cols, nrows=m.dim * m.dim
        )
    return m._cache["end_stack"]


def end_coords(m: Module, mat: Matrix):
    """Coordinates of an endomorphism matrix in the End(m) basis."""
    flat = [x for row in mat.data for x in row]
    return _end_stack(m).solve(flat)


def rad_end(m: Module):
    """(radical coefficient vectors over the End basis, dim End/rad).

    Computed through the trace form of the module action; exact over the
    rationals, reliable over GF(p) for p > dim."""
    if "rad_end" in m._cache:
        return m._cache["rad_end"]
    ends = end_basis(m)
    k = len(ends)
    f = m.field
    if f.kind == "prime" and f.p <= m.dim:
        warnings.warn(
            "radical via trace form over GF(%d) with module dimension %d "
            "may be unreliable" % (f.p, m.dim)
        )
    gram = Matrix(f, k, k)
    for i in range(k):
        for j in range(i, k):
            p = ends[i].matrix @ ends[j].matrix
            t = f.zero()
            for r in range(p.rows):
                t = t + p.data[r][r]
            gram.data[i][j] = t
            gram.data[j][i] = t
    ker = gram.kernel_basis()
    rad_coeffs = [ker.col(j) for j in range(ker.cols)]
    m._cache["rad_end"] = (rad_coeffs, k - len(rad_coeffs))
    return m._cache["rad_end"]


def end_rad_membership(m: Module, mat: Matrix):
    """Is the endomorphism mat in rad End(m)?"""
    coords = end_coords(m, mat)
    if coords is None:
        raise ModuleError("matrix is not an endomorphism of the module")
    rad_coeffs, _ = rad_end(m)
    if not rad_coeffs:
        return all(not c for c in coords)
    span = Matrix.from_cols(m.field, rad_coeffs, nrows=len(coords))
    return span.solve(coords) is not None


# -- decomposition --------------------------------------------------------


def _fitting_split(m: Module, s: Matrix):
    """Try to split m along the Fitting decomposition of the
    endomorphism s.  Returns (kernel basis, image basis) or None."""
    p = s
    n = 1
    while n < m.dim:
        p = p @ p
        n *= 2
    ker = p.kernel_basis()
    if 0 < ker.cols < m.dim:
        return ker, p.image_basis()
    return None


def _min_poly(mat: Matrix):
    """Minimal polynomial coefficients (monic, low degree first)."""
    f = mat.field
    d = mat.rows
    powers = [Matrix.identity(f, d)]
    while True:
        cols = [[x for row in p.data for x in row] for p in powers]
        stack = Matrix.from_cols(f, cols, nrows=d * d)
        nxt = powers[-1] @ mat
        flat = [x for row in nxt.data for x in row]
        sol = stack.solve(flat)
        if sol is not None:
            return [-c for c in sol] + [f.one()]
        powers.append(nxt)


def _min_poly_split_candidate(m: Module, s: Matrix):
    """If the minimal polynomial of s has two distinct irreducible
    factors, return a Fitting split along one primary component."""
    import sympy

    f = m.field
    coeffs = _min_poly(s)
    t = sympy.Symbol("t")
    if f.kind == "rationals":
        poly = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
            t,
        )
        factors = sympy.factor_list(poly)[1]
    else:
        poly = sympy.Poly([c.v for c in reversed(coeffs)], t, modulus=f.p)
        factors = sympy.factor_list(poly, modulus=f.p)[1]
    if len(factors) < 2:
        return None
    fac, mult = factors[0]
    fac_coeffs = [f.of(str(c)) for c in reversed(fac.all_coeffs())]
    g = Matrix(f, m.dim, m.dim)
    p = Matrix.identity(f, m.dim)
    for c in fac_coeffs:
        if c:
            g = g + p.scale(c)
        p = p @ s
    for _ in range(mult - 1):
        g2 = Matrix(f, m.dim, m.dim)
        p = Matrix.identity(f, m.dim)
        for c in fac_coeffs:
            if c:
                g2 = g2 + p.scale(c)
            p = p @ s
        g = g @ g2
    return _fitting_split(m, g)


def _split_once(m: Module, seed=DEFAULT_SEED):
    """One nontrivial direct-sum split of m, or None if certified
    indecomposable (with a warning when End/rad has dimension > 1)."""
    ends = end_basis(m)
    if len(ends) <= 1:
        return None
    idm = Matrix.identity(m.field, m.dim)
    candidates = [e.matrix for e in ends]
    candidates += [
        ends[i].matrix + ends[j].matrix
        for i in range(len(ends))
        for j in range(i + 1, len(ends))
    ]
    rng = random.Random(seed)
    for _ in range(24):
        mat = Matrix(m.field, m.dim, m.dim)
        for e in ends:
            mat = mat + e.matrix.scale(rng.randint(-3, 3))
        candidates.append(mat)
    for s in candidates:
        if s.is_zero() or (s - idm.scale(s.data[0][0])).is_zero():
            continue
        split = _fitting_split(m, s)
        if split:
            return split
    rad_coeffs, sdim = rad_end(m)
    if sdim == 1:
        return None
    # lift a basis of End/rad and look for reducible minimal polynomials
    rad_span = (
        Matrix.from_cols(m.field, rad_coeffs, nrows=len(ends))
        if rad_coeffs
        else Matrix(m.field, len(ends), 0)
    )
    lifts = []
    acc = rad_span
    for i, e in enumerate(ends):
        v = [m.field.one() if k == i else m.field.zero() for k in range(len(ends))]
        if acc.solve(v) is None:
            lifts.append(e.matrix)
            acc = acc.hstack(Matrix.from_cols(m.field, [v], nrows=len(ends)))
    pool = list(lifts)
    for i in range(len(lifts)):
        for j in range(i + 1, len(lifts)):
            for c in (1, 2, 3):
                pool.append(lifts[i] + lifts[j].scale(c))
    for s in pool:
        split = _min_poly_split_candidate(m, s)
        if split:
            return split
    warnings.warn(
        "End/rad has dimension %d > 1 with no splitting found over %r; "
        "treating the module as indecomposable (it may split over a "
        "field extension)" % (sdim, m.field)
    )
    return None


def split_indecomposables(m: Module, seed=DEFAULT_SEED):
    """List of indecomposable summand modules (with repetitions)."""
    if m.dim == 0:
        return []
    split = _split_once(m, seed)
    if split is None:
        return [m]
    out = []
    for basis in split:
        s, _ = submodule(m, basis)
        out.extend(split_indecomposables(s, seed))
    return out


def decompose(m: Module, seed=DEFAULT_SEED):
    """Krull-Schmidt decomposition: list of (indecomposable, multiplicity)."""
    key = ("decompose", seed)
    if key in m._cache:
        return m._cache[key]
    pieces = split_indecomposables(m, seed)
    groups = []
    for p in pieces:
        for g in groups:
            if _iso_quick_or_indec(g[0], p):
                g[1] += 1
                break
        else:
            groups.append([p, 1])
    result = [(g[0], g[1]) for g in groups]
    m._cache[key] = result
    return result


def summand_count(m: Module) -> int:
    """Number of pairwise non-isomorphic indecomposable summands."""
    return len(decompose(m))


def is_indecomposable(m: Module):
    """(bool, dim End/rad)."""
    if m.dim == 0:
        return False, 0
    parts = split_indecomposables(m)
    _, sdim = rad_end(m)
    return len(parts) == 1, sdim


def _iso_indecomposable(m: Module, n: Module) -> bool:
    """Exact isomorphism test for indecomposables: some composite
    n -> m -> n avoids rad End.  Certified in both directions."""
    if m.dim != n.dim or m.dim_vector() != n.dim_vector():
        return False
    if m is n:
        return True
    hmn = hom(m, n)
    if not hmn:
        return False
    hnm = hom(n, m)
    for h in hmn:
        if h.matrix.is_invertible():
            return True
    for h in hmn:
        for g in hnm:
            if not end_rad_membership(m, g.matrix @ h.matrix):
                return True
    return False


def _iso_quick_or_indec(m: Module, n: Module) -> bool:
    # callers guarantee both indecomposable
    return _iso_indecomposable(m, n)


def is_isomorphic(m: Module, n: Module, seed=DEFAULT_SEED) -> bool:
    """Exact isomorphism test."""
    if m.algebra is not n.algebra:
        raise ModuleError("modules live over different algebras")
    if m is n:
        return True
    if m.dim != n.dim or m.dim_vector() != n.dim_vector():
        return False
    if m.dim == 0:
        return True
    # fast path: find an invertible hom directly
    h = find_isomorphism(m, n, seed=seed, exhaustive=False)
    if h is not None:
        return True
    # exact path: match Krull-Schmidt decompositions
    dm = decompose(m, seed)
    dn = decompose(n, seed)
    if len(dm) != len(dn):
        return False
    used = [False] * len(dn)
    for p, mult in dm:
        for j, (q, mult2) in enumerate(dn):
            if not used[j] and mult == mult2 and _iso_indecomposable(p, q):
                used[j] = True
                break
        else:
            return False
    return True


def find_isomorphism(m: Module, n: Module, seed=DEFAULT_SEED, exhaustive=True):
    """An invertible ModuleMap m -> n, or None.

    With exhaustive=False only a deterministic sequence of basis
    combinations is tried (no certificate of failure)."""
    if m.dim != n.dim or m.dim_vector() != n.dim_vector():
        return None
    if m.dim == 0:
        return ModuleMap(m, n, Matrix(m.field, 0, 0))
    hs = hom(m, n)
    if not hs:
        return None
    for h in hs:
        if h.matrix.is_invertible():
            return h
    rng = random.Random(seed)
    for _ in range(30):
        mat = Matrix(m.field, n.dim, m.dim)
        for h in hs:
            mat = mat + h.matrix.scale(rng.randint(-4, 4))
        if mat.is_invertible():
            return ModuleMap(m, n, mat)
    if not exhaustive:
        return None
    if not is_isomorphic(m, n, seed):
        return None
    # isomorphic but no invertible combination found yet: widen the search
    for _ in range(500):
        mat = Matrix(m.field, n.dim, m.dim)
        for h in hs:
            mat = mat + h.matrix.scale(rng.randint(-9, 9))
        if mat.is_invertible():
            return ModuleMap(m, n, mat)
    raise ModuleError("isomorphic modules but no isomorphism found in budget")


# -- simples, projectives, injectives -------------------------------------


def projective_modules(algebra: Algebra):
    """Indecomposable projectives P_i = (algebra) e_i, in idempotent order."""
    if "projectives" not in algebra._cache:
        reg = regular_module(algebra)
        out = []
        for e in algebra.idempotents:
            basis = algebra.right_mult_matrix(e).image_basis()
            basis = reg.from_raw_matrix() @ basis
            p, _ = submodule(reg, basis)
            out.append(p)
        algebra._cache["projectives"] = out
    return algebra._cache["projectives"]


def radical_submodule(m: Module):
    """(rad m, inclusion): the subspace J.m."""
    f = m.field
    cols = Matrix(f, m.dim, 0)
    for r in m.algebra.radical:
        cols = cols.hstack(m.action_of(r))
    return submodule(m, cols.image_basis())


def top_of(m: Module):
    """(top = m/rad m, projection)."""
    rad, inc = radical_submodule(m)
    return quotient_module(m, inc.matrix)


def simple_modules(algebra: Algebra):
    if "simples" not in algebra._cache:
        algebra._cache["simples"] = [
            top_of(p)[0] for p in projective_modules(algebra)
        ]
    return algebra._cache["simples"]


def dual_D(m: Module) -> Module:
    """K-dual, a module over the opposite algebra (actions transposed)."""
    op = m.algebra.opposite()
    return Module(op, [a.transpose() for a in m.actions], validate=False)


def injective_modules(algebra: Algebra):
    """I_i = D((e_i) algebra), computed through the opposite algebra."""
    if "injectives" not in algebra._cache:
        op = algebra.opposite()
        algebra._cache["injectives"] = [
            dual_D(p) for p in projective_modules(op)
        ]
    return algebra._cache["injectives"]


def projective_cover(m: Module):
    """(P, f: P -> m, summand idempotent indices).

    P is the direct sum of P_i^{mult of S_i in top m}; f is surjective
    with superfluous kernel."""
    a = m.algebra
    f = m.field
    if m.dim == 0:
        P = zero_module(a)
        return P, ModuleMap(P, m, Matrix(f, 0, 0)), []
    rad, inc = radical_submodule(m)
    T, pi = quotient_module(m, inc.matrix)
    projs = projective_modules(a)
    reg = regular_module(a)
    pieces = []
    piece_idx = []
    piece_cols = []
    for i, (toff, tdim) in enumerate(T.blocks):
        moff, mdim = m.blocks[i]
        if tdim == 0:
            continue
        # preimages inside block i of m for each top basis vector
        pim = pi.matrix.select_cols(list(range(moff, moff + mdim)))
        for r in range(tdim):
            target = [
                f.one() if k == toff + r else f.zero() for k in range(T.dim)
            ]
            x = pim.solve(target)
            if x is None:
                raise ModuleError("projective cover lift failed")
            xfull = [f.zero()] * m.dim
            for k in range(mdim):
                xfull[moff + k] = x[k]
            # map P_i -> m : v |-> action(v) x, columns over the P_i basis
            p = projs[i]
            emb = _proj_embedding(a, i)  # columns: algebra elements
            cols = []
            for j in range(p.dim):
                v = emb.col(j)
                cols.append(m.action_of(v).mul_vec(xfull))
            pieces.append(p)
            piece_idx.append(i)
            piece_cols.append(Matrix.from_cols(f, cols, nrows=m.dim))
    if not pieces:
        raise ModuleError("nonzero module with zero top")
    P, incls, _ = direct_sum(a, pieces)
    big = piece_cols[0]
    for c in piece_cols[1:]:
        big = big.hstack(c)
    mat = big @ P.to_raw()
    fmap = ModuleMap(P, m, mat)
    if mat.rank() != m.dim:
        raise ModuleError("projective cover is not surjective")
    return P, fmap, piece_idx


def _proj_embedding(algebra: Algebra, i: int) -> Matrix:
    """Columns: the algebra elements forming the basis of P_i, matching
    the internal coordinates of projective_modules(algebra)[i]."""
    key = ("proj_embedding", i)
    if key not in algebra._cache:
        reg = regular_module(algebra)
        basis = algebra.right_mult_matrix(algebra.idempotents[i]).image_basis()
        p = projective_modules(algebra)[i]
        # submodule() was built from from_raw @ basis; its inclusion into
        # the regular module in raw coordinates recovers algebra elements
        adapted = reg.from_raw_matrix() @ basis
        inc = adapted @ p.to_raw()
        algebra._cache[key] = reg.to_raw() @ inc
    return algebra._cache[key]


def top_radical_projcover(m: Module):
    """(top, radical submodule, projective cover map)."""
    rad, inc = radical_submodule(m)
    T, _ = quotient_module(m, inc.matrix)
    P, fmap, _ = projective_cover(m)
    return T, rad, fmap


def is_projective(m: Module) -> bool:
    if m.dim == 0:
        return True
    _, fmap, _ = projective_cover(m)
    return fmap.matrix.kernel_basis().cols == 0


def is_injective(m: Module) -> bool:
    return is_projective(dual_D(m))


def strip_projectives(m: Module, seed=DEFAULT_SEED) -> Module:
    """Direct sum of the non-projective indecomposable summands."""
    if m.dim == 0:
        return m
    parts = [p for p in split_indecomposables(m, seed) if not is_projective(p)]
    if not parts:
        return zero_module(m.algebra)
    if len(parts) == 1:
        return parts[0]
    return direct_sum(m.algebra, parts)[0]


# -- tensor modules --------------------------------------------------------


def tensor_module(m: Module, n: Module, tensor_algebra: Algebra) -> Module:
    """m (x) n over the tensor product algebra (Kronecker actions)."""
    if m.field != n.field:
        raise ModuleError("tensor factors must share a field")
    acts = []
    for i in range(m.algebra.dim):
        for j in range(n.algebra.dim):
            acts.append(m.actions[i].kron(n.actions[j]))
    if len(acts) != tensor_algebra.dim:
        raise ModuleError("algebra is not the tensor product of the factors")
    return Module(tensor_algebra, acts, validate=False)


# -- triangular matrix algebra triples --------------------------------------


def module_to_triple(m: Module):
    """Module over a triangular algebra -> (X, Y, phi).

    For t2-style algebras (bimodule = the regular bimodule) phi is a
    plain map X -> Y.  Only this case is supported."""
    td = getattr(m.algebra, "triangular_data", None)
    if td is None:
        raise ModuleError("algebra has no triangular provenance")
    a, b, bim = td["a"], td["b"], td["m"]
    if a is not b or bim.dim != a.dim:
        raise ModuleError("triple conversion implemented for t2-style algebras")
    f = m.field
    na = a.n_idempotents
    # X: blocks for the A-part idempotents, Y: for the B-part
    x_cols, y_cols = [], []
    for i, (off, d) in enumerate(m.blocks):
        cols = [
            [f.one() if r == off + k else f.zero() for r in range(m.dim)]
            for k in range(d)
        ]
        (x_cols if i < na else y_cols).extend(cols)
    Bx = Matrix.from_cols(f, x_cols, nrows=m.dim)
    By = Matrix.from_cols(f, y_cols, nrows=m.dim)
    # restrict the A-part and B-part actions
    x_acts, y_acts = [], []
    for i in range(a.dim):
        ax = Bx.solve_matrix(m.actions[i] @ Bx)  # action of (a_i, 0, 0)
        if ax is None:
            raise ModuleError("A-part of the module is not invariant")
        x_acts.append(ax)
        yb = By.solve_matrix(m.actions[a.dim + bim.dim + i] @ By)
        if yb is None:
            raise ModuleError("B-part of the module is not invariant")
        y_acts.append(yb)
    X = Module(a, x_acts, validate=False)
    Y = Module(a, y_acts, validate=False)
    # phi = action of (0, 1_A, 0) restricted X -> Y
    unit_m = [f.zero()] * m.algebra.dim
    for i, c in enumerate(a.unit):
        unit_m[a.dim + i] = c
    phimat = m.action_of(unit_m) @ Bx
    phi_in_y = By.solve_matrix(phimat)
    if phi_in_y is None:
        raise ModuleError("middle action does not land in the B-part")
    phi = ModuleMap(X, Y, Y.from_raw_matrix() @ phi_in_y @ X.to_raw())
    return X, Y, phi


def module_from_triple(t2_algebra: Algebra, x: Module, y: Module,
                       phi: ModuleMap) -> Module:
    """(X, Y, phi: X -> Y) -> module over t2 of the common base algebra."""
    td = getattr(t2_algebra, "triangular_data", None)
    if td is None:
        raise ModuleError("algebra has no triangular provenance")
    a, b, bim = td["a"], td["b"], td["m"]
    if a is not b or bim.dim != a.dim:
        raise ModuleError("triple construction implemented for t2-style algebras")
    if x.algebra is not a or y.algebra is not a:
        raise ModuleError("triple parts must live over the base algebra")
    if phi.source is not x or phi.target is not y:
        raise ModuleError("phi must map X to Y")
    f = t2_algebra.field
    dx, dy = x.dim, y.dim
    total = dx + dy
    acts = []
    for i in range(a.dim):  # (a_i, 0, 0): (x, y) -> (a_i x, 0)
        big = Matrix(f, total, total)
        for r in range(dx):
            for c in range(dx):
                big.data[r][c] = x.actions[i].data[r][c]
        acts.append(big)
    for i in range(a.dim):  # (0, m_i, 0): (x, y) -> (0, phi(m_i x))
        big = Matrix(f, total, total)
        block = phi.matrix @ x.actions[i]
        for r in range(dy):
            for c in range(dx):
                big.data[dx + r][c] = block.data[r][c]
        acts.append(big)
    for i in range(a.dim):  # (0, 0, b_i): (x, y) -> (0, b_i y)
        big = Matrix(f, total, total)
        for r in range(dy):
            for c in range(dy):
                big.data[dx + r][dx + c] = y.actions[i].data[r][c]
        acts.append(big)
    return Module(t2_algebra, acts, validate=False)


def is_right_minimal(f: ModuleMap) -> bool:
    """f is right minimal iff every g with f.g = f is invertible,
    equivalently {g : f.g = 0} lies in rad End(source)."""
    src = f.source
    if src.dim == 0:
        return True
    ends = end_basis(src)
    ff = f.matrix
    field = src.field
    cols = [[x for row in (ff @ e.matrix).data for x in row] for e in ends]
    sysm = Matrix.from_cols(field, cols, nrows=ff.rows * ff.cols)
    ker = sysm.kernel_basis()
    for j in range(ker.cols):
        coeffs = ker.col(j)
        g = Matrix(field, src.dim, src.dim)
        for c, e in zip(coeffs, ends):
            if c:
                g = g + e.matrix.scale(c)
        if not end_rad_membership(src, g):
            return False
    return True


def is_faithful(m: Module) -> bool:
    """No nonzero algebra element annihilates the module."""
    a = m.algebra
    f = m.field
    cols = []
    for i in range(a.dim):
        cols.append([x for row in m.actions[i].data for x in row])
    rep = Matrix.from_cols(f, cols, nrows=m.dim * m.dim)
    return rep.kernel_basis().cols == 0
