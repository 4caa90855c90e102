"""Finite-dimensional basic algebras given by structure constants.

An Algebra carries its multiplication table, a complete set of primitive
orthogonal idempotents, and a radical basis.  Constructors: bound quiver
presentations, opposite, tensor product, lower triangular matrix
algebras, plus named builders for the standard test battery.

Path composition is right-to-left (function order): the product ``b*a``
of arrows a: 1->2 and b: 2->3 is the path "first a, then b", written
``b.a`` in files.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .field import FieldSpec, QQ
from .linalg import Matrix


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """Vertices and labeled arrows.  Loops and parallel arrows allowed."""

    vertices: tuple
    arrows: tuple  # of (name, source, target)

    def __post_init__(self):
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("arrow names must be unique")
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise AlgebraError("vertex labels must be unique")
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise AlgebraError("arrow %s has undeclared endpoint" % name)

    def vertex_index(self, v):
        return self.vertices.index(v)

    def arrow_index(self, name):
        for i, a in enumerate(self.arrows):
            if a[0] == name:
                return i
        raise AlgebraError("unknown arrow %r" % name)


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths, each of length >= 2.

    Each term is (coefficient, path) with the path a tuple of arrow
    names composed right-to-left.
    """

    terms: tuple  # of (coeff, tuple_of_arrow_names)


class Algebra:
    """Basic finite-dimensional algebra with explicit idempotents.

    mult[i][j] is the coefficient vector of basis_i * basis_j.
    """

    def __init__(
        self,
        field: FieldSpec,
        basis_labels,
        mult,
        unit,
        idempotents,
        radical,
        provenance,
        validate=True,
    ):
        self.field = field
        self.dim = len(basis_labels)
        self.basis_labels = list(basis_labels)
        self.mult = [
            [[field.of(x) for x in vec] for vec in row] for row in mult
        ]
        self.unit = [field.of(x) for x in unit]
        self.idempotents = [[field.of(x) for x in e] for e in idempotents]
        self.radical = [[field.of(x) for x in r] for r in radical]
        self.provenance = provenance
        self.quiver_data = None  # set by bound_quiver_algebra
        self._op = None
        self._cache = {}
        if validate:
            self.validate()

    # -- element arithmetic -------------------------------------------

    def zero_vec(self):
        return [self.field.zero()] * self.dim

    def product(self, x, y):
        out = self.zero_vec()
        for i, xi in enumerate(x):
            if not xi:
                continue
            mi = self.mult[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, m in enumerate(mi[j]):
                    if m:
                        out[k] = out[k] + c * m
        return out

    def left_mult_matrix(self, x):
        """Matrix of y -> x*y on the basis."""
        cols = [self.product(x, self._basis_vec(j)) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, nrows=self.dim)

    def right_mult_matrix(self, x):
        """Matrix of y -> y*x on the basis."""
        cols = [self.product(self._basis_vec(j), x) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, nrows=self.dim)

    def _basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.field.one()
        return v

    @property
    def n_idempotents(self):
        return len(self.idempotents)

    # -- validation ----------------------------------------------------

    def validate(self):
        f = self.field
        # associativity on all basis triples
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult[i][j]
                for k in range(self.dim):
                    lhs = self.product(ij, self._basis_vec(k))
                    rhs = self.product(self._basis_vec(i), self.mult[j][k])
                    if lhs != rhs:
                        raise AlgebraError(
                            "associativity fails on basis triple (%d,%d,%d)"
                            % (i, j, k)
                        )
        # unit
        for i in range(self.dim):
            b = self._basis_vec(i)
            if self.product(self.unit, b) != b or self.product(b, self.unit) != b:
                raise AlgebraError("unit axiom fails on basis element %d" % i)
        # idempotents: orthogonal, sum to 1
        s = self.zero_vec()
        for a, e in enumerate(self.idempotents):
            s = [x + y for x, y in zip(s, e)]
            for b, e2 in enumerate(self.idempotents):
                p = self.product(e, e2)
                want = e if a == b else self.zero_vec()
                if p != want:
                    raise AlgebraError("idempotents %d,%d not orthogonal" % (a, b))
        if s != self.unit:
            raise AlgebraError("idempotents do not sum to the unit")
        # radical: spans a nilpotent ideal not meeting the idempotents
        J = Matrix.from_cols(f, self.radical, nrows=self.dim)
        if J.cols != J.rank():
            raise AlgebraError("radical basis is linearly dependent")
        for e in self.idempotents:
            if J.solve(e) is not None:
                raise AlgebraError("an idempotent lies in the radical")
        power = self.radical
        for _ in range(self.dim + 1):
            if not power:
                break
            nxt = []
            for x in power:
                for r in self.radical:
                    nxt.append(self.product(x, r))
            power_m = Matrix.from_cols(f, nxt, nrows=self.dim).image_basis()
            power = [power_m.col(j) for j in range(power_m.cols)]
        if power:
            raise AlgebraError("radical basis does not span a nilpotent ideal")
        # two-sided ideal check
        for r in self.radical:
            for i in range(self.dim):
                b = self._basis_vec(i)
                for prod in (self.product(b, r), self.product(r, b)):
                    if J.solve(prod) is None:
                        raise AlgebraError("radical is not a two-sided ideal")
        if self.dim - len(self.radical) < self.n_idempotents:
            raise AlgebraError("semisimple quotient smaller than idempotent count")
        if self.dim - len(self.radical) > self.n_idempotents:
            warnings.warn(
                "algebra/radical has dimension %d > %d idempotents; "
                "the semisimple quotient is not split over this field"
                % (self.dim - len(self.radical), self.n_idempotents)
            )

    # -- derived data ---------------------------------------------------

    def generators(self):
        """Small generating set: idempotents plus lifts of rad/rad^2,
        completed with extra basis vectors if needed.  Cached."""
        if "generators" in self._cache:
            return self._cache["generators"]
        f = self.field
        gens = list(self.idempotents)
        if self.radical:
            j2 = []
            for x in self.radical:
                for y in self.radical:
                    j2.append(self.product(x, y))
            m = Matrix.from_cols(f, j2, nrows=self.dim)
            acc = m.image_basis()
            for r in self.radical:
                if acc.solve(r) is None:
                    gens.append(r)
                    acc = acc.hstack(Matrix.from_cols(f, [r], nrows=self.dim))
        # verify generation; append missing basis vectors if the algebra is
        # not generated by idempotents and radical (non-split quotient)
        span = Matrix.from_cols(f, gens + [self.unit], nrows=self.dim)
        span = span.image_basis()
        changed = True
        while changed:
            changed = False
            cur = [span.col(j) for j in range(span.cols)]
            prods = [self.product(x, y) for x in cur for y in cur]
            bigger = span.hstack(
                Matrix.from_cols(f, prods, nrows=self.dim)
            ).image_basis()
            if bigger.cols > span.cols:
                span = bigger
                changed = True
        if span.cols < self.dim:
            for i in range(self.dim):
                v = self._basis_vec(i)
                if span.solve(v) is None:
                    gens.append(v)
                    span = span.hstack(
                        Matrix.from_cols(f, [v], nrows=self.dim)
                    ).image_basis()
        self._cache["generators"] = gens
        return gens

    def opposite(self):
        """Opposite algebra; an involution (op of op is this object)."""
        if self._op is not None:
            return self._op
        mult = [
            [self.mult[j][i] for j in range(self.dim)] for i in range(self.dim)
        ]
        op = Algebra(
            self.field,
            self.basis_labels,
            mult,
            self.unit,
            self.idempotents,
            self.radical,
            "opposite",
            validate=False,
        )
        op._op = self
        self._op = op
        return op

    def __repr__(self):
        return "Algebra(dim=%d, %s, %r)" % (self.dim, self.provenance, self.field)


# -- bound quiver presentation ---------------------------------------------


def _enumerate_paths(q: Quiver, max_len: int):
    """Paths of length <= max_len as (source_index, arrows_tuple), arrows
    in right-to-left order.  Returned sorted by (length, source, arrows)."""
    nv = len(q.vertices)
    src = [q.vertex_index(a[1]) for a in q.arrows]
    tgt = [q.vertex_index(a[2]) for a in q.arrows]
    paths = [(v, ()) for v in range(nv)]
    layer = paths[:]
    for _ in range(max_len):
        nxt = []
        for s, arrows in layer:
            end = tgt[arrows[0]] if arrows else s
            for ai in range(len(q.arrows)):
                if src[ai] == end:
                    nxt.append((s, (ai,) + arrows))
        paths.extend(nxt)
        layer = nxt
        if not layer:
            break
    paths.sort(key=lambda p: (len(p[1]), p[0], p[1]))
    return paths, src, tgt


def _path_label(q: Quiver, path):
    s, arrows = path
    if not arrows:
        return "e_%s" % (q.vertices[s],)
    return ".".join(q.arrows[a][0] for a in arrows)


def bound_quiver_algebra(
    q: Quiver, rels, nilpotency_bound: int, field: FieldSpec = QQ
) -> Algebra:
    """Path algebra of q modulo the relations, computed degreewise with
    truncation at the given nilpotency bound.

    Errors if a normal-form path of length exactly nilpotency_bound
    survives the relation ideal: then the ideal is not admissible within
    the bound and the caller must raise the bound or fix the relations.
    """
    if nilpotency_bound < 2:
        raise AlgebraError("nilpotency_bound must be >= 2")
    B = nilpotency_bound
    paths, src, tgt = _enumerate_paths(q, B)
    index = {p: i for i, p in enumerate(paths)}
    n = len(paths)
    f = field

    def path_target(p):
        s, arrows = p
        return tgt[arrows[0]] if arrows else s

    def rel_vector(rel: Relation):
        v = [f.zero()] * n
        sig = None
        for coeff, names in rel.terms:
            coeff = f.of(coeff)
            if not coeff:
                raise AlgebraError("relation term with zero coefficient")
            if len(names) < 2:
                raise AlgebraError(
                    "non-admissible relation: path %r has length < 2" % (names,)
                )
            arrows = tuple(q.arrow_index(nm) for nm in names)
            for k in range(len(arrows) - 1):
                if src[arrows[k]] != tgt[arrows[k + 1]]:
                    raise AlgebraError("relation path %r is not composable" % (names,))
            p = (src[arrows[-1]], arrows)
            this_sig = (p[0], path_target(p))
            if sig is None:
                sig = this_sig
            elif sig != this_sig:
                raise AlgebraError("relation terms are not parallel paths")
            if len(arrows) > B:
                continue  # already zero at this bound
            v[index[p]] = v[index[p]] + coeff
        return v

    # two-sided ideal closure under arrow multiplication, products of
    # length > B dropped
    ideal = [rel_vector(r) for r in rels]
    queue = list(ideal)
    span = Matrix.from_cols(f, ideal, nrows=n).image_basis() if ideal else Matrix(
        f, n, 0
    )
    while queue:
        v = queue.pop()
        for ai in range(len(q.arrows)):
            left = [f.zero()] * n
            right = [f.zero()] * n
            for pi, c in enumerate(v):
                if not c:
                    continue
                s, arrows = paths[pi]
                if len(arrows) + 1 <= B:
                    end = tgt[arrows[0]] if arrows else s
                    if src[ai] == end:
                        np = (s, (ai,) + arrows)
                        left[index[np]] = left[index[np]] + c
                    if tgt[ai] == s:
                        np = (src[ai], arrows + (ai,))
                        right[index[np]] = right[index[np]] + c
            for w in (left, right):
                if any(w) and span.solve(w) is None:
                    span = span.hstack(Matrix.from_cols(f, [w], nrows=n))
                    span = span.image_basis()
                    queue.append(w)

    # normal-form basis = non-pivot paths of the ideal row space
    rowspace = Matrix.from_rows(
        f, [[span.data[i][j] for i in range(n)] for j in range(span.cols)]
    ) if span.cols else Matrix(f, 0, n)
    R, pivots = rowspace.rref()
    pivset = set(pivots)
    basis_paths = [i for i in range(n) if i not in pivset]
    for i in basis_paths:
        if len(paths[i][1]) >= B:
            raise AlgebraError(
                "path %r of length %d survives the relation ideal at the "
                "nilpotency bound %d; raise the bound or fix the relations"
                % (_path_label(q, paths[i]), len(paths[i][1]), B)
            )
    reindex = {pi: k for k, pi in enumerate(basis_paths)}

    def reduce_path_vec(v):
        """Reduce a path-space vector to normal-form coordinates."""
        v = v[:]
        for r, pc in enumerate(pivots):
            c = v[pc]
            if c:
                for j in range(n):
                    if R.data[r][j]:
                        v[j] = v[j] - c * R.data[r][j]
        return [v[pi] for pi in basis_paths]

    dim = len(basis_paths)
    mult = []
    for i in basis_paths:
        si, ai = paths[i]
        row = []
        ti = path_target(paths[i])
        for j in basis_paths:
            sj, aj = paths[j]
            tj = path_target(paths[j])
            # product path_i * path_j = path_i o path_j (first j, then i)
            if si != tj or len(ai) + len(aj) > B:
                row.append([f.zero()] * dim)
                continue
            concat = (sj, ai + aj)
            v = [f.zero()] * n
            v[index[concat]] = f.one()
            row.append(reduce_path_vec(v))
        mult.append(row)

    nv = len(q.vertices)
    unit = [f.zero()] * dim
    idem = []
    for v in range(nv):
        pi = index[(v, ())]
        k = reindex[pi]
        e = [f.zero()] * dim
        e[k] = f.one()
        idem.append(e)
        unit[k] = f.one()
    radical = []
    for k, pi in enumerate(basis_paths):
        if paths[pi][1]:
            r = [f.zero()] * dim
            r[k] = f.one()
            radical.append(r)

    labels = [_path_label(q, paths[pi]) for pi in basis_paths]
    alg = Algebra(f, labels, mult, unit, idem, radical, "quiver-presented")
    alg.quiver_data = {
        "quiver": q,
        "relations": list(rels),
        "nilpotency_bound": B,
        "paths": [paths[pi] for pi in basis_paths],
        "arrow_basis_index": {
            q.arrows[ai][0]: reindex[index[(src[ai], (ai,))]]
            for ai in range(len(q.arrows))
            if index[(src[ai], (ai,))] in reindex
        },
    }
    return alg


# -- tensor and triangular constructions ------------------------------------


def tensor(a: Algebra, b: Algebra) -> Algebra:
    """Tensor product algebra; basis = pairs (a_i, b_j), row-major."""
    if a.field != b.field:
        raise AlgebraError("tensor factors must share a field")
    f = a.field
    da, db = a.dim, b.dim
    dim = da * db

    def pair(i, j):
        return i * db + j

    def kron_vec(u, v):
        out = [f.zero()] * dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if vj:
                    out[pair(i, j)] = ui * vj
        return out

    mult = [[None] * dim for _ in range(dim)]
    for i1 in range(da):
        for j1 in range(db):
            for i2 in range(da):
                for j2 in range(db):
                    mult[pair(i1, j1)][pair(i2, j2)] = kron_vec(
                        a.mult[i1][i2], b.mult[j1][j2]
                    )
    unit = kron_vec(a.unit, b.unit)
    idem = [kron_vec(e, e2) for e in a.idempotents for e2 in b.idempotents]
    radical_vecs = []
    for r in a.radical:
        for j in range(db):
            radical_vecs.append(kron_vec(r, b._basis_vec(j)))
    for i in range(da):
        for r in b.radical:
            radical_vecs.append(kron_vec(a._basis_vec(i), r))
    rad_m = Matrix.from_cols(f, radical_vecs, nrows=dim).image_basis() if (
        radical_vecs
    ) else Matrix(f, dim, 0)
    radical = [rad_m.col(j) for j in range(rad_m.cols)]
    labels = [
        "%s(x)%s" % (la, lb) for la in a.basis_labels for lb in b.basis_labels
    ]
    alg = Algebra(f, labels, mult, unit, idem, radical, "tensor")
    # primitivity of the paired idempotents, via the module machinery
    from .module import projective_modules, is_indecomposable

    for k, p in enumerate(projective_modules(alg)):
        ok, enddim = is_indecomposable(p)
        if not ok:
            raise AlgebraError(
                "tensor idempotent %d is not primitive over this field" % k
            )
    return alg


class Bimodule:
    """B-A-bimodule: left action of B, right action of A, commuting."""

    def __init__(self, left_algebra, right_algebra, dim, left_action, right_action,
                 validate=True):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = left_action  # Matrix per basis element of B
        self.right_action = right_action  # Matrix per basis element of A
        if validate:
            self.validate()

    def left_of(self, vec):
        m = Matrix(self.left_algebra.field, self.dim, self.dim)
        for c, act in zip(vec, self.left_action):
            if c:
                m = m + act.scale(c)
        return m

    def right_of(self, vec):
        m = Matrix(self.right_algebra.field, self.dim, self.dim)
        for c, act in zip(vec, self.right_action):
            if c:
                m = m + act.scale(c)
        return m

    def validate(self):
        B, A = self.left_algebra, self.right_algebra
        if B.field != A.field:
            raise AlgebraError("bimodule algebras must share a field")
        idm = Matrix.identity(B.field, self.dim)
        if self.left_of(B.unit) != idm or self.right_of(A.unit) != idm:
            raise AlgebraError("bimodule unit axiom fails")
        for i in range(B.dim):
            for j in range(B.dim):
                if self.left_action[i] @ self.left_action[j] != self.left_of(
                    B.mult[i][j]
                ):
                    raise AlgebraError("left action violates structure constants")
        for i in range(A.dim):
            for j in range(A.dim):
                # right action is an anti-homomorphism on matrices
                if self.right_action[j] @ self.right_action[i] != self.right_of(
                    A.mult[i][j]
                ):
                    raise AlgebraError("right action violates structure constants")
        for i in range(B.dim):
            for j in range(A.dim):
                if (
                    self.left_action[i] @ self.right_action[j]
                    != self.right_action[j] @ self.left_action[i]
                ):
                    raise AlgebraError("left and right actions do not commute")


def regular_bimodule(a: Algebra) -> Bimodule:
    left = [a.left_mult_matrix(a._basis_vec(i)) for i in range(a.dim)]
    right = [a.right_mult_matrix(a._basis_vec(i)) for i in range(a.dim)]
    return Bimodule(a, a, a.dim, left, right, validate=False)


def triangular(a: Algebra, b: Algebra, m: Bimodule) -> Algebra:
    """Lower triangular matrix algebra [[A, 0], [M, B]] with product
    (r, m, s)(r', m', s') = (rr', m r' + s m', s s')."""
    if a.field != b.field:
        raise AlgebraError("triangular parts must share a field")
    if m.right_algebra is not a or m.left_algebra is not b:
        raise AlgebraError("bimodule must be a B-A-bimodule for the given A, B")
    f = a.field
    da, dm, db = a.dim, m.dim, b.dim
    dim = da + dm + db
    zero = [f.zero()] * dim

    def emb_a(v):
        return list(v) + [f.zero()] * (dm + db)

    def emb_m(v):
        return [f.zero()] * da + list(v) + [f.zero()] * db

    def emb_b(v):
        return [f.zero()] * (da + dm) + list(v)

    mult = [[zero[:] for _ in range(dim)] for _ in range(dim)]
    for i in range(da):
        for j in range(da):
            mult[i][j] = emb_a(a.mult[i][j])
    for i in range(db):
        for j in range(db):
            mult[da + dm + i][da + dm + j] = emb_b(b.mult[i][j])
    for i in range(dm):  # m_i * a_j = right action
        for j in range(da):
            mult[da + i][j] = emb_m(m.right_action[j].col(i))
    for i in range(db):  # b_i * m_j = left action
        for j in range(dm):
            mult[da + dm + i][da + j] = emb_m(m.left_action[i].col(j))
    unit = emb_a(a.unit)
    for i in range(db):
        unit[da + dm + i] = b.unit[i]
    idem = [emb_a(e) for e in a.idempotents] + [emb_b(e) for e in b.idempotents]
    radical = (
        [emb_a(r) for r in a.radical]
        + [emb_m(v) for v in Matrix.identity(f, dm).data]
        + [emb_b(r) for r in b.radical]
    )
    labels = (
        ["A:%s" % l for l in a.basis_labels]
        + ["M:%d" % i for i in range(dm)]
        + ["B:%s" % l for l in b.basis_labels]
    )
    alg = Algebra(f, labels, mult, unit, idem, radical, "triangular")
    alg.triangular_data = {"a": a, "b": b, "m": m}
    return alg


def t2(a: Algebra) -> Algebra:
    """T_2(a): lower triangular 2x2 matrices over a."""
    return triangular(a, a, regular_bimodule(a))


# -- battery builders --------------------------------------------------------


def linear_a_n(n: int, field: FieldSpec = QQ) -> Algebra:
    """Path algebra of the linear quiver 1 -> 2 -> ... -> n."""
    if n < 1:
        raise AlgebraError("n must be >= 1")
    q = Quiver(
        tuple(range(1, n + 1)),
        tuple(("a%d" % i, i, i + 1) for i in range(1, n)),
    )
    return bound_quiver_algebra(q, [], n + 1, field)


def loop_algebra(n: int, field: FieldSpec = QQ) -> Algebra:
    """K[x]/(x^n) as the one-loop quiver algebra with the relation x^n."""
    if n < 2:
        raise AlgebraError("n must be >= 2")
    q = Quiver((1,), (("x", 1, 1),))
    rel = Relation(((1, ("x",) * n),))
    return bound_quiver_algebra(q, [rel], n, field)


def cyclic_nakayama(n: int, m: int, field: FieldSpec = QQ) -> Algebra:
    """Cyclic Nakayama algebra on n vertices with J^m = 0."""
    if n < 1 or m < 2:
        raise AlgebraError("need n >= 1 and m >= 2")
    if n == 1:
        return loop_algebra(m, field)
    q = Quiver(
        tuple(range(1, n + 1)),
        tuple(("a%d" % i, i, i % n + 1) for i in range(1, n + 1)),
    )
    rels = []
    for start in range(1, n + 1):
        names = []
        v = start
        for _ in range(m):
            names.append("a%d" % v)
            v = v % n + 1
        rels.append(Relation(((1, tuple(reversed(names))),)))
    return bound_quiver_algebra(q, rels, m, field)


def example_loop_flag_algebra(field: FieldSpec = QQ) -> Algebra:
    """Two vertices, a loop alpha at 1 with alpha^2 = 0, and beta: 1 -> 2.
    Dimension 5; 1-Gorenstein of infinite global dimension."""
    q = Quiver((1, 2), (("alpha", 1, 1), ("beta", 1, 2)))
    rel = Relation(((1, ("alpha", "alpha")),))
    return bound_quiver_algebra(q, [rel], 3, field)


def trivial_algebra(field: FieldSpec = QQ) -> Algebra:
    """The ground field as an algebra."""
    return linear_a_n(1, field)


def battery_builders():
    """Named constructors for the standard test battery."""
    return {
        "linear_a_n": linear_a_n,
        "loop_algebra": loop_algebra,
        "cyclic_nakayama": cyclic_nakayama,
        "loop_flag": example_loop_flag_algebra,
        "trivial": trivial_algebra,
    }
