"""Gorenstein projectivity and injectivity certificates.

Gorenstein projectivity is decided by the G-dimension-zero criterion:
the module must be reflexive (evaluation into the double dual is an
isomorphism) and both Ext^i(M, algebra) and Ext^i(M*, algebra-op) must
vanish for all positive i.  The Ext conditions are bounded checks
promoted to certainty through syzygy periodicity.
"""

from __future__ import annotations

from .linalg import Matrix
from .module import (
    Module,
    ModuleError,
    direct_sum,
    dual_D,
    hom,
    is_faithful,
    is_projective,
    regular_module,
)
from .homalg import (
    ext_dim,
    ext_vanishes_all_positive,
    inj_dim,
    is_tau_rigid,
    proj_dim,
    star_module,
    tau_inverse,
)
from .tristate import TriState, no, unknown, yes


def default_bound(algebra) -> int:
    return 2 * algebra.dim + 2


def semi_gp(m: Module, bound: int | None = None) -> TriState:
    """Ext^i(m, algebra) = 0 for all i >= 1."""
    if bound is None:
        bound = default_bound(m.algebra)
    return ext_vanishes_all_positive(m, regular_module(m.algebra), bound)


def semi_gi(m: Module, bound: int | None = None) -> TriState:
    """Ext^i(D(algebra), m) = 0 for all i >= 1, computed by duality."""
    if bound is None:
        bound = default_bound(m.algebra)
    op = m.algebra.opposite()
    return ext_vanishes_all_positive(dual_D(m), regular_module(op), bound)


def evaluation_is_isomorphism(m: Module) -> bool:
    """Is the evaluation map m -> m** an isomorphism?

    m* lives over the opposite algebra with raw coordinates indexed by
    the hom(m, regular) basis; m** comes back over the original algebra.
    The evaluation sends x to the map phi -> phi(x)."""
    if m.dim == 0:
        return True
    a = m.algebra
    op = a.opposite()
    f = m.field
    reg = regular_module(a)
    opreg = regular_module(op)
    hs = hom(m, reg)
    mstar = star_module(m)
    if mstar.dim != len(hs):
        raise ModuleError("star module dimension mismatch")
    gs = hom(mstar, opreg)
    if len(gs) != m.dim:
        return False
    gs_stack = Matrix.from_cols(
        f, [[x for row in g.matrix.data for x in row] for g in gs],
        nrows=opreg.dim * mstar.dim,
    )
    reg_to_raw = reg.to_raw()
    opreg_from_raw = opreg.from_raw_matrix()
    mstar_to_raw = mstar.to_raw()
    cols = []
    for c in range(m.dim):
        # map m* -> opreg in raw coordinates: column j is phi_j(x_c)
        w_cols = []
        for h in hs:
            w_cols.append(reg_to_raw.mul_vec(h.matrix.col(c)))
        w = Matrix.from_cols(f, w_cols, nrows=a.dim)
        adapted = opreg_from_raw @ w @ mstar_to_raw
        coords = gs_stack.solve([x for row in adapted.data for x in row])
        if coords is None:
            raise ModuleError("evaluation image is not a module map")
        cols.append(coords)
    ev = Matrix.from_cols(f, cols, nrows=m.dim)
    return ev.is_invertible()


def gorenstein_projective(m: Module, bound: int | None = None) -> TriState:
    """G-dimension-zero certificate (reflexive + double Ext vanishing)."""
    if bound is None:
        bound = default_bound(m.algebra)
    if m.dim == 0 or is_projective(m):
        return yes("projective", bound=bound)
    # fast path over a certified Gorenstein algebra: finitely many Ext
    # vanishings suffice
    g = m.algebra._cache.get("gorenstein")
    if g is not None and g.is_yes:
        n = g.value
        reg = regular_module(m.algebra)
        for i in range(1, max(n, 1) + 1):
            d = ext_dim(m, reg, i)
            if d:
                return no("Ext^%d(m, algebra) has dimension %d" % (i, d),
                          bound=bound, witness=i)
        return yes("Ext^1..%d vanish over a %d-Gorenstein algebra" % (n, n),
                   bound=bound)
    sp = semi_gp(m, bound)
    if sp.is_no:
        return no("not semi-Gorenstein projective: " + sp.reason,
                  bound=bound, witness=sp.witness)
    if not evaluation_is_isomorphism(m):
        return no("evaluation into the double dual is not an isomorphism",
                  bound=bound)
    mstar = star_module(m)
    op = m.algebra.opposite()
    sps = ext_vanishes_all_positive(mstar, regular_module(op), bound)
    if sps.is_no:
        return no("Ext^i(m*, opposite algebra) nonzero: " + sps.reason,
                  bound=bound, witness=sps.witness)
    if sp.is_yes and sps.is_yes:
        return yes("reflexive with both Ext conditions certified",
                   bound=bound)
    return unknown("Ext vanishing unresolved within bound", bound=bound)


def gorenstein_injective(m: Module, bound: int | None = None) -> TriState:
    """m is Gorenstein injective iff D(m) is Gorenstein projective over
    the opposite algebra."""
    if bound is None:
        bound = default_bound(m.algebra)
    return gorenstein_projective(dual_D(m), bound)


def gorenstein_algebra(a, bound: int | None = None) -> TriState:
    """Iwanaga-Gorenstein certificate.  value = max of the two one-sided
    injective dimensions; witness = (left id, right id)."""
    if "gorenstein" in a._cache:
        return a._cache["gorenstein"]
    if bound is None:
        bound = default_bound(a)
    op = a.opposite()
    left = inj_dim(regular_module(a), bound)
    right = inj_dim(regular_module(op), bound)
    if left.is_no or right.is_no:
        result = no("a one-sided injective dimension is infinite",
                    bound=bound, witness=(left.verdict, right.verdict))
    elif left.is_unknown or right.is_unknown:
        result = unknown("injective dimension exceeds bound", bound=bound)
    else:
        result = yes(
            "left id %d, right id %d" % (left.value, right.value),
            bound=bound, witness=(left.value, right.value),
            value=max(left.value, right.value),
        )
    a._cache["gorenstein"] = result
    return result


def self_injective(a) -> bool:
    """Is D(regular right module) projective as a left module?"""
    op = a.opposite()
    dlam = dual_D(regular_module(op))  # D(Lambda) as a left module
    return is_projective(dlam)


def co_regular(a) -> Module:
    """D(Lambda): the injective cogenerator as a left module."""
    return dual_D(regular_module(a.opposite()))


def is_tau_inverse_rigid(m: Module) -> bool:
    """Hom(tau^{-1} m, m) = 0."""
    if m.dim == 0:
        return True
    t = tau_inverse(m)
    if t.dim == 0:
        return True
    return len(hom(t, m)) == 0


# -- tilting and cotilting enumeration --------------------------------------


def tilting_modules(a, max_dim: int | None = None, bound: int | None = None):
    """Basic tilting modules found within the enumeration bound:
    tau-rigid faithful modules with |M| = |Lambda| and pd <= 1 certified.
    Completeness is only within the bound."""
    from .classify import enumerate_indecomposables, tau_rigid_test

    if bound is None:
        bound = default_bound(a)
    if max_dim is None:
        max_dim = a.dim  # tilting summands never exceed dim(algebra) here
    cls = enumerate_indecomposables(a, max_dim)
    n = a.n_idempotents
    cands = []
    for m in cls.representatives:
        pd = proj_dim(m, bound)
        if not (pd.is_yes and pd.value <= 1):
            continue
        if not tau_rigid_test(m):
            continue
        cands.append(m)
    from .homalg import tau

    taus = [tau(m) for m in cands]
    k = len(cands)
    compat = [[True] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if taus[j].dim and len(hom(cands[i], taus[j])):
                compat[i][j] = compat[j][i] = False
    out = []

    def extend(start, chosen):
        if len(chosen) == n:
            mods = [cands[i] for i in chosen]
            t = mods[0] if len(mods) == 1 else direct_sum(a, mods)[0]
            if is_faithful(t):
                pd = proj_dim(t, bound)
                if pd.is_yes and pd.value <= 1:
                    out.append(t)
            return
        for i in range(start, k):
            if all(compat[i][j] and compat[j][i] for j in chosen):
                extend(i + 1, chosen + [i])

    extend(0, [])
    return out


def cotilting_modules(a, max_dim: int | None = None, bound: int | None = None):
    """Cotilting modules = D of tilting modules over the opposite."""
    op = a.opposite()
    return [dual_D(t) for t in tilting_modules(op, max_dim, bound)]


# -- the nine-condition equivalence report -----------------------------------


def _combine(parts):
    """parts: list of (TriState or bool).  All certified-yes -> yes; any
    certified-no -> no; else unknown."""
    any_unknown = False
    for p in parts:
        if isinstance(p, TriState):
            if p.is_no:
                return no(p.reason, bound=p.bound, witness=p.witness)
            if p.is_unknown:
                any_unknown = True
        elif not p:
            return no("boolean condition fails")
    if any_unknown:
        return unknown("a component check is unresolved")
    return yes("all component checks certified")


def theorem_report(a, bound: int | None = None, max_dim: int | None = None):
    """The nine-way self-injectivity equivalence, each condition as a
    TriState, plus a consistency verdict.

    Returns {"conditions": [nine TriStates], "consistent": bool,
    "bound": int}."""
    if bound is None:
        bound = default_bound(a)
    dlam = co_regular(a)
    reg = regular_module(a)
    cot = cotilting_modules(a, max_dim, bound)
    til = tilting_modules(a, max_dim, bound)

    c1 = yes("D(algebra) is projective") if self_injective(a) else no(
        "D(algebra) is not projective"
    )
    c2 = _combine([semi_gp(dlam, bound), is_tau_rigid(dlam)])
    c3 = _combine(
        [semi_gp(c, bound) for c in cot] + [is_tau_rigid(c) for c in cot]
    )
    c4 = gorenstein_projective(dlam, bound)
    c5 = _combine([gorenstein_projective(c, bound) for c in cot])
    c6 = _combine([semi_gi(reg, bound), is_tau_inverse_rigid(reg)])
    c7 = _combine(
        [semi_gi(t, bound) for t in til]
        + [is_tau_inverse_rigid(t) for t in til]
    )
    c8 = gorenstein_injective(reg, bound)
    c9 = _combine([gorenstein_injective(t, bound) for t in til])
    conditions = [c1, c2, c3, c4, c5, c6, c7, c8, c9]
    certified = [c.verdict for c in conditions if not c.is_unknown]
    consistent = len(set(certified)) <= 1
    return {
        "conditions": conditions,
        "consistent": consistent,
        "bound": bound,
        "n_tilting_within_bound": len(til),
        "n_cotilting_within_bound": len(cot),
    }


def tachikawa_probe(a, bound: int | None = None):
    """Probe for the self-injectivity conjecture: reports whether
    D(algebra) is semi-Gorenstein projective and tau-rigid, whether the
    algebra is tau-inverse-rigid and 1-Gorenstein, checks the three-way
    equivalence of those last conditions, and flags any semi-GP but
    non-tau-rigid instance (a counterexample candidate)."""
    if bound is None:
        bound = default_bound(a)
    dlam = co_regular(a)
    reg = regular_module(a)
    sgp = semi_gp(dlam, bound)
    dlam_tau_rigid = is_tau_rigid(dlam)
    lam_tau_inv_rigid = is_tau_inverse_rigid(reg)
    g = gorenstein_algebra(a, bound)
    one_gorenstein = (
        yes("id <= 1 both sides", value=g.value)
        if g.is_yes and g.value <= 1
        else (no("injective dimension exceeds 1") if not g.is_unknown
              else unknown("Gorenstein status unresolved", bound=bound))
    )
    # three-way equivalence: 1-Gorenstein <=> D(algebra) tau-rigid <=>
    # algebra tau-inverse-rigid
    votes = []
    if not one_gorenstein.is_unknown:
        votes.append(one_gorenstein.is_yes)
    votes.append(dlam_tau_rigid)
    votes.append(lam_tau_inv_rigid)
    consistent = len(set(votes)) == 1
    flag = sgp.is_yes and not dlam_tau_rigid
    return {
        "bound": bound,
        "dlam_semi_gp": sgp,
        "dlam_tau_rigid": dlam_tau_rigid,
        "lam_tau_inverse_rigid": lam_tau_inv_rigid,
        "one_gorenstein": one_gorenstein,
        "three_way_consistent": consistent,
        "counterexample_candidate": flag,
    }
