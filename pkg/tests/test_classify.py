"""Bounded enumeration of indecomposables, tau-rigidity criteria,
support tau-tilting pairs, CM-freeness verdicts, and the cross-check
suites.

Oracles: representation-finite battery algebras with hand-countable
class lists (A3: 6 intervals; loop-flag: 7 classes; K[x]/(x^3): 3
uniserials) and the brute-force support-pair count for A3 (14)."""

import random

import pytest

from gptau.classify import (
    CriteriaDisagreement,
    cm_e_free,
    cm_tau_tilting_free,
    consistency_suites,
    enumerate_indecomposables,
    gorenstein_projective_tau_rigid_list,
    support_tau_tilting_pairs,
    support_tau_tilting_quiver,
    tau_inverse_rigid_test,
    tau_rigid_test,
)
from gptau.approx import generator_data
from gptau.homalg import is_tau_rigid
from gptau.module import (
    direct_sum,
    is_indecomposable,
    is_isomorphic,
    is_projective,
    regular_module,
    simple_modules,
)


def test_enumeration_counts(a3, loop_flag, kx3):
    assert len(enumerate_indecomposables(a3, 4).representatives) == 6
    assert enumerate_indecomposables(a3, 4).complete
    cls = enumerate_indecomposables(loop_flag, 6)
    assert len(cls.representatives) == 7
    assert cls.complete
    assert len(enumerate_indecomposables(kx3, 4).representatives) == 3


def test_enumeration_returns_certified_indecomposables(a3):
    cls = enumerate_indecomposables(a3, 4)
    for m in cls.representatives:
        assert is_indecomposable(m)[0]
    # pairwise non-isomorphic
    reps = cls.representatives
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert not is_isomorphic(reps[i], reps[j])


def test_loop_flag_has_two_distinct_classes_with_equal_dimensions(loop_flag):
    cls = enumerate_indecomposables(loop_flag, 6)
    keyed = {}
    for m in cls.representatives:
        keyed.setdefault((m.dim, m.dim_vector()), []).append(m)
    pairs = [v for v in keyed.values() if len(v) == 2]
    assert len(pairs) == 1  # two non-isomorphic modules share (3, (2, 1))
    m1, m2 = pairs[0]
    assert not is_isomorphic(m1, m2)


def test_tau_criteria_agree_on_random_sums(a3, loop_flag):
    rng = random.Random(11)
    for a in (a3, loop_flag):
        reps = enumerate_indecomposables(a, 2 * a.dim).representatives
        for m in reps:
            assert tau_rigid_test(m) == is_tau_rigid(m)
        for _ in range(10):
            parts = [rng.choice(reps) for _ in range(rng.randint(2, 3))]
            s, _, _ = direct_sum(a, parts)
            tau_rigid_test(s)  # raises CriteriaDisagreement on a bug


def test_tau_inverse_rigidity_on_injectives(a3):
    from gptau.module import injective_modules

    for i in injective_modules(a3):
        assert tau_inverse_rigid_test(i)


def test_support_pair_counts(a3, loop_flag, kx3):
    _, pairs = support_tau_tilting_pairs(a3)
    assert len(pairs) == 14
    _, lf_pairs = support_tau_tilting_pairs(loop_flag)
    assert len(lf_pairs) == 6
    _, kx_pairs = support_tau_tilting_pairs(kx3)
    assert len(kx_pairs) == 2  # local: (regular, 0) and (0, regular)


def test_support_pairs_satisfy_counting_constraint(loop_flag):
    rigid, pairs = support_tau_tilting_pairs(loop_flag)
    n = loop_flag.n_idempotents
    for p in pairs:
        assert len(p.m_summands) + len(p.p_summands) == n


def test_exchange_graph_edges(a3, loop_flag):
    _, pairs, edges = support_tau_tilting_quiver(a3)
    assert len(pairs) == 14 and len(edges) == 21
    # the full tilting pair (regular, 0) has exactly n neighbors
    _, lf_pairs, lf_edges = support_tau_tilting_quiver(loop_flag)
    assert len(lf_pairs) == 6 and len(lf_edges) == 6


def test_gp_tau_rigid_lists(a3, loop_flag):
    for a in (a3, loop_flag):
        members, unknowns, _ = gorenstein_projective_tau_rigid_list(a)
        assert not unknowns
        # both algebras are CM-tau-tilting free: only projectives qualify
        assert all(is_projective(m) for m in members)
        assert len(members) == a.n_idempotents


def test_cm_tau_tilting_free_verdicts(a3, loop_flag, kx3):
    assert cm_tau_tilting_free(a3).is_yes
    assert cm_tau_tilting_free(loop_flag).is_yes
    assert cm_tau_tilting_free(kx3).is_yes


def test_cm_e_free_matches_regular_generator(a3, loop_flag, kx3):
    for a in (a3, loop_flag, kx3):
        e = generator_data(regular_module(a))
        lhs = cm_e_free(e)
        rhs = cm_tau_tilting_free(a)
        assert lhs.verdict == rhs.verdict


def test_consistency_suites_pass_on_loop_flag(loop_flag):
    report = consistency_suites(loop_flag)
    for name, state in report.items():
        assert not state.is_no, (name, state.reason)


def test_consistency_suites_pass_on_a3(a3):
    report = consistency_suites(a3)
    for name, state in report.items():
        assert not state.is_no, (name, state.reason)
