"""Algebra constructors and validation.

Oracles: dimension counts from path enumeration, structure-constant
identities re-checked by Algebra.validate, and opposite/tensor axioms."""

import pytest

from gptau.algebra import (
    Algebra,
    AlgebraError,
    Quiver,
    Relation,
    bound_quiver_algebra,
    cyclic_nakayama,
    linear_a_n,
    loop_algebra,
    t2,
    tensor,
)
from gptau.field import GF, QQ


def test_builder_dimensions(a3, loop_flag, kx3, nakayama22, ground_field_algebra):
    # path counts: A3 has 3 vertices + 2 arrows + 1 length-2 path
    assert a3.dim == 6
    # loop-flag: e1, e2, alpha, beta, beta.alpha
    assert loop_flag.dim == 5
    assert kx3.dim == 3
    # cyclic 2 vertices, J^2: 2 vertices + 2 arrows
    assert nakayama22.dim == 4
    assert ground_field_algebra.dim == 1


def test_quiver_rejects_duplicate_arrows():
    with pytest.raises(AlgebraError):
        Quiver((1,), (("a", 1, 1), ("a", 1, 1)))


def test_relation_shorter_than_two_rejected():
    q = Quiver((1,), (("x", 1, 1),))
    with pytest.raises(AlgebraError):
        bound_quiver_algebra(q, [Relation(((1, ("x",)),))], 3)


def test_non_admissible_ideal_detected():
    # no relations on a loop: paths never die within the bound
    q = Quiver((1,), (("x", 1, 1),))
    with pytest.raises(AlgebraError):
        bound_quiver_algebra(q, [], 4)


def test_non_parallel_relation_rejected(a3):
    q = Quiver((1, 2, 3), (("a", 1, 2), ("b", 2, 3)))
    with pytest.raises(AlgebraError):
        bound_quiver_algebra(
            q, [Relation(((1, ("b", "a")), (1, ("a", "a"))))], 4
        )


def test_structure_constants_associative(loop_flag):
    loop_flag.validate()  # associativity, unit, idempotents, radical


def test_opposite_is_involution(a3):
    op = a3.opposite()
    assert op.opposite() is a3
    # product order reverses
    x = [a3.field.of(0)] * a3.dim
    y = [a3.field.of(0)] * a3.dim
    x[a3.quiver_data["arrow_basis_index"]["a1"]] = a3.field.one()
    y[a3.quiver_data["arrow_basis_index"]["a2"]] = a3.field.one()
    assert a3.product(y, x) == op.product(x, y)


def test_tensor_dimension_and_unit(kx3, ground_field_algebra):
    prod = tensor(kx3, kx3)
    assert prod.dim == 9
    prod.validate()
    assert tensor(kx3, ground_field_algebra).dim == kx3.dim


def test_tensor_field_mismatch_rejected(kx3):
    with pytest.raises(AlgebraError):
        tensor(kx3, loop_algebra(3, GF(5)))


def test_t2_dimension_and_idempotents(loop_flag, t2_loop_flag):
    assert t2_loop_flag.dim == 3 * loop_flag.dim
    assert t2_loop_flag.n_idempotents == 2 * loop_flag.n_idempotents
    t2_loop_flag.validate()


def test_prime_field_algebra_builds():
    a = linear_a_n(3, GF(7))
    assert a.dim == 6
    a.validate()


def test_cyclic_nakayama_admissibility():
    a = cyclic_nakayama(3, 2)
    assert a.dim == 6  # 3 vertices + 3 arrows
    a.validate()


def test_invalid_structure_constants_rejected():
    f = QQ
    one = f.one()
    zero = f.zero()
    # "multiplication" that is not associative on a 2-dim algebra
    mult = [
        [[one, zero], [zero, one]],
        [[zero, one], [one, zero]],
    ]
    with pytest.raises(AlgebraError):
        Algebra(
            f,
            ["e", "x"],
            mult,
            [one, zero],
            [[one, zero]],
            [[zero, one]],
            provenance="test",
        )
