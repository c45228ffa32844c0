"""Sesquilinear forms over a represented polynomial algebra."""

import random

import pytest

from starbimod.algebra import I, P_ONE, Q, Scalar
from starbimod.errors import DimensionMismatchError, NotPositiveError
from starbimod.exactla import Matrix, inverse
from starbimod.forms import (
    ActionTable,
    FormMatrix,
    form_from_operator,
    operator_adjoint,
    weak_commutant_test,
)
from starbimod.sampling import rand_poly, rand_scalar


def diag_table():
    return ActionTable(Matrix.diagonal([0, 1]), Matrix.identity(2))


def shift_form():
    return FormMatrix(Matrix([[0, 1], [0, 0]]))


def random_table(rng: random.Random, dim: int) -> ActionTable:
    rows = [
        [
            rand_scalar(rng)
            if j < i
            else (Scalar(rng.randint(1, 3)) if j == i else Scalar(0))
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    b = Matrix(rows)
    gram = b.adjoint() @ b
    s = [[Scalar(0)] * dim for _ in range(dim)]
    for i in range(dim):
        s[i][i] = Scalar(rng.randint(-2, 2))
        for j in range(i):
            z = rand_scalar(rng)
            s[i][j] = z
            s[j][i] = z.conjugate()
    return ActionTable(inverse(gram) @ Matrix(s), gram)


def random_form(rng: random.Random, dim: int) -> FormMatrix:
    return FormMatrix(
        Matrix([[rand_scalar(rng) for _ in range(dim)] for _ in range(dim)])
    )


class TestActionTable:
    def test_rejects_non_hermitian_gram(self):
        with pytest.raises(ValueError):
            ActionTable(Matrix.identity(2), Matrix([[0, 1], [0, 0]]))

    def test_rejects_indefinite_gram(self):
        with pytest.raises(NotPositiveError):
            ActionTable(Matrix.diagonal([1, 1]), Matrix.diagonal([1, -1]))

    def test_rejects_non_symmetric_generator(self):
        with pytest.raises(ValueError):
            ActionTable(Matrix([[0, 1], [0, 0]]), Matrix.identity(2))

    def test_singular_gram_allowed(self):
        table = ActionTable(Matrix.diagonal([2, 3]), Matrix.diagonal([1, 0]))
        assert table.dim == 2

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            ActionTable(Matrix.identity(2), Matrix.identity(3))

    def test_operator_evaluates_polynomials(self):
        table = diag_table()
        assert table.operator(Q * Q + 1) == Matrix.diagonal([1, 2])


class TestFormAction:
    def test_left_action_example(self):
        out = shift_form().act(Q, P_ONE, diag_table())
        assert out == FormMatrix(Matrix.zeros(2, 2))

    def test_right_action_example(self):
        out = shift_form().act(P_ONE, Q, diag_table())
        assert out == shift_form()

    def test_unit(self):
        assert shift_form().act(P_ONE, P_ONE, diag_table()) == shift_form()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            FormMatrix(Matrix.identity(3)).act(Q, Q, diag_table())


class TestInvolution:
    def test_conjugate_transpose(self):
        assert shift_form().involution() == FormMatrix(Matrix([[0, 0], [1, 0]]))

    def test_hermitian_fixed(self):
        h = FormMatrix(Matrix([[1, I], [-I, 2]]))
        assert h.involution() == h

    def test_scalar_form(self):
        assert FormMatrix(Matrix([[I]])).involution() == FormMatrix(Matrix([[-I]]))


class TestFromOperator:
    def test_identity_gram(self):
        t = Matrix([[1, 2], [3, 4]])
        table = diag_table()
        assert form_from_operator(t, table) == FormMatrix(t)

    def test_weighted_gram(self):
        table = ActionTable(Matrix.diagonal([0, 0]), Matrix.diagonal([3, 2]))
        out = form_from_operator(Matrix([[0, 1], [0, 0]]), table)
        assert out == FormMatrix(Matrix([[0, 3], [0, 0]]))

    def test_identity_operator(self):
        table = ActionTable(Matrix.diagonal([1, 2]), Matrix.diagonal([3, 2]))
        assert form_from_operator(Matrix.identity(2), table) == FormMatrix(
            table.gram
        )

    def test_adjoint_compatibility_when_invertible(self):
        rng = random.Random(61)
        for _ in range(50):
            table = random_table(rng, 3)
            t = Matrix([[rand_scalar(rng) for _ in range(3)] for _ in range(3)])
            lhs = form_from_operator(t, table).involution()
            rhs = form_from_operator(operator_adjoint(t, table), table)
            assert lhs == rhs


class TestWeakCommutant:
    def test_diagonal_commutes(self):
        assert weak_commutant_test(Matrix.diagonal([5, 7]), diag_table())

    def test_shift_does_not(self):
        assert not weak_commutant_test(Matrix([[0, 1], [0, 0]]), diag_table())

    def test_identity_commutes(self):
        assert weak_commutant_test(Matrix.identity(2), diag_table())


class TestBimoduleAxioms:
    def test_axiom_suite(self):
        rng = random.Random(67)
        for _ in range(150):
            dim = rng.randint(2, 3)
            table = random_table(rng, dim)
            x = random_form(rng, dim)
            a = rand_poly(rng, 2)
            b = rand_poly(rng, 2)
            assert x.act(b, P_ONE, table).act(a, P_ONE, table) == x.act(
                a * b, P_ONE, table
            )
            assert x.act(a, P_ONE, table).act(P_ONE, b, table) == x.act(
                a, b, table
            )
            assert x.act(P_ONE, b, table).act(a, P_ONE, table) == x.act(
                a, b, table
            )
            assert x.act(a, b, table).involution() == x.involution().act(
                b.conjugate(), a.conjugate(), table
            )
            # left action through the involutions
            assert x.act(a, P_ONE, table) == x.involution().act(
                P_ONE, a.conjugate(), table
            ).involution()

    def test_operator_sandwich(self):
        rng = random.Random(71)
        for _ in range(100):
            dim = rng.randint(2, 3)
            table = random_table(rng, dim)
            t = Matrix(
                [[rand_scalar(rng) for _ in range(dim)] for _ in range(dim)]
            )
            a = rand_poly(rng, 2)
            b = rand_poly(rng, 2)
            lhs = form_from_operator(t, table).act(a, b, table)
            rhs = form_from_operator(
                table.operator(a) @ t @ table.operator(b), table
            )
            assert lhs == rhs

    def test_form_values_match_matrix(self):
        table = diag_table()
        x = shift_form()
        phi = (Scalar(1), Scalar(2))
        psi = (Scalar(0, 1), Scalar(3))
        # psi^H M phi with M = [[0,1],[0,0]]
        assert x.value(phi, psi) == Scalar(0, -1) * Scalar(2)
