"""Sesquilinear forms on a finite-dimensional left module over C[q].

The module structure is a single matrix R (the action of the generator q,
hermitian for the declared inner product Gram matrix G); arbitrary
polynomials act through evaluation at R.  A form is stored as the matrix
M with x(phi, psi) = psi^H M phi, so the two-sided action reads

    a * x * b  <->  R(a^+)^H  M  R(b),

and the involution is the conjugate transpose.
"""

from __future__ import annotations

from .algebra import Poly
from .errors import DimensionMismatchError
from .exactla import Matrix, inverse, ldl_psd, poly_at


class ActionTable:
    """Generator action R and Gram matrix G on a dim-dimensional domain."""

    __slots__ = ("dim", "gen", "gram")

    def __init__(self, gen: Matrix, gram: Matrix):
        if gen.nrows != gen.ncols or gram.nrows != gram.ncols:
            raise DimensionMismatchError("action data must be square")
        if gen.nrows != gram.nrows:
            raise DimensionMismatchError("generator and Gram sizes differ")
        if not gram.is_hermitian():
            raise ValueError("Gram matrix must be hermitian")
        ldl_psd(gram)  # raises NotPositiveError when indefinite
        if gram @ gen != gen.adjoint() @ gram:
            raise ValueError("generator is not hermitian for the Gram form")
        object.__setattr__(self, "dim", gen.nrows)
        object.__setattr__(self, "gen", gen)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("ActionTable is immutable")

    def operator(self, a: Poly) -> Matrix:
        """The polynomial a evaluated at the generator matrix."""
        return poly_at(Poly.coerce(a), self.gen)


class FormMatrix:
    """A sesquilinear form x(phi, psi) = psi^H M phi."""

    __slots__ = ("mat",)

    def __init__(self, mat: Matrix):
        if mat.nrows != mat.ncols:
            raise DimensionMismatchError("form matrix must be square")
        object.__setattr__(self, "mat", mat)

    def __setattr__(self, name, value):
        raise AttributeError("FormMatrix is immutable")

    @property
    def dim(self) -> int:
        return self.mat.nrows

    def act(self, a, b, table: ActionTable) -> "FormMatrix":
        """The two-sided action a * x * b for polynomials a, b."""
        if self.dim != table.dim:
            raise DimensionMismatchError("form and action dimensions differ")
        left = table.operator(Poly.coerce(a).conjugate()).adjoint()
        right = table.operator(Poly.coerce(b))
        return FormMatrix(left @ self.mat @ right)

    def involution(self) -> "FormMatrix":
        """x^+(phi, psi) = conjugate of x(psi, phi)."""
        return FormMatrix(self.mat.adjoint())

    def value(self, phi, psi):
        """Evaluate the form on coordinate vectors."""
        row = self.mat.apply(phi)
        acc = None
        for p, r in zip(psi, row):
            term = p.conjugate() * r
            acc = term if acc is None else acc + term
        return acc

    def __eq__(self, other):
        if not isinstance(other, FormMatrix):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"FormMatrix({self.mat!r})"


def form_from_operator(t: Matrix, table: ActionTable) -> FormMatrix:
    """The form <t phi, psi> of an operator, i.e. the matrix G t."""
    if t.nrows != table.dim or t.ncols != table.dim:
        raise DimensionMismatchError("operator and action dimensions differ")
    return FormMatrix(table.gram @ t)


def operator_adjoint(t: Matrix, table: ActionTable) -> Matrix:
    """G^-1 t^H G; defined only for invertible Gram matrices."""
    return inverse(table.gram) @ t.adjoint() @ table.gram


def weak_commutant_test(t: Matrix, table: ActionTable) -> bool:
    """Does the form of t commute with the algebra action?

    Since C[q] is singly generated, commuting with q decides it:
    x_t * q = q * x_t as forms.
    """
    x = form_from_operator(t, table)
    return x.act(Poly.constant(1), Poly.monomial(1), table) == x.act(
        Poly.monomial(1), Poly.constant(1), table
    )
