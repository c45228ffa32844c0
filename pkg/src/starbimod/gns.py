"""GNS-style realization of a moment functional and the paired bimodule functionals.

``build_gns`` turns a moment functional into the truncated quotient data:
the Hankel Gram matrix G_{jk} = m_{j+k} on the monomials q^0..q^N, an
exact positivity certificate (pivoted LDL), and an exact basis of the
kernel polynomials.  No orthonormalisation happens anywhere; all inner
products go through the Gram matrix so the whole exact path stays in
rational arithmetic.

``Functional`` bundles the five functional variants on the bimodules:

* F0/F1/F2 on the d^2 bimodule pick off f(h0), f(h1), f(h2) of the
  coefficient triple of the argument,
* gauss-poly carries a polynomial weight w and sends w(q)p(q)exp(-q^2)
  to f(w p),
* gauss-atoms carries one exact value per atom of an atomic measure and
  is evaluated in atom coordinates.

The central check, ``check_identity``, verifies

    F(a * x * b) = < theta(x) rho(b) phi, rho(a^+) phi >

exactly, computing the two sides along genuinely different routes (act
then classify, versus classify then multiply out).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import P_ONE, Poly, Scalar
from .bimodule import BimodElement, Generator
from .errors import (
    MomentMismatchError,
    NotPositiveError,
    UnsupportedVariantError,
    VariantMismatchError,
)
from .exactla import Matrix, ldl_psd, nullspace
from .moments import MomentFunctional

_ZERO = Scalar(0)


class GnsRealization:
    """Truncated quotient data of a moment functional."""

    __slots__ = ("functional", "degree", "gram", "kernel", "ldl")

    def __init__(self, functional, degree, gram, kernel, ldl):
        object.__setattr__(self, "functional", functional)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "kernel", kernel)
        object.__setattr__(self, "ldl", ldl)

    def __setattr__(self, name, value):
        raise AttributeError("GnsRealization is immutable")

    @property
    def rank(self) -> int:
        return self.ldl.rank

    @property
    def pivots(self) -> tuple[int, ...]:
        """Monomial exponents spanning a positive-definite complement."""
        return self.ldl.pivots

    @property
    def shift_table(self) -> dict[int, int]:
        """The generator action on monomial indices, q^k -> q^(k+1)."""
        return {k: k + 1 for k in range(self.degree)}

    def pairing(self, u: Poly, v: Poly) -> Scalar:
        return self.functional.pairing(u, v)

    def cyclic_vector(self) -> Poly:
        """phi = the class of the constant 1."""
        return P_ONE


def build_gns(mf: MomentFunctional, degree: int) -> GnsRealization:
    """Build and positivity-check the degree-N truncation.

    Needs moments up to 2N.  Raises NotPositiveError when the moment data
    is not a truncated positive sequence, MomentOutOfRangeError when the
    stored moments are too short.
    """
    ms = mf.moments_up_to(2 * degree)
    if any(not m.is_real() for m in ms):
        raise NotPositiveError("moments of a positive functional must be real")
    n = degree + 1
    gram = Matrix([[ms[j + k] for k in range(n)] for j in range(n)])
    ldl = ldl_psd(gram)
    kernel = tuple(Poly(vec) for vec in nullspace(gram))
    return GnsRealization(mf, degree, gram, kernel, ldl)


class Functional:
    """One of the functional variants F0, F1, F2, gauss-poly, gauss-atoms."""

    __slots__ = ("kind", "weight", "atom_values")

    _D2_KINDS = ("F0", "F1", "F2")

    def __init__(self, kind: str, weight=None, atom_values=None):
        if kind in self._D2_KINDS:
            if weight is not None or atom_values is not None:
                raise ValueError(f"{kind} takes no parameters")
        elif kind == "gauss-poly":
            if weight is None or atom_values is not None:
                raise ValueError("gauss-poly needs a polynomial weight")
            weight = Poly.coerce(weight)
        elif kind == "gauss-atoms":
            if atom_values is None or weight is not None:
                raise ValueError("gauss-atoms needs per-atom values")
            atom_values = tuple(Fraction(v) for v in atom_values)
        else:
            raise ValueError(f"unknown functional kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "atom_values", atom_values)

    def __setattr__(self, name, value):
        raise AttributeError("Functional is immutable")

    @classmethod
    def f0(cls):
        return cls("F0")

    @classmethod
    def f1(cls):
        return cls("F1")

    @classmethod
    def f2(cls):
        return cls("F2")

    @classmethod
    def gauss_poly(cls, weight) -> "Functional":
        return cls("gauss-poly", weight=weight)

    @classmethod
    def gauss_atoms(cls, values) -> "Functional":
        return cls("gauss-atoms", atom_values=values)

    @property
    def tag(self) -> Generator:
        return Generator.D2 if self.kind in self._D2_KINDS else Generator.GAUSS

    def _check_compat(self, x: BimodElement, mf: MomentFunctional):
        if x.tag is not self.tag:
            raise VariantMismatchError(
                f"{self.kind} expects a {self.tag.value} element, got {x.tag.value}"
            )
        if self.kind == "gauss-atoms":
            if not mf.is_atomic:
                raise VariantMismatchError("gauss-atoms needs an atomic measure")
            if len(self.atom_values) != len(mf.atoms):
                raise VariantMismatchError(
                    f"{len(self.atom_values)} values for {len(mf.atoms)} atoms"
                )

    def value(self, x: BimodElement, mf: MomentFunctional) -> Scalar:
        """F(x), exact; depends only on the semantic class of x."""
        self._check_compat(x, mf)
        if self.kind in self._D2_KINDS:
            h = x.triple()[self._D2_KINDS.index(self.kind)]
            return mf.apply(h)
        p = x.gauss_poly()
        if self.kind == "gauss-poly":
            return mf.apply(self.weight * p)
        acc = _ZERO
        for (pt, w), v in zip(mf.atoms, self.atom_values):
            acc = acc + p(pt) * (w * v)
        return acc

    def coefficient_poly(self, x: BimodElement) -> Poly:
        """The polynomial h with F(a^+ . x) = f(a^+ h); Cauchy-Schwarz partner."""
        if x.tag is not self.tag:
            raise VariantMismatchError(
                f"{self.kind} expects a {self.tag.value} element"
            )
        if self.kind in self._D2_KINDS:
            return x.triple()[self._D2_KINDS.index(self.kind)]
        if self.kind == "gauss-poly":
            return self.weight * x.gauss_poly()
        raise UnsupportedVariantError(
            "gauss-atoms has no polynomial partner; use atom coordinates"
        )

    def theta(self, x: BimodElement, b) -> Poly:
        """The image polynomial theta(x) applied to b * phi.

        F0: h0 b; F1: h1 b + h0 b'; F2: h2 b + 2 h1 b' + h0 b'';
        gauss-poly: w p b.  The gauss-atoms operator leaves polynomial
        coordinates and is not available here.
        """
        b = Poly.coerce(b)
        if self.kind == "gauss-atoms":
            raise UnsupportedVariantError(
                "gauss-atoms acts on atom coordinates, not polynomials"
            )
        if x.tag is not self.tag:
            raise VariantMismatchError(
                f"{self.kind} expects a {self.tag.value} element"
            )
        if self.kind == "gauss-poly":
            return self.weight * x.gauss_poly() * b
        h0, h1, h2 = x.triple()
        if self.kind == "F0":
            return h0 * b
        if self.kind == "F1":
            return h1 * b + h0 * b.derivative()
        return h2 * b + 2 * (h1 * b.derivative()) + h0 * b.derivative(2)

    def theta_atom_vector(self, x: BimodElement, b, mf: MomentFunctional):
        """theta(x) rho(b) phi in atom coordinates, for the gauss-atoms variant."""
        if self.kind != "gauss-atoms":
            raise UnsupportedVariantError("atom coordinates are for gauss-atoms")
        self._check_compat(x, mf)
        b = Poly.coerce(b)
        p = x.gauss_poly()
        return tuple(
            Scalar.coerce(v) * p(pt) * b(pt)
            for (pt, _), v in zip(mf.atoms, self.atom_values)
        )

    def describe(self) -> str:
        if self.kind == "gauss-poly":
            return f"gauss-poly:{self.weight}"
        if self.kind == "gauss-atoms":
            return "gauss-atoms:" + ",".join(str(v) for v in self.atom_values)
        return self.kind

    def __repr__(self):
        return f"Functional({self.describe()!r})"


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of F(a x b) = <theta(x) rho(b) phi, rho(a^+) phi>."""

    lhs: Scalar
    rhs: Scalar

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def check_identity(
    func: Functional,
    a,
    x: BimodElement,
    b,
    mf: MomentFunctional,
) -> IdentityReport:
    """Exact two-route check of the representation identity.

    The left side acts on the element first and evaluates F.  The right
    side forms the image polynomial theta(x)(b * phi) and pairs it with
    rho(a^+) phi, which by the Gram pairing is f(a * theta-poly).  For the
    gauss-atoms variant the right side is paired in atom coordinates.
    """
    a = Poly.coerce(a)
    b = Poly.coerce(b)
    lhs = func.value(x.act(a, b), mf)
    if func.kind == "gauss-atoms":
        vec = func.theta_atom_vector(x, b, mf)
        right = [a.conjugate()(pt) for pt, _ in mf.atoms]
        rhs = _ZERO
        for (pt, w), u, r in zip(mf.atoms, vec, right):
            rhs = rhs + u * r.conjugate() * w
    else:
        image = func.theta(x, b)
        rhs = mf.apply(a * image)
    return IdentityReport(lhs, rhs)


@dataclass(frozen=True)
class CauchySchwarzReport:
    """|F(a^+ x)|^2 against the product bound C_x f(a^+ a)."""

    lhs_squared: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs_squared <= self.bound


def check_cauchy_schwarz(
    func: Functional,
    a,
    x: BimodElement,
    mf: MomentFunctional,
) -> CauchySchwarzReport:
    """Exact check of |F(a^+ x)|^2 <= f(h^+ h) f(a^+ a).

    h is the variant's coefficient polynomial of x; for gauss-atoms the
    squared norm of the weighted atom vector replaces f(h^+ h).
    """
    a = Poly.coerce(a)
    lhs = func.value(x.act(a.conjugate(), P_ONE), mf)
    gram_aa = mf.pairing(a, a)
    if func.kind == "gauss-atoms":
        func._check_compat(x, mf)
        p = x.gauss_poly()
        c = _ZERO
        for (pt, w), v in zip(mf.atoms, func.atom_values):
            hv = Scalar.coerce(v) * p(pt)
            c = c + hv * hv.conjugate() * w
    else:
        h = func.coefficient_poly(x)
        c = mf.apply(h.conjugate() * h)
    bound = c * gram_aa
    if not bound.is_real():
        raise NotPositiveError("Cauchy-Schwarz bound must be real")
    return CauchySchwarzReport(lhs.abs2(), bound.re)


@dataclass(frozen=True)
class UniquenessReport:
    """Consistency data for two presentations of one functional."""

    degree: int
    gram_equal: bool
    kernel_equal: bool
    shift_consistent: bool
    cyclic_preserved: bool

    @property
    def verified(self) -> bool:
        return (
            self.gram_equal
            and self.kernel_equal
            and self.shift_consistent
            and self.cyclic_preserved
        )


def check_intertwiner(
    mf1: MomentFunctional, mf2: MomentFunctional, degree: int
) -> UniquenessReport:
    """Verify the canonical unitary between two equal-moment presentations.

    The map sends the class of q^k to the class of q^k.  When the moments
    agree up to 2N this is inner-product preserving by construction; this
    check recomputes both Gram matrices, both kernels, and the pairing of
    shifted basis vectors, all exactly.  Differing moments raise
    MomentMismatchError.
    """
    m1 = mf1.moments_up_to(2 * degree)
    m2 = mf2.moments_up_to(2 * degree)
    for k, (u, v) in enumerate(zip(m1, m2)):
        if u != v:
            raise MomentMismatchError(f"moment {k} differs: {u} vs {v}")
    r1 = build_gns(mf1, degree)
    r2 = build_gns(mf2, degree)
    gram_equal = r1.gram == r2.gram
    kernel_equal = r1.kernel == r2.kernel
    shift_ok = True
    for j in range(degree):
        shifted = Poly.monomial(j + 1)
        for k in range(degree + 1):
            if mf1.pairing(shifted, Poly.monomial(k)) != mf2.pairing(
                shifted, Poly.monomial(k)
            ):
                shift_ok = False
    cyclic = mf1.pairing(P_ONE, P_ONE) == mf2.pairing(P_ONE, P_ONE)
    return UniquenessReport(degree, gram_equal, kernel_equal, shift_ok, cyclic)
