"""Deterministic random generators for elements, used by checks and tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Poly, Scalar
from .bimodule import BimodElement, Generator
from .moments import MomentFunctional
from .weyl import WeylElement


def rand_fraction(rng: random.Random, span: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_scalar(rng: random.Random, complex_parts: bool = True) -> Scalar:
    re = rand_fraction(rng)
    im = rand_fraction(rng) if complex_parts and rng.random() < 0.5 else 0
    return Scalar(re, im)


def rand_poly(
    rng: random.Random,
    max_degree: int,
    complex_parts: bool = True,
    nonzero: bool = False,
) -> Poly:
    deg = rng.randint(0, max_degree)
    coeffs = [
        rand_scalar(rng, complex_parts) if rng.random() < 0.75 else Scalar(0)
        for _ in range(deg + 1)
    ]
    p = Poly(coeffs)
    if nonzero and p.is_zero():
        return Poly.monomial(rng.randint(0, max_degree), Scalar(1, 1))
    return p


def rand_weyl(
    rng: random.Random, max_terms: int = 4, max_exp: int = 6
) -> WeylElement:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        m = rng.randint(0, max_exp)
        n = rng.randint(0, max_exp)
        c = rand_scalar(rng)
        if not c.is_zero():
            terms.append(((m, n), c))
    return WeylElement(terms)


def rand_d2_element(
    rng: random.Random, max_terms: int = 4, max_degree: int = 4
) -> BimodElement:
    pairs = [
        (rand_poly(rng, max_degree), rand_poly(rng, max_degree))
        for _ in range(rng.randint(1, max_terms))
    ]
    return BimodElement(Generator.D2, pairs)


def rand_gauss_element(rng: random.Random, max_degree: int = 4) -> BimodElement:
    return BimodElement.gauss(rand_poly(rng, max_degree))


def rand_hermitian_d2(rng: random.Random, max_terms: int = 3, max_degree: int = 3):
    """A hermitian element, built as y + y^+."""
    y = rand_d2_element(rng, max_terms, max_degree)
    return y + y.involution()


def mu3() -> MomentFunctional:
    """Unit masses at -1, 0, 1."""
    return MomentFunctional.atomic([(-1, 1), (0, 1), (1, 1)])


def atoms012() -> MomentFunctional:
    """Unit masses at 0, 1, 2."""
    return MomentFunctional.atomic([(0, 1), (1, 1), (2, 1)])
