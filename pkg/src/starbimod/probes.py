"""Floating-point probes for boundedness questions on the truncation tower.

The exact layer can certify identities but not (un)boundedness; these
probes watch the Rayleigh quotient

    lambda_N = max |F(a^+ x a)| / f(a^+ a)   over deg(a) <= N

along a list of degrees and report a verdict: a plateau of the final
three values within a relative tolerance reads as Bounded, anything else
as GrowthDetected.  Neither verdict is a proof; the quotient is exact
data, the verdict a finite-degree heuristic.

The pencil is reduced exactly before any floating point happens: the
Gram matrix is factored as P G P^T = L D L^H over the rationals (which
also projects out the exact kernel), the congruence L^-1 H L^-H is done
in rational arithmetic, and only the final diagonal scaling by d^-1/2 and
the standard hermitian eigensolve run in doubles.  Moment Gram matrices
in the monomial basis are far too ill-conditioned for a float Cholesky,
so this exact reduction is what keeps degree ten reachable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .algebra import Poly, Scalar
from .bimodule import BimodElement
from .errors import NotHermitianError, SingularGramError
from .gns import Functional, build_gns
from .moments import MomentFunctional

BOUNDED = "Bounded"
GROWTH = "GrowthDetected"


@dataclass(frozen=True)
class ProbeReport:
    degrees: tuple[int, ...]
    lambdas: tuple[float, ...]
    tolerance: float
    verdict: str

    @property
    def bounded(self) -> bool:
        return self.verdict == BOUNDED


def _quadratic_form_matrix(
    func: Functional, x: BimodElement, mf: MomentFunctional, degree: int
):
    """H[j][k] = F(q^j * x * q^k) as Scalars, hermitised exactly."""
    n = degree + 1
    rows = []
    for j in range(n):
        qj = Poly.monomial(j)
        rows.append(
            [func.value(x.act(qj, Poly.monomial(k)), mf) for k in range(n)]
        )
    half = Scalar(1) / Scalar(2)
    return [
        [
            (rows[j][k] + rows[k][j].conjugate()) * half
            for k in range(n)
        ]
        for j in range(n)
    ]


def _pencil_top_eigenvalue(hmat, realization) -> float:
    """Largest |eigenvalue| of (H, G) via exact congruence reduction."""
    ldl = realization.ldl
    r = ldl.rank
    if r == 0:
        raise SingularGramError("Gram matrix vanishes at this degree")
    piv = ldl.pivots
    hp = [[hmat[piv[a]][piv[b]] for b in range(r)] for a in range(r)]
    lower = ldl.lower
    # forward solve L Y = H_p (rows)
    y = [row[:] for row in hp]
    for a in range(r):
        for b in range(a):
            f = lower[a][b]
            if f:
                for c in range(r):
                    y[a][c] = y[a][c] - f * y[b][c]
    # right solve Z L^H = Y (columns)
    z = y
    for c in range(r):
        for b in range(c):
            f = lower[c][b].conjugate()
            if f:
                for a in range(r):
                    z[a][c] = z[a][c] - z[a][b] * f
    scale = [1.0 / sqrt(float(d)) for d in ldl.diag]
    mat = np.array(
        [
            [complex(z[a][b]) * scale[a] * scale[b] for b in range(r)]
            for a in range(r)
        ]
    )
    mat = 0.5 * (mat + mat.conj().T)
    eig = np.linalg.eigvalsh(mat)
    return float(np.max(np.abs(eig)))


def plateau_verdict(lambdas, tolerance: float) -> str:
    """Bounded iff the final three values agree within the relative tolerance."""
    tail = list(lambdas)[-3:]
    scale = max(abs(v) for v in tail)
    if scale == 0.0:
        return BOUNDED
    return BOUNDED if (max(tail) - min(tail)) <= tolerance * scale else GROWTH


def boundedness_probe(
    func: Functional,
    x: BimodElement,
    mf: MomentFunctional,
    degrees,
    tolerance: float = 1e-3,
) -> ProbeReport:
    """Track lambda_N over the degree list and classify the tail.

    The element must be hermitian so the quadratic form is real-valued.
    """
    degrees = tuple(degrees)
    if len(degrees) < 3 or list(degrees) != sorted(degrees):
        raise ValueError("need an increasing list of at least three degrees")
    if not x.is_hermitian():
        raise NotHermitianError("probe element must be hermitian")
    lam = []
    for n in degrees:
        realization = build_gns(mf, n)
        hmat = _quadratic_form_matrix(func, x, mf, n)
        lam.append(_pencil_top_eigenvalue(hmat, realization))
    return ProbeReport(
        degrees, tuple(lam), tolerance, plateau_verdict(lam, tolerance)
    )


def generator_probe(
    mf: MomentFunctional, degrees, tolerance: float = 1e-3
) -> ProbeReport:
    """Probe of multiplication by q in the GNS representation.

    Identical machinery: the numerical range of the (symmetric) generator
    is the quadratic form with weight polynomial q.
    """
    return boundedness_probe(
        Functional.gauss_poly(Poly.monomial(1)),
        BimodElement.gauss(1),
        mf,
        degrees,
        tolerance,
    )


@dataclass(frozen=True)
class NormBoundReport:
    """Numerical-radius estimate against the operator norm."""

    radius_estimate: float
    norm: float
    tolerance: float

    @property
    def bound(self) -> float:
        return 4.0 * self.radius_estimate

    @property
    def holds(self) -> bool:
        return self.norm <= self.bound + self.tolerance


def numerical_radius_norm_check(
    t, samples: int = 10_000, seed: int = 0, tolerance: float = 1e-9
) -> NormBoundReport:
    """Estimate sup |<T eta, eta>| over unit vectors; check norm <= 4 sup.

    The estimate combines random unit vectors with eigenvector seeds of
    the hermitian and antihermitian parts; the seeds alone already put
    the estimate within a factor two of the true numerical radius, which
    makes the factor-four bound robust to sampling error.
    """
    t = np.asarray(t, dtype=complex)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("need a square matrix")
    n = t.shape[0]
    rng = np.random.default_rng(seed)
    block = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    block /= np.linalg.norm(block, axis=1, keepdims=True)
    herm = 0.5 * (t + t.conj().T)
    skew = (t - t.conj().T) / 2j
    _, vh = np.linalg.eigh(herm)
    _, vs = np.linalg.eigh(skew)
    block = np.vstack([block, vh.T, vs.T])
    quads = np.abs((block.conj() * (block @ t.T)).sum(axis=1))
    radius = float(np.max(quads))
    norm = float(np.linalg.norm(t, 2))
    return NormBoundReport(radius, norm, tolerance)
