"""Independent numerical and combinatorial ground truth.

Three oracles live here, deliberately unaware of the series machinery:

* Monte Carlo averages of Schur functions over Haar-unitary and complex
  Gaussian matrices (checked against the exact unitary/Gaussian integration
  formulas at the 3-sigma level),
* exact Gaussian Wick-pairing enumeration of Hermitian trace moments,
  contracted symbolically in the matrix size N,
* quadrature of the one-variable moment measures whose diagonal moments
  realize the deformed scalar product.

Randomness: numpy PCG64 seeded by SeedSequence(seed, stream).  Samples are
drawn in fixed-size blocks, one stream per block, and merged in block order,
so results are bit-identical for a given (seed, samples) regardless of how
the blocks are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy import integrate

from .partitions import Partition
from .symfun import Poly1, _as_fraction
from .weights import ContentFunction, pochhammer

BLOCK = 1000  # samples per RNG stream; part of the determinism contract


class RngStream:
    """Deterministic generator: (seed, stream id) fixes the sample sequence."""

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed)
        self.stream = int(stream)
        self.gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,)))
        )


@dataclass
class MCEstimate:
    mean: float
    std_error: float
    samples: int

    def within_sigma(self, exact: float, sigma: float = 3.0) -> bool:
        if self.std_error == 0.0:
            return abs(self.mean - exact) == 0.0
        return abs(self.mean - exact) <= sigma * self.std_error

    def z_score(self, exact: float) -> float:
        if self.std_error == 0.0:
            return 0.0 if self.mean == exact else math.inf
        return (self.mean - exact) / self.std_error


def sample_haar_unitary(n: int, gen: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix with the
    phases of the R diagonal normalized."""
    z = (gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return q


def sample_haar_unitary_batch(n: int, count: int, gen: np.random.Generator) -> np.ndarray:
    z = (gen.standard_normal((count, n, n)) + 1j * gen.standard_normal((count, n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def sample_ginibre_batch(n: int, count: int, gen: np.random.Generator) -> np.ndarray:
    """Complex Gaussian matrices with density exp(-Tr Z Z^+) pi^{-n^2}
    (unit-variance complex entries)."""
    return (gen.standard_normal((count, n, n)) + 1j * gen.standard_normal((count, n, n))) / np.sqrt(2)


def schur_of_matrix(lam: Partition, mats: np.ndarray) -> np.ndarray:
    """s_lambda of a (batch of) matrix argument(s) via trace power sums and
    the Jacobi-Trudi determinant; cheap for the small weights used here."""
    d = lam.weight
    if d == 0:
        return np.ones(mats.shape[0], dtype=complex)
    batch = mats.shape[0]
    powers = [None, mats]
    for _ in range(2, d + 1):
        powers.append(powers[-1] @ mats)
    p = [None] + [np.trace(powers[m], axis1=-2, axis2=-1) for m in range(1, d + 1)]
    h = [np.ones(batch, dtype=complex)]
    for k in range(1, d + 1):
        acc = np.zeros(batch, dtype=complex)
        for m in range(1, k + 1):
            acc += p[m] * h[k - m]
        h.append(acc / k)
    n = lam.length
    mat = np.empty((batch, n, n), dtype=complex)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = lam.part(i) - i + j
            if k < 0:
                mat[:, i - 1, j - 1] = 0.0
            else:
                mat[:, i - 1, j - 1] = h[k] if k <= d else 0.0
    return np.linalg.det(mat)


def _blocked_mean(values_fn, samples: int, seed: int) -> MCEstimate:
    """Mean/σ accumulated over fixed blocks with one RNG stream per block."""
    total = 0.0
    total2 = 0.0
    count = 0
    block_id = 0
    while count < samples:
        take = min(BLOCK, samples - count)
        gen = RngStream(seed, block_id).gen
        vals = values_fn(take, gen)
        total += float(np.sum(vals))
        total2 += float(np.sum(np.asarray(vals) ** 2))
        count += take
        block_id += 1
    mean = total / count
    var = max(total2 / count - mean**2, 0.0)
    return MCEstimate(mean, math.sqrt(var / count), count)


def mc_schur_unitary_identity(
    lam: Partition,
    A: Sequence,
    B: Sequence,
    n: int,
    samples: int,
    seed: int = 0,
    mu: Optional[Partition] = None,
    sigma: float = 3.0,
) -> dict:
    """MC check of the unitary group averages.

    mu is None:  E[s_lambda(A U B U^-1)] = s_lambda(A) s_lambda(B) / s_lambda(I_n)
    mu given:    E[s_lambda(A U) s_mu(U^-1 B)] = delta s_lambda(A B)/s_lambda(I_n)
    """
    from .symfun import schur_from_eigenvalues

    if lam.length > n:
        raise ValueError("need l(lambda) <= n")
    Ad = np.diag(np.array([float(a) for a in A], dtype=complex))
    Bd = np.diag(np.array([float(b) for b in B], dtype=complex))
    if mu is None:
        exact = (
            schur_from_eigenvalues(lam, list(A))
            * schur_from_eigenvalues(lam, list(B))
            / schur_from_eigenvalues(lam, [Fraction(1)] * n)
        )

        def values(count, gen):
            U = sample_haar_unitary_batch(n, count, gen)
            Uh = np.conjugate(np.transpose(U, (0, 2, 1)))
            M = Ad @ U @ Bd @ Uh
            return np.real(schur_of_matrix(lam, M))

    else:
        AB = [a * b for a, b in zip(A, B)]
        exact = (
            schur_from_eigenvalues(lam, AB)
            / schur_from_eigenvalues(lam, [Fraction(1)] * n)
            if lam == mu
            else Fraction(0)
        )

        def values(count, gen):
            U = sample_haar_unitary_batch(n, count, gen)
            Uh = np.conjugate(np.transpose(U, (0, 2, 1)))
            return np.real(
                schur_of_matrix(lam, Ad @ U) * schur_of_matrix(mu, Uh @ Bd)
            )

    est = _blocked_mean(values, samples, seed)
    return _mc_report("unitary", lam, mu, est, exact, sigma)


def mc_schur_ginibre_identity(
    lam: Partition,
    A: Sequence,
    B: Sequence,
    n: int,
    samples: int,
    seed: int = 0,
    mu: Optional[Partition] = None,
    sigma: float = 3.0,
) -> dict:
    """MC check of the complex Gaussian averages.

    mu is None:  E[s_lambda(A Z B Z^+)] = H_lambda s_lambda(A) s_lambda(B)
    mu given:    E[s_lambda(A Z) s_mu(Z^+ B)] = delta H_lambda s_lambda(A B)
    """
    from .symfun import schur_from_eigenvalues
    from .weights import hook_product

    if lam.length > n:
        raise ValueError("need l(lambda) <= n")
    Ad = np.diag(np.array([float(a) for a in A], dtype=complex))
    Bd = np.diag(np.array([float(b) for b in B], dtype=complex))
    H = hook_product(lam)
    if mu is None:
        exact = (
            Fraction(H)
            * schur_from_eigenvalues(lam, list(A))
            * schur_from_eigenvalues(lam, list(B))
        )

        def values(count, gen):
            Z = sample_ginibre_batch(n, count, gen)
            Zh = np.conjugate(np.transpose(Z, (0, 2, 1)))
            return np.real(schur_of_matrix(lam, Ad @ Z @ Bd @ Zh))

    else:
        AB = [a * b for a, b in zip(A, B)]
        exact = (
            Fraction(H) * schur_from_eigenvalues(lam, AB) if lam == mu else Fraction(0)
        )

        def values(count, gen):
            Z = sample_ginibre_batch(n, count, gen)
            Zh = np.conjugate(np.transpose(Z, (0, 2, 1)))
            return np.real(
                schur_of_matrix(lam, Ad @ Z) * schur_of_matrix(mu, Zh @ Bd)
            )

    est = _blocked_mean(values, samples, seed)
    return _mc_report("ginibre", lam, mu, est, exact, sigma)


def _mc_report(kind: str, lam, mu, est: MCEstimate, exact, sigma: float = 3.0) -> dict:
    exact_f = float(exact)
    return {
        "kind": kind,
        "lambda": str(lam),
        "mu": str(mu) if mu is not None else None,
        "estimate": est.mean,
        "std_error": est.std_error,
        "samples": est.samples,
        "exact": f"{_as_fraction(exact).numerator}/{_as_fraction(exact).denominator}",
        "exact_float": exact_f,
        "z": est.z_score(exact_f),
        "sigma": sigma,
        "pass": est.within_sigma(exact_f, sigma),
    }


# -- exact Wick pairing oracle ------------------------------------------------


def _all_pairings(items: list):
    """All perfect pairings of the given positions."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for idx, other in enumerate(rest):
        head = (first, other)
        for tail in _all_pairings(rest[:idx] + rest[idx + 1:]):
            yield [head] + tail


def wick_gaussian_moment(trace_powers: Sequence[int]) -> Poly1:
    """E[prod_i Tr M^{k_i}] for the Hermitian Gaussian with propagator
    <M_ab M_cd> = delta_ad delta_bc * v, as a polynomial in N with the
    power v^(sum k / 2) left implicit (v = 1/(N g) in the quartic model).

    Each pairing contributes N^(number of index loops); loops are counted by
    union-find over the row-index variables after contraction.
    """
    T = sum(trace_powers)
    if T % 2:
        raise ValueError("odd total power: moment vanishes")
    if T == 0:
        return Poly1([1])
    # successor map within each trace cycle
    succ = {}
    base = 0
    for k in trace_powers:
        for p in range(base, base + k):
            succ[p] = base + (p - base + 1) % k
        base += k
    total = Poly1([])
    for pairing in _all_pairings(list(range(T))):
        parent = list(range(T))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        # pairing (p, q): row(p) ~ row(succ(q)), row(q) ~ row(succ(p))
        for p, q in pairing:
            union(p, succ[q])
            union(q, succ[p])
        loops = sum(1 for x in range(T) if find(x) == x)
        total = total + Poly1([0] * loops + [1])
    return total


def quartic_wick_order(k: int) -> Poly1:
    """Coefficient of (g4/g^2)^k in the normalized quartic partition function
    from the Wick oracle.

    The coupling map g4 = -4 t4 / N, g = 1/(2 N t2*) makes the effective
    quartic vertex (-N g4 / 4) Tr M^4, so the order-k coefficient is
    (-1)^k W_k(N) / (4^k k! N^k) with W_k = E[(Tr M^4)^k] (N g)^(2k).
    Equivalently, in the two-matrix couplings the identity reads
    sum_{|lambda|=4k} (N)_lambda a_lambda b_lambda = 4^k W_k(N) / k!.
    """
    W = wick_gaussian_moment([4] * k)
    poly = W.shift_divide(k)
    return poly * Fraction((-1) ** k, math.factorial(k) * 4**k)


# -- moment measures -----------------------------------------------------------


class DivergenceError(ArithmeticError):
    """A quadrature failed to converge."""


def moment_real_imaginary(n: int, m: int, eps: float) -> complex:
    """Regularized moment integral over the real x axis and imaginary y axis:

        I_eps = int int x^n y^m e^{-x y} e^{-eps(x^2+s^2)} dx dy,  y = i s,

    with the y axis oriented from +i infinity to -i infinity (the orientation
    that makes the diagonal value -2 pi i n!).  The oscillatory s integral is
    a Gaussian Fourier transform done in closed form,

        int s^m e^{-eps s^2 - i x s} ds = i^m (d/dx)^m G(x),
        G(x) = sqrt(pi/eps) exp(-x^2/(4 eps)),

    leaving a concentrated real 1-D integral in x (quadrature after the
    rescaling x = 2 sqrt(eps) u).  As eps -> 0 the value converges to
    -2 pi i delta_{nm} n! with O(eps^2) error.
    """
    # In the scaled variable u = x/(2 sqrt(eps)):
    #   (d/dx)^m G(x) = (2 sqrt(eps))^-m sqrt(pi/eps) (-1)^m H_m(u) e^{-u^2}
    # with H_m the physicists' Hermite polynomial (O(1) coefficients, so no
    # cancellation blowup at small eps).
    hm = [np.polynomial.Polynomial([1.0]), np.polynomial.Polynomial([0.0, 2.0])]
    for k in range(1, m):
        hm.append(
            np.polynomial.Polynomial([0.0, 2.0]) * hm[k]
            - hm[k - 1] * (2.0 * k)
        )
    Hm = hm[m] if m >= 1 else hm[0]
    s2e = 2.0 * math.sqrt(eps)
    prefac = (-1.0) ** m * s2e ** (1 - m) * math.sqrt(math.pi / eps)

    def integrand(u):
        x = s2e * u
        return (x**n) * math.exp(-eps * x * x) * Hm(u) * math.exp(-u * u) * prefac

    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(
            integrand, -14.0, 14.0, limit=400, epsabs=1e-12, epsrel=1e-11
        )
    scale_ref = abs(prefac) * s2e**n * max(1.0, float(math.factorial(max(n, m))))
    if err > 1e-7 * max(abs(val), scale_ref):
        raise DivergenceError(f"x-quadrature error {err}")
    # reassemble: dy = i ds with downward orientation -> overall factor -i;
    # y^m = i^m s^m; the s integral contributed another i^m
    return (1j ** m) * (1j ** m) * (-1j) * val


def moment_real_imaginary_limit(n: int, m: int, eps: float = 1e-4) -> complex:
    """Richardson-extrapolated eps -> 0 limit of the regularized moment
    (the leading regularization error is linear in eps)."""
    v1 = moment_real_imaginary(n, m, eps)
    v2 = moment_real_imaginary(n, m, eps / 2)
    return 2 * v2 - v1


def moment_circle(n: int, m: int, grid: int = 256) -> complex:
    """oint oint x^n y^m e^{1/(x y)} dx dy/(x y) on the unit circles,
    spectrally accurate trapezoid; equals -4 pi^2 delta_{nm} / n!."""
    phi = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)
    psi = phi[:, None]
    x = np.exp(1j * phi)[None, :]
    y = np.exp(1j * psi)
    f = x**n * y**m * np.exp(1.0 / (x * y))
    # dx dy/(x y) = (i dphi)(i dpsi) = -dphi dpsi
    val = -np.sum(f) * (2 * np.pi / grid) ** 2
    return complex(val)


def moment_unit_interval(n: int, a: Fraction) -> float:
    """int_0^1 x^n (1-x)^(-a) dx for Re a < 1 (the 1F0 measure)."""
    af = float(a)

    def integrand(x):
        return x**n * (1.0 - x) ** (-af)

    val, err = integrate.quad(integrand, 0.0, 1.0, limit=200)
    if err > 1e-10 * max(1.0, abs(val)):
        raise DivergenceError(f"quadrature error {err}")
    return val


def moment_halfline_pfs(n: int, a: Sequence, b: Sequence) -> float:
    """int_0^infty x^n pFs(a; b; -x) dx for p <= s (convergent case)."""
    import mpmath

    al = [mpmath.mpf(float(x)) for x in a]
    bl = [mpmath.mpf(float(x)) for x in b]

    def integrand(x):
        return float(x**n * mpmath.hyper(al, bl, -x))

    val, err = integrate.quad(integrand, 0.0, np.inf, limit=400)
    if err > 1e-8 * max(1.0, abs(val)):
        raise DivergenceError(f"quadrature error {err}")
    return val


def halfline_exact(n: int, a: Sequence, b: Sequence) -> Fraction:
    """(-)^((n+1)(p-s)) n! prod (1-b_i)_{n+1} / prod (1-a_i)_{n+1}."""
    p, s = len(a), len(b)
    num = Fraction(math.factorial(n))
    for bi in b:
        num *= pochhammer(1 - _as_fraction(bi), n + 1)
    den = Fraction(1)
    for ai in a:
        den *= pochhammer(1 - _as_fraction(ai), n + 1)
    sign = Fraction((-1) ** ((n + 1) * (p - s)))
    return sign * num / den


@dataclass
class MomentMeasure:
    """The one-variable measure series mu_r(x) = sum_m x^m / (r(-1)...r(-m)).

    The term ratio at step m is 1/r(-m); ``closed_form`` is an optional tag
    ("exp", "pfs", ...) recording a known resummation.
    """

    r: ContentFunction
    coeffs: list
    closed_form: Optional[str] = None

    @classmethod
    def from_content(cls, r: ContentFunction, D: int, closed_form: Optional[str] = None):
        return cls(r, mu_series_coeffs(r, D), closed_form)

    def annihilation_residual(self) -> list:
        return mu_annihilation_residual(self.coeffs, self.r)


def mu_series_coeffs(r: ContentFunction, D: int) -> list[Fraction]:
    """The formal measure series mu_r(x) = 1 + x/r(-1) + x^2/(r(-1)r(-2)) + ...
    (requires r(0) = 0 and r(-m) != 0 on the window)."""
    out = [Fraction(1)]
    acc = Fraction(1)
    for m in range(1, D + 1):
        rm = r(-m)
        if rm == 0:
            raise ZeroDivisionError(f"r(-{m}) = 0: measure series undefined")
        acc /= rm
        out.append(acc)
    return out


def mu_annihilation_residual(coeffs: Sequence[Fraction], r: ContentFunction) -> list[Fraction]:
    """Residual of (1 - (1/x) r(-D_x)) mu through degree D-1:
    coefficient at x^m is c_m - c_{m+1} r(-(m+1))."""
    out = []
    for m in range(len(coeffs) - 1):
        out.append(coeffs[m] - coeffs[m + 1] * r(-(m + 1)))
    return out
