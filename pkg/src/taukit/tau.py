"""Tau functions of hypergeometric type.

The central object is the truncated double Schur series

    tau_r(n, t, t*) = sum_lambda r_lambda(n) s_lambda(t) s_lambda(t*),

with each side of the series specialized to formal times, an eigenvalue
list, the weight vector t(a) = (a/1, a/2, ...), the exponential point
(1, 0, 0, ...) or the q-geometric point.  On top of the series sit the
hypergeometric families, determinant representations, the bilinear (Hirota)
residual, one-variable ODE and q-difference residuals, and the wave
(Baker-Akhiezer) coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .partitions import Partition, enumerate_partitions
from .symfun import (
    PolyRing,
    PolySeries,
    Times,
    _as_fraction,
    h_list,
    miwa,
    schur,
)
from .weights import (
    ContentFunction,
    ContentPoleError,
    ContentZeroError,
    QRationalContent,
    RationalContent,
    content_product,
)

# -- side specializations -------------------------------------------------


class Side:
    """How one argument slot of the tau function is specialized."""

    def times(self, D: int) -> Optional[Times]:  # pragma: no cover - abstract
        raise NotImplementedError

    def length_cap(self) -> Optional[int]:
        return None

    def describe(self) -> str:  # pragma: no cover - abstract
        raise NotImplementedError


class Formal(Side):
    """Keep the side as formal times; the Schur factor stays symbolic."""

    def times(self, D):
        return None

    def describe(self):
        return "formal"


class Eigs(Side):
    """Eigenvalue list x^N via the Miwa map; restricts l(lambda) <= N."""

    def __init__(self, xs: Sequence):
        self.xs = [_as_fraction(x) for x in xs]

    def times(self, D):
        return miwa(self.xs, max(D, 1))

    def length_cap(self):
        return len(self.xs)

    def describe(self):
        return f"eigs({self.xs})"


class WeightA(Side):
    """t(a) = (a/1, a/2, a/3, ...)."""

    def __init__(self, a):
        self.a = _as_fraction(a)

    def times(self, D):
        return Times.weight_a(self.a, max(D, 1))

    def describe(self):
        return f"t(a={self.a})"


class TInf(Side):
    """t_infinity = (1, 0, 0, ...); s_lambda becomes 1/H_lambda."""

    def times(self, D):
        return Times.exp_point(max(D, 1))

    def describe(self):
        return "t_inf"


class QGeo(Side):
    """t*_m = 1/(m(1-q^m)); s_lambda becomes q^{n(lambda)}/H_lambda(q)."""

    def __init__(self, q):
        self.q = _as_fraction(q)

    def times(self, D):
        return Times.q_geometric(self.q, max(D, 1))

    def describe(self):
        return f"qgeo(q={self.q})"


class TauSpec:
    """Parameters that fully determine a tau series: r, charge, both sides."""

    def __init__(self, r: ContentFunction, n: int, tside: Side, uside: Side):
        self.r = r
        self.n = int(n)
        self.tside = tside
        self.uside = uside

    def describe(self) -> str:
        return (
            f"tau(r={self.r!r}, n={self.n}, t={self.tside.describe()}, "
            f"t*={self.uside.describe()})"
        )


class TauSeries:
    """Truncated tau series: partition -> exact coefficient.

    The stored coefficient is r_lambda(n) times the numeric Schur factors of
    every specialized side; formal sides keep their s_lambda factor implicit
    (expand with ``as_polyseries``).
    """

    def __init__(self, spec: TauSpec, D: int, coeffs: dict):
        self.spec = spec
        self.D = int(D)
        self.coeffs = {lam: c for lam, c in coeffs.items() if c != 0}

    def coeff(self, lam: Partition) -> Fraction:
        return self.coeffs.get(lam, Fraction(0))

    def items(self):
        """Coefficients in the canonical graded reverse-lex order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0])

    def n_formal_sides(self) -> int:
        return sum(
            1 for s in (self.spec.tside, self.spec.uside) if isinstance(s, Formal)
        )

    def as_polyseries(self, ring: Optional[PolyRing] = None) -> PolySeries:
        """Expand the formal sides into an explicit polynomial.

        Two formal sides -> bivariate ring (t block then u block); one formal
        side -> times ring; zero formal sides -> a constant series.  When a
        ring is supplied its block structure is respected (the u block is the
        upper half of the variables).
        """
        nf = self.n_formal_sides()
        if ring is None:
            K = self.D
            if nf == 2:
                ring = PolyRing.bi_times_ring(K, cap=2 * K)
            else:
                ring = PolyRing.times_ring(max(K, 1), cap=K)
        if nf == 0:
            total = sum(self.coeffs.values(), start=Fraction(0))
            return ring.const(total)
        if nf == 1:
            K = min(self.D, ring.nvars())
            tsym = Times.symbolic(ring, max(K, 1))
            out = ring.zero()
            for lam, c in self.coeffs.items():
                s = schur(lam, tsym)
                out = out + s * c
            return out
        ring_K = ring.nvars() // 2
        K = min(self.D, ring_K)
        small = PolyRing.times_ring(max(K, 1), cap=self.D)
        ssym = Times.symbolic(small, max(K, 1))
        out = ring.zero()
        for lam, c in self.coeffs.items():
            s = schur(lam, ssym)
            if not isinstance(s, PolySeries):
                s = small.const(s)
            out = out + _cross(ring, ring_K, s, s) * c
        return out

    def one_variable_coeffs(self) -> list[Fraction]:
        """Coefficients of (x)^m for a single-eigenvalue series (both sides
        specialized, one of them Eigs([x]) with x folded in)."""
        out = [Fraction(0)] * (self.D + 1)
        for lam, c in self.coeffs.items():
            out[lam.weight] += c
        return out

    def to_json(self) -> dict:
        return {
            str(lam): f"{c.numerator}/{c.denominator}" for lam, c in self.items()
        }


def _cross(ring: PolyRing, ring_K: int, st: PolySeries, su: PolySeries) -> PolySeries:
    """st(t) * su(t*) embedded into the bivariate ring (u = upper block)."""
    out: dict = {}
    for et, ct in st.terms.items():
        pt = tuple(et) + (0,) * (ring_K - len(et))
        for eu, cu in su.terms.items():
            e = pt + tuple(eu) + (0,) * (ring_K - len(eu))
            if ring.degree_of(e) > ring.cap:
                continue
            c = ct * cu
            if c:
                out[e] = out.get(e, Fraction(0)) + c
    return PolySeries(ring, out)


def _truncation_bounds(r: ContentFunction, n: int, D: int, lmax: int, cmax: int):
    """Row/column cutoffs induced by zeros of r, with poles rejected.

    Scanning away from the charge, a zero of r truncates the series (no
    partition can reach past it), while a pole before any zero is an error.
    """
    row_cap = lmax
    for k in range(1, lmax):
        try:
            v = r(n - k)
        except ContentPoleError:
            raise ContentPoleError(
                f"pole of r at {n - k} inside the content window"
            )
        if v == 0:
            row_cap = k
            break
    col_cap = cmax
    for k in range(1, cmax):
        try:
            v = r(n + k)
        except ContentPoleError:
            raise ContentPoleError(
                f"pole of r at {n + k} inside the content window"
            )
        if v == 0:
            col_cap = k
            break
    return row_cap, col_cap


def tau_series(spec: TauSpec, D: int, length_max: Optional[int] = None) -> TauSeries:
    """The truncated series sum_{|lambda| <= D} r_lambda(n) s_lambda s_lambda.

    Honors the length restriction from eigenvalue sides, an explicit
    ``length_max`` (for integrals whose length cut is not induced by r),
    and the zero-of-r truncation; poles of r inside the reachable content
    window are errors.
    """
    if D < 0:
        raise ValueError("cutoff must be >= 0")
    r, n = spec.r, spec.n
    lmax = D if length_max is None else min(D, length_max)
    for side in (spec.tside, spec.uside):
        cap = side.length_cap()
        if cap is not None:
            lmax = min(lmax, cap)
    row_cap, col_cap = _truncation_bounds(r, n, D, max(lmax, 1), max(D, 1))
    t_times = spec.tside.times(D)
    u_times = spec.uside.times(D)
    t_hs = h_list(t_times, D) if t_times is not None else None
    u_hs = h_list(u_times, D) if u_times is not None else None
    coeffs: dict[Partition, Fraction] = {}
    for lam in enumerate_partitions(D, length_max=min(lmax, row_cap), col_max=col_cap):
        c = content_product(r, n, lam)
        if c == 0:
            continue
        if t_times is not None:
            c *= schur(lam, t_times, hs=t_hs)
            if c == 0:
                continue
        if u_times is not None:
            c *= schur(lam, u_times, hs=u_hs)
            if c == 0:
                continue
        coeffs[lam] = c
    return TauSeries(spec, D, coeffs)


# -- hypergeometric families ------------------------------------------------


def hyper_pfs(
    a: Sequence,
    b: Sequence,
    M: int,
    argument: Side,
    D: int,
) -> TauSeries:
    """Hypergeometric series of (matrix) argument:
    sum (a_1+M)_lambda ... / (b_1+M)_lambda ... * s_lambda(arg) / H_lambda.

    Realized as tau_series with r(k) = prod(k+a_i)/prod(k+b_j) at charge M
    and t* at the exponential point.
    """
    r = RationalContent(a, b)
    return tau_series(TauSpec(r, M, argument, TInf()), D)


def hyper_two_arg(
    a: Sequence,
    b: Sequence,
    M: int,
    xs: Sequence,
    ys: Sequence,
    D: int,
) -> TauSeries:
    """Two-argument hypergeometric series with the (N)_lambda denominator.

    The content function gains the factor 1/(k + N - M); it is built here
    from (a, b, M, N) and never passed in by callers.
    """
    if len(xs) != len(ys):
        raise ValueError("x and y eigenvalue lists must have equal length")
    N = len(xs)
    r = RationalContent(list(a), list(b) + [Fraction(N - M)])
    return tau_series(TauSpec(r, M, Eigs(xs), Eigs(ys)), D)


def hyper_q(
    a: Sequence[int],
    b: Sequence[int],
    q,
    M: int,
    xs: Sequence,
    ys: Optional[Sequence] = None,
    D: int = 8,
) -> TauSeries:
    """Basic (q-deformed) hypergeometric series.

    Single set: weight q^{n(lambda)}/H_lambda(q) via the q-geometric t*.
    Two sets: the extra factor 1/(1 - q^{N-M+k}) enters the content function.
    """
    if ys is None:
        r = QRationalContent(a, b, q)
        return tau_series(TauSpec(r, M, Eigs(xs), QGeo(q)), D)
    if len(xs) != len(ys):
        raise ValueError("x and y eigenvalue lists must have equal length")
    N = len(xs)
    r = QRationalContent(list(a), list(b) + [N - M], q)
    return tau_series(TauSpec(r, M, Eigs(xs), Eigs(ys)), D)


def pfs_one_var_coeffs(a: Sequence, b: Sequence, D: int) -> list[Fraction]:
    """Taylor coefficients of the one-variable pFs by the term recurrence."""
    a = [_as_fraction(x) for x in a]
    b = [_as_fraction(x) for x in b]
    cs = [Fraction(1)]
    for m in range(D):
        num = Fraction(1)
        for ai in a:
            num *= ai + m
        den = Fraction(m + 1)
        for bj in b:
            den *= bj + m
        if den == 0:
            raise ContentPoleError(f"pFs parameter pole at term {m + 1}")
        cs.append(cs[-1] * num / den)
    return cs


def qphi_one_var_coeffs(a: Sequence[int], b: Sequence[int], q, D: int) -> list[Fraction]:
    """Taylor coefficients of the one-variable basic series pPhi_s."""
    q = _as_fraction(q)
    cs = [Fraction(1)]
    for m in range(D):
        num = Fraction(1)
        for ai in a:
            num *= 1 - q ** (ai + m)
        den = 1 - q ** (m + 1)
        for bj in b:
            den *= 1 - q ** (bj + m)
        if den == 0:
            raise ContentPoleError(f"qPhi parameter pole at term {m + 1}")
        cs.append(cs[-1] * num / den)
    return cs


# -- determinant representations -------------------------------------------


def one_variable_tau_coeffs(r: ContentFunction, m: int, u_times: Times, D: int) -> list:
    """Coefficients c_j of tau_r(m, t(x), t*) = sum_j c_j x^j for a single
    eigenvalue: only single-row partitions survive, so
    c_j = r(m) r(m+1) ... r(m+j-1) h_j(t*)."""
    hs = h_list(u_times, D)
    out = []
    rho = Fraction(1)
    for j in range(D + 1):
        if j > 0:
            rho *= r(m + j - 1)
        out.append(rho * hs[j])
    return out


class DetRepResult:
    """Both sides of a determinant identity, as exact polynomials.

    ``lhs`` is the Vandermonde-cleared series side, ``rhs`` the determinant
    side including its constant prefactor; ``matches`` compares them through
    the stated degree.
    """

    def __init__(self, lhs: PolySeries, rhs: PolySeries, degree: int, prefactor):
        self.lhs = lhs
        self.rhs = rhs
        self.degree = degree
        self.prefactor = prefactor

    def matches(self) -> bool:
        return self.lhs.filter_degree(self.degree) == self.rhs.filter_degree(self.degree)


def _vandermonde(ring: PolyRing, idx: Sequence[int]) -> PolySeries:
    out = ring.one()
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            out = out * (ring.var(idx[i]) - ring.var(idx[j]))
    return out


def _det_poly(rows: list[list[PolySeries]]) -> PolySeries:
    from .symfun import _det

    return _det(rows)


def det_rep_one_side(
    r: ContentFunction, M: int, N: int, uside: Side, D: int
) -> DetRepResult:
    """Milne-type determinant identity in the eigenvalue variables x^N:

    Delta(x) tau_r(M, t(x^N), t*) = det( x_i^{N-k} tau_r(M-k+1, t(x_i), t*) ).

    Expanded symbolically in x_1..x_N through total degree D + deg Delta.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    dv = N * (N - 1) // 2
    cap = D + dv
    ring = PolyRing(
        [f"x{i}" for i in range(1, N + 1)], [1] * N, cap
    )
    xs = [ring.var(i) for i in range(N)]
    u_times = uside.times(cap + N)
    if u_times is None:
        raise ValueError("the t* side must be specialized for this identity")
    # series side
    t_times = miwa(xs, cap)
    t_hs = h_list(t_times, cap)
    series = ring.zero()
    row_cap, col_cap = _truncation_bounds(r, M, D, N, max(D, 1))
    for lam in enumerate_partitions(D, length_max=min(N, row_cap), col_max=col_cap):
        c = content_product(r, M, lam)
        if c == 0:
            continue
        su = schur(lam, u_times)
        if su == 0:
            continue
        sx = schur(lam, t_times, hs=t_hs)
        series = series + sx * (c * su)
    delta = _vandermonde(ring, list(range(N)))
    lhs = delta * series
    # determinant side
    col_coeffs = [
        one_variable_tau_coeffs(r, M - k + 1, u_times, cap) for k in range(1, N + 1)
    ]
    rows = []
    for i in range(N):
        row = []
        for k in range(1, N + 1):
            acc = ring.zero()
            for j, cj in enumerate(col_coeffs[k - 1]):
                if cj == 0:
                    continue
                acc = acc + (xs[i] ** j) * cj
            row.append((xs[i] ** (N - k)) * acc)
        rows.append(row)
    rhs = _det_poly(rows)
    return DetRepResult(lhs, rhs, cap, Fraction(1))


def det_two_side_prefactor(r: ContentFunction, M: int, N: int) -> Fraction:
    """Constant relating Delta(x) Delta(y) tau to det(kernel):
    prod_{v=M-N+1}^{M-1} r(v)^(v-M), pinned by matching the leading
    coefficient (equivalently the N=1 and r=1 degenerations).
    """
    out = Fraction(1)
    for v in range(M - N + 1, M):
        rv = r(v)
        if rv == 0:
            raise ContentZeroError(f"det prefactor needs r({v}) != 0")
        out *= rv ** (v - M)
    return out


def det_rep_two_side(r: ContentFunction, M: int, N: int, D: int) -> DetRepResult:
    """Wick-type determinant identity on both eigenvalue sets:

    Delta(x) Delta(y) tau_r(M, t(x^N), t*(y^N))
        = prefactor * det( k(x_i, y_j) ),
    with the one-variable kernel k(x,y) = sum_m r(M-N+1)...r(M-N+m) (xy)^m.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    dv = N * (N - 1)
    cap = D + dv
    ring = PolyRing(
        [f"x{i}" for i in range(1, N + 1)] + [f"y{i}" for i in range(1, N + 1)],
        [1] * (2 * N),
        cap,
    )
    xs = [ring.var(i) for i in range(N)]
    ys = [ring.var(N + i) for i in range(N)]
    tx = miwa(xs, cap)
    ty = miwa(ys, cap)
    hx = h_list(tx, cap)
    hy = h_list(ty, cap)
    series = ring.zero()
    row_cap, col_cap = _truncation_bounds(r, M, D, N, max(D, 1))
    for lam in enumerate_partitions(D, length_max=min(N, row_cap), col_max=col_cap):
        c = content_product(r, M, lam)
        if c == 0:
            continue
        sx = schur(lam, tx, hs=hx)
        sy = schur(lam, ty, hs=hy)
        series = series + (sx * sy) * c
    lhs = _vandermonde(ring, list(range(N))) * _vandermonde(
        ring, list(range(N, 2 * N))
    ) * series
    # kernel entries
    m0 = M - N + 1
    rhos = [Fraction(1)]
    for j in range(1, cap // 2 + 1):
        rhos.append(rhos[-1] * r(m0 + j - 1))
    rows = []
    for i in range(N):
        row = []
        for j in range(N):
            acc = ring.zero()
            xy = xs[i] * ys[j]
            pw = ring.one()
            for m, rho in enumerate(rhos):
                if m > 0:
                    pw = pw * xy
                    if pw.is_zero():
                        break
                acc = acc + pw * rho
            row.append(acc)
        rows.append(row)
    pref = det_two_side_prefactor(r, M, N)
    rhs = _det_poly(rows) * pref
    return DetRepResult(lhs, rhs, cap, pref)


def deriv_det_prefactor(r: ContentFunction, n: int) -> Fraction:
    """prod_{v=1}^{n-1} r(v)^(v-n) for the derivative-determinant identity
    (the k = 0 factor is absent because r(0) = 0)."""
    out = Fraction(1)
    for v in range(1, n):
        rv = r(v)
        if rv == 0:
            raise ContentZeroError(f"derivative determinant needs r({v}) != 0")
        out *= rv ** (v - n)
    return out


def det_rep_derivatives(r: ContentFunction, n: int, D: int) -> DetRepResult:
    """For r(0) = 0 and n > 0:

    tau_r(n, t, t*) = prefactor * det( d^{a+b} tau_r(1, t, t*) / dt_1^a dt*_1^b ).

    Both sides are bivariate polynomials in (t, t*), compared through
    bidegree (D, D).
    """
    if r(0) != 0:
        raise ValueError("this identity needs r(0) = 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    J = D + n - 1
    ring = PolyRing.bi_times_ring(J, cap=2 * J)
    tau1 = tau_series(TauSpec(r, 1, Formal(), Formal()), J).as_polyseries(ring)
    rows = []
    for a in range(n):
        row = []
        base = tau1
        for _ in range(a):
            base = base.diff(0)
        for b in range(n):
            ent = base
            for _ in range(b):
                ent = ent.diff(J)
            row.append(ent)
        rows.append(row)
    rhs = _det_poly(rows) * deriv_det_prefactor(r, n)
    lhs = tau_series(TauSpec(r, n, Formal(), Formal()), D).as_polyseries(ring)
    lhs = _bidegree_filter(lhs, J, D)
    rhs = _bidegree_filter(rhs, J, D)
    return DetRepResult(lhs, rhs, 2 * D, deriv_det_prefactor(r, n))


def _bidegree_filter(f: PolySeries, K: int, D: int) -> PolySeries:
    """Keep monomials whose t-block and u-block weighted degrees are <= D."""
    ring = f.ring
    out = {}
    for e, c in f.terms.items():
        dt = sum(ei * w for ei, w in zip(e[:K], ring.weights[:K]))
        du = sum(ei * w for ei, w in zip(e[K:], ring.weights[K:]))
        if dt <= D and du <= D:
            out[e] = c
    return PolySeries(ring, out)


# -- residual checks --------------------------------------------------------


def hirota_residual(r: ContentFunction, n: int, D: int) -> PolySeries:
    """tau(n) d_t1 d_t1* tau(n) - d_t1 tau(n) d_t1* tau(n)
       - r(n) tau(n-1) tau(n+1),
    as a bivariate polynomial; identically zero through bidegree D-1 for
    every tau of hypergeometric type."""
    ring = PolyRing.bi_times_ring(D, cap=2 * D)
    tn = tau_series(TauSpec(r, n, Formal(), Formal()), D).as_polyseries(ring)
    tm = tau_series(TauSpec(r, n - 1, Formal(), Formal()), D).as_polyseries(ring)
    tp = tau_series(TauSpec(r, n + 1, Formal(), Formal()), D).as_polyseries(ring)
    d1 = tn.diff(0)
    du1 = tn.diff(D)
    residual = tn * d1.diff(D) - d1 * du1 - tm * tp * r(n)
    return _bidegree_filter(residual, D, D - 1)


def ode_residual(a: Sequence, b: Sequence, D: int) -> list[Fraction]:
    """Residual coefficients of the generalized hypergeometric operator

        prod_{k=0}^{s} (x d/dx + b_k - 1) - x prod_j (x d/dx + a_j),  b_0 = 1,

    applied to the truncated one-variable series; zero through degree D-1.
    """
    cs = pfs_one_var_coeffs(a, b, D)
    a = [_as_fraction(x) for x in a]
    b = [_as_fraction(x) for x in b]
    res = []
    for m in range(D):
        first = cs[m] * m
        for bk in b:
            first *= m + bk - 1
        second = cs[m - 1] if m >= 1 else Fraction(0)
        for aj in a:
            second *= m - 1 + aj
        res.append(first - second)
    return res


def q_difference_residual(a: Sequence[int], b: Sequence[int], q, D: int) -> list[Fraction]:
    """Residual of ((1/x)(1 - q^{x d/dx}) - r_q(x d/dx)) on the basic series;
    zero through degree D-1."""
    q = _as_fraction(q)
    cs = qphi_one_var_coeffs(a, b, q, D)
    rq = QRationalContent(a, b, q)
    res = []
    for m in range(D):
        res.append(cs[m + 1] * (1 - q ** (m + 1)) - cs[m] * rq(m))
    return res


# -- wave functions and symmetries ------------------------------------------


def baker_akhiezer(r: ContentFunction, n: int, u_times: Times, D: int) -> list:
    """Coefficients c_m of z^n (1 + sum_m c_m z^-m):
    c_m = r(n) r(n-1) ... r(n-m+1) h_m(-t*)."""
    hs = h_list(u_times.negate(), D)
    out = [Fraction(1)]
    rho = Fraction(1)
    for m in range(1, D + 1):
        rho *= r(n - m + 1)
        out.append(rho * hs[m])
    return out


def baker_akhiezer_dual(r: ContentFunction, n: int, u_times: Times, D: int) -> list:
    """Dual wave coefficients: c*_m = r(n) r(n+1) ... r(n+m-1) h_m(t*)."""
    hs = h_list(u_times, D)
    out = [Fraction(1)]
    rho = Fraction(1)
    for m in range(1, D + 1):
        rho *= r(n + m - 1)
        out.append(rho * hs[m])
    return out


def symmetry_checks(r: ContentFunction, n: int, D: int, scale=Fraction(2)) -> dict:
    """Verify the swap, reflection and scaling symmetries of the series.

    swap:       tau_r(n, t, t*) = tau_r(n, t*, t)
    reflection: tau_{r'}(-n, -t, -t*) = tau_r(n, t, t*) with r'(k) = r(-k)
    scaling:    invariant under t_m -> a^m t_m, t*_m -> a^-m t*_m
    """
    ring = PolyRing.bi_times_ring(D, cap=2 * D)
    base = tau_series(TauSpec(r, n, Formal(), Formal()), D).as_polyseries(ring)
    # swap: exchange the two variable blocks
    perm = list(range(D, 2 * D)) + list(range(0, D))
    swapped = base.rename_swap(perm)
    swap_ok = swapped == base
    # reflection
    refl = tau_series(
        TauSpec(r.reflected(), -n, Formal(), Formal()), D
    ).as_polyseries(ring)
    refl = refl.scale_vars([Fraction(-1)] * (2 * D))
    reflection_ok = refl == base
    # scaling
    a = _as_fraction(scale)
    factors = [a**m for m in range(1, D + 1)] + [a**-m for m in range(1, D + 1)]
    scaling_ok = base.scale_vars(factors) == base
    return {"swap": swap_ok, "reflection": reflection_ok, "scaling": scaling_ok}
