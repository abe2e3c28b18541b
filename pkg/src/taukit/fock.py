"""Truncated charged free-fermion Fock space on the partition/Maya basis.

A basis state is a pair (lambda, n): the Maya particle configuration
{ n + lambda_i - i : i >= 1 } on the integer lattice, with every site deep
enough always occupied.  All operators used here move one particle at a
time; the fermionic sign of a move is (-1)^(number of occupied sites
strictly between source and target), which is the wedge-ordering sign for
the annihilate-then-create order and is validated against the classical
sign formulas by the test suite.

Coefficients are duck-typed: exact Fractions for numeric work, PolySeries
for symbolic times.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence

from .partitions import Partition, partitions_of
from .symfun import PolySeries
from .weights import ContentFunction

# z_mu^-1 coefficients for expressing h_k in power sums are rebuilt on the
# fly; they are tiny for the weights used here.


class FockState:
    """Basis vector |lambda, n>."""

    __slots__ = ("lam", "charge")

    def __init__(self, lam: Partition, charge: int):
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "charge", int(charge))

    def __setattr__(self, *a):
        raise AttributeError("FockState is immutable")

    @property
    def weight(self) -> int:
        return self.lam.weight

    def maya(self, floor: int) -> list[int]:
        """Occupied sites >= floor, descending (all sites < floor occupied).

        floor must not exceed charge - length(lam) or deep rows would be cut.
        """
        n, lam = self.charge, self.lam
        if floor > n - lam.length:
            raise ValueError("floor cuts into the partition rows")
        out = []
        i = 1
        while True:
            pos = n + lam.part(i) - i
            if pos < floor:
                break
            out.append(pos)
            i += 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, FockState)
            and self.lam == other.lam
            and self.charge == other.charge
        )

    def __hash__(self):
        return hash((self.lam, self.charge))

    def __repr__(self):
        return f"|{self.lam}, {self.charge}>"


def _state_from_maya(positions: list[int], floor: int, charge: int) -> FockState:
    """Rebuild (lambda, charge) from explicit occupied sites >= floor."""
    parts = []
    for i, pos in enumerate(positions, start=1):
        parts.append(pos - charge + i)
    while parts and parts[-1] == 0:
        parts.pop()
    return FockState(Partition(parts), charge)


class WindowOverflowError(RuntimeError):
    """An operator needed a state beyond the configured weight window."""


class FockVector:
    """Finitely supported map FockState -> coefficient with a weight cutoff.

    Components whose partition weight exceeds the cutoff are dropped and the
    ``truncated`` flag records that this happened.
    """

    __slots__ = ("amps", "cutoff", "truncated")

    def __init__(self, amps: Optional[dict] = None, cutoff: int = 0, truncated: bool = False):
        self.cutoff = int(cutoff)
        self.truncated = truncated
        self.amps = {}
        if amps:
            for st, c in amps.items():
                if _is_zero(c):
                    continue
                if st.weight > self.cutoff:
                    self.truncated = True
                    continue
                self.amps[st] = c

    @classmethod
    def vacuum(cls, charge: int, cutoff: int) -> "FockVector":
        return cls({FockState(Partition(), charge): Fraction(1)}, cutoff)

    @classmethod
    def basis(cls, lam: Partition, charge: int, cutoff: int) -> "FockVector":
        return cls({FockState(lam, charge): Fraction(1)}, cutoff)

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.cutoff != other.cutoff:
            raise ValueError("cutoff mismatch")
        out = dict(self.amps)
        for st, c in other.amps.items():
            s = out.get(st, 0) + c
            if _is_zero(s):
                out.pop(st, None)
            else:
                out[st] = s
        return FockVector(out, self.cutoff, self.truncated or other.truncated)

    def scaled(self, c) -> "FockVector":
        if _is_zero(c):
            return FockVector({}, self.cutoff, self.truncated)
        return FockVector(
            {st: v * c for st, v in self.amps.items()}, self.cutoff, self.truncated
        )

    def is_zero(self) -> bool:
        return not self.amps

    def coeff(self, lam: Partition, charge: int):
        return self.amps.get(FockState(lam, charge), Fraction(0))

    def __repr__(self):
        bits = [f"({c})*{st}" for st, c in list(self.amps.items())[:6]]
        more = " + ..." if len(self.amps) > 6 else ""
        return " + ".join(bits) + more if bits else "0"


def _is_zero(c) -> bool:
    if isinstance(c, PolySeries):
        return c.is_zero()
    return c == 0


def pair(bra: FockVector, ket: FockVector):
    """Orthonormal pairing <lambda,n | mu,m> = delta delta, bilinear."""
    small, big = (bra, ket) if len(bra.amps) <= len(ket.amps) else (ket, bra)
    total = None
    for st, c in small.amps.items():
        d = big.amps.get(st)
        if d is None:
            continue
        piece = c * d
        total = piece if total is None else total + piece
    return Fraction(0) if total is None else total


# -- elementary moves -------------------------------------------------------


def _single_moves(state: FockState, shift: int, weight_of: Callable[[int, int], object]):
    """All single-particle moves source -> source - shift.

    Yields (coefficient, new_state).  weight_of(src, dst) returns the scalar
    carried by the move (before the fermionic sign); the sign is
    (-1)^(occupied sites strictly between source and target).
    """
    n, lam = state.charge, state.lam
    floor = n - lam.length - abs(shift) - 1
    maya = state.maya(floor)
    occ = set(maya)
    for src in maya:
        dst = src - shift
        if dst < floor:
            continue  # deep in the sea: target occupied
        if dst in occ:
            continue
        lo, hi = (src, dst) if src < dst else (dst, src)
        between = sum(1 for p in occ if lo < p < hi)
        w = weight_of(src, dst)
        if _is_zero(w):
            continue
        if between % 2:
            w = w * (-1)
        new_positions = sorted((occ - {src}) | {dst}, reverse=True)
        yield (w, _state_from_maya(new_positions, floor, n))


def _range_product(r: ContentFunction, lo: int, hi: int):
    """prod of r(k) for k in (lo, hi] (lo < hi)."""
    out = Fraction(1)
    for k in range(lo + 1, hi + 1):
        out *= r(k)
    return out


class FockOperator:
    """A charge-preserving one-particle-move operator (or a diagonal one).

    kinds:
      H(m):      sum_k psi_k psi*_{k+m}, moves src -> src - m, weight 1
      A(m, r):   raising part of the deformed family; -A(m) carries
                 + prod r over the traversed window (src, src+m]
      At(m, rt): lowering family with rt over (src-m, src]
      diag(f):   multiplies |lambda, n> by f(lambda, n)
    """

    def __init__(self, kind: str, m: int = 0, r: Optional[ContentFunction] = None,
                 diag_fn: Optional[Callable] = None):
        self.kind = kind
        self.m = m
        self.r = r
        self.diag_fn = diag_fn

    @classmethod
    def H(cls, m: int) -> "FockOperator":
        if m == 0:
            raise ValueError("H_0 is not part of the Heisenberg family here")
        return cls("H", m=m)

    @classmethod
    def minus_A(cls, m: int, r: ContentFunction) -> "FockOperator":
        """The operator -A_m: raises the weight by m with r-products."""
        if m < 1:
            raise ValueError("m must be >= 1")
        return cls("mA", m=m, r=r)

    @classmethod
    def A_tilde(cls, m: int, rt: ContentFunction) -> "FockOperator":
        """The operator Atilde_m: lowers the weight by m with rt-products."""
        if m < 1:
            raise ValueError("m must be >= 1")
        return cls("At", m=m, r=rt)

    @classmethod
    def diagonal(cls, fn: Callable) -> "FockOperator":
        return cls("diag", diag_fn=fn)

    def weight_shift(self) -> int:
        if self.kind == "H":
            return -self.m
        if self.kind == "mA":
            return self.m
        if self.kind == "At":
            return -self.m
        return 0

    def apply(self, v: FockVector) -> FockVector:
        out: dict = {}
        truncated = v.truncated
        for st, c in v.amps.items():
            if self.kind == "diag":
                val = self.diag_fn(st.lam, st.charge)
                if not _is_zero(val):
                    _accum(out, st, c * val)
                continue
            if self.kind == "H":
                shift, wfn = self.m, (lambda s, d: Fraction(1))
            elif self.kind == "mA":
                r = self.r
                shift = -self.m
                wfn = lambda s, d, r=r: _range_product(r, s, d)
            else:  # At
                r = self.r
                shift = self.m
                wfn = lambda s, d, r=r: _range_product(r, d, s)
            for w, ns in _single_moves(st, shift, wfn):
                if ns.weight > v.cutoff:
                    truncated = True
                    continue
                _accum(out, ns, c * w)
        return FockVector(out, v.cutoff, truncated)


def _accum(d: dict, st: FockState, val):
    s = d.get(st, 0) + val
    if _is_zero(s):
        d.pop(st, None)
    else:
        d[st] = s


def apply_operator(op: FockOperator, v: FockVector) -> FockVector:
    return op.apply(v)


# -- polynomial families ----------------------------------------------------


def _zmu_inverse(mu: Partition) -> Fraction:
    """1/z_mu with z_mu = prod i^{m_i} m_i!."""
    from math import factorial

    z = 1
    for part, mult in mu.multiplicities().items():
        z *= part**mult * factorial(mult)
    return Fraction(1, z)


def _family_power(family: str, m: int, r: Optional[ContentFunction]) -> FockOperator:
    """The power-sum slot p_m of the operator family."""
    if family == "H":
        return FockOperator.H(m)
    if family == "H*":
        return FockOperator.H(-m)
    if family == "-A":
        return FockOperator.minus_A(m, r)
    if family == "At":
        return FockOperator.A_tilde(m, r)
    raise ValueError(f"unknown family {family!r}")


def h_of_operators(k: int, family: str, v: FockVector, r: Optional[ContentFunction] = None) -> FockVector:
    """h_k evaluated on an operator family, applied to v:
    h_k = sum_{|mu|=k} z_mu^{-1} p_mu with p_m the family generator."""
    if k == 0:
        return v
    out = FockVector({}, v.cutoff)
    for mu in partitions_of(k):
        w = v
        for part in mu.parts:
            w = _family_power(family, part, r).apply(w)
            if w.is_zero():
                break
        if not w.is_zero():
            out = out + w.scaled(_zmu_inverse(mu))
    return out


def schur_of_operators(
    lam: Partition, family: str, v: FockVector, r: Optional[ContentFunction] = None
) -> FockVector:
    """s_lambda of a commuting operator family applied to v (Jacobi-Trudi).

    The determinant is expanded over permutations; family components commute
    so the ordering inside each product is immaterial.
    """
    from itertools import permutations

    n = lam.length
    if n == 0:
        return v
    out = FockVector({}, v.cutoff)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        ks = [lam.part(i + 1) - (i + 1) + (perm[i] + 1) for i in range(n)]
        if any(k < 0 for k in ks):
            continue
        w = v
        for k in ks:
            w = h_of_operators(k, family, w, r=r)
            if w.is_zero():
                break
        if not w.is_zero():
            out = out + w.scaled(Fraction(sign))
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def exp_action(
    terms: Sequence[tuple[object, FockOperator]], v: FockVector
) -> FockVector:
    """exp(sum_m c_m Op_m) applied to v, truncated at the vector's cutoff.

    The generator is applied as a whole, so the terms need not commute with
    each other for the truncation to be consistent (ours do anyway).
    """
    out = v
    acc = v
    k = 1
    while True:
        nxt = FockVector({}, v.cutoff)
        for c, op in terms:
            piece = op.apply(acc)
            if not piece.is_zero():
                nxt = nxt + piece.scaled(c)
        nxt = nxt.scaled(Fraction(1, k))
        if nxt.is_zero():
            break
        out = out + nxt
        acc = nxt
        k += 1
        if k > 4 * v.cutoff + 8:
            raise WindowOverflowError("exponential failed to truncate")
    return out


# -- single fermion modes ---------------------------------------------------


def psi_apply(v: FockVector, site: int, create: bool) -> FockVector:
    """Apply a single fermion mode (creation when ``create`` else
    annihilation) at a lattice site.  Charge changes by +/- 1.

    Signs follow the wedge ordering: inserting or removing a site picks up
    (-1)^(occupied sites above it).
    """
    out: dict = {}
    truncated = v.truncated
    for st, c in v.amps.items():
        n, lam = st.charge, st.lam
        floor = min(site, n - lam.length) - 1
        maya = st.maya(floor)
        occ = set(maya)
        if create:
            if site in occ or site < floor:
                continue
            above = sum(1 for p in occ if p > site)
            sign = -1 if above % 2 else 1
            positions = sorted(occ | {site}, reverse=True)
            ns = _state_from_maya(positions, floor, n + 1)
        else:
            if site not in occ:
                continue
            above = sum(1 for p in occ if p > site)
            sign = -1 if above % 2 else 1
            positions = sorted(occ - {site}, reverse=True)
            ns = _state_from_maya(positions, floor, n - 1)
        if ns.weight > v.cutoff:
            truncated = True
            continue
        _accum(out, ns, c * sign)
    return FockVector(out, v.cutoff, truncated)


# -- diagonal charge operator and traces -------------------------------------


def h0_eigenvalue(r: ContentFunction, lam: Partition, n: int) -> Fraction:
    """Eigenvalue of the diagonal charge operator on |lambda, n>, relative to
    the charge-n vacuum (vacuum eigenvalue normalized to 1).

    Computed from the Maya data: extra particles above the sea contribute
    prod_{k=n..p} r(k), holes contribute prod_{k=q+1..n-1} r(k), which
    telescopes to the content product without ever forming it cell by cell.
    """
    alphas, betas = lam.frobenius()
    out = Fraction(1)
    for a in alphas:
        p = n + a
        for k in range(n, p + 1):
            out *= r(k)
    for b in betas:
        q = n - 1 - b
        for k in range(q + 1, n):
            out *= r(k)
    return out


def diag_charge_operator(r: ContentFunction) -> FockOperator:
    """The diagonal operator with eigenvalue r_lambda(n) on |lambda, n>,
    normalized so every charge-sector vacuum has eigenvalue 1."""
    return FockOperator.diagonal(lambda lam, n: h0_eigenvalue(r, lam, n))


def trace_h0(r: ContentFunction, n: int, D: int) -> list[Fraction]:
    """Graded trace over the charge-n sector: [sum_{|lambda|=d} r_lambda(n)]
    for d = 0..D, via the diagonal operator on the Maya basis."""
    op = diag_charge_operator(r)
    out = []
    for d in range(D + 1):
        tot = Fraction(0)
        for lam in partitions_of(d):
            v = FockVector.basis(lam, n, D)
            w = op.apply(v)
            tot += w.coeff(lam, n)
        out.append(tot)
    return out


# -- Lemma-style constructions ----------------------------------------------


def state_from_modes(i_list: Sequence[int], j_list: Sequence[int], cutoff: int) -> FockVector:
    """psi*_{-j_1} ... psi*_{-j_k} psi_{i_s} ... psi_{i_1} |0>.

    The string acts right to left: creation at i_1 first, ..., i_s last,
    then annihilation at -j_k first, ..., -j_1 last.
    """
    v = FockVector.vacuum(0, cutoff)
    for i in i_list:
        v = psi_apply(v, i, create=True)
        if v.is_zero():
            return v
    for j in reversed(list(j_list)):
        v = psi_apply(v, -j, create=False)
        if v.is_zero():
            return v
    return v


def lemma_partition(i_list: Sequence[int], j_list: Sequence[int]) -> Partition:
    """Assemble the partition labeled by the mode indices
    (i_1 > ... > i_s >= 0, j_1 > ... > j_k >= 1, s >= k): the first s-k parts
    are i_u - (s-k) + u, the rest is the Frobenius block
    (i_{s-k+1}, ..., i_s | j_1 - 1, ..., j_k - 1)."""
    s, k = len(i_list), len(j_list)
    if k > s:
        raise ValueError("need s >= k")
    head = [i_list[u - 1] - (s - k) + u for u in range(1, s - k + 1)]
    alphas = list(i_list[s - k:])
    betas = [j - 1 for j in j_list]
    from .partitions import from_frobenius

    tail = from_frobenius(alphas, betas) if alphas else Partition()
    return Partition(head + list(tail.parts))


def lemma1_sign(i_list: Sequence[int], j_list: Sequence[int]) -> int:
    s, k = len(i_list), len(j_list)
    e = sum(j_list) + (k - s) * (k - s + 1) // 2
    return -1 if e % 2 else 1


def lemma1_check(i_list: Sequence[int], j_list: Sequence[int]) -> dict:
    """Check <s-k| e^{H(t)} psi*_{-j_1}..psi*_{-j_k} psi_{i_s}..psi_{i_1} |0>
    against the signed Schur function of the assembled partition.

    Index constraints: i_1 > ... > i_s >= 0, j_1 > ... > j_k >= 1, s >= k.
    The window is chosen automatically from the mode indices so intermediate
    states are never truncated.
    """
    i_list = tuple(i_list)
    j_list = tuple(j_list)
    s, k = len(i_list), len(j_list)
    if any(a <= b for a, b in zip(i_list, i_list[1:])) or (i_list and i_list[-1] < 0):
        raise ValueError("need i_1 > ... > i_s >= 0")
    if any(a <= b for a, b in zip(j_list, j_list[1:])) or (j_list and j_list[-1] < 1):
        raise ValueError("need j_1 > ... > j_k >= 1")
    if k > s:
        raise ValueError("need s >= k")
    lam = lemma_partition(i_list, j_list)
    from .symfun import PolyRing, Times, schur

    D = max(lam.weight, 1)
    window = sum(i_list) + sum(j_list) + s + k + 2
    ring = PolyRing.times_ring(D, cap=D)
    ts = Times.symbolic(ring, D)
    v = state_from_modes(i_list, j_list, window)
    charge = s - k
    vac = FockVector.vacuum(charge, window)
    Z = exp_action(
        [(ts.get(m), FockOperator.H(-m)) for m in range(1, D + 1)], vac
    )
    got = pair(Z, v)
    expect = schur(lam, ts) * lemma1_sign(i_list, j_list)
    got = got if isinstance(got, PolySeries) else ring.const(got)
    expect = expect if isinstance(expect, PolySeries) else ring.const(expect)
    return {
        "i": i_list,
        "j": j_list,
        "partition": lam,
        "ok": got == expect,
        "got": got,
        "expected": expect,
    }
