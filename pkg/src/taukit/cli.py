"""Command-line front end.

Subcommands: tau, hyper (pfs|two|qphi), model (quartic|two|hciz|nmm|gw|
unitary|gen43|loop), fock, oracle (haar|ginibre|wick|mu), verify.  All exact
values are printed as "num/den" strings; floats appear only in Monte Carlo
and quadrature reports and always carry their error estimate.  Exit codes:
0 success, 1 verification failure (with counterexample), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .partitions import Partition, enumerate_partitions
from .symfun import Times, cauchy_truncated
from .tau import (
    Eigs,
    Formal,
    QGeo,
    TauSpec,
    TInf,
    WeightA,
    det_rep_two_side,
    hirota_residual,
    hyper_pfs,
    hyper_q,
    hyper_two_arg,
    ode_residual,
    q_difference_residual,
    symmetry_checks,
    tau_series,
)
from .weights import parse_content
from . import models as models_mod
from . import oracle as oracle_mod
from . import fock as fock_mod


def _frac(text: str) -> Fraction:
    return Fraction(text)


def _frac_list(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    return [Fraction(tok) for tok in text.split(",")]


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_side(spec: str):
    """Side syntax: "t:K" (formal), "eigs:1,1/2", "ta:3/2", "inf", "qgeo:1/3"."""
    if spec.startswith("t:"):
        return Formal()
    if spec.startswith("eigs:"):
        return Eigs(_frac_list(spec[len("eigs:"):]))
    if spec.startswith("ta:"):
        return WeightA(Fraction(spec[len("ta:"):]))
    if spec == "inf":
        return TInf()
    if spec.startswith("qgeo:"):
        return QGeo(Fraction(spec[len("qgeo:"):]))
    raise ValueError(f"unknown side spec {spec!r}")


def _strip_volatile(obj):
    """Drop wall-clock fields so the result digest depends only on content."""
    if isinstance(obj, dict):
        return {
            k: _strip_volatile(v)
            for k, v in obj.items()
            if k not in ("seconds", "wall_time")
        }
    if isinstance(obj, list):
        return [_strip_volatile(v) for v in obj]
    return obj


def _emit(args, payload: dict) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for key, val in payload.items():
            if isinstance(val, dict):
                for k2, v2 in val.items():
                    writer.writerow([key, k2, v2])
            elif isinstance(val, list):
                for i, v2 in enumerate(val):
                    writer.writerow([key, i, v2])
            else:
                writer.writerow([key, val])
        out = buf.getvalue()
    else:
        out = json.dumps(payload, indent=2, default=str) + "\n"
    sys.stdout.write(out)
    if args.manifest:
        canon = json.dumps(_strip_volatile(payload), sort_keys=True, default=str)
        digest = hashlib.sha256(canon.encode()).hexdigest()
        manifest = {
            "config": {
                k: v for k, v in vars(args).items() if k not in ("func", "manifest")
            },
            "version": __version__,
            "wall_time": round(time.time() - args._t0, 6),
            "digest": digest,
        }
        with open(args.manifest, "w") as fh:
            json.dump(manifest, fh, indent=2, default=str)
            fh.write("\n")


# -- subcommand handlers -----------------------------------------------------


def cmd_tau(args) -> int:
    r = parse_content(args.r)
    spec = TauSpec(r, args.n, parse_side(args.t), parse_side(args.tstar))
    ts = tau_series(spec, args.deg)
    _emit(args, {"spec": spec.describe(), "deg": args.deg, "coefficients": ts.to_json()})
    return 0


def cmd_hyper_pfs(args) -> int:
    if args.x is not None:
        xs = _frac_list(args.x)
        ts = hyper_pfs(_frac_list(args.a), _frac_list(args.b), args.m, Eigs(xs), args.deg)
        if len(xs) == 1 and xs[0] == 1:
            coeffs = {str(d): _fmt(c) for d, c in enumerate(ts.one_variable_coeffs())}
        else:
            coeffs = ts.to_json()
    else:
        ts = hyper_pfs(_frac_list(args.a), _frac_list(args.b), args.m, Formal(), args.deg)
        coeffs = ts.to_json()
    _emit(args, {"family": "pFs", "a": args.a, "b": args.b, "M": args.m, "coefficients": coeffs})
    return 0


def cmd_hyper_two(args) -> int:
    ts = hyper_two_arg(
        _frac_list(args.a), _frac_list(args.b), args.m,
        _frac_list(args.x), _frac_list(args.y), args.deg,
    )
    _emit(args, {"family": "two-argument", "coefficients": ts.to_json()})
    return 0


def cmd_hyper_qphi(args) -> int:
    ys = _frac_list(args.y) if args.y else None
    ts = hyper_q(
        _int_list(args.a), _int_list(args.b), Fraction(args.q), args.m,
        _frac_list(args.x), ys, args.deg,
    )
    _emit(args, {"family": "qPhi", "q": args.q, "coefficients": ts.to_json()})
    return 0


def cmd_model(args) -> int:
    which = args.which
    if which == "quartic":
        ms = models_mod.quartic_series(args.order)
        payload = {"model": "quartic", "orders_in_N": ms.to_json()}
        if args.check_oracle:
            agree = all(
                ms.coefficient(k) == oracle_mod.quartic_wick_order(k)
                for k in range(1, args.order + 1)
            )
            payload["wick_oracle_agrees"] = agree
            if not agree:
                _emit(args, payload)
                return 1
        _emit(args, payload)
        return 0
    if which == "two":
        ts = models_mod.two_matrix_series(args.n, args.deg)
        _emit(args, {"model": "two-matrix", "n": args.n, "coefficients": ts.to_json()})
        return 0
    if which == "hciz":
        res = models_mod.hciz(args.n, args.deg)
        ok = res.matches()
        _emit(args, {"model": "hciz", "n": args.n, "deg": args.deg, "series_equals_determinant": ok})
        return 0 if ok else 1
    if which == "nmm":
        u = Times.of(_frac_list(args.u))
        rep = models_mod.normal_matrix_map(u, args.deg)
        _emit(args, {
            "model": "normal-matrix",
            "r_table": {str(k): _fmt(v) for k, v in sorted(rep["r_table"].items())},
            "h_moments": [_fmt(h) for h in rep["h_moments"]],
        })
        return 0
    if which == "gw":
        ts = models_mod.gross_witten_series(args.n, _frac_list(args.x), args.deg)
        _emit(args, {"model": "gross-witten", "coefficients": ts.to_json()})
        return 0
    if which == "unitary":
        ts = models_mod.unitary_model_series(args.n, args.deg)
        _emit(args, {"model": "unitary", "coefficients": ts.to_json()})
        return 0
    if which == "gen43":
        r = parse_content(args.r)
        rt = parse_content(args.rtilde) if args.rtilde else None
        ts = models_mod.generalized_angle_integral(
            args.kind, r, args.n, args.deg, a=Fraction(args.a) if args.a else None, rt=rt,
        )
        _emit(args, {"model": f"angle-integral/{args.kind}", "coefficients": ts.to_json()})
        return 0
    if which == "loop":
        gs = [parse_content(s) for s in args.g]
        vals = models_mod.loop_scalar_product(gs, args.n, args.deg)
        _emit(args, {"model": "loop", "graded_trace": [_fmt(v) for v in vals]})
        return 0
    raise ValueError(which)


def cmd_fock(args) -> int:
    suite = args.suite
    report: dict = {"suite": suite}
    failures: list = []
    if suite == "heisenberg":
        import itertools

        for k, m in itertools.product([-3, -2, -1, 1, 2, 3], repeat=2):
            for lam in enumerate_partitions(2):
                cut = 2 + abs(k) + abs(m)
                v = fock_mod.FockVector.basis(lam, args.n, cut)
                a = fock_mod.FockOperator.H(m).apply(fock_mod.FockOperator.H(k).apply(v))
                b = fock_mod.FockOperator.H(k).apply(fock_mod.FockOperator.H(m).apply(v))
                comm = a + b.scaled(-1)
                expect = v.scaled(Fraction(m)) if k + m == 0 else fock_mod.FockVector({}, cut)
                if not (comm + expect.scaled(-1)).is_zero():
                    failures.append({"k": k, "m": m, "state": str(lam)})
    elif suite == "lemma1":
        import itertools

        for s in range(0, 4):
            for kk in range(0, s + 1):
                for i_list in itertools.combinations(range(8), s):
                    i_list = tuple(sorted(i_list, reverse=True))
                    for j_list in itertools.combinations(range(1, 8), kk):
                        j_list = tuple(sorted(j_list, reverse=True))
                        try:
                            lam = fock_mod.lemma_partition(i_list, j_list)
                        except ValueError:
                            continue
                        if lam.weight > args.deg:
                            continue
                        rep = fock_mod.lemma1_check(i_list, j_list)
                        if not rep["ok"]:
                            failures.append({"i": i_list, "j": j_list})
    elif suite == "prop3":
        r = parse_content(args.r)
        for lam in enumerate_partitions(args.deg):
            for mu in enumerate_partitions(args.deg):
                v = fock_mod.FockVector.vacuum(args.n, args.deg + 1)
                a = fock_mod.schur_of_operators(lam, "H*", v)
                b = fock_mod.schur_of_operators(mu, "-A", v, r=r)
                got = fock_mod.pair(a, b)
                from .weights import content_product

                expect = content_product(r, args.n, lam) if lam == mu else Fraction(0)
                if got != expect:
                    failures.append({"lambda": str(lam), "mu": str(mu)})
    elif suite == "trace":
        r = parse_content(args.r)
        from .weights import content_product
        from .partitions import partitions_of

        got = fock_mod.trace_h0(r, args.n, args.deg)
        for d in range(args.deg + 1):
            direct = sum(
                (content_product(r, args.n, lam) for lam in partitions_of(d)),
                start=Fraction(0),
            )
            if got[d] != direct:
                failures.append({"degree": d, "fock": _fmt(got[d]), "weights": _fmt(direct)})
    else:
        raise ValueError(suite)
    report["pass"] = not failures
    report["counterexamples"] = failures
    _emit(args, report)
    return 0 if not failures else 1


def cmd_oracle(args) -> int:
    which = args.which
    if which == "haar":
        import numpy as np

        gen = oracle_mod.RngStream(args.seed, 0).gen
        U = oracle_mod.sample_haar_unitary(args.n, gen)
        dev = float(np.linalg.norm(U @ U.conj().T - np.eye(args.n)))
        _emit(args, {"oracle": "haar", "n": args.n, "unitarity_deviation": dev})
        return 0 if dev < 1e-12 else 1
    if which in ("ginibre", "unitary-mc"):
        lam = Partition.parse(args.l)
        mu = Partition.parse(args.mu) if args.mu else None
        A = _frac_list(args.A)
        B = _frac_list(args.B)
        fn = (
            oracle_mod.mc_schur_ginibre_identity
            if which == "ginibre"
            else oracle_mod.mc_schur_unitary_identity
        )
        rep = fn(lam, A, B, args.n, args.samples, seed=args.seed, mu=mu, sigma=args.sigma)
        _emit(args, rep)
        return 0 if rep["pass"] else 1
    if which == "wick":
        poly = oracle_mod.wick_gaussian_moment(_int_list(args.powers))
        _emit(args, {
            "oracle": "wick",
            "powers": args.powers,
            "N_polynomial": [_fmt(c) for c in poly.coeffs],
            "note": "multiply by (N g)^(-sum/2) for the quartic propagator",
        })
        return 0
    if which == "mu":
        n, m = args.moment, args.moment2 if args.moment2 is not None else args.moment
        if args.contour == "imag":
            val = oracle_mod.moment_real_imaginary_limit(n, m)
            import math

            target = -2j * math.pi * math.factorial(n) if n == m else 0j
            err = abs(val - target) / max(abs(target), 1.0)
            _emit(args, {"contour": "imag", "n": n, "m": m, "value": str(val), "target": str(target), "rel_error": err})
            return 0 if err < args.tol else 1
        if args.contour == "circle":
            import math

            val = oracle_mod.moment_circle(n, m)
            target = -4 * math.pi**2 / math.factorial(n) if n == m else 0.0
            err = abs(val - target) / max(abs(target), 1.0)
            _emit(args, {"contour": "circle", "n": n, "m": m, "value": str(val), "rel_error": err})
            return 0 if err < args.tol else 1
        if args.contour == "unit":
            import math

            from .weights import pochhammer

            a = Fraction(args.a_param)
            val = oracle_mod.moment_unit_interval(n, a)
            target = float(
                Fraction(1) / (1 - a) * math.factorial(n) / pochhammer(2 - a, n)
            )
            err = abs(val - target) / max(abs(target), 1.0)
            _emit(args, {"contour": "unit", "n": n, "a": args.a_param, "value": val,
                         "target": target, "rel_error": err})
            return 0 if err < args.tol else 1
        if args.contour == "halfline":
            av = _frac_list(args.A)
            bv = _frac_list(args.B)
            val = oracle_mod.moment_halfline_pfs(n, av, bv)
            target = float(oracle_mod.halfline_exact(n, av, bv))
            err = abs(val - target) / max(abs(target), 1.0)
            _emit(args, {"contour": "halfline", "n": n, "value": val,
                         "target": target, "rel_error": err})
            return 0 if err < args.tol else 1
        raise ValueError(args.contour)
    raise ValueError(which)


def _verify_one(name: str, args) -> dict:
    t0 = time.time()
    ok = True
    detail = ""
    if name == "cauchy":
        lhs, rhs = cauchy_truncated(args.deg)
        if args.poison == "cauchy":
            lhs = lhs + lhs.ring.var(0)
        ok = lhs == rhs
        if not ok:
            diff = lhs - rhs
            detail = f"first bad monomial: {sorted(diff.terms)[0]}"
    elif name == "hirota":
        r = parse_content(args.r)
        res = hirota_residual(r, args.n, args.deg)
        if args.poison == "hirota":
            res = res + res.ring.var(0)
        ok = res.is_zero()
        if not ok:
            detail = f"nonzero residual monomials: {len(res.terms)}"
    elif name == "ode":
        res = ode_residual(_frac_list(args.a), _frac_list(args.b), args.deg)
        if args.poison == "ode":
            res[0] += 1
        ok = all(v == 0 for v in res)
        if not ok:
            detail = f"residual degrees: {[i for i, v in enumerate(res) if v != 0][:5]}"
    elif name == "qdiff":
        res = q_difference_residual(_int_list(args.qa), _int_list(args.qb), Fraction(args.q), args.deg)
        if args.poison == "qdiff":
            res[0] += 1
        ok = all(v == 0 for v in res)
        if not ok:
            detail = f"residual degrees: {[i for i, v in enumerate(res) if v != 0][:5]}"
    elif name == "det":
        r = parse_content(args.r)
        res = det_rep_two_side(r, args.n, args.n, args.deg)
        if args.poison == "det":
            res.lhs = res.lhs + res.lhs.ring.var(0)
        ok = res.matches()
        if not ok:
            detail = "determinant/series mismatch"
    elif name == "symmetry":
        r = parse_content(args.r)
        rep = symmetry_checks(r, args.n, args.deg)
        if args.poison == "symmetry":
            rep["swap"] = False
        ok = all(rep.values())
        detail = str(rep)
    else:
        raise ValueError(name)
    return {"check": name, "pass": ok, "detail": detail, "seconds": round(time.time() - t0, 3)}


def cmd_verify(args) -> int:
    names = (
        ["cauchy", "hirota", "ode", "qdiff", "det", "symmetry"]
        if args.what == "all"
        else [args.what]
    )
    reports = [_verify_one(n, args) for n in names]
    if args.what == "all" and args.profile == "full":
        t0 = time.time()
        fails = 0
        for lam in enumerate_partitions(2):
            if lam.weight == 0:
                continue
            for fn in (
                oracle_mod.mc_schur_unitary_identity,
                oracle_mod.mc_schur_ginibre_identity,
            ):
                rep = fn(
                    lam,
                    [Fraction(1), Fraction(1, 2)],
                    [Fraction(1), Fraction(1, 3)],
                    2,
                    args.samples,
                    seed=args.seed,
                )
                if not rep["pass"]:
                    fails += 1
        reports.append(
            {
                "check": "mc-identities",
                "pass": fails <= 1,  # one 3-sigma outlier tolerated
                "detail": f"{fails} failures",
                "seconds": round(time.time() - t0, 3),
            }
        )
    payload = {"reports": reports, "pass": all(r["pass"] for r in reports)}
    _emit(args, payload)
    return 0 if payload["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    import os

    p = argparse.ArgumentParser(prog="taukit", description=__doc__)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--manifest", help="write a run manifest (config + digest) to this file")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("TAUKIT_THREADS", "1")),
                   help="worker cap (default from TAUKIT_THREADS); results are "
                        "independent of this value")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tau", help="truncated tau series")
    sp.add_argument("--r", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", required=True)
    sp.add_argument("--tstar", required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp.set_defaults(func=cmd_tau)

    hyper = sub.add_parser("hyper", help="hypergeometric families").add_subparsers(
        dest="family", required=True
    )
    hp = hyper.add_parser("pfs")
    hp.add_argument("--a", default="")
    hp.add_argument("--b", default="")
    hp.add_argument("--m", type=int, default=0)
    hp.add_argument("--x", default=None)
    hp.add_argument("--deg", type=int, required=True)
    hp.set_defaults(func=cmd_hyper_pfs)
    ht = hyper.add_parser("two")
    ht.add_argument("--a", default="")
    ht.add_argument("--b", default="")
    ht.add_argument("--m", type=int, default=0)
    ht.add_argument("--x", required=True)
    ht.add_argument("--y", required=True)
    ht.add_argument("--deg", type=int, required=True)
    ht.set_defaults(func=cmd_hyper_two)
    hq = hyper.add_parser("qphi")
    hq.add_argument("--a", default="")
    hq.add_argument("--b", default="")
    hq.add_argument("--q", required=True)
    hq.add_argument("--m", type=int, default=0)
    hq.add_argument("--x", required=True)
    hq.add_argument("--y", default=None)
    hq.add_argument("--deg", type=int, required=True)
    hq.set_defaults(func=cmd_hyper_qphi)

    mp = sub.add_parser("model", help="matrix-model series")
    mp.add_argument("which", choices=["quartic", "two", "hciz", "nmm", "gw", "unitary", "gen43", "loop"])
    mp.add_argument("--order", type=int, default=2)
    mp.add_argument("--deg", type=int, default=6)
    mp.add_argument("--n", type=int, default=2)
    mp.add_argument("--u", default="")
    mp.add_argument("--x", default="")
    mp.add_argument("--r", default="one")
    mp.add_argument("--rtilde", default=None)
    mp.add_argument("--a", default=None)
    mp.add_argument("--kind", default="hciz", choices=["hciz", "complex", "gw", "gw_unit"])
    mp.add_argument("--g", action="append", default=[])
    mp.add_argument("--check-oracle", action="store_true")
    mp.set_defaults(func=cmd_model)

    fp = sub.add_parser("fock", help="Fock-space verification suites")
    fsub = fp.add_subparsers(dest="fockcmd", required=True)
    fv = fsub.add_parser("verify")
    fv.add_argument("--suite", required=True, choices=["heisenberg", "lemma1", "prop3", "trace"])
    fv.add_argument("--r", default="one")
    fv.add_argument("--n", type=int, default=0)
    fv.add_argument("--deg", type=int, default=4)
    fv.set_defaults(func=cmd_fock)

    op = sub.add_parser("oracle", help="Monte Carlo / Wick / quadrature oracles")
    op.add_argument("which", choices=["haar", "unitary-mc", "ginibre", "wick", "mu"])
    op.add_argument("--n", type=int, default=2)
    op.add_argument("--l", default="[1]")
    op.add_argument("--mu", default=None)
    op.add_argument("--A", default="1,1/2")
    op.add_argument("--B", default="1,1/3")
    op.add_argument("--samples", type=int, default=100000)
    op.add_argument("--seed", type=int, default=0)
    op.add_argument("--sigma", type=float, default=3.0)
    op.add_argument("--powers", default="4")
    op.add_argument("--contour", default="imag",
                    choices=["imag", "circle", "unit", "halfline"])
    op.add_argument("--moment", type=int, default=1)
    op.add_argument("--moment2", type=int, default=None)
    op.add_argument("--a-param", default="-1",
                    help="exponent parameter for the unit-interval measure")
    op.add_argument("--tol", type=float, default=1e-6)
    op.set_defaults(func=cmd_oracle)

    vp = sub.add_parser("verify", help="identity verification suites")
    vp.add_argument("what", choices=["cauchy", "hirota", "ode", "qdiff", "det", "symmetry", "all"])
    vp.add_argument("--deg", type=int, default=6)
    vp.add_argument("--n", type=int, default=1)
    vp.add_argument("--r", default="rational:a=2")
    vp.add_argument("--a", default="1/2,1/3")
    vp.add_argument("--b", default="5/4")
    vp.add_argument("--qa", default="1,2")
    vp.add_argument("--qb", default="3")
    vp.add_argument("--q", default="1/3")
    vp.add_argument("--profile", choices=["fast", "full"], default="fast",
                    help="full adds the Monte Carlo identity block to 'all'")
    vp.add_argument("--samples", type=int, default=20000)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--poison", default=None,
                    help="inject a fault into the named check (negative-path testing)")
    vp.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args._t0 = time.time()
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
