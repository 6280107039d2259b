"""Command-line front end. JSON on stdout (integers as decimal strings),
logs on stderr; exit 1 on usage errors, 2 on computation failures."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .errors import TorsionError

SCHEMA = "sidh-torsion/1"
THREADS_ENV = "SIDH_TORSION_THREADS"
log = logging.getLogger("sidh_torsion")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "to_json"):
        return v.to_json()
    return str(v)


def _emit(args, payload) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps({"schema": SCHEMA, **_jsonable(payload)}, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _knobs(args):
    from .attack import AttackKnobs
    return AttackKnobs(args.delta, args.gamma, args.epsilon, args.g)


# ---------------------------------------------------------------- commands

def cmd_sidh_instance(args):
    from .sidh import build_instance
    inst = build_instance(args.p, args.A, args.B, args.f, args.seed, args.mode)
    _emit(args, {"instance": inst})


def cmd_sidh_demo(args):
    from .sidh import build_instance, keygen, pairing_check, shared_secret
    inst = build_instance(args.p, args.A, args.B, args.f, args.seed)
    sa, pa = keygen(inst, args.seed, "A")
    sb, pb = keygen(inst, args.seed + 1, "B")
    ja, jb = shared_secret(inst, sa, pb), shared_secret(inst, sb, pa)
    _emit(args, {"instance": inst, "secret_A": sa, "secret_B": sb, "public_A": pa,
                 "public_B": pb, "j_A": ja.to_json(), "j_B": jb.to_json(),
                 "match": ja == jb, "pairing_check": pairing_check(inst, pa)})


def cmd_sidh_keygen(args):
    from .sidh import build_instance, keygen
    inst = build_instance(args.p, args.A, args.B, args.f, args.seed)
    secret, pk = keygen(inst, args.key_seed, "A")
    _emit(args, {"instance": inst, "secret": secret, "public": pk})


def _instance_and_key(args):
    from .sidh import PublicKey, SidhInstance, build_instance, keygen
    if args.instance:
        inst = SidhInstance.from_json(_load(args.instance)["instance"])
    else:
        if None in (args.p, args.A, args.B, args.seed):
            raise UsageError("give --instance or all of --p --A --B --seed")
        inst = build_instance(args.p, args.A, args.B, args.f, args.seed)
    if args.pubkey:
        data = _load(args.pubkey)
        pk, secret = PublicKey.from_json(data.get("public", data)), None
    else:
        if args.key_seed is None:
            raise UsageError("give --pubkey or --key-seed")
        secret, pk = keygen(inst, args.key_seed, "A")
    return inst, pk, secret


def cmd_attack_run(args):
    from .attack import run_full_attack
    from .sidh import brute_force_recover
    inst, pk, planted = _instance_and_key(args)
    t0 = time.perf_counter()
    res = run_full_attack(inst, pk, _knobs(args), budget=args.budget)
    elapsed = time.perf_counter() - t0
    out = {"instance": inst, "solution": res.solution, "secret": res.secret,
           "report": res.report, "seconds": f"{elapsed:.3f}"}
    if planted is not None:
        out["planted"] = planted
    if args.cross_check:
        bf, _ = brute_force_recover(inst, pk)
        out["brute_force"] = bf
    _emit(args, out)


def cmd_normeq_solve(args):
    from .attack import solve_norm_equation
    stats: dict = {}
    k = _knobs(args)
    A = args.A if args.A is not None else args.A_prime * k.g
    sol = solve_norm_equation(args.p, args.A_prime, args.B, k, budget=args.budget, A=A,
                              stats=stats)
    _emit(args, {"solution": sol, "stats": stats, "check": sol.check()})


def cmd_forge_prime(args):
    from .forge import forge_prime
    res = forge_prime(args.A, args.B, e_start=args.e, c_max=args.c_max, effort=args.effort,
                      c_start=args.c_start)
    _emit(args, {"result": res, "check": res.check()})


def cmd_forge_triple(args):
    from .forge import forge_triple
    from .numbertheory import GaussianInteger
    w = GaussianInteger.parse(args.w)
    res = forge_triple(w, args.k, smooth_bound=args.smooth_bound, f_max=args.f_max,
                       mode=args.mode)
    _emit(args, {"result": res, "check": res.check()})


def cmd_forge_order(args):
    from .quat import build_insecure_order
    res = build_insecure_order(args.p, args.A, args.B, effort=args.effort)
    _emit(args, {"e": res.e, "d": res.d, "D": res.D,
                 "theta": [res.theta.t, res.theta.x, res.theta.y, res.theta.z],
                 "theta_prime": [res.theta_prime.t, res.theta_prime.x, res.theta_prime.y,
                                 res.theta_prime.z],
                 "start_discriminant": res.start_order.reduced_discriminant(),
                 "discriminant": res.order.reduced_discriminant(),
                 "order": res.order.to_json()})


def cmd_estimate(args):
    from . import estimator as est
    if args.alpha is None or args.beta is None:
        raise UsageError("estimate needs --alpha and --beta (or use 'estimate figure')")
    a, b = est.Q(args.alpha), est.Q(args.beta)
    models = est.MODELS if args.model == "both" else (args.model,)
    out = {"alpha": a, "beta": b, "results": {}}
    for m in models:
        pt = est.optimize(a, b, m)
        k = pt.knobs
        out["results"][m] = {
            "C": pt.C, "C_float": f"{float(pt.C):.6f}",
            "knobs": {"delta": k.delta, "gamma": k.gamma, "epsilon": k.epsilon},
            "feasible_closure": est.feasible(a, b, k, strict=False),
            "perfect_solver": str(est.perfect_solver_cost(a, b, m)),
        }
    out["min_e_exponent"] = est.min_e_bound(a, b)
    _emit(args, out)


def cmd_estimate_figure(args):
    from .estimator import emit_figure
    _emit(args, emit_figure(args.id, args.step, args.threads or 1))


def cmd_estimate_apps(args):
    from .estimator import application_numbers, gke_threshold
    rows = application_numbers()
    _emit(args, {"gke_quantum_C_0.4": rows,
                 "perfect_solver_thresholds": {k: gke_threshold(k) for k in
                                               ("quantum", "classical", "polynomial")}})


def cmd_verify_paper(args):
    from .golden import run_golden
    checks = run_golden()
    ok = all(c["passed"] for c in checks)
    _emit(args, {"passed": ok, "checks": checks})
    return 0 if ok or not args.strict else 2


# ------------------------------------------------------------------ parser

def _add_knobs(p):
    p.add_argument("--delta", type=Fraction, default=Fraction(0))
    p.add_argument("--gamma", type=Fraction, default=Fraction(0))
    p.add_argument("--epsilon", type=Fraction, default=Fraction(0))
    p.add_argument("--g", type=int, default=1, help="explicit divisor of A guessed as a prefix")
    p.add_argument("--budget", type=int, default=10**6)


def _add_params(p, required=True):
    p.add_argument("--p", type=int, required=required)
    p.add_argument("--A", type=int, required=required)
    p.add_argument("--B", type=int, required=required)
    p.add_argument("--f", type=int)
    p.add_argument("--seed", type=int, required=required)


def _common(defaults: bool, threads: int = 1) -> argparse.ArgumentParser:
    """Global options, accepted before or after the subcommand."""
    c = argparse.ArgumentParser(add_help=False)
    sup = argparse.SUPPRESS
    c.add_argument("--out", default=None if defaults else sup,
                   help="write output here instead of stdout")
    c.add_argument("--threads", type=int, default=threads if defaults else sup,
                   help=f"worker cap (default from ${THREADS_ENV})")
    c.add_argument("-v", "--verbose", action="store_true", default=False if defaults else sup)
    return c


def build_parser() -> argparse.ArgumentParser:
    default_threads = int(os.environ.get(THREADS_ENV, "1"))
    root = _Parser(prog="sidh-torsion", description="Torsion-point attack toolkit.",
                   parents=[_common(True, default_threads)])
    root.add_argument("--version", action="version", version=__version__)
    common = _common(False)
    sub = root.add_subparsers(dest="cmd", parser_class=_Parser)

    def leaf(group, name, **kw):
        return group.add_parser(name, parents=[common], **kw)

    sidh = sub.add_parser("sidh").add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(sidh, "instance")
    _add_params(p)
    p.add_argument("--mode", choices=("classic", "forged"), default="classic")
    p.set_defaults(fn=cmd_sidh_instance)
    p = leaf(sidh, "demo")
    _add_params(p)
    p.set_defaults(fn=cmd_sidh_demo)
    p = leaf(sidh, "keygen")
    _add_params(p)
    p.add_argument("--key-seed", type=int, required=True)
    p.set_defaults(fn=cmd_sidh_keygen)

    attack = sub.add_parser("attack").add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(attack, "run")
    _add_params(p, required=False)
    p.add_argument("--instance", help="JSON file holding an instance")
    p.add_argument("--pubkey", help="JSON file holding a public key")
    p.add_argument("--key-seed", type=int, help="plant a key (required without --pubkey)")
    p.add_argument("--cross-check", action="store_true", help="also run brute force")
    _add_knobs(p)
    p.set_defaults(fn=cmd_attack_run)

    normeq = sub.add_parser("normeq").add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(normeq, "solve")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--A-prime", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--A", type=int, help="full degree for the A^delta ranges")
    _add_knobs(p)
    p.set_defaults(fn=cmd_normeq_solve)

    forge = sub.add_parser("forge").add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(forge, "prime")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--c-start", type=int, default=1)
    p.add_argument("--c-max", type=int, default=10**4)
    p.add_argument("--effort", type=int, default=16)
    p.set_defaults(fn=cmd_forge_prime)
    p = leaf(forge, "triple")
    p.add_argument("--w", required=True, help="Gaussian integer such as 2+1i")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--smooth-bound", type=int, default=2**30)
    p.add_argument("--f-max", type=int, default=1000)
    p.add_argument("--mode", choices=("smooth", "powersmooth"), default="smooth")
    p.set_defaults(fn=cmd_forge_triple)
    p = leaf(forge, "order")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--effort", type=int, default=1000)
    p.set_defaults(fn=cmd_forge_order)

    est = leaf(sub, "estimate")
    est.add_argument("--alpha", type=Fraction)
    est.add_argument("--beta", type=Fraction)
    est.add_argument("--model", choices=("classical", "quantum", "both"), default="both")
    est.set_defaults(fn=cmd_estimate)
    esub = est.add_subparsers(dest="sub", parser_class=_Parser)
    p = leaf(esub, "figure")
    p.add_argument("--id", type=int, choices=range(1, 6), required=True)
    p.add_argument("--step", type=Fraction, default=Fraction(1, 20))
    p.set_defaults(fn=cmd_estimate_figure)
    p = leaf(esub, "apps")
    p.set_defaults(fn=cmd_estimate_apps)

    p = leaf(sub, "verify-paper")
    p.add_argument("--strict", action="store_true", help="exit 2 if any check fails")
    p.set_defaults(fn=cmd_verify_paper)
    return root


def _fail(code: int, kind: str, message: str) -> int:
    sys.stdout.write(json.dumps({"schema": SCHEMA, "error": kind, "message": message}) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "fn", None):
            raise UsageError("missing subcommand")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
        rc = args.fn(args)
        return rc or 0
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return _fail(1, "usage", str(exc))
    except (TorsionError, ValueError) as exc:
        log.error("%s", exc)
        return _fail(2, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
