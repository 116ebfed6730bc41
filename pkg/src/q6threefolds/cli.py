"""Command line interface: ``q6tf <command> ...``.

Every command prints one JSON document (or a flattened table with
--format table). Exit codes: 0 success, 2 input error, 3 nonfinite or
non-generic outcome, 4 internal assertion failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .algebra.fields import format_scalar, parse_scalar
from .brute import BadReduction, BudgetExceeded, brute_count
from .classify import ClassifyError, classify_main, irreducible, normalize_p2, plane_decomposition, smoothness
from .classify import jacobian_samples
from .intersect import FINITE, IntersectError, bidegree, degree_trials, meet, meet_divisor_with_horizontal, span_of
from .quadspace import GeometryError
from .serialize import InputError, dumps, envelope, load_subspace, load_variety, table, variety_to_json
from .varieties import BUILTINS, Q4Divisor, VarietyError

EXIT_OK, EXIT_INPUT, EXIT_OUTCOME, EXIT_INTERNAL = 0, 2, 3, 4


class Outcome(Exception):
    """A well-defined but non-finite / non-generic result."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", ""))
        self.payload = payload


def _divisor(spec: str) -> Q4Divisor:
    X = load_variety(spec)
    if not isinstance(X, Q4Divisor):
        raise InputError("this command needs a Q4 divisor (divisor:<f> or a divisor JSON)")
    return X


def _ab(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--at expects a,b")
    try:
        a, b = (Fraction(parse_scalar(x.strip())) for x in parts)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if a == 0 and b == 0:
        raise InputError("(a, b) = (0, 0) is not a point of P^1")
    return a, b


# commands


def cmd_builtin(args):
    if args.name is None:
        return {"builtins": list(BUILTINS) + ["segre_divisor"]}
    return variety_to_json(load_variety(f"builtin:{args.name}"))


def cmd_bidegree(args):
    res = bidegree(load_variety(args.spec), args.trials, args.seed)
    return res.to_json()


def cmd_degree(args):
    res = degree_trials(load_variety(args.spec), args.trials, args.seed)
    return {"degree": res.count, "trials": res.to_json()}


def cmd_span(args):
    S = span_of(load_variety(args.spec), args.samples, args.seed)
    return {"dim": S.proj_dim, "basis": S.to_json()["basis"],
            "equations": [[format_scalar(x) for x in r] for r in S.equations()]}


def cmd_classify(args):
    return classify_main(load_variety(args.spec), args.trials, args.seed).to_json()


def cmd_smooth(args):
    D = _divisor(args.spec)
    v = smoothness(D)
    out = v.to_json()
    if args.samples:
        ok, bad = jacobian_samples(D, args.samples, args.seed)
        out["jacobian_samples"] = {"samples": args.samples, "full_rank": ok,
                                   "failures": [[format_scalar(x) for x in z] for z in bad[:5]]}
    return out


def cmd_irreducible(args):
    return irreducible(_divisor(args.spec)).to_json()


def cmd_normalize(args):
    return normalize_p2(_divisor(args.spec)).to_json()


def cmd_planes(args):
    D = _divisor(args.spec)
    a, b = _ab(args.at)
    return D.q_plane(a, b).to_json()


def cmd_psi(args):
    D = _divisor(args.spec)
    if args.degree or args.at is None:
        return {"psi_degree": D.psi_degree(), "forms": [f.to_json() for f in D.psi_forms()]}
    a, b = _ab(args.at)
    return {"at": [format_scalar(a), format_scalar(b)], "psi": D.psi(a, b).to_json()}


def cmd_meet(args):
    X = load_variety(args.spec)
    W = load_subspace(args.subspace)
    if isinstance(X, Q4Divisor) and args.horizontal:
        rep = meet_divisor_with_horizontal(X, W)
    else:
        rep = meet(X, W, args.seed)
    out = rep.to_json()
    if rep.status != FINITE:
        raise Outcome(out)
    return out


def cmd_brute(args):
    X = load_variety(args.spec)
    W = load_subspace(args.subspace)
    return brute_count(X, W, args.q, args.ext).to_json()


def cmd_decompose(args):
    return plane_decomposition(_divisor(args.spec), args.samples, args.seed).to_json()


def cmd_verify(args):
    from .acceptance import run_suite

    results = run_suite()
    if args.format == "table":
        for r in results:
            print(r.line())
    payload = {"suite": args.suite, "passed": sum(r.passed for r in results), "total": len(results),
               "criteria": [r.to_json() for r in results]}
    if args.format == "table":
        return None, payload
    return payload


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="q6tf", description="Exact analysis of (1,p) threefolds in Q6.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--format", choices=("json", "table"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, spec=True, seeded=False, trials=False):
        sp = sub.add_parser(name, help=help_)
        if spec:
            sp.add_argument("spec", help="builtin:<name>, divisor:<f>, or a JSON file / inline JSON")
        if seeded:
            sp.add_argument("--seed", type=int, required=True)
        if trials:
            sp.add_argument("--trials", type=int, default=7)
        sp.set_defaults(func=fn)
        return sp

    sp = add("builtin", cmd_builtin, "show a built-in variety", spec=False)
    sp.add_argument("name", nargs="?")
    add("bidegree", cmd_bidegree, "vertical and horizontal intersection counts", seeded=True, trials=True)
    add("degree", cmd_degree, "degree via generic P^4 sections", seeded=True, trials=True)
    sp = add("span", cmd_span, "linear span from sampled points", seeded=True)
    sp.add_argument("--samples", type=int, default=20)
    add("classify", cmd_classify, "which case of the main classification", seeded=True, trials=True)
    sp = add("smooth", cmd_smooth, "smooth or singular, with witness")
    sp.add_argument("--samples", type=int, default=0, help="also run this many Jacobian samples")
    sp.add_argument("--seed", type=int, default=0)
    add("irreducible", cmd_irreducible, "irreducibility of a Q4 divisor")
    add("normalize-p2", cmd_normalize, "isometry to the Segre normal form (p = 2)")
    sp = add("planes", cmd_planes, "the plane Q(a,b) of a divisor")
    sp.add_argument("--at", required=True, help="a,b")
    sp = add("psi", cmd_psi, "the map psi to the vertex line")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--at", help="a,b")
    g.add_argument("--degree", action="store_true")
    sp = add("meet", cmd_meet, "exact intersection with a linear subspace")
    sp.add_argument("--subspace", required=True, help="V0, H0, test, random:<kind>:<seed>, or JSON")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--horizontal", action="store_true", help="divisors: require deg(eliminant) = p")
    sp = add("brute", cmd_brute, "brute-force point count over F_q or F_{q^2}")
    sp.add_argument("--subspace", required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--ext", type=int, default=1, choices=(1, 2))
    sp = add("decompose", cmd_decompose, "sampled checks of the plane decomposition", seeded=True)
    sp.add_argument("--samples", type=int, default=50)
    sp = add("verify", cmd_verify, "run the acceptance suite", spec=False)
    sp.add_argument("--suite", choices=("paper", "acceptance"), required=True)
    return p


def _emit(args, command: str, result) -> None:
    doc = envelope(command, result)
    if args.format == "table":
        print("\n".join(table(doc)))
    else:
        print(dumps(doc))


def _error(args, command: str, code: str, message: str, status: int) -> int:
    doc = {"schema_version": 1, "command": command, "error": {"code": code, "message": message}}
    if args is not None and getattr(args, "format", "json") == "table":
        print("\n".join(table(doc)), file=sys.stderr)
    else:
        print(dumps(doc), file=sys.stderr)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT
    command = args.command
    try:
        result = args.func(args)
        if isinstance(result, tuple):  # verify in table mode already printed its lines
            payload = result[1]
            return EXIT_OK if payload["passed"] == payload["total"] else EXIT_INTERNAL
        _emit(args, command, result)
        if command == "verify" and result["passed"] != result["total"]:
            return EXIT_INTERNAL
        return EXIT_OK
    except Outcome as exc:
        _emit(args, command, exc.payload)
        return EXIT_OUTCOME
    except (InputError, VarietyError, GeometryError, BadReduction, BudgetExceeded) as exc:
        return _error(args, command, "input_error", str(exc), EXIT_INPUT)
    except (IntersectError, ClassifyError) as exc:
        return _error(args, command, "outcome", str(exc), EXIT_OUTCOME)
    except AssertionError as exc:
        return _error(args, command, "internal_assertion", str(exc), EXIT_INTERNAL)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
