"""Command-line front end: argparse subcommands, JSON in, deterministic JSON (or ASCII) out."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from cli import codec
from cli.render import render_lacing, render_partial, render_pipedream, render_poly
from core.config import Guards, current_guards
from core.errors import GuardExceeded, InvariantViolation, QuiverlabError
from core.verification_orchestrator import FAMILIES, run_sweep
from quiverlab.lacing import minimal_lacing
from quiverlab.quiver_poly import component_check, quiver_coeffs, quiver_poly, stability_check
from quiverlab.ranks import expected_codim, lace_array, validate
from quiverlab.zelevinsky import zelevinsky
from rcgraph.embedding import theorem1_embed
from rcgraph.pipedream import enumerate_rc
from splitlab.fulton import constrained_factorizations, fulton_ranks, gamma, theorem2_check
from splitlab.split_a import nonvanishing, split_A
from splitlab.split_bcd import SplitResult, solve_coeff_table, split_BCD
from symfunc.schubert import schubert_double, schubert_single
from symfunc.shifted import schur_P, schur_Q
from symfunc.stanley import stanley_coefficients, stanley_single

logger = logging.getLogger(__name__)


class UsageError(QuiverlabError):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports usage problems as a UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


# ── Input helpers ────────────────────────────────────────────


def _read_json(args, attr: str = "input"):
    path = getattr(args, attr)
    if path is None:
        raise UsageError(f"--{attr.replace('_', '-')} is required")
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return codec.load_text(text)


def _ranks(args):
    return codec.ranks_from_json(_read_json(args))


def _perm(text: str):
    return codec.perm_from_json(codec.load_text(text))


def _signed(text: str):
    return codec.signed_from_json(codec.load_text(text))


def _list(text: str) -> list[int]:
    return [int(v) for v in codec.load_text(text)]


def _poly_out(args, p):
    return render_poly(p) + "\n" if args.format == "ascii" else p


# ── Subcommands ──────────────────────────────────────────────


def cmd_lace_array(args, guards: Guards):
    r = _ranks(args)
    violation = validate(r)
    if violation:
        return {"valid": False, "violation": violation}
    return {"valid": True, "s": codec.lace_array_to_json(r.n, lace_array(r))}


def cmd_codim(args, guards: Guards):
    return {"codim": expected_codim(_ranks(args))}


def cmd_wmin(args, guards: Guards):
    diagrams = minimal_lacing(_ranks(args), guards)
    if args.format == "ascii":
        return "\n\n".join(render_lacing(W) for W in diagrams) + "\n"
    return {"count": len(diagrams), "diagrams": [codec.lacing_to_json(W) for W in diagrams]}


def cmd_zelevinsky(args, guards: Guards):
    return codec.perm_to_json(zelevinsky(_ranks(args)))


def cmd_rc_enumerate(args, guards: Guards):
    graphs = sorted(enumerate_rc(_perm(args.w), guards=guards, method=args.method), key=lambda D: sorted(D.crosses))
    if args.format == "ascii":
        return "\n\n".join(render_pipedream(D) for D in graphs) + "\n"
    return {"count": len(graphs), "graphs": [codec.pipedream_to_json(D) for D in graphs]}


def cmd_embed(args, guards: Guards):
    r = _ranks(args)
    if args.lacing:
        diagrams = [codec.lacing_from_json(_read_json(args, "lacing"))]
    else:
        diagrams = minimal_lacing(r, guards)
    images = [theorem1_embed(W, r) for W in diagrams]
    if args.format == "ascii":
        return "\n\n".join(render_pipedream(D) for D in images) + "\n"
    if args.lacing:
        return codec.pipedream_to_json(images[0])
    return {"count": len(images), "graphs": [codec.pipedream_to_json(D) for D in images]}


def cmd_quiver_poly(args, guards: Guards):
    return _poly_out(args, quiver_poly(_ranks(args), method=args.method, guards=guards))


def cmd_coeffs(args, guards: Guards):
    return codec.expansion_to_json(quiver_coeffs(_ranks(args), guards))


def cmd_component_check(args, guards: Guards):
    _, report = component_check(_ranks(args), guards)
    return report


def cmd_stability_check(args, guards: Guards):
    stable = stability_check(_ranks(args), args.m_max, args.degree_bound, guards)
    return {"stable": stable, "m_max": args.m_max, "degree_bound": args.degree_bound}


def cmd_schubert(args, guards: Guards):
    w = _perm(args.w)
    compute = schubert_double if args.double else schubert_single
    return _poly_out(args, compute(w, guards=guards, method=args.method))


def cmd_stanley(args, guards: Guards):
    w = _perm(args.w)
    if args.k is not None:
        return _poly_out(args, stanley_single(w, args.k, guards))
    return codec.expansion_to_json(stanley_coefficients(w))


def cmd_fulton_gamma(args, guards: Guards):
    w = _perm(args.w)
    r = fulton_ranks(w, args.n)
    diagrams = minimal_lacing(r, guards)
    return {
        "ranks": codec.ranks_to_json(r),
        "pairs": [
            {"diagram": codec.lacing_to_json(W), "factorization": [codec.perm_to_json(u) for u in gamma(W)]}
            for W in diagrams
        ],
        "factorizations": sorted(
            [codec.perm_to_json(u) for u in us] for us in constrained_factorizations(w, args.n, guards)
        ),
    }


def cmd_theorem2_check(args, guards: Guards):
    _, report = theorem2_check(_perm(args.w), args.n, guards, with_component=not args.skip_component)
    return report


def cmd_split_a(args, guards: Guards):
    breaks = _list(args.breaks)
    expansion = split_A(_perm(args.w), breaks, guards)
    if not args.all_terms:
        expansion = nonvanishing(expansion, breaks)
    return codec.expansion_to_json(expansion)


def cmd_split_bcd(args, guards: Guards):
    w = _signed(args.w)
    if args.table:
        table = codec.table_from_json(_read_json(args, "table"))
    elif args.printed:
        table = solve_coeff_table(w, codec.printed_from_json(_read_json(args, "printed")), args.type, guards)
    else:
        raise UsageError("split-bcd needs --table or --printed")
    breaks = _list(args.breaks)
    result = split_BCD(w, breaks, table, args.type, guards)
    if not args.all_terms:
        kept = nonvanishing({lam: 1 for _, lam in result.coefficients}, breaks)
        result = SplitResult({k: c for k, c in result.coefficients.items() if k[1] in kept}, result.power_of_two)
    out = codec.split_to_json(result)
    out["table"] = codec.table_to_json(table)
    return out


def cmd_render(args, guards: Guards):
    data = _read_json(args)
    if isinstance(data, dict) and "crosses" in data:
        return render_pipedream(codec.pipedream_from_json(data)) + "\n"
    if isinstance(data, dict) and "ones" in data:
        return render_partial(codec.partial_from_json(data)) + "\n"
    return render_lacing(codec.lacing_from_json(data)) + "\n"


def cmd_sweep(args, guards: Guards):
    def progress(msg: str, fraction: float) -> None:
        logger.info("%3d%% %s", int(fraction * 100), msg)

    return run_sweep(args.family, progress_callback=progress, guards=guards)


def cmd_schur_q(args, guards: Guards):
    mu = tuple(_list(args.mu))
    compute = schur_P if args.p else schur_Q
    return _poly_out(args, compute(mu, args.k, guards))


# ── Parser ───────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiverlab", description="Quiver polynomials, lacing diagrams and Schubert splitting.")
    parser.add_argument("--format", choices=("json", "ascii"), default="json")
    parser.add_argument("--max-length", type=int, help="guard on word lengths")
    parser.add_argument("--max-dim", type=int, help="guard on the size of divided-difference and block searches")
    parser.add_argument("--max-results", type=int, help="guard on enumeration sizes")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def ranks_cmd(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-i", "--input", required=True, help="ranks JSON file, or - for stdin")
        p.set_defaults(handler=handler)
        return p

    ranks_cmd("lace-array", cmd_lace_array, "lace array s(r), or the violated rank inequality")
    ranks_cmd("codim", cmd_codim, "expected codimension d(r)")
    ranks_cmd("wmin", cmd_wmin, "minimal lacing diagrams W_min(r)")
    ranks_cmd("zelevinsky", cmd_zelevinsky, "Zelevinsky permutation v(r)")
    p = ranks_cmd("embed", cmd_embed, "RC-graph of v(r) for each minimal lacing diagram")
    p.add_argument("--lacing", help="lacing diagram JSON file; default is every W in W_min(r)")
    p = ranks_cmd("quiver-poly", cmd_quiver_poly, "double quiver polynomial Q_r(x; y)")
    p.add_argument("--method", choices=("pipes", "divide"), default="pipes")
    ranks_cmd("coeffs", cmd_coeffs, "quiver coefficients c_mu(r)")
    ranks_cmd("component-check", cmd_component_check, "component formula as a polynomial identity")
    p = ranks_cmd("stability-check", cmd_stability_check, "low-degree stability of Q_{m+r}")
    p.add_argument("--m-max", type=int, default=1)
    p.add_argument("--degree-bound", type=int, default=2)

    p = sub.add_parser("rc-enumerate", help="all RC-graphs of a permutation")
    p.add_argument("--w", required=True, help='one-line notation, e.g. "[1,3,2]"')
    p.add_argument("--method", choices=("rows", "words"), default="rows")
    p.set_defaults(handler=cmd_rc_enumerate)

    p = sub.add_parser("schubert", help="Schubert polynomial")
    p.add_argument("--w", required=True)
    p.add_argument("--double", action="store_true")
    p.add_argument("--method", choices=("divided", "pipes"), default="divided")
    p.set_defaults(handler=cmd_schubert)

    p = sub.add_parser("stanley", help="Stanley symmetric function: Schur coefficients, or F_w(x_1..x_k)")
    p.add_argument("--w", required=True)
    p.add_argument("-k", type=int)
    p.set_defaults(handler=cmd_stanley)

    p = sub.add_parser("fulton-gamma", help="W_min(r^(n)(w)) paired with its Gamma images")
    p.add_argument("--w", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_fulton_gamma)

    p = sub.add_parser("theorem2-check", help="Gamma bijection and component formula for r^(n)(w)")
    p.add_argument("--w", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--skip-component", action="store_true", help="check only the Gamma bijection")
    p.set_defaults(handler=cmd_theorem2_check)

    p = sub.add_parser("split-a", help="type-A splitting coefficients c_lambda(w)")
    p.add_argument("--w", required=True)
    p.add_argument("--breaks", required=True, help='e.g. "[1,2]"')
    p.add_argument("--all-terms", action="store_true", help="keep terms whose Schur factors vanish")
    p.set_defaults(handler=cmd_split_a)

    p = sub.add_parser("split-bcd", help="type B/C/D splitting from a coefficient table")
    p.add_argument("--w", required=True, help='signed one-line notation, e.g. "[3,1,-2]"')
    p.add_argument("--breaks", required=True)
    p.add_argument("--type", choices=("B", "C", "D"), default="C")
    p.add_argument("--table", help="coefficient table JSON")
    p.add_argument("--printed", help="printed expansion JSON to solve the table from")
    p.add_argument("--all-terms", action="store_true")
    p.set_defaults(handler=cmd_split_bcd)

    p = sub.add_parser("render", help="ASCII rendering of a pipe dream, partial permutation or lacing diagram")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("sweep", help="run a verification family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("schur-q", help="Schur Q (or P) function in k variables")
    p.add_argument("--mu", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--p", action="store_true", help="Schur P instead of Q")
    p.set_defaults(handler=cmd_schur_q)

    return parser


def _emit_error(err, exc: Exception) -> None:
    payload = exc.to_dict() if isinstance(exc, QuiverlabError) else {"error": type(exc).__name__, "message": str(exc)}
    if getattr(exc, "report", None) is not None:
        payload["report"] = exc.report
    err.write(codec.dumps(payload))


def run(argv: list[str], out=None, err=None) -> int:
    """Runs one command. Exit codes: 0 ok, 1 domain or input error, 2 guard exceeded."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "handler", None):
            raise UsageError("No subcommand given")
        guards = current_guards().with_overrides(
            max_length=args.max_length, max_dim=args.max_dim, max_results=args.max_results
        )
        result = args.handler(args, guards)
    except GuardExceeded as exc:
        _emit_error(err, exc)
        return 2
    except (ValueError, KeyError, TypeError, InvariantViolation, OSError) as exc:
        _emit_error(err, exc)
        return 1

    if isinstance(result, str):
        out.write(result)
    elif hasattr(result, "sorted_terms"):
        out.write(codec.dumps(codec.poly_to_json(result)))
    else:
        out.write(codec.dumps(result))
    return 0
