"""Command-line front end for the exact verification suites.

Subcommands::

    qvertex identities --which all
    qvertex cocycle    --rank 3
    qvertex relations  --rank 2 --relation r7 --mode-min -2 --mode-max 2
    qvertex hwv        --rank 2
    qvertex act        --rank 2 --op "x+_1[-1]" --vector "e[0,0] t[0]"

Verification subcommands print a report (``--format text`` or ``json``)
and exit 0 when every check passed, 1 when any failed; usage and input
errors exit 2.  With ``--out FILE`` the report is written to the file and
summary figures are rendered next to it (suppressed by ``--no-figures``;
they need the optional matplotlib dependency).

The ``act`` subcommand applies a whitespace-separated operator word to a
vector, rightmost factor first.  Operator tokens::

    x+_i[k]  x-_i[k]  psi_i[m]  phi_i[-m]  a_i[k]  K_i  K_i^-1  e0
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .fock import FockVector, HeisenGen, apply_heisenberg, parse_vector, vector_text, zero_mode_a
from .lattice import check_cocycle_commutation, check_quasi_cocycle_axioms
from .report import VerificationReport
from .verify import (
    CheckConfig,
    IDENTITY_NAMES,
    RELATION_NAMES,
    check_identities,
    verify_hwv,
    verify_lemma,
    verify_relations,
)
from .vertex import (
    VertexContext,
    apply_e0,
    apply_k,
    apply_phi_mode,
    apply_psi_mode,
    apply_x_mode,
)

__all__ = ["main", "build_parser", "apply_op_string"]


# ---------------------------------------------------------------------------
# operator words

_X_RE = re.compile(r"^x([+-])_(\d+)\[(-?\d+)\]$")
_DIAG_RE = re.compile(r"^(psi|phi)_(\d+)\[(-?\d+)\]$")
_A_RE = re.compile(r"^a_(\d+)\[(-?\d+)\]$")
_K_RE = re.compile(r"^K_(\d+)(\^-1)?$")


def _check_row(i: int, n: int, token: str):
    if not 1 <= i <= n:
        raise ValueError(f"row index {i} out of range 1..{n} in token {token!r}")


def _apply_token(ctx: VertexContext, token: str, vec: FockVector) -> FockVector:
    n = ctx.rank
    if token == "e0":
        return apply_e0(ctx, vec)
    m = _X_RE.match(token)
    if m:
        sign = 1 if m.group(1) == "+" else -1
        i, k = int(m.group(2)), int(m.group(3))
        _check_row(i, n, token)
        return apply_x_mode(ctx, sign, i, k, vec)
    m = _DIAG_RE.match(token)
    if m:
        i, k = int(m.group(2)), int(m.group(3))
        _check_row(i, n, token)
        apply = apply_psi_mode if m.group(1) == "psi" else apply_phi_mode
        return apply(ctx, i, k, vec)
    m = _A_RE.match(token)
    if m:
        i, k = int(m.group(1)), int(m.group(2))
        _check_row(i, n, token)
        if k == 0:
            return zero_mode_a(i, vec)
        return apply_heisenberg(HeisenGen("a", i, k), vec)
    m = _K_RE.match(token)
    if m:
        i = int(m.group(1))
        _check_row(i, n, token)
        return apply_k(ctx, i, vec, inverse=bool(m.group(2)))
    raise ValueError(f"cannot parse operator token {token!r}")


def apply_op_string(ctx: VertexContext, text: str, vec: FockVector) -> FockVector:
    """Apply a whitespace-separated operator word, rightmost factor first."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty operator string")
    for token in reversed(tokens):
        vec = _apply_token(ctx, token, vec)
    return vec


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qvertex",
        description="exact verification of the level-one free-field construction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    output.add_argument("--out", metavar="FILE", help="write the report to FILE")
    output.add_argument(
        "--no-figures",
        action="store_true",
        help="skip the summary figures rendered next to --out",
    )

    ranked = argparse.ArgumentParser(add_help=False)
    ranked.add_argument("--rank", type=int, default=2, help="rank n >= 2 (default 2)")

    p = sub.add_parser(
        "identities",
        parents=[output],
        help="polynomial identities and q-power-series factor checks",
    )
    p.add_argument(
        "--which",
        choices=IDENTITY_NAMES + ("all",),
        default="all",
        help="which identity family to check",
    )

    p = sub.add_parser(
        "cocycle", parents=[ranked, output], help="twist-cocycle axioms and commutation"
    )
    p.add_argument(
        "--window",
        type=int,
        default=1,
        help="half-width of the weight window for the commutation sweep",
    )

    p = sub.add_parser(
        "relations", parents=[ranked, output], help="defining relations on module vectors"
    )
    p.add_argument(
        "--relation",
        choices=RELATION_NAMES + ("all",),
        default="all",
        help="which relation sweep to run",
    )
    p.add_argument("--mode-min", type=int, default=-1, help="lower end of the mode window")
    p.add_argument("--mode-max", type=int, default=1, help="upper end of the mode window")
    p.add_argument(
        "--max-level", type=int, default=2, help="creation depth of the test vectors"
    )

    sub.add_parser(
        "hwv", parents=[ranked, output], help="highest-weight vector and lowering-step checks"
    )

    p = sub.add_parser("act", parents=[ranked, output], help="apply an operator word to a vector")
    p.add_argument("--op", required=True, help="operator word, rightmost factor applied first")
    p.add_argument("--vector", required=True, help="input vector in the canonical text form")

    return parser


# ---------------------------------------------------------------------------
# subcommand bodies


def _emit_report(report: VerificationReport, args) -> int:
    rendered = report.render_json() if args.format == "json" else report.render_text()
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(rendered)
        if not args.no_figures:
            try:
                report.render_figures(str(out.parent / out.stem))
            except ImportError:
                print(
                    "note: matplotlib is not installed; skipping figures",
                    file=sys.stderr,
                )
    else:
        sys.stdout.write(rendered)
    return 0 if report.ok else 1


def _cmd_identities(args) -> int:
    return _emit_report(check_identities(args.which), args)


def _cmd_cocycle(args) -> int:
    report = VerificationReport("cocycle", args.rank)
    report.extend(check_quasi_cocycle_axioms(args.rank))
    report.extend(check_cocycle_commutation(args.rank, window=args.window))
    return _emit_report(report, args)


def _cmd_relations(args) -> int:
    cfg = CheckConfig(
        rank=args.rank,
        mode_min=args.mode_min,
        mode_max=args.mode_max,
        max_level=args.max_level,
    )
    return _emit_report(verify_relations(cfg, args.relation), args)


def _cmd_hwv(args) -> int:
    cfg = CheckConfig(rank=args.rank)
    report = VerificationReport("hwv", args.rank)
    report.extend(verify_hwv(cfg))
    report.extend(verify_lemma(cfg))
    return _emit_report(report, args)


def _cmd_act(args) -> int:
    ctx = VertexContext(args.rank)
    vec = parse_vector(args.vector, args.rank)
    result = apply_op_string(ctx, args.op, vec)
    text = vector_text(result)
    if args.format == "json":
        payload = (
            json.dumps(
                {
                    "command": "act",
                    "rank": args.rank,
                    "op": args.op,
                    "vector": args.vector,
                    "result": text,
                },
                indent=2,
            )
            + "\n"
        )
    else:
        payload = text + "\n"
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(payload)
    else:
        sys.stdout.write(payload)
    return 0


_COMMANDS = {
    "identities": _cmd_identities,
    "cocycle": _cmd_cocycle,
    "relations": _cmd_relations,
    "hwv": _cmd_hwv,
    "act": _cmd_act,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
