"""Command line front end: ldicode <command> FILE [options].

Exit status: 0 on success, 1 when a check or validation fails (including
``p == q`` requests and dependent generators), 2 when the input cannot be
read or parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

import numpy as np

from . import __version__
from .canonical import canonicalize, step_to_dict
from .codefile import format_code_file, parse_code_file
from .distance import DistanceReport, detection_distance, oracle_distance
from .errors import LDIError, NonPrimeModulus, ParseError
from .modular import PrimeModulus, rank_mod
from .pauli import CodeSpec
from .rates import fmt, rates
from .symplectic import commutator_matrix, min_entanglement
from .transform import bounds, check_lift, prime_scan, transform, verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class _Failed(Exception):
    """A check ran and said no; the payload is still printed."""


def _prime(text: str) -> int:
    try:
        return int(PrimeModulus(int(text)))
    except (ValueError, NonPrimeModulus):
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime") from None


def _primes(text: str) -> list[int]:
    return [_prime(t) for t in text.split(",") if t.strip()]


def _load(path: str) -> CodeSpec:
    if path == "-":
        return parse_code_file(sys.stdin.read())
    with open(path) as fh:
        return parse_code_file(fh.read())


def _matrix(a) -> list[list[int]]:
    return [[int(v) for v in row] for row in np.asarray(a).tolist()]


def _vector(v) -> list[int] | None:
    return None if v is None else [int(x) for x in v.entries]


def _distance_dict(rep: DistanceReport) -> dict[str, Any]:
    return {
        "distance": rep.distance,
        "d_pure": rep.d_pure,
        "d": rep.d,
        "witness": _vector(rep.witness),
        "degenerate": rep.degenerate,
        "cap_hit": rep.cap_hit,
        "kernel_is_isotropic": rep.kernel_is_isotropic,
        "max_weight": rep.max_weight,
    }


def _verification_dict(rep) -> dict[str, Any]:
    return {
        "preserves_mod_q": rep.preserves_mod_q,
        "commutes_mod_p": rep.commutes_mod_p,
        "l_valid": rep.l_valid,
        "ok": rep.ok,
        "max_entry_observed": rep.max_entry_observed,
        "rank_mod_p": rep.rank_mod_p,
        "noncommuting_pairs": [list(t) for t in rep.noncommuting_pairs],
    }


def _rows(a) -> str:
    a = np.asarray(a)
    n = a.shape[1] // 2
    width = max(len(str(int(v))) for v in a.flat)
    out = []
    for row in a.tolist():
        cells = [str(v).rjust(width) for v in row]
        out.append("  " + " ".join(cells[:n]) + " | " + " ".join(cells[n:]))
    return "\n".join(out)


# --- commands ---------------------------------------------------------------


def cmd_info(args) -> tuple[dict, str]:
    code = _load(args.file)
    ent = min_entanglement(code)
    logical = code.n + ent.c - code.k
    data = {
        "q": int(code.q),
        "n": code.n,
        "k": code.k,
        "rank": rank_mod(code.generators, code.q),
        "c": ent.c,
        "s": ent.s,
        "logical": logical,
        "codewords": int(code.q) ** logical if logical >= 0 else None,
        "declared": {"c": code.c, "d": code.d},
        "noncommuting_pairs": [list(t) for t in ent.noncommuting_pairs],
        "commutator_mod_q": commutator_matrix(code).tolist(),
    }
    text = (
        f"[[{code.n},{logical};{ent.c}]]_{int(code.q)}  k={code.k} s={ent.s}\n"
        f"non-commuting pairs (0-based rows): {ent.noncommuting_pairs or 'none'}"
    )
    if code.c is not None and code.c != ent.c:
        text += f"\nnote: declared c={code.c} differs from the minimum {ent.c}"
    return data, text


def cmd_canonical(args) -> tuple[dict, str]:
    code = _load(args.file)
    canon = canonicalize(code)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(format_code_file(canon.code))
    data = {
        "q": int(code.q),
        "canonical": _matrix(canon.code.generators),
        "log": [step_to_dict(s) for s in canon.log],
        "hadamards": canon.hadamards,
    }
    return data, f"canonical form over GF({int(code.q)}):\n{_rows(canon.code.generators)}\n{len(canon.log)} steps"


def cmd_transform(args) -> tuple[dict, str]:
    code = _load(args.file)
    res = transform(code, args.to_p, minimize_magnitude=args.minimize_magnitude)
    rep = verify(res)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(format_code_file(res.code))
    dec = res.decomposition
    data = {
        "q": int(res.q),
        "p": int(res.target_p),
        "label": res.label,
        "hadamard_convention": "(x, z) -> (-z, x)",
        "canonical": _matrix(res.source.code.generators),
        "log": [step_to_dict(s) for s in res.source.log],
        "nu": dec.nu,
        "nu_inv": dec.nu_inv,
        "pairs": [
            {"i": t.i, "j": t.j, "c": t.c, "alpha": t.alpha, "m": t.m, "n": t.n, "L": t.L}
            for t in dec.pairs
        ],
        "L": _matrix(res.L),
        "output": _matrix(res.output),
        "verification": _verification_dict(rep),
        "B": bounds(code, 1).B,
    }
    text = (
        f"lifted to p={int(res.target_p)} ({res.label}):\n{_rows(res.output)}\n"
        f"L = {_matrix(res.L)}\n"
        f"mod-q preserved: {rep.preserves_mod_q}  commutes mod p: {rep.commutes_mod_p}  "
        f"L valid: {rep.l_valid}  max |entry|: {rep.max_entry_observed}"
    )
    return data, text


def cmd_verify(args) -> tuple[dict, str]:
    code = _load(args.file)
    p = args.p if args.p is not None else int(code.q)
    if args.source:
        src = _load(args.source)
        canon = canonicalize(src)
        rep = check_lift(canon.code.generators, code.generators, src.q, p)
        data = {"p": p, "q": int(src.q), **_verification_dict(rep)}
        ok = rep.ok
        text = (
            f"mod-{int(src.q)} preserved: {rep.preserves_mod_q}  commutes mod {p}: {rep.commutes_mod_p}  "
            f"L valid: {rep.l_valid}"
        )
    else:
        pairs = commutator_matrix(code, p).nonzero_pairs()
        ok = not pairs
        data = {"p": p, "commutes_mod_p": ok, "noncommuting_pairs": [list(t) for t in pairs]}
        text = f"commutes mod {p}: {ok}" + (f"  offending pairs: {pairs}" if pairs else "")
    if not ok:
        raise _Failed(data, text)
    return data, text


def cmd_distance(args) -> tuple[dict, str]:
    code = _load(args.file)
    p = args.p if args.p is not None else int(code.q)
    rep = oracle_distance(code.generators, p) if args.oracle else detection_distance(code.generators, p, args.max_weight)
    data = {"p": p, **_distance_dict(rep)}
    text = f"distance mod {p}: {rep.distance}" + ("  (search cap hit)" if rep.cap_hit else "")
    if rep.witness is not None:
        text += f"\nwitness: {rep.witness}"
    return data, text


def cmd_bounds(args) -> tuple[dict, str]:
    code = _load(args.file)
    d = args.distance if args.distance is not None else code.d
    if d is None:
        raise LDIError("no distance given: pass --distance or declare 'd' in the file")
    res = transform(code, args.to_p) if args.to_p else None
    rep = bounds(code, d, res)
    data = {"B": rep.B, "p_star": str(rep.p_star), "d_used": d, "max_entry_observed": rep.max_entry_observed}
    text = f"B = {rep.B}\np* = {rep.p_star}  (d = {d})"
    if rep.trivial:
        data["note"] = "d = 1: p* = 1 by the 0^0 = 1 convention"
        text += "\nnote: d = 1, so p* = 1 by the 0^0 = 1 convention"
    if rep.max_entry_observed is not None:
        text += f"\nmax |entry| after lifting to p={args.to_p}: {rep.max_entry_observed}"
    return data, text


def cmd_rates(args) -> tuple[dict, str]:
    code = _load(args.file)
    c = min_entanglement(code).c
    r = rates(code.n, code.k, c)
    data = {
        "n": r.n,
        "k": r.k,
        "c": r.c,
        "ea_rate": fmt(r.ea_rate),
        "tradeoff": [fmt(r.tradeoff[0]), fmt(r.tradeoff[1])],
        "catalytic": fmt(r.catalytic),
    }
    text = (
        f"entanglement-assisted: {data['ea_rate']}\n"
        f"trade-off: ({data['tradeoff'][0]}, {data['tradeoff'][1]})\n"
        f"catalytic: {data['catalytic']}"
    )
    return data, text


def cmd_scan(args) -> tuple[dict, str]:
    code = _load(args.file)
    entries = prime_scan(code, args.primes, args.max_weight)
    out, lines = [], []
    for e in entries:
        if e.error:
            out.append({"p": e.p, "error": e.error})
            lines.append(f"p={e.p}: {e.error}")
            continue
        out.append(
            {
                "p": e.p,
                "label": e.result.label,
                "verification": _verification_dict(e.verification),
                "distance": _distance_dict(e.distance),
                "preserved": e.preserved,
            }
        )
        lines.append(
            f"p={e.p}: commutes={e.verification.commutes_mod_p} distance={e.distance.distance} "
            f"preserved={e.preserved} max|entry|={e.verification.max_entry_observed}"
        )
    return {"entries": out}, "\n".join(lines)


COMMANDS = {
    "info": cmd_info,
    "canonical": cmd_canonical,
    "transform": cmd_transform,
    "verify": cmd_verify,
    "distance": cmd_distance,
    "bounds": cmd_bounds,
    "rates": cmd_rates,
    "scan": cmd_scan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ldicode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="code file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("info", "parameters and commutation structure")
    p = add("canonical", "reduce to [I_k X2 | Z1 Z2]")
    p.add_argument("-o", "--output")
    p = add("transform", "lift to a commuting code over another prime")
    p.add_argument("--to-p", type=_prime, required=True)
    p.add_argument("--minimize-magnitude", action="store_true")
    p.add_argument("-o", "--output")
    p = add("verify", "check commutation (and, with --source, the lift structure)")
    p.add_argument("--p", type=_prime)
    p.add_argument("--source")
    p = add("distance", "brute-force distance")
    p.add_argument("--p", type=_prime)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--oracle", action="store_true", help="exhaustive scan of every vector")
    p = add("bounds", "entry bound B and prime threshold p*")
    p.add_argument("--distance", type=int)
    p.add_argument("--to-p", type=_prime)
    add("rates", "entanglement-assisted, trade-off and catalytic rates")
    p = add("scan", "transform and measure distance over several primes")
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--max-weight", type=int)
    return parser


def _emit(data, text, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(data, indent=2) + "\n")
    else:
        stream.write(text + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, text = COMMANDS[args.command](args)
    except _Failed as exc:
        data, text = exc.args
        _emit(data, text, args.json, sys.stdout)
        return EXIT_FAIL
    except (ParseError, NonPrimeModulus, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LDIError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(data, text, args.json, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
