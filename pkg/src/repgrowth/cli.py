"""Command-line front end.

Exit codes: 0 success, 1 computation-level failure (an oracle disagreement or
a failed identity check), 2 usage or input errors.  Output is deterministic:
floats are printed with 12 significant digits, rationals exactly.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .char_table import (
    decompose,
    first_power_containing,
    load_table_file,
    min_power_containing_regular,
    regular_tensor_check,
    tensor_power_char,
)
from .growth import estimate, nth_root_sequence
from .markov import (
    HypothesisViolationError,
    IntegerRingMap,
    decay_rate,
    p_of_map,
    p_of_tensor_by,
)
from .modular_fusion import (
    FusionVector,
    fuse_basis,
    is_prime,
    jordan_oracle,
    tensor_power,
    ts_series_modular,
)
from .partitions import canonicalize
from .pieri import tensor_power_decomposition, ts_series_sl
from .torus import (
    InapplicableBoundError,
    bernstein_zero_bound,
    diagonal_zero_count,
    zero_weight_count,
    zero_weight_probability,
)


class UsageError(ValueError):
    """Bad command-line input; reported on stderr with exit code 2."""


@dataclass
class CommandResult:
    command: str
    params: dict
    result: dict
    lines: list[str]
    csv_rows: list[list[object]] | None = None
    exit_code: int = 0


def _fmt_float(x: float) -> str:
    return format(x, ".12g")


def _ladder_str(v: FusionVector) -> str:
    terms = [f"V{i}" if c == 1 else f"{c}*V{i}" for i, c in enumerate(v.coeffs) if c]
    return " + ".join(terms) if terms else "0"


def _fusion_display(p: int, m: int, n: int, closed: FusionVector) -> str:
    """Render V_m (x) V_n the way the closed-form rule derives it.

    Below the threshold the ladder prints in ascending index order; above it
    the split-off projective multiple leads and the remainder ladder follows.
    """
    if m + n <= p - 1:
        return _ladder_str(closed)
    d = m + n - (p - 2)
    head = f"V{p - 1}" if d == 1 else f"{d}*V{p - 1}"
    rest = list(closed.coeffs)
    rest[p - 1] -= d
    if any(rest):
        return f"{head} + {_ladder_str(FusionVector(p, tuple(rest)))}"
    return head


def _matrix_str(rows) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in rows) + "]"


def _matrix_json(rows) -> list[list[str]]:
    return [[str(x) for x in row] for row in rows]


def _parse_seed(p: int, text: str) -> FusionVector:
    """Parse seeds like 'V1', '2*V2', 'V0+3*V1'."""
    coeffs = [0] * p
    for term in text.split("+"):
        term = term.strip()
        head, sep, tail = term.partition("*")
        if sep:
            count_text, index_text = head.strip(), tail.strip()
        else:
            count_text, index_text = "1", term
        if not (index_text.startswith("V") and index_text[1:].isdigit()):
            raise UsageError(f"malformed seed term {term!r}")
        if not count_text.isdigit():
            raise UsageError(f"malformed seed term {term!r}")
        index = int(index_text[1:])
        if index >= p:
            raise UsageError(f"seed term {term!r} exceeds V{p - 1}")
        coeffs[index] += int(count_text)
    if not any(coeffs):
        raise UsageError(f"seed {text!r} is zero")
    return FusionVector(p, tuple(coeffs))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"p must be prime, got {p}")


# --- command handlers ------------------------------------------------------


def _cmd_pieri(args) -> CommandResult:
    if args.m < 1:
        raise UsageError(f"m must be at least 1, got {args.m}")
    if args.n < 0:
        raise UsageError(f"n must be non-negative, got {args.n}")
    d = tensor_power_decomposition(args.m, args.n)
    if args.canonical:
        merged: dict = {}
        for lam, mult in d.mults.items():
            key = canonicalize(lam).canonical
            merged[key] = merged.get(key, 0) + mult
        items = sorted(merged.items(), key=lambda kv: kv[0].parts, reverse=True)
    else:
        items = list(d.mults.items())
    return CommandResult(
        command="pieri",
        params={"m": args.m, "n": args.n, "canonical": bool(args.canonical)},
        result={"mults": {str(lam): mult for lam, mult in items}},
        lines=[f"{lam}: {mult}" for lam, mult in items],
        csv_rows=[["partition", "multiplicity"]]
        + [[str(lam), mult] for lam, mult in items],
    )


def _cmd_ts(args) -> CommandResult:
    if args.max < 1:
        raise UsageError(f"--max must be at least 1, got {args.max}")
    if args.mode == "sl":
        if args.m < 1:
            raise UsageError(f"m must be at least 1, got {args.m}")
        series = ts_series_sl(args.m, args.max)
        params = {"mode": "sl", "m": args.m, "max": args.max}
    else:
        _require_prime(args.p)
        if args.step < 1:
            raise UsageError(f"--step must be at least 1, got {args.step}")
        seed = _parse_seed(args.p, args.seed)
        series = ts_series_modular(seed, args.step, args.max)
        params = {
            "mode": "modular",
            "p": args.p,
            "seed": args.seed,
            "step": args.step,
            "max": args.max,
        }
    roots = nth_root_sequence(series)
    est = estimate(series)
    lines = [
        f"k={k} n={series.step * k} ts={a} root={_fmt_float(r)}"
        for k, (a, r) in enumerate(zip(series.values, roots), start=1)
    ]
    fekete = "true" if est.fekete_ok else "false"
    lines.append(
        f"lower={_fmt_float(est.lower)} upper={_fmt_float(est.upper)} fekete_ok={fekete}"
    )
    return CommandResult(
        command="ts",
        params=params,
        result={
            "step": series.step,
            "dim_v": series.dim_v,
            "values": list(series.values),
            "nth_roots": roots,
            "estimate": {
                "lower": est.lower,
                "upper": est.upper,
                "fekete_ok": est.fekete_ok,
            },
        },
        lines=lines,
        csv_rows=[["k", "n", "ts", "nth_root"]]
        + [
            [k, series.step * k, a, _fmt_float(r)]
            for k, (a, r) in enumerate(zip(series.values, roots), start=1)
        ],
    )


def _cmd_fusion(args) -> CommandResult:
    _require_prime(args.p)
    if not (0 <= args.m < args.p and 0 <= args.n < args.p):
        raise UsageError(f"indices ({args.m}, {args.n}) outside 0..{args.p - 1}")
    closed = fuse_basis(args.p, args.m, args.n)
    display = _fusion_display(args.p, args.m, args.n, closed)
    lines = [display]
    result = {
        "decomposition": list(closed.coeffs),
        "display": display,
    }
    exit_code = 0
    if args.oracle:
        oracle = jordan_oracle(args.p, args.m, args.n)
        agree = oracle == closed
        result["oracle"] = list(oracle.coeffs)
        result["agree"] = agree
        if agree:
            lines = [f"{display} | AGREE"]
        else:
            lines = [f"{display} != {_ladder_str(oracle)} | DISAGREE"]
            exit_code = 1
    return CommandResult(
        command="fusion",
        params={"p": args.p, "m": args.m, "n": args.n, "oracle": bool(args.oracle)},
        result=result,
        lines=lines,
        exit_code=exit_code,
    )


def _cmd_markov(args) -> CommandResult:
    _require_prime(args.p)
    if args.example:
        if args.seed is not None:
            raise UsageError("--example does not take --seed")
        if args.p != 2:
            raise UsageError("the worked non-multiplicativity example needs --p 2")
        s = IntegerRingMap(2, ((2, 1), (0, 1)))
        s2 = s.compose(s)
        p_s, p_s2 = p_of_map(s), p_of_map(s2)
        p_s_sq = p_s @ p_s
        multiplicative = p_s_sq == p_s2
        lines = [
            f"[S] = {_matrix_str(s.rows)}",
            f"[S^2] = {_matrix_str(s2.rows)}",
            f"P(S) = {_matrix_str(p_s.rows)}",
            f"P(S^2) = {_matrix_str(p_s2.rows)}",
            f"P(S)^2 = {_matrix_str(p_s_sq.rows)}",
        ]
        if multiplicative:
            lines.append("unexpected: P(S^2) == P(S)^2")
        else:
            lines.append("P(S^2) != P(S)^2: P is not multiplicative for this map")
        return CommandResult(
            command="markov",
            params={"p": 2, "example": True},
            result={
                "s": [list(r) for r in s.rows],
                "s_squared": [list(r) for r in s2.rows],
                "p_of_s": _matrix_json(p_s.rows),
                "p_of_s_squared": _matrix_json(p_s2.rows),
                "p_of_s_power_2": _matrix_json(p_s_sq.rows),
                "multiplicative": multiplicative,
            },
            lines=lines,
            exit_code=1 if multiplicative else 0,
        )
    if args.seed is None:
        raise UsageError("need --seed V... or --example")
    if args.power < 1:
        raise UsageError(f"--power must be at least 1, got {args.power}")
    seed = _parse_seed(args.p, args.seed)
    one_step = p_of_tensor_by(seed)
    powered = one_step**args.power
    direct = p_of_tensor_by(tensor_power(seed, args.power))
    multiplicative = powered == direct
    lines = [
        f"P(T) = {_matrix_str(one_step.rows)}",
        f"P(T)^{args.power} = {_matrix_str(powered.rows)}",
        f"P(T^{args.power}) = {_matrix_str(direct.rows)}",
        f"multiplicative: {'ok' if multiplicative else 'FAIL'}",
    ]
    result = {
        "seed": list(seed.coeffs),
        "power": args.power,
        "p_of_t": _matrix_json(one_step.rows),
        "p_of_t_power": _matrix_json(powered.rows),
        "p_of_t_direct": _matrix_json(direct.rows),
        "multiplicative": multiplicative,
    }
    try:
        rate = decay_rate(seed)
        lines.append(f"decay_rate = {rate}")
        result["decay_rate"] = str(rate)
    except HypothesisViolationError as exc:
        lines.append(f"decay_rate: unavailable ({exc})")
        result["decay_rate"] = None
    return CommandResult(
        command="markov",
        params={"p": args.p, "seed": args.seed, "power": args.power, "example": False},
        result=result,
        lines=lines,
        exit_code=0 if multiplicative else 1,
    )


def _cmd_torus(args) -> CommandResult:
    if args.n < 0:
        raise UsageError(f"n must be non-negative, got {args.n}")
    if args.diagonal:
        if args.weights is not None:
            raise UsageError("--diagonal does not take --weights")
        if args.m is None or args.m < 1:
            raise UsageError("--diagonal needs --m with m >= 1")
        count = diagonal_zero_count(args.m, args.n)
        return CommandResult(
            command="torus",
            params={"diagonal": True, "m": args.m, "n": args.n},
            result={"count": count},
            lines=[f"count = {count}"],
        )
    if args.weights is None:
        raise UsageError("need --weights k1,k2,... or --diagonal")
    try:
        weights = tuple(int(token) for token in args.weights.split(","))
    except ValueError:
        raise UsageError(f"malformed weights {args.weights!r}") from None
    count = zero_weight_count(weights, args.n)
    probability = zero_weight_probability(weights, args.n)
    lines = [f"count = {count}", f"probability = {probability}"]
    result = {
        "count": count,
        "probability": str(probability),
    }
    try:
        bound = bernstein_zero_bound(weights, args.n)
        lines.append(
            f"bound = {_fmt_float(bound.value)} "
            f"(t={bound.inputs.t}, v={bound.inputs.v}, b={bound.inputs.b})"
        )
        result["bound"] = bound.value
        result["bound_inputs"] = {
            "t": str(bound.inputs.t),
            "v": str(bound.inputs.v),
            "b": str(bound.inputs.b),
        }
    except InapplicableBoundError as exc:
        lines.append(f"bound: unavailable ({exc})")
        result["bound"] = None
    return CommandResult(
        command="torus",
        params={"diagonal": False, "weights": list(weights), "n": args.n},
        result=result,
        lines=lines,
    )


def _cmd_chartab(args) -> CommandResult:
    table = load_table_file(args.table)
    index = table.irrep_index(args.irrep)
    chi = table.irreps[index]
    params = {"table": args.table, "action": args.action, "irrep": args.irrep}
    if args.action == "decompose":
        if args.power < 0:
            raise UsageError(f"--power must be non-negative, got {args.power}")
        mults = decompose(table, tensor_power_char(chi, args.power))
        params["power"] = args.power
        return CommandResult(
            command="chartab",
            params=params,
            result={"mults": dict(zip(table.irrep_names, mults))},
            lines=[f"{name}: {m}" for name, m in zip(table.irrep_names, mults)],
        )
    if args.action == "first-power":
        target = table.irrep_index(args.target)
        max_d = table.group_order if args.max is None else args.max
        d = first_power_containing(table, chi, target, max_d)
        params.update({"target": args.target, "max": max_d})
        lines = [f"d = {d}"] if d is not None else [
            f"no power up to {max_d} contains {args.target}"
        ]
        return CommandResult(
            command="chartab", params=params, result={"d": d}, lines=lines
        )
    if args.action == "regular-check":
        ok = regular_tensor_check(table, chi)
        degree = table.degree(index)
        lines = (
            [f"OK: {args.irrep} (x) Regular = {degree} * Regular, TS={degree}"]
            if ok
            else [f"FAIL: {args.irrep} (x) Regular != {degree} * Regular"]
        )
        return CommandResult(
            command="chartab",
            params=params,
            result={"ok": ok, "degree": degree},
            lines=lines,
            exit_code=0 if ok else 1,
        )
    # min-regular
    params["max"] = args.max
    try:
        n = min_power_containing_regular(table, chi, args.max)
    except LookupError as exc:
        return CommandResult(
            command="chartab",
            params=params,
            result={"n": None},
            lines=[str(exc)],
            exit_code=1,
        )
    return CommandResult(
        command="chartab", params=params, result={"n": n}, lines=[f"N = {n}"]
    )


# --- parser and dispatch ---------------------------------------------------


def _output_flags(parser: argparse.ArgumentParser, with_csv: bool = False) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit one JSON object")
    if with_csv:
        group.add_argument("--csv", action="store_true", help="emit CSV rows")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repgrowth",
        description="Exact tensor-power decompositions and trivial-summand growth rates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pieri = sub.add_parser("pieri", help="decompose V^(x)n for SL_m")
    pieri.add_argument("--m", type=int, required=True, help="rank: V has dimension m")
    pieri.add_argument("--n", type=int, required=True, help="tensor degree")
    pieri.add_argument(
        "--canonical", action="store_true", help="merge summands into SL_m weight classes"
    )
    _output_flags(pieri, with_csv=True)
    pieri.set_defaults(handler=_cmd_pieri)

    ts = sub.add_parser("ts", help="trivial-summand growth series")
    ts_modes = ts.add_subparsers(dest="mode", required=True)
    ts_sl = ts_modes.add_parser("sl", help="SL_m on its natural module")
    ts_sl.add_argument("--m", type=int, required=True)
    ts_sl.add_argument("--max", type=int, required=True, help="number of terms")
    _output_flags(ts_sl, with_csv=True)
    ts_sl.set_defaults(handler=_cmd_ts)
    ts_mod = ts_modes.add_parser("modular", help="Z/pZ in characteristic p")
    ts_mod.add_argument("--p", type=int, required=True)
    ts_mod.add_argument("--seed", required=True, help="e.g. V1 or V0+2*V2")
    ts_mod.add_argument("--step", type=int, default=1)
    ts_mod.add_argument("--max", type=int, required=True, help="number of terms")
    _output_flags(ts_mod, with_csv=True)
    ts_mod.set_defaults(handler=_cmd_ts)

    fusion = sub.add_parser("fusion", help="decompose V_m (x) V_n over Z/pZ, char p")
    fusion.add_argument("--p", type=int, required=True)
    fusion.add_argument("m", type=int)
    fusion.add_argument("n", type=int)
    fusion.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against Jordan form ranks over F_p",
    )
    _output_flags(fusion)
    fusion.set_defaults(handler=_cmd_fusion)

    markov = sub.add_parser("markov", help="dimension-ratio transition matrices")
    markov.add_argument("--p", type=int, required=True)
    markov.add_argument("--seed", help="tensor by this fusion vector, e.g. V1")
    markov.add_argument("--power", type=int, default=1)
    markov.add_argument(
        "--example",
        action="store_true",
        help="show the additive map where P fails to be multiplicative",
    )
    _output_flags(markov)
    markov.set_defaults(handler=_cmd_markov)

    torus = sub.add_parser("torus", help="zero-weight counts for torus actions")
    torus.add_argument("--weights", help="comma-separated integers, e.g. 2,-1")
    torus.add_argument("--n", type=int, required=True, help="tensor degree multiplier")
    torus.add_argument(
        "--diagonal",
        action="store_true",
        help="full diagonal torus of SL_m on V^(x)(m*n)",
    )
    torus.add_argument("--m", type=int, help="rank, for --diagonal")
    _output_flags(torus)
    torus.set_defaults(handler=_cmd_torus)

    chartab = sub.add_parser("chartab", help="finite-group character table queries")
    chartab.add_argument("table", help="path to a character table file")
    actions = chartab.add_subparsers(dest="action", required=True)
    dec = actions.add_parser("decompose", help="decompose a tensor power of an irrep")
    dec.add_argument("--irrep", required=True)
    dec.add_argument("--power", type=int, default=1)
    _output_flags(dec)
    dec.set_defaults(handler=_cmd_chartab)
    fp = actions.add_parser("first-power", help="least d with target inside irrep**d")
    fp.add_argument("--irrep", required=True)
    fp.add_argument("--target", required=True)
    fp.add_argument("--max", type=int, help="search cap (default: group order)")
    _output_flags(fp)
    fp.set_defaults(handler=_cmd_chartab)
    rc = actions.add_parser("regular-check", help="verify V (x) Regular = deg * Regular")
    rc.add_argument("--irrep", required=True)
    _output_flags(rc)
    rc.set_defaults(handler=_cmd_chartab)
    mr = actions.add_parser("min-regular", help="least N with Regular inside (1+V)**N")
    mr.add_argument("--irrep", required=True)
    mr.add_argument("--max", type=int, help="search cap (default: group order)")
    _output_flags(mr)
    mr.set_defaults(handler=_cmd_chartab)

    return parser


def _render(result: CommandResult, args: argparse.Namespace) -> None:
    if getattr(args, "json", False):
        print(
            json.dumps(
                {
                    "command": result.command,
                    "params": result.params,
                    "result": result.result,
                }
            )
        )
    elif getattr(args, "csv", False) and result.csv_rows is not None:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(result.csv_rows)
    else:
        for line in result.lines:
            print(line)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        result = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    _render(result, args)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
