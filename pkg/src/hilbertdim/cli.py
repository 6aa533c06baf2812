"""Command-line front end: ``hilbertdim {dim,optimize,sweep,verify,threshold}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
Dimensions are always printed as exact decimal integers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from hilbertdim import oracle, packing
from hilbertdim.optimizer import (
    M_CONST,
    QUTRIT_QUBIT_RATE,
    SWEEP_SERIES,
    InfeasibleError,
    SweepTable,
    best_equipartition,
    best_mixed_composition,
    best_particle_count,
    measurement_threshold,
    sweep_series,
)
from hilbertdim.packing import ElementSpec, Model

SWEEP_COLUMNS = ("series", "x", "k_used", "z_used", "dimension")


class UsageError(Exception):
    """Invalid flag combination; reported with exit code 2."""


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    result: Any
    metadata: dict[str, Any] = field(default_factory=dict)
    table: SweepTable | None = None

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "metadata": self.metadata,
        }
        if self.table is not None:
            doc["result"] = [_row_dict(r) for r in self.table.rows]
        return json.dumps(doc, sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.table is not None:
            writer.writerow(SWEEP_COLUMNS)
            for r in self.table.rows:
                writer.writerow(_row_dict(r)[c] for c in SWEEP_COLUMNS)
        else:
            flat = {**self.inputs, **_flatten_result(self.result)}
            writer.writerow(flat)
            writer.writerow(flat.values())
        return buf.getvalue().rstrip("\n")

    def to_text(self) -> str:
        if self.table is not None:
            lines = [" ".join(f"{c:>10}" for c in SWEEP_COLUMNS)]
            for r in self.table.rows:
                lines.append(" ".join(f"{v:>10}" for v in _row_dict(r).values()))
        else:
            flat = _flatten_result(self.result)
            lines = [str(flat.pop("result", next(iter(flat.values()), "")))]
            lines += [f"{k}={v}" for k, v in flat.items()]
        lines += [f"# {k}: {v}" for k, v in sorted(self.metadata.items())]
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


def _row_dict(row) -> dict[str, str]:
    return {
        "series": str(row.series),
        "x": str(row.x),
        "k_used": str(row.k_used),
        "z_used": str(row.z_used),
        "dimension": str(row.dimension),
    }


def _flatten_result(result: Any) -> dict[str, str]:
    if isinstance(result, dict):
        return {k: str(v) for k, v in result.items()}
    return {"result": str(result)}


def _parse_sizes(text: str) -> set[int]:
    try:
        sizes = {int(s) for s in text.split(",") if s.strip()}
    except ValueError:
        raise UsageError(f"--sizes must be comma-separated integers, got {text!r}") from None
    if not sizes or min(sizes) < 2:
        raise UsageError(f"--sizes must list integers >= 2, got {text!r}")
    return sizes


def cmd_dim(args) -> OutputRecord:
    model = Model(args.model)
    spec = packing.default_element(model, args.x, args.k, args.z)
    element = packing.element_dim(model, spec)
    inputs = {"model": str(model), "x": args.x, "k": spec.k, "z": spec.z}
    defaulted = [name for name in ("k", "z") if getattr(args, name) is None]
    metadata = {"defaults": ",".join(defaulted)} if defaulted else {}
    if args.n is None:
        return OutputRecord("dim", inputs, {"result": str(element)}, metadata)
    inputs["n"] = args.n
    total = packing.equipartition_dim(args.n, args.x, model, spec.k, spec.z)
    return OutputRecord(
        "dim",
        inputs,
        {
            "result": str(total),
            "element_dimension": str(element),
            "elements": args.n // args.x,
        },
        metadata,
    )


def cmd_optimize(args) -> OutputRecord:
    mode = args.mode
    if mode == "equipartition":
        if args.n is None:
            raise UsageError("--mode equipartition requires -n")
        x, dim = best_equipartition(args.n, args.model)
        return OutputRecord(
            "optimize",
            {"n": args.n, "mode": mode, "model": str(Model(args.model))},
            {"result": str(dim), "x": x, "elements": args.n // x},
            {"tie_break": "smaller x"},
        )
    if mode == "mixed":
        if args.n is None:
            raise UsageError("--mode mixed requires -n")
        sizes = _parse_sizes(args.sizes)
        comp = best_mixed_composition(args.n, sizes, strict=args.strict)
        composition = ",".join(f"{s}:{c}" for s, c in sorted(comp.counts.items(), reverse=True))
        return OutputRecord(
            "optimize",
            {
                "n": args.n,
                "mode": mode,
                "sizes": ",".join(map(str, sorted(sizes))),
                "strict": args.strict,
            },
            {
                "result": str(comp.dim),
                "composition": composition,
                "used_sites": comp.used_sites,
                "unused_sites": args.n - comp.used_sites,
            },
            {"tie_break": "more used sites, then more qutrits"},
        )
    if args.x is None:
        raise UsageError("--mode particles requires -x")
    z = 1 if args.z is None else args.z
    ElementSpec(args.x, 0, z)
    k, dim = best_particle_count(args.x, z)
    return OutputRecord(
        "optimize",
        {"mode": mode, "x": args.x, "z": z},
        {"result": str(dim), "k": k},
        {"tie_break": "k nearest x*z/2, then smaller k"},
    )


def cmd_sweep(args) -> OutputRecord:
    if args.n < 4:
        raise UsageError(f"sweep needs -n >= 4, got {args.n}")
    series = SWEEP_SERIES
    if args.series:
        names = [s.strip() for s in args.series.split(",") if s.strip()]
        allowed = {str(s) for s in SWEEP_SERIES}
        bad = [s for s in names if s not in allowed]
        if bad or not names:
            raise UsageError(f"--series must be a subset of {','.join(sorted(allowed))}")
        series = tuple(s for s in SWEEP_SERIES if str(s) in names)
    table = sweep_series(args.n, series)
    return OutputRecord(
        "sweep",
        {"n": args.n, "series": ",".join(map(str, series))},
        None,
        dict(table.metadata),
        table=table,
    )


def run_verify(max_x: int, max_k: int, max_z: int, max_configs: int) -> tuple[int, tuple | None]:
    """Check the nested-sum formula against both oracles on the full grid.

    Returns the number of tuples checked and the first mismatch, if any, as
    ``(x, k, z, formula, enumerated, generating_function)``.
    """
    checked = 0
    for x in range(1, max_x + 1):
        for z in range(1, max_z + 1):
            for k in range(0, max_k + 1):
                formula = packing.capped_dim(x, k, z)
                enumerated = len(oracle.enumerate_occupancies(x, k, z, max_configs))
                gf = oracle.count_by_generating_function(x, k, z)
                checked += 1
                if not formula == enumerated == gf:
                    return checked, (x, k, z, formula, enumerated, gf)
    return checked, None


def cmd_verify(args) -> tuple[OutputRecord, int]:
    if args.max_x < 1 or args.max_k < 0 or args.max_z < 1:
        raise UsageError("verify needs --max-x >= 1, --max-k >= 0, --max-z >= 1")
    checked, mismatch = run_verify(args.max_x, args.max_k, args.max_z, args.max_configs)
    inputs = {"max_x": args.max_x, "max_k": args.max_k, "max_z": args.max_z}
    if mismatch is None:
        return OutputRecord("verify", inputs, {"result": "ok", "tuples_checked": checked}), 0
    x, k, z, formula, enumerated, gf = mismatch
    return (
        OutputRecord(
            "verify",
            inputs,
            {
                "result": "mismatch",
                "tuples_checked": checked,
                "x": x,
                "k": k,
                "z": z,
                "formula": formula,
                "enumerated": enumerated,
                "generating_function": gf,
            },
        ),
        1,
    )


def cmd_threshold(args) -> OutputRecord:
    if not args.ratio > 1.0:
        raise UsageError(f"threshold ratio must exceed 1, got {args.ratio}")
    n_star = measurement_threshold(args.ratio)
    return OutputRecord(
        "threshold",
        {"ratio": args.ratio},
        {"result": f"{n_star:.2f}", "m": f"{M_CONST:.12f}", "rate": f"{QUTRIT_QUBIT_RATE:.12f}"},
    )


def _global_options(default) -> argparse.ArgumentParser:
    # default=SUPPRESS on subcommands keeps them from clobbering main-level values
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("text", "csv", "json"), default=default(None))
    parent.add_argument(
        "--strict", action="store_true", default=default(False), help="mixed mode must use all sites"
    )
    parent.add_argument(
        "--max-configs",
        type=int,
        default=default(oracle.DEFAULT_MAX_CONFIGS),
        help="enumeration cap for verify",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertdim",
        description="Exact Hilbert-space dimensions of partitioned quantum sites.",
        parents=[_global_options(lambda v: v)],
    )
    common = _global_options(lambda v: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)
    models = [str(m) for m in Model]

    p = sub.add_parser("dim", parents=[common], help="dimension of one element or an equipartition")
    p.add_argument("--model", choices=models, required=True)
    p.add_argument("-x", type=int, required=True, help="sites per element")
    p.add_argument("-k", type=int, help="particles per element")
    p.add_argument("-z", type=int, help="max particles per site")
    p.add_argument("-n", type=int, help="total sites; x must divide n")

    p = sub.add_parser("optimize", parents=[common], help="dimension-maximizing structure")
    p.add_argument("-n", type=int)
    p.add_argument("--mode", choices=("equipartition", "mixed", "particles"), required=True)
    p.add_argument("--model", choices=models, default="qudit")
    p.add_argument("--sizes", default="2,3", help="allowed qudit sizes for mixed mode")
    p.add_argument("-x", type=int)
    p.add_argument("-z", type=int)

    p = sub.add_parser("sweep", parents=[common], help="dimension per element size, four series")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--series", help="comma-separated subset of qudit,fermionic,capped,spin")

    p = sub.add_parser("verify", parents=[common], help="check formulas against oracles")
    p.add_argument("--max-x", type=int, default=8)
    p.add_argument("--max-k", type=int, default=16)
    p.add_argument("--max-z", type=int, default=4)

    p = sub.add_parser("threshold", parents=[common], help="N where qutrits beat qubits by RATIO")
    p.add_argument("ratio", type=float)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format or ("csv" if args.command == "sweep" else "text")
    status = 0
    try:
        if args.command == "verify":
            record, status = cmd_verify(args)
        else:
            handler = {
                "dim": cmd_dim,
                "optimize": cmd_optimize,
                "sweep": cmd_sweep,
                "threshold": cmd_threshold,
            }[args.command]
            record = handler(args)
    except oracle.EnumerationCapExceeded as exc:
        print(f"hilbertdim: error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, InfeasibleError, ValueError) as exc:
        print(f"hilbertdim: error: {exc}", file=sys.stderr)
        return 2
    print(record.render(fmt))
    return status


if __name__ == "__main__":
    sys.exit(main())
