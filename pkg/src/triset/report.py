"""Run reports: index-tuple summaries, JSON/table rendering, figures.

Each output polynomial is fingerprinted by its index tuple: the per-variable
degree tuple, the term count, the head monomial, and the maximal decimal
digit count of its coefficients.  Reports are deterministic given identical
inputs and options, except for the wall-clock field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .charset import CharSetResult, EliminationOptions, characteristic_set
from .poly import Polynomial, VariableOrder, format_power_product
from .sysio import SystemParseError, parse_system

#: Algorithm presets: the full strategy, its weak variant, and the plain
#: Ritt-Wu flow obtained by disabling the inner reduction loop.
ALGORITHMS = ("charset", "charsetw", "rittwu", "rittwuw")


def options_for(
    algorithm: str,
    cond: Optional[str] = None,
    sort: str = "refine",
    certificates: bool = False,
    max_rounds: int = 64,
) -> EliminationOptions:
    """Build driver options from an algorithm name plus overrides."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    weak = algorithm.endswith("w") and algorithm != "rittwu"
    inner_limit: Optional[int] = 0 if algorithm.startswith("rittwu") else None
    if cond is not None:
        if cond == "find":
            inner_limit = None
        elif cond == "never":
            inner_limit = 0
        elif cond.startswith("bound="):
            inner_limit = int(cond.split("=", 1)[1])
            if inner_limit < 0:
                raise ValueError("bound must be non-negative")
        else:
            raise ValueError(f"unknown cond policy {cond!r}")
    return EliminationOptions(
        inner_limit=inner_limit,
        weak=weak,
        sort=sort,
        certificates=certificates,
        use_sc=not certificates,
        max_rounds=max_rounds,
    )


def _cond_label(opts: EliminationOptions) -> str:
    if opts.inner_limit is None:
        return "find"
    if opts.inner_limit == 0:
        return "never"
    return f"bound={opts.inner_limit}"


def index_tuple(p: Polynomial) -> Dict:
    """Index-tuple record of one polynomial."""
    m = p.measure()
    head = format_power_product(p.order, m.head[0]) if m.head else "0"
    return {
        "degrees": list(m.degree_tuple),
        "nops": m.term_count,
        "lm": head,
        "maxDigits": m.max_digits,
        "poly": str(p),
    }


@dataclass
class RunReport:
    system: str
    algorithm: str
    options: Dict
    status: str
    loops: int
    millis: int
    output: List[Dict]
    trace: Optional[List[Dict]] = None
    result: Optional[CharSetResult] = field(default=None, repr=False)

    def to_dict(self) -> Dict:
        d = {
            "system": self.system,
            "algorithm": self.algorithm,
            "options": self.options,
            "status": self.status,
            "loops": self.loops,
            "millis": self.millis,
            "output": self.output,
        }
        if self.trace is not None:
            d["trace"] = self.trace
        return d


def run_system(
    name: str,
    order: VariableOrder,
    polys: Sequence[Polynomial],
    algorithm: str = "charset",
    opts: Optional[EliminationOptions] = None,
    with_trace: bool = False,
) -> RunReport:
    """Run one algorithm on one system and summarize the output."""
    if opts is None:
        opts = options_for(algorithm)
    start = time.perf_counter()
    result = characteristic_set(polys, opts)
    millis = int(round((time.perf_counter() - start) * 1000))
    if result.gcs.is_contradictory:
        output = [index_tuple(result.gcs.contradiction)]
    else:
        output = [index_tuple(t) for t in result.gcs.elements]
    trace = None
    if with_trace:
        trace = []
        for round_no, rec in enumerate(result.rounds, start=1):
            for step in rec.steps:
                trace.append(
                    {
                        "round": round_no,
                        "kind": step.kind.value,
                        "reductend": str(step.reductend),
                        "reductor": str(step.reductor),
                        "rest": [str(step.rest.r1), str(step.rest.r2)],
                    }
                )
    return RunReport(
        system=name,
        algorithm=algorithm,
        options={
            "cond": _cond_label(opts),
            "sort": opts.sort,
            "weak": opts.weak,
            "certificates": opts.certificates,
        },
        status=result.status,
        loops=result.loops,
        millis=millis,
        output=output,
        trace=trace,
        result=result,
    )


def run_benchmark(
    paths: Sequence[str],
    algorithms: Sequence[str] = ("charset",),
    cond: Optional[str] = None,
    sort: str = "refine",
    certificates: bool = False,
    max_rounds: int = 64,
    with_trace: bool = False,
):
    """Run every requested algorithm on every system file.

    Returns ``(reports, errors)`` with reports in input order; a file that
    fails to parse contributes an error record and the run continues.
    """
    reports: List[RunReport] = []
    errors: List[Dict] = []
    for path in paths:
        name = Path(path).stem if path != "-" else "stdin"
        try:
            if path == "-":
                import sys

                text = sys.stdin.read()
            else:
                text = Path(path).read_text()
            order, polys = parse_system(text)
            if not polys:
                raise SystemParseError("system declares no polynomials", 1, 1)
        except (OSError, SystemParseError) as exc:
            errors.append({"system": name, "error": str(exc)})
            continue
        for algorithm in algorithms:
            opts = options_for(algorithm, cond, sort, certificates, max_rounds)
            reports.append(
                run_system(name, order, polys, algorithm, opts, with_trace)
            )
    return reports, errors


def render_report_json(reports: Sequence[RunReport], errors: Sequence[Dict] = ()) -> str:
    payload: List[Dict] = [r.to_dict() for r in reports]
    payload.extend({"system": e["system"], "error": e["error"]} for e in errors)
    return json.dumps(payload, indent=2)


def _format_row(cells: Sequence[str], widths: Sequence[int]) -> str:
    return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()


def render_report_table(reports: Sequence[RunReport], errors: Sequence[Dict] = ()) -> str:
    blocks: List[str] = []
    for r in reports:
        header = (
            f"== system: {r.system} | algorithm: {r.algorithm}"
            f" | cond: {r.options['cond']} | status: {r.status}"
            f" | loops: {r.loops} | millis: {r.millis}"
        )
        rows = [["degrees", "nops", "lm", "digits"]]
        for rec in r.output:
            rows.append(
                [
                    "[" + ", ".join(str(d) for d in rec["degrees"]) + "]",
                    str(rec["nops"]),
                    rec["lm"],
                    str(rec["maxDigits"]),
                ]
            )
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        lines = [header] + [_format_row(row, widths) for row in rows]
        if r.trace:
            lines.append("trace:")
            for step in r.trace:
                lines.append(
                    f"  round {step['round']}: {step['kind']}"
                    f" rest nops {[len(s.split(' ')) for s in step['rest']]}"
                )
        blocks.append("\n".join(lines))
    for e in errors:
        blocks.append(f"== system: {e['system']} | error: {e['error']}")
    return "\n\n".join(blocks) + "\n"


def render_figures(reports: Sequence[RunReport], out_dir: str) -> List[str]:
    """Render per-system bar charts of output sizes next to the report.

    One PNG per system: term counts and coefficient digit counts of each
    output polynomial, grouped by algorithm.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    by_system: Dict[str, List[RunReport]] = {}
    for r in reports:
        by_system.setdefault(r.system, []).append(r)
    written: List[str] = []
    for system, runs in by_system.items():
        fig, axes = plt.subplots(1, 2, figsize=(9.0, 3.4))
        for metric, axis, title in (
            ("nops", axes[0], "terms per output polynomial"),
            ("maxDigits", axes[1], "max coefficient digits"),
        ):
            width = 0.8 / max(len(runs), 1)
            for k, r in enumerate(runs):
                values = [rec[metric] for rec in r.output]
                xs = [i + k * width for i in range(len(values))]
                axis.bar(xs, values, width=width, label=r.algorithm)
            axis.set_title(title, fontsize=10)
            axis.set_xlabel("output index")
            axis.tick_params(labelsize=8)
        axes[0].legend(fontsize=8)
        fig.suptitle(system)
        fig.tight_layout()
        target = out / f"{system}.png"
        fig.savefig(target, dpi=120)
        plt.close(fig)
        written.append(str(target))
    return written
