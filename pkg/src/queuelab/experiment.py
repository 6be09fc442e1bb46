"""Queue-numbers of random regular graphs next to the lower and upper bound curves."""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import IO, Sequence

from .bounds import dujwoo_upper, theorem_lower
from .layout import DEFAULT_NODE_BUDGET, exact_queue_number, heuristic_queue_number
from .randreg import degree_check, gen_regular

__all__ = ["ExperimentRow", "CSV_VERSION", "run_experiment", "format_csv", "write_csv", "render_svg"]

CSV_VERSION = "queuelab-experiment v1"


@dataclass(frozen=True)
class ExperimentRow:
    delta: int
    n: int
    seed: int
    method: str  # "exact", "heuristic", or "" when the row failed
    queue_number: int | None
    theorem_lower: float | None
    dujwoo_upper: float | None
    runtime_ms: float | None
    error: str = ""


def _one(delta: int, n: int, seed: int, exact_limit: int, node_budget: int,
         restarts: int, timing: bool) -> ExperimentRow:
    lower = theorem_lower(n, delta) if delta >= 3 else None
    upper = dujwoo_upper(n, delta) if delta >= 1 else None
    t0 = time.perf_counter()
    try:
        sample = gen_regular(n, delta, seed)
    except (ValueError, RuntimeError) as exc:
        return ExperimentRow(delta, n, seed, "", None, lower, upper, None, str(exc))
    g = sample.graph
    assert degree_check(g, delta)
    if n <= exact_limit:
        res = exact_queue_number(g, node_budget, seed=seed)
    else:
        res = heuristic_queue_number(g, restarts=restarts, seed=seed)
    elapsed = (time.perf_counter() - t0) * 1000 if timing else None
    return ExperimentRow(delta, n, seed, "exact" if res.exact else "heuristic",
                         res.queue_number, lower, upper, elapsed)


def run_experiment(
    delta: int,
    n_list: Sequence[int],
    samples: int,
    seed: int = 0,
    exact_limit: int = 12,
    node_budget: int = DEFAULT_NODE_BUDGET,
    restarts: int = 64,
    timing: bool = False,
    workers: int = 1,
) -> list[ExperimentRow]:
    """One row per (n, sample); sample ``i`` uses seed ``seed + i``.

    Rows come back ordered by (position in ``n_list``, sample index) whatever
    the number of workers. Generation failures become rows with ``error`` set.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    jobs = [(delta, n, seed + i, exact_limit, node_budget, restarts, timing)
            for n in n_list for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_one, *zip(*jobs)))
    return [_one(*job) for job in jobs]


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def format_csv(rows: Sequence[ExperimentRow]) -> str:
    buf = io.StringIO()
    buf.write(f"# {CSV_VERSION}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(ExperimentRow)])
    for row in rows:
        w.writerow([_cell(x) for x in astuple(row)])
    return buf.getvalue()


def write_csv(rows: Sequence[ExperimentRow], target: str | IO[str]) -> None:
    text = format_csv(rows)
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        target.write(text)


def render_svg(rows: Sequence[ExperimentRow], width: int = 640, height: int = 420) -> str:
    """Scatter of queue-number against n with both bound curves."""
    good = [r for r in rows if r.queue_number is not None]
    if not good:
        return f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"></svg>\n'
    delta = good[0].delta
    ns = sorted({r.n for r in rows})
    lo_n, hi_n = min(ns), max(ns)
    span_n = max(hi_n - lo_n, 1)
    curve_n = [lo_n + span_n * i / 60 for i in range(61)]
    upper = [dujwoo_upper(x, delta) for x in curve_n]
    lower = [theorem_lower(x, delta) for x in curve_n] if delta >= 3 else []
    top = max(upper + [r.queue_number for r in good]) * 1.05
    pad = 50

    def px(n_val, y_val):
        x = pad + (n_val - lo_n) / span_n * (width - 2 * pad)
        y = height - pad - y_val / top * (height - 2 * pad)
        return f"{x:.1f},{y:.1f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="12">',
           f'<rect width="{width}" height="{height}" fill="white"/>',
           f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
           f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
           f'<text x="{width / 2:.0f}" y="{height - 12}" text-anchor="middle">n (delta={delta})</text>',
           f'<text x="14" y="{height / 2:.0f}" transform="rotate(-90 14 {height / 2:.0f})" text-anchor="middle">queue-number</text>']
    for n_val in ns:
        x, _ = px(n_val, 0).split(",")
        out.append(f'<text x="{x}" y="{height - pad + 16}" text-anchor="middle">{n_val}</text>')
    for t in range(0, int(math.ceil(top)) + 1, max(1, int(math.ceil(top)) // 8)):
        _, y = px(lo_n, t).split(",")
        out.append(f'<text x="{pad - 6}" y="{y}" text-anchor="end" dominant-baseline="middle">{t}</text>')
    out.append('<polyline fill="none" stroke="firebrick" stroke-width="1.5" points="'
               + " ".join(px(a, b) for a, b in zip(curve_n, upper)) + '"/>')
    if lower:
        out.append('<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="'
                   + " ".join(px(a, b) for a, b in zip(curve_n, lower)) + '"/>')
    for r in good:
        x, y = px(r.n, r.queue_number).split(",")
        fill = "black" if r.method == "exact" else "none"
        out.append(f'<circle cx="{x}" cy="{y}" r="3.5" stroke="black" fill="{fill}"/>')
    out.append(f'<text x="{width - pad}" y="{pad - 20}" text-anchor="end" fill="firebrick">e*sqrt(delta n/2)</text>')
    if lower:
        out.append(f'<text x="{width - pad}" y="{pad - 6}" text-anchor="end" fill="steelblue">sqrt(delta) n^(1/2-1/delta)/sqrt(3), c=1</text>')
    out.append("</svg>\n")
    return "\n".join(out)
