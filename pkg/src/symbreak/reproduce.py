"""Recompute every published distinguishing-number value and compare.

Each row pairs one claimed value with what this package computes and how.
"""
from __future__ import annotations

import json
import logging
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass
from pathlib import Path

from .coloring import Coloring, is_distinguishing, save_coloring
from .graphs import Graph, augmented_cube, graph_power, hypercube
from .perm import BudgetExceeded, automorphism_group, groups_equal_on_vertices, is_automorphism
from .solver import (
    SolveResult,
    distinguishing_number,
    distinguishing_number_exhaustive,
    matching_complement_distnum,
)

log = logging.getLogger(__name__)

TABLES = ("qn", "qpowers", "aqn")
# largest n per table; below the exhaustive limit the value is exact by search
MAX_N = {"qn": 6, "aqn": 8}
EXHAUSTIVE_MAX_N = {"qn": 4, "aqn": 3}
QPOWER_GROUP_INSTANCES = ((5, 3, 1), (6, 4, 2))


@dataclass
class ReportRow:
    table: str
    claim: str
    graph: str
    expected: int | str
    computed: int | str | None
    method: str
    agrees: bool
    lower: int | None = None
    upper: int | None = None
    witness_path: str | None = None
    seconds: float = 0.0
    source: str = "paper"
    note: str = ""


@dataclass
class Report:
    rows: list[ReportRow]
    aborted: bool = False
    seed: int = 1

    @property
    def ok(self) -> bool:
        return not self.aborted and all(row.agrees for row in self.rows)

    def sequence(self, table: str = "aqn") -> list:
        return [row.computed for row in self.rows if row.table == table and row.claim.startswith("D(")]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "aborted": self.aborted,
            "seed": self.seed,
            "aq_sequence": self.sequence("aqn"),
            "rows": [asdict(row) for row in self.rows],
        }

    def to_markdown(self) -> str:
        head = "| table | claim | expected | computed | bounds | method | agrees | witness |"
        lines = [head, "|" + "---|" * 8]
        for row in self.rows:
            bounds = "" if row.lower is None else f"[{row.lower}, {row.upper}]"
            lines.append(
                f"| {row.table} | {row.claim} | {row.expected} | {row.computed} | {bounds} "
                f"| {row.method} | {'yes' if row.agrees else 'NO'} | {row.witness_path or ''} |"
            )
        seq = self.sequence("aqn")
        if seq:
            lines.append("")
            lines.append("AQ_n sequence for n = 1.." + str(len(seq)) + ": " + ", ".join(map(str, seq)))
        if self.aborted:
            lines.append("")
            lines.append("**partial report: at least one row hit the search budget**")
        return "\n".join(lines) + "\n"


class _Builder:
    def __init__(self, out_dir: Path | None, seed: int, budget: int | None) -> None:
        self.rows: list[ReportRow] = []
        self.aborted = False
        self.out_dir = out_dir
        self.seed = seed
        self.budget = budget

    def _save_witness(self, slug: str, g: Graph, c: Coloring | None) -> str | None:
        if c is None or self.out_dir is None:
            return None
        path = self.out_dir / "witnesses" / f"{slug.replace('^', 'p')}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        save_coloring(c, g, path)
        return str(path)

    def run(self, table: str, claim: str, graph: str, expected, fn: Callable[[], ReportRow]) -> None:
        start = time.perf_counter()
        try:
            row = fn()
        except BudgetExceeded as exc:
            log.warning("%s: %s", claim, exc)
            self.aborted = True
            row = ReportRow(table, claim, graph, expected, None, "aborted", False, note=str(exc))
        row.seconds = round(time.perf_counter() - start, 3)
        log.info("%s -> %s (%s, %.2fs)", claim, row.computed, row.method, row.seconds)
        self.rows.append(row)

    def distnum(self, table: str, claim: str, slug: str, g: Graph, expected: int, exhaustive: bool,
                strategy: str = "random", max_r: int | None = None) -> None:
        def compute() -> ReportRow:
            if exhaustive:
                res: SolveResult = distinguishing_number_exhaustive(g, max_r, self.budget)
            else:
                res = distinguishing_number(g, max_r or expected, strategy, self.seed)
            path = self._save_witness(slug, g, res.witness)
            computed = res.value if res.exact else None
            return ReportRow(table, claim, slug, expected, computed, res.method, computed == expected,
                             lower=res.lower, upper=res.upper, witness_path=path)

        self.run(table, claim, slug, expected, compute)


def _qn_rows(b: _Builder, max_n: int) -> None:
    for n in range(2, min(max_n, MAX_N["qn"]) + 1):
        exhaustive = n <= EXHAUSTIVE_MAX_N["qn"]
        small = n in (2, 3)
        q = hypercube(n)
        q2 = graph_power(q, 2)
        b.distnum("qn", f"D(Q_{n}) = {3 if small else 2}", f"Q{n}", q, 3 if small else 2, exhaustive)
        b.distnum("qn", f"D(Q_{n}^2) = {4 if small else 2}", f"Q{n}^2", q2, 4 if small else 2, exhaustive)
        if n >= 4:
            b.run("qn", f"Q_{n}^2 witness distinguishes Q_{n}", f"Q{n}", "yes",
                  lambda q=q, q2=q2, n=n: _monotone_row(b, q, q2, n))


def _monotone_row(b: _Builder, q: Graph, q2: Graph, n: int) -> ReportRow:
    res = distinguishing_number(q2, 2, "random", b.seed)
    ok = res.witness is not None and is_distinguishing(q, res.witness)
    return ReportRow("qn", f"Q_{n}^2 witness distinguishes Q_{n}", f"Q{n}", "yes", "yes" if ok else "no",
                     "witness_plus_lower_bound", ok)


def _group_equality_row(n: int, p: int, base_p: int) -> ReportRow:
    base = hypercube(n) if base_p == 1 else graph_power(hypercube(n), base_p)
    power = graph_power(hypercube(n), p)
    a = automorphism_group(power)
    bgrp = automorphism_group(base)
    equal = groups_equal_on_vertices(a, bgrp) and all(is_automorphism(base, s) for s in a.generators)
    rhs = f"Q_{n}" if base_p == 1 else f"Q_{n}^{base_p}"
    return ReportRow("qpowers", f"Aut(Q_{n}^{p}) = Aut({rhs})", f"Q{n}^{p}", "equal",
                     "equal" if equal else "differ", "group_equality", equal,
                     note=f"|Aut| = {a.order()} vs {bgrp.order()}")


def _qpower_rows(b: _Builder) -> None:
    for n, p, base_p in QPOWER_GROUP_INSTANCES:
        rhs = f"Q_{n}" if base_p == 1 else f"Q_{n}^{base_p}"
        b.run("qpowers", f"Aut(Q_{n}^{p}) = Aut({rhs})", f"Q{n}^{p}", "equal",
              lambda n=n, p=p, base_p=base_p: _group_equality_row(n, p, base_p))
    for n, p in ((5, 3), (6, 3), (6, 4)):
        b.distnum("qpowers", f"D(Q_{n}^{p}) = 2", f"Q{n}^{p}", graph_power(hypercube(n), p), 2, False)
    for n in (3, 4):
        x = matching_complement_distnum(n)
        b.distnum("qpowers", f"D(Q_{n}^{n - 1}) = {x}", f"Q{n}^{n - 1}", graph_power(hypercube(n), n - 1), x,
                  True, max_r=x)
    for n in (2, 3):
        b.distnum("qpowers", f"D(Q_{n}^{n}) = {1 << n}", f"Q{n}^{n}", graph_power(hypercube(n), n), 1 << n, True)


def _aqn_rows(b: _Builder, max_n: int) -> None:
    expected = {1: 2, 2: 4, 3: 3}
    for n in range(1, min(max_n, MAX_N["aqn"]) + 1):
        want = expected.get(n, 2)
        exhaustive = n <= EXHAUSTIVE_MAX_N["aqn"]
        b.distnum("aqn", f"D(AQ_{n}) = {want}", f"AQ{n}", augmented_cube(n), want, exhaustive, strategy="paper")
    if max_n >= 4:
        seq = [row.computed for row in b.rows if row.table == "aqn" and row.claim.startswith("D(")]
        rises = None not in seq and max(seq) >= 4 and seq.index(max(seq)) < len(seq) - 1 and seq[-1] == 2
        b.rows.append(ReportRow("aqn", "AQ_n sequence rises to k >= 4 and then falls to 2", "AQ1..AQ" + str(len(seq)),
                                "yes", "yes" if rises else "no", "sequence", bool(rises),
                                note=", ".join(map(str, seq))))


def reproduce_tables(
    max_n: int = 5,
    tables: str | tuple[str, ...] = "all",
    out_dir: str | Path | None = None,
    seed: int = 1,
    budget: int | None = None,
) -> Report:
    if tables == "all":
        tables = TABLES
    elif isinstance(tables, str):
        tables = (tables,)
    for t in tables:
        if t not in TABLES:
            raise ValueError(f"unknown table {t!r}; expected one of {TABLES} or 'all'")
        if t in MAX_N and not 1 <= max_n <= MAX_N[t]:
            raise ValueError(f"--max-n for table {t!r} must be in 1..{MAX_N[t]}, got {max_n}")
    out = Path(out_dir) if out_dir is not None else None
    b = _Builder(out, seed, budget)
    if "qn" in tables:
        _qn_rows(b, max_n)
    if "qpowers" in tables:
        _qpower_rows(b)
    if "aqn" in tables:
        _aqn_rows(b, max_n)
    report = Report(b.rows, b.aborted, seed)
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json.dumps(report.to_json_dict(), indent=1) + "\n")
        (out / "report.md").write_text(report.to_markdown())
    return report
