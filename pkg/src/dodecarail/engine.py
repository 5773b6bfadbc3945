"""Synchronous stepping and execution traces."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .lattice import CellGraph, Configuration
from .rules import NeighborhoodWord, RuleTable, State, W, lookup


def step(g: CellGraph, t: RuleTable, cfg: Mapping[int, State], order: Optional[Iterable[int]] = None) -> Configuration:
    """One application of the global map; every cell reads ``cfg`` only.

    ``order`` changes the evaluation order and nothing else.
    """
    table = g.neighbor_table()
    new = {}
    for c in (order if order is not None else g.cells):
        nbrs = tuple(W if n is None else cfg.get(n, W) for n in table[c])
        new[c] = lookup(t, NeighborhoodWord(cfg.get(c, W), nbrs), cell=g.name(c))
    return new


@dataclass
class Trace:
    probes: list
    rows: list[tuple[int, list[State]]] = field(default_factory=list)
    labels: Optional[list[str]] = None

    def column_labels(self) -> list[str]:
        return self.labels if self.labels is not None else [str(p) for p in self.probes]

    def states_at(self, time: int) -> list[State]:
        return self.rows[time][1]


def run(g: CellGraph, t: RuleTable, cfg: Mapping[int, State], steps: int, probes: Sequence[int]) -> Trace:
    tr = Trace(list(probes), labels=[g.name(c) for c in probes])
    cur = dict(cfg)
    tr.rows.append((0, [cur.get(p, W) for p in probes]))
    for time in range(1, steps + 1):
        cur = step(g, t, cur)
        tr.rows.append((time, [cur.get(p, W) for p in probes]))
    return tr


def history(g: CellGraph, t: RuleTable, cfg: Mapping[int, State], steps: int) -> list[Configuration]:
    """Full configurations for times 0..steps."""
    out = [dict(cfg)]
    for _ in range(steps):
        out.append(step(g, t, out[-1]))
    return out


def format_trace(tr: Trace, mode: str = "paper") -> str:
    labels = tr.column_labels()
    if mode == "paper":
        lines = ["        " + "".join(f"{x:>3}" for x in labels)]
        for time, states in tr.rows:
            lines.append(f"time {time} :" + "".join(f"{str(s):>3}" for s in states))
        return "\n".join(lines) + "\n"
    if mode == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["time", *labels])
        for time, states in tr.rows:
            w.writerow([time, *map(str, states)])
        return buf.getvalue()
    raise ValueError(f"unknown trace format {mode!r}")


@dataclass(frozen=True)
class Verdict:
    match: bool
    time: Optional[int] = None
    probe: Optional[str] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.match

    def __str__(self) -> str:
        if self.match:
            return "match"
        if self.time is None:
            return f"mismatch: {self.message}"
        return f"mismatch at time {self.time}, probe {self.probe}: expected {self.expected}, got {self.actual}"


def parse_trace_text(text: str) -> tuple[list[str], list[tuple[int, list[str]]]]:
    header: list[str] = []
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("--"):
            continue
        if line.startswith("time"):
            head, _, body = line.partition(":")
            rows.append((int(head.split()[1]), body.split()))
        elif not header:
            header = line.split()
    return header, rows


def compare_trace(actual: Trace | str, golden_text: str) -> Verdict:
    """Token-wise comparison; column alignment is ignored."""
    if isinstance(actual, Trace):
        actual = format_trace(actual, "paper")
    ah, arows = parse_trace_text(actual)
    gh, grows = parse_trace_text(golden_text)
    if ah != gh:
        return Verdict(False, message=f"probe headers differ: {gh} vs {ah}")
    for (gt, gs), (at, as_) in zip(grows, arows):
        if gt != at:
            return Verdict(False, message=f"time labels differ: {gt} vs {at}")
        if len(gs) != len(as_):
            return Verdict(False, time=gt, message=f"row widths differ at time {gt}")
        for probe, e, a in zip(gh, gs, as_):
            if e != a:
                return Verdict(False, gt, probe, e, a)
    if len(grows) != len(arows):
        return Verdict(False, message=f"golden has {len(grows)} rows, actual has {len(arows)}")
    return Verdict(True)
