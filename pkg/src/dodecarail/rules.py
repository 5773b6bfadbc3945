"""Two-state rules, rule files and rotation-invariant lookup."""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import symmetry

FALLBACK_MAX_BLACK = 3


class State(enum.IntEnum):
    W = 0
    B = 1

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, token: str) -> "State":
        return cls[token]


W, B = State.W, State.B


def word(text: str) -> tuple[State, ...]:
    """``word("W B W ...")`` -> tuple of states; whitespace optional."""
    return tuple(State.parse(c) for c in text.replace(" ", ""))


def blacks_at(faces: Iterable[int]) -> tuple[State, ...]:
    """Neighbour word with B exactly on ``faces``."""
    faces = set(faces)
    return tuple(B if i in faces else W for i in range(symmetry.NFACES))


@dataclass(frozen=True)
class NeighborhoodWord:
    current: State
    neighbors: tuple[State, ...]

    def __post_init__(self):
        if len(self.neighbors) != symmetry.NFACES:
            raise ValueError(f"expected 12 neighbours, got {len(self.neighbors)}")

    @property
    def black_count(self) -> int:
        return sum(self.neighbors)

    def key(self) -> tuple[State, tuple[State, ...]]:
        return self.current, symmetry.canonical(self.neighbors)

    def __str__(self) -> str:
        return " ".join(str(s) for s in (self.current, *self.neighbors))


@dataclass(frozen=True)
class Rule:
    observation: NeighborhoodWord
    new_state: State
    label: str = ""
    source_line: int = 0

    @property
    def current(self) -> State:
        return self.observation.current

    @property
    def neighbors(self) -> tuple[State, ...]:
        return self.observation.neighbors

    @property
    def is_conservative(self) -> bool:
        return self.new_state == self.current

    def tokens(self) -> tuple[State, ...]:
        return (self.current, *self.neighbors, self.new_state)


class RuleError(Exception):
    pass


class MalformedRow(RuleError):
    def __init__(self, line: int, text: str, reason: str):
        super().__init__(f"line {line}: {reason}: {text!r}")
        self.line = line
        self.text = text


class MissingRule(RuleError):
    def __init__(self, observation: NeighborhoodWord, cell=None):
        where = f"cell {cell}: " if cell is not None else ""
        super().__init__(f"{where}no rule for {observation}")
        self.observation = observation
        self.cell = cell


@dataclass(frozen=True)
class Conflict:
    """Two sources disagree on one (current, canonical word) key.

    ``other_line`` is None when the disagreement is with the fallback.
    """

    kind: str  # "determinism" or "fallback"
    line: int
    other_line: Optional[int]
    current: State
    canonical: tuple[State, ...]
    outcomes: tuple[State, State]

    def __str__(self) -> str:
        other = "fallback" if self.other_line is None else f"line {self.other_line}"
        cw = " ".join(map(str, self.canonical))
        return (
            f"{self.kind} conflict: line {self.line} ({self.outcomes[0]}) vs {other} "
            f"({self.outcomes[1]}) on {self.current} | {cw}"
        )


@dataclass
class RuleTable:
    rules: list[Rule]
    index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        # the first row listed for a key wins; clashes surface in check_determinism
        for r in self.rules:
            self.index.setdefault(r.observation.key(), r)

    def __len__(self) -> int:
        return len(self.rules)


_ROW = re.compile(r"^(\([^)]*\))?\s*(.*)$")


def parse_rule_table(text: str) -> RuleTable:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("--"):
            continue
        label, rest = _ROW.match(line).groups()
        tokens = rest.split()
        if len(tokens) != 14:
            raise MalformedRow(lineno, raw, f"expected 14 state tokens, got {len(tokens)}")
        try:
            states = [State.parse(t) for t in tokens]
        except KeyError as exc:
            raise MalformedRow(lineno, raw, f"bad state token {exc.args[0]!r}") from None
        obs = NeighborhoodWord(states[0], tuple(states[1:13]))
        rules.append(Rule(obs, states[13], label or "", lineno))
    return RuleTable(rules)


HEADER = "--adress  -1   0   1   2   3   4   5   6   7   8   9  10  11  12"


def format_rule_table(t: RuleTable) -> str:
    lines = [HEADER]
    for r in t.rules:
        lines.append(f"{r.label:<10} " + "   ".join(str(s) for s in r.tokens()))
    return "\n".join(lines) + "\n"


def bundled_rules_path() -> Path:
    return Path(str(resources.files("dodecarail") / "data" / "rules" / "full.txt"))


def load_rule_table(path=None) -> RuleTable:
    path = Path(path) if path is not None else bundled_rules_path()
    return parse_rule_table(path.read_text())


def fallback(w: NeighborhoodWord) -> Optional[State]:
    """A cell with at most three black neighbours keeps its state."""
    if w.black_count <= FALLBACK_MAX_BLACK:
        return w.current
    return None


def lookup(t: RuleTable, w: NeighborhoodWord, cell=None) -> State:
    r = t.index.get(w.key())
    if r is not None:
        return r.new_state
    s = fallback(w)
    if s is None:
        raise MissingRule(w, cell)
    return s


def check_determinism(t: RuleTable) -> list[Conflict]:
    conflicts = []
    first: dict = {}
    for r in t.rules:
        key = r.observation.key()
        prev = first.get(key)
        if prev is None:
            first[key] = r
        elif prev.new_state != r.new_state:
            conflicts.append(
                Conflict("determinism", prev.source_line, r.source_line, key[0], key[1], (prev.new_state, r.new_state))
            )
        fb = fallback(r.observation)
        if fb is not None and fb != r.new_state:
            conflicts.append(Conflict("fallback", r.source_line, None, key[0], key[1], (r.new_state, fb)))
    return conflicts


@dataclass(frozen=True)
class RedundancyReport:
    duplicate_pairs: list[tuple[int, int]]
    parikh: list[tuple[int, int]]  # (source line, number of black neighbours)

    def __bool__(self) -> bool:
        return bool(self.duplicate_pairs or self.parikh)


def redundancy_report(t: RuleTable) -> RedundancyReport:
    """Rows that are rotations of each other with the same outcome."""
    groups: dict = defaultdict(list)
    for r in t.rules:
        groups[r.observation.key()].append(r)
    pairs = []
    for rows in groups.values():
        for i, a in enumerate(rows):
            for b in rows[i + 1 :]:
                if a.new_state == b.new_state:
                    pairs.append((a.source_line, b.source_line))
    pairs.sort()
    parikh = [(r.source_line, r.observation.black_count) for r in t.rules]
    return RedundancyReport(pairs, parikh)


def label_anomalies(t: RuleTable) -> list[Rule]:
    """Rows labelled ``(0)`` whose new state differs from the current one."""
    return [r for r in t.rules if r.label.startswith("(0)") and not r.is_conservative]


def rotated(r: Rule, rho: Sequence[int]) -> NeighborhoodWord:
    return NeighborhoodWord(r.current, symmetry.apply(rho, r.neighbors))
