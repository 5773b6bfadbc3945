"""Railway hardware built from milestone patterns, and the scenario catalog.

Every track cell carries private milestone cells on the faces its rule
pattern requires; milestones see at most one black neighbour and so keep
their state through the fallback.  Switch cells are displayed with the
conventional numbers "1" .. "15" used by the golden traces; milestones are
named ``<cell>.m<face>``.

Particle flow conventions: a straight element exits through face 1 and is
entered through one of its entry faces; a forward corner is entered through
face 1 and left through face 2, a reverse corner the other way round.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import symmetry
from .lattice import CellGraph, LatticeError, Scenario, validate_graph
from .rules import B, State, W


class CircuitError(Exception):
    pass


class IncompatiblePorts(CircuitError):
    def __init__(self, position: int, detail: str = ""):
        super().__init__(f"incompatible ports at word position {position}" + (f": {detail}" if detail else ""))
        self.position = position


class PortOccupied(CircuitError):
    pass


class UnknownScenario(CircuitError, KeyError):
    def __str__(self) -> str:
        return f"unknown scenario {self.args[0]!r}"


# --- cell patterns ---------------------------------------------------------

DIRECT_MILESTONES = (2, 5, 6, 7)


def _turn_about_exit(bottom: int) -> symmetry.Perm:
    """The rotation fixing face 1 that moves the bottom face 5 onto ``bottom``."""
    for rho in symmetry.enumerate_rotations():
        if rho[1] == 1 and rho[5] == bottom:
            return rho
    raise CircuitError(f"no rotation about face 1 takes face 5 to {bottom}")


@dataclass(frozen=True)
class Pattern:
    milestones: tuple[int, ...]
    entries: tuple[int, ...]  # first one is the default
    exit: int


def _rotated_straight(bottom: int, entry_order: Sequence[int]) -> Pattern:
    rho = _turn_about_exit(bottom)
    ms = tuple(sorted(rho[f] for f in DIRECT_MILESTONES))
    entries = {rho[f] for f in (3, 4, 8, 10)}
    assert set(entry_order) <= entries
    return Pattern(ms, tuple(entry_order) + tuple(sorted(entries - set(entry_order))), 1)


STRAIGHT = {
    "direct": Pattern(DIRECT_MILESTONES, (4, 3, 8, 10), 1),
    "special3": Pattern((2, 6, 7), (4,), 1),
    "bottom0": _rotated_straight(0, (4, 3)),
    "bottom2": _rotated_straight(2, (8, 3)),
}

_CORNER_BASE = (3, 5, 6, 7, 8, 11)


def corner_pattern(direction: str, ballast0: bool = False) -> Pattern:
    if direction == "fwd_1to2":
        ms, entry, exit_ = _CORNER_BASE + (10,), 1, 2
    elif direction == "rev_2to1":
        ms, entry, exit_ = _CORNER_BASE + (9,), 2, 1
    else:
        raise ValueError(f"unknown corner direction {direction!r}")
    if ballast0:
        ms = (0,) + ms
    return Pattern(tuple(sorted(ms)), (entry,), exit_)


# assembly-word letters
LETTERS: dict[str, Pattern] = {
    "S": STRAIGHT["direct"],
    "S3": STRAIGHT["special3"],
    "s1": STRAIGHT["direct"],
    "s0": STRAIGHT["bottom0"],
    "S0": STRAIGHT["bottom0"],
    "S2": STRAIGHT["bottom2"],
    "Q_fwd": corner_pattern("fwd_1to2"),
    "Q_rev": corner_pattern("rev_2to1"),
    "Q_fwd0": corner_pattern("fwd_1to2", True),
    "Q_rev0": corner_pattern("rev_2to1", True),
    "c": corner_pattern("fwd_1to2"),
}
LETTERS["Q"] = LETTERS["Q_fwd"]


# --- patches ---------------------------------------------------------------


Port = tuple[int, int]  # (cell, face)


@dataclass
class Patch:
    graph: CellGraph
    in_ports: list[Port] = field(default_factory=list)
    out_ports: list[Port] = field(default_factory=list)
    initial_states: dict[int, State] = field(default_factory=dict)
    probe_order: Optional[list[int]] = None
    ports: dict[str, Port] = field(default_factory=dict)
    track: list[int] = field(default_factory=list)  # main route, in travel order

    def cell(self, name: str) -> int:
        return self.graph.by_name(name)

    def configuration(self) -> dict[int, State]:
        return {c: self.initial_states.get(c, W) for c in self.graph.cells}

    def to_scenario(self, name: str, steps: int, description: str = "") -> Scenario:
        probes = list(self.probe_order) if self.probe_order is not None else list(self.track)
        return Scenario(name, self.graph.freeze(), self.configuration(), probes, steps, description)


class _Builder:
    def __init__(self, g: Optional[CellGraph], prefix: str, initial: dict[int, State]):
        self.g = g if g is not None else CellGraph()
        self.prefix = prefix
        self.initial = initial

    def name(self, n) -> str:
        return f"{self.prefix}{n}"

    def element(self, n, milestones: Sequence[int], role: str = "track") -> int:
        c = self.g.add_cell(self.name(n), role)
        self.initial[c] = W
        for f in milestones:
            m = self.g.add_cell(f"{self.name(n)}.m{f}", "milestone")
            self.initial[m] = B
            self.g.link(c, f, m, 0)
        return c

    def chain(self, cells: Sequence[tuple[int, Pattern]], entry_faces: Sequence[int]) -> None:
        for i in range(1, len(cells)):
            (a, pa), (b, _) = cells[i - 1], cells[i]
            self.g.link(a, pa.exit, b, entry_faces[i])


def _new(g, prefix):
    initial: dict[int, State] = {}
    return _Builder(g, prefix, initial), initial


def straight_element(variant: str = "direct", g: Optional[CellGraph] = None, name="S") -> Patch:
    pat = STRAIGHT[variant]
    b, initial = _new(g, "")
    c = b.element(name, pat.milestones)
    return Patch(b.g, [(c, e) for e in pat.entries], [(c, pat.exit)], initial, track=[c])


def corner(direction: str = "fwd_1to2", ballast0: bool = False, g: Optional[CellGraph] = None, name="Q") -> Patch:
    pat = corner_pattern(direction, ballast0)
    b, initial = _new(g, "")
    c = b.element(name, pat.milestones)
    return Patch(b.g, [(c, pat.entries[0])], [(c, pat.exit)], initial, track=[c])


# --- assembly words ----------------------------------------------------------


@dataclass(frozen=True)
class AssemblyWord:
    """A sequence of letters, each optionally with an explicit entry face (``S:10``)."""

    letters: tuple[tuple[str, Optional[int]], ...]

    _TOKEN = re.compile(r"\(|\)(?:\^(\d+))?|\{|\}|[A-Za-z_0-9]+(?::\d+)?")

    @classmethod
    def parse(cls, text: str) -> "AssemblyWord":
        """Parse e.g. ``"(S Q_fwd)^4 Q_fwd"``; braces mark an included optional group."""
        stack: list[list] = [[]]
        for m in cls._TOKEN.finditer(text):
            tok = m.group(0)
            if tok in ("(", "{"):
                stack.append([])
            elif tok == "}":
                grp = stack.pop()
                stack[-1].extend(grp)
            elif tok.startswith(")"):
                grp = stack.pop()
                stack[-1].extend(grp * int(m.group(1) or 1))
            else:
                letter, _, face = tok.partition(":")
                if letter not in LETTERS:
                    raise ValueError(f"unknown letter {letter!r}")
                stack[-1].append((letter, int(face) if face else None))
        if len(stack) != 1:
            raise ValueError(f"unbalanced word {text!r}")
        return cls(tuple(stack[0]))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(l if f is None else f"{l}:{f}" for l, f in self.letters)


def return_word(direct: AssemblyWord) -> AssemblyWord:
    """Return-track word for a direct ``(S Q)^a`` segment.

    A unit whose straight element touches the corner with face 10 yields
    ``s1 s1 c s0 c s1``; with face 4 it yields ``s1 c s0 s1 c s0 c s1``.
    """
    out: list[tuple[str, Optional[int]]] = []
    letters = list(direct.letters)
    if len(letters) % 2:
        raise ValueError("direct segment must be a word of (S Q) units")
    for i in range(0, len(letters), 2):
        (s, face), (q, _) = letters[i], letters[i + 1]
        if s != "S" or not q.startswith("Q"):
            raise ValueError(f"unit {i // 2} is not S Q")
        unit = "s1 s1 c s0 c s1" if face == 10 else "s1 c s0 s1 c s0 c s1"
        out.extend(AssemblyWord.parse(unit).letters)
    return AssemblyWord(tuple(out))


def _build_word(b: _Builder, word: AssemblyWord, start: int = 0) -> tuple[list[int], list[Pattern], list[int]]:
    cells, pats, entries = [], [], []
    for i, (letter, face) in enumerate(word.letters):
        pat = LETTERS[letter]
        entry = pat.entries[0] if face is None else face
        if entry not in pat.entries:
            raise IncompatiblePorts(i, f"{letter} cannot be entered through face {entry}")
        if entry in pat.milestones or entry == pat.exit:
            raise IncompatiblePorts(i, f"face {entry} of {letter} is not free")
        cells.append(b.element(start + i, pat.milestones))
        pats.append(pat)
        entries.append(entry)
    b.chain(list(zip(cells, pats)), entries)
    return cells, pats, entries


def track_segment(word, g: Optional[CellGraph] = None, prefix: str = "") -> Patch:
    if isinstance(word, str):
        word = AssemblyWord.parse(word)
    if len(word) == 0:
        raise IncompatiblePorts(0, "empty word")
    b, initial = _new(g, prefix)
    cells, pats, entries = _build_word(b, word)
    return Patch(
        b.g,
        [(cells[0], entries[0])],
        [(cells[-1], pats[-1].exit)],
        initial,
        ports={"in": (cells[0], entries[0]), "out": (cells[-1], pats[-1].exit)},
        track=cells,
    )


def straight_track(length: int, g=None, prefix="") -> Patch:
    return track_segment(AssemblyWord((("S", None),) * length), g, prefix)


def inject_particle(p: Patch, port) -> Patch:
    """Put the particle into the cell behind ``port`` (a port name, a port or a cell name)."""
    if isinstance(port, str):
        cell = p.ports[port][0] if port in p.ports else p.cell(port)
    elif isinstance(port, tuple):
        cell = port[0]
    else:
        cell = port
    if p.initial_states.get(cell, W) == B:
        raise PortOccupied(f"cell {p.graph.name(cell)} already holds a particle")
    p.initial_states[cell] = B
    return p


def prepend_track(p: Patch, port: str, length: int, prefix: str = "f") -> list[int]:
    """Straight feeder of ``length`` cells ending on an in-port; returns its cells in travel order."""
    cell, face = p.ports[port]
    feeder = straight_track(length, p.graph, prefix)
    p.graph.link(feeder.track[-1], 1, cell, face)
    p.initial_states.update(feeder.initial_states)
    p.ports[f"{port}_feed"] = feeder.ports["in"]
    return feeder.track


# --- switches --------------------------------------------------------------

CENTRAL_FLIP_FLOP = (2, 5, 8, 10, 11)
SENSOR_FLIP_FLOP = (1, 6, 7)
CONTROLLER_FLIP_FLOP = (1, 6, 7, 8, 10)
CONTROLLER_PASSIVE = (0, 1, 6, 7, 11)
MARKER_PASSIVE = (1, 8, 10)
CONTROLLER_ACTIVE = (1, 2, 3, 4, 5, 8, 9, 10)


def _branch(b: _Builder, names: Sequence) -> list[int]:
    """Straight cells chained in the order given (travel order)."""
    cells = [b.element(n, DIRECT_MILESTONES) for n in names]
    for x, y in zip(cells, cells[1:]):
        b.g.link(x, 1, y, 4)
    return cells


def _active_frame(b: _Builder, selected: str) -> dict[str, int]:
    """Cells 1..12 shared by the flip-flop and the active memory switch.

    u = 1 -> 2 -> 3 enters the central cell 4 through its face 1; cell 4
    feeds b (5 -> 6 -> 7) through face 3 and a (8 -> 9 -> 10) through face 4.
    Sensor 11 sits on face 9 of cell 5, sensor 12 on face 9 of cell 8, each
    seeing its host through face 0.
    """
    if selected not in ("a", "b"):
        raise ValueError("selected must be 'a' or 'b'")
    cells: dict[str, int] = {}
    for n, c in zip((1, 2, 3), _branch(b, (1, 2, 3))):
        cells[str(n)] = c
    cells["4"] = b.element(4, CENTRAL_FLIP_FLOP)
    b.g.link(cells["3"], 1, cells["4"], 1)
    for names, face in (((5, 6, 7), 3), ((8, 9, 10), 4)):
        chain = [b.element(names[0], DIRECT_MILESTONES)] + _branch(b, names[1:])
        b.g.link(chain[0], 1, chain[1], 4)
        b.g.link(cells["4"], face, chain[0], 4 if face == 3 else 3)
        for n, c in zip(names, chain):
            cells[str(n)] = c
    for sensor, host in ((11, "5"), (12, "8")):
        cells[str(sensor)] = b.element(sensor, SENSOR_FLIP_FLOP, role="sensor")
        b.g.link(cells[host], 9, cells[str(sensor)], 0)
    # the selected branch is the one whose entry has a white sensor
    b.initial[cells["11" if selected == "a" else "12"]] = B
    return cells


def _numbered_probes(cells: dict[str, int], upto: int) -> list[int]:
    return [cells[str(i)] for i in range(1, upto + 1)]


def flip_flop_switch(selected: str = "a", g: Optional[CellGraph] = None, prefix: str = "") -> Patch:
    b, initial = _new(g, prefix)
    cells = _active_frame(b, selected)
    ctl = cells["13"] = b.element(13, CONTROLLER_FLIP_FLOP, role="controller")
    b.g.link(cells["4"], 9, ctl, 0)
    b.g.link(ctl, 3, cells["11"], 4)
    b.g.link(ctl, 4, cells["12"], 3)
    return Patch(
        b.g,
        [(cells["1"], 4)],
        [(cells["10"], 1), (cells["7"], 1)],
        initial,
        _numbered_probes(cells, 13),
        ports={"u": (cells["1"], 4), "a": (cells["10"], 1), "b": (cells["7"], 1)},
        track=[cells[str(i)] for i in range(1, 11)],
    )


def active_memory_switch(selected: str = "a", g: Optional[CellGraph] = None, prefix: str = "") -> Patch:
    """Flip-flop frame whose controller ignores the particle and flashes on a signal at face 0."""
    b, initial = _new(g, prefix)
    cells = _active_frame(b, selected)
    ctl = cells["13"] = b.element(13, CONTROLLER_ACTIVE, role="controller")
    b.g.link(cells["4"], 9, ctl, 11)
    b.g.link(ctl, 6, cells["11"], 4)
    b.g.link(ctl, 7, cells["12"], 3)
    return Patch(
        b.g,
        [(cells["1"], 4), (ctl, 0)],
        [(cells["10"], 1), (cells["7"], 1)],
        initial,
        _numbered_probes(cells, 13),
        ports={"u": (cells["1"], 4), "a": (cells["10"], 1), "b": (cells["7"], 1), "signal": (ctl, 0)},
        track=[cells[str(i)] for i in range(1, 11)],
    )


def _collector(b: _Builder, a_face: int, central: Pattern) -> dict[str, int]:
    """Passive frame: b = 7 -> 6 -> 5 and a = 10 -> 9 -> 8 merge in 4, then u = 3 -> 2 -> 1."""
    cells: dict[str, int] = {}
    cells["4"] = b.element(4, central.milestones)
    b_face = 3 if a_face == 4 else 4
    for names, face in (((7, 6, 5), b_face), ((10, 9, 8), a_face)):
        chain = _branch(b, names)
        b.g.link(chain[-1], 1, cells["4"], face)
        cells.update(zip(map(str, names), chain))
    u = _branch(b, (3, 2, 1))
    b.g.link(cells["4"], central.exit, u[0], 4)
    cells.update(zip(("3", "2", "1"), u))
    return cells


def fixed_switch(side: str = "left", g: Optional[CellGraph] = None, prefix: str = "") -> Patch:
    """Collector merging a and b into u, plus the one-way line u_d -> a_d or u_d -> b_d.

    In both versions branch a abuts face 4 of the central cell and b face 3.
    ``left`` runs the direct line alongside a, ``right`` alongside b.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    b, initial = _new(g, prefix)
    cells = _collector(b, 4, STRAIGHT["bottom0"])
    along = "a" if side == "left" else "b"
    line = _branch(b, [f"d{along}{i}" for i in range(1, 8)])
    cells.update((b.g.name(c)[len(prefix):], c) for c in line)
    return Patch(
        b.g,
        [(cells["10"], 4), (cells["7"], 4), (line[0], 4)],
        [(cells["1"], 1), (line[-1], 1)],
        initial,
        [cells[str(i)] for i in range(1, 11)],
        ports={
            "a": (cells["10"], 4),
            "b": (cells["7"], 4),
            "u": (cells["1"], 1),
            "line_in": (line[0], 4),
            "line_out": (line[-1], 1),
        },
        track=[cells[str(i)] for i in (10, 9, 8, 4, 3, 2, 1)],
    )


def passive_memory_switch(selected: str = "a", g: Optional[CellGraph] = None, prefix: str = "", stub: int = 2) -> Patch:
    """Collector with flash controller 13, markers 11 (side a) and 12 (side b).

    Cell 13 sees entry 5 through face 3 and entry 8 through face 4, carries
    marker 11 on face 10 and marker 12 on face 8, and emits the signal into
    cell 14 on its face 9.  The marker of the non-selected side is black.
    ``stub`` path cells (14, 15, ...) are appended after cell 13.
    """
    if selected not in ("a", "b"):
        raise ValueError("selected must be 'a' or 'b'")
    b, initial = _new(g, prefix)
    cells = _collector(b, 4, STRAIGHT["bottom0"])
    ctl = cells["13"] = b.element(13, CONTROLLER_PASSIVE, role="controller")
    b.g.link(ctl, 3, cells["5"], 0)
    b.g.link(ctl, 4, cells["8"], 0)
    for marker, face in ((11, 10), (12, 8)):
        cells[str(marker)] = b.element(marker, MARKER_PASSIVE, role="sensor")
        b.g.link(ctl, face, cells[str(marker)], 0)
    initial[cells["12" if selected == "a" else "11"]] = B
    path = [b.element(14 + i, DIRECT_MILESTONES) for i in range(stub)]
    if path:
        b.g.link(ctl, 9, path[0], 4)
        for x, y in zip(path, path[1:]):
            b.g.link(x, 1, y, 4)
    cells.update((str(14 + i), c) for i, c in enumerate(path))
    ports = {"a": (cells["10"], 4), "b": (cells["7"], 4), "u": (cells["1"], 1)}
    ports["signal"] = (path[-1], 1) if path else (ctl, 9)
    return Patch(
        b.g,
        [ports["a"], ports["b"]],
        [ports["u"], ports["signal"]],
        initial,
        [cells[str(i)] for i in range(1, 14 + stub)],
        ports=ports,
        track=[cells[str(i)] for i in (7, 6, 5, 4, 3, 2, 1)],
    )


@dataclass
class MemorySwitch:
    patch: Patch
    path: list[int]
    connector: list[int]

    @property
    def signal_hops(self) -> int:
        """Steps from the passive flash to the active flash (path cells + 1)."""
        return len(self.path) + 1


def memory_switch(selected: str = "a", path_spec="S S", connector: Optional[int] = None) -> MemorySwitch:
    """Passive and active halves joined by the signal path.

    Passive cells are prefixed ``p``, active cells ``a``, signal path cells
    ``s`` (the first two are the passive cells 14 and 15 when present) and the
    track carrying the particle from the passive u exit back to the active u
    entry ``k``.  ``connector`` defaults to a length that lets the signal
    arrive before the particle.
    """
    if isinstance(path_spec, str):
        path_spec = AssemblyWord.parse(path_spec)
    g = CellGraph()
    passive = passive_memory_switch(selected, g, prefix="p", stub=0)
    active = active_memory_switch(selected, g, prefix="a")
    initial = {**passive.initial_states, **active.initial_states}
    b = _Builder(g, "s", initial)
    if not len(path_spec):
        raise IncompatiblePorts(0, "the signal path needs at least one cell")
    path, pats, entries = _build_word(b, path_spec, start=1)
    ctl_p = passive.ports["signal"]
    g.link(ctl_p[0], ctl_p[1], path[0], entries[0])
    last = (path[-1], pats[-1].exit)
    sig = active.ports["signal"]
    g.link(last[0], last[1], sig[0], sig[1])
    n = connector if connector is not None else len(path) + 4
    kb = _Builder(g, "k", initial)
    conn = _branch(kb, range(1, n + 1)) if n else []
    u_out, u_in = passive.ports["u"], active.ports["u"]
    if conn:
        g.link(u_out[0], u_out[1], conn[0], 4)
        g.link(conn[-1], 1, u_in[0], u_in[1])
    else:
        g.link(u_out[0], u_out[1], u_in[0], u_in[1])
    probes = passive.probe_order + path + conn + active.probe_order
    ports = {"a": passive.ports["a"], "b": passive.ports["b"], "active_a": active.ports["a"], "active_b": active.ports["b"]}
    patch = Patch(g, [ports["a"], ports["b"]], [ports["active_a"], ports["active_b"]], initial, probes, ports,
                  track=passive.track + conn + active.track)
    return MemorySwitch(patch, path, conn)


def active_signal_feeder(selected: str = "a", length: int = 3, pulses: int = 1, spacing: int = 3) -> Patch:
    """Active memory switch whose controller face 0 is fed by a straight track."""
    p = active_memory_switch(selected)
    feeder = prepend_track(p, "signal", length + spacing * (pulses - 1))
    for k in range(pulses):
        p.initial_states[feeder[spacing * (pulses - 1 - k)]] = B
    p.probe_order = p.probe_order + feeder
    return p


# --- catalog ---------------------------------------------------------------

CORNER_TURN_WORD = "S Q_fwd S Q_rev S Q_fwd0 S Q_rev0 S"


def _straight_track_scenario() -> Scenario:
    p = straight_track(21)
    p.probe_order = p.track
    # display names 0..20 put the particle on cell n at time n
    inject_particle(p, p.track[0])
    return p.to_scenario("straight-track", 20, "particle running down 21 straight elements")


def _corner_turn() -> Scenario:
    p = track_segment(CORNER_TURN_WORD)
    inject_particle(p, p.track[0])
    return p.to_scenario("corner-turn", len(p.track) - 1, f"particle through {CORNER_TURN_WORD}")


def _fixed(side: str, branch: str) -> Callable[[], Scenario]:
    def make() -> Scenario:
        p = fixed_switch(side)
        inject_particle(p, branch)
        return p.to_scenario(f"fixed-{side}", 6, f"{side} fixed switch collecting a particle from branch {branch}")

    return make


def _flipflop(selected: str) -> Callable[[], Scenario]:
    def make() -> Scenario:
        p = flip_flop_switch(selected)
        inject_particle(p, "2")
        return p.to_scenario(f"flipflop-selected-{selected}", 5, f"active crossing, branch {selected} selected")

    return make


def _passive(through: str) -> Callable[[], Scenario]:
    def make() -> Scenario:
        # selected a: marker 12 (side b) is black
        p = passive_memory_switch("a")
        inject_particle(p, "6" if through == "b" else "9")
        kind = "nonselected" if through == "b" else "selected"
        return p.to_scenario(f"memo-passive-{kind}", 7, f"passive crossing through branch {through}")

    return make


def _active_signal() -> Scenario:
    p = active_signal_feeder("a", length=3)
    return p.to_scenario("memo-active-signal", 6, "signal pulse reaching the active controller")


def _active_crossing() -> Scenario:
    p = active_memory_switch("a")
    inject_particle(p, "2")
    return p.to_scenario("memo-active-crossing", 5, "active crossing of the active memory switch")


def _memo_full() -> Scenario:
    m = memory_switch("a", "S S")
    inject_particle(m.patch, "p6")
    steps = 12 + len(m.connector)
    return m.patch.to_scenario("memo-full", steps, "passive non-selected crossing, signal, then active crossing")


CATALOG: dict[str, Callable[[], Scenario]] = {
    "straight-track": _straight_track_scenario,
    "corner-turn": _corner_turn,
    "fixed-left": _fixed("left", "a"),
    "fixed-right": _fixed("right", "b"),
    "flipflop-selected-a": _flipflop("a"),
    "flipflop-selected-b": _flipflop("b"),
    "memo-passive-nonselected": _passive("b"),
    "memo-passive-selected": _passive("a"),
    "memo-active-signal": _active_signal,
    "memo-active-crossing": _active_crossing,
    "memo-full": _memo_full,
}


def scenario_catalog() -> list[str]:
    return list(CATALOG)


def get_scenario(name: str) -> Scenario:
    try:
        make = CATALOG[name]
    except KeyError:
        raise UnknownScenario(name) from None
    s = make()
    defects = validate_graph(s.graph)
    if defects:
        raise LatticeError(f"scenario {name} has graph defects: {defects}")
    return s
