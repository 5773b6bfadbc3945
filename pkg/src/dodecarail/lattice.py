"""Finite, explicitly wired fragments of the dodecagrid.

A :class:`CellGraph` is a set of cells whose 12 faces are linked in pairs.
Faces with no link look onto the quiescent hinterland and always read W.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional

from .rules import B, NeighborhoodWord, State, W
from .symmetry import NFACES

ROLES = ("track", "milestone", "sensor", "controller", "plain")

Configuration = dict  # CellId -> State


class LatticeError(Exception):
    pass


class UnknownCell(LatticeError):
    pass


class FaceOccupied(LatticeError):
    pass


class SelfLink(LatticeError):
    pass


class ScenarioFormatError(LatticeError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class Cell:
    id: int
    name: str
    role: str


@dataclass(frozen=True)
class Defect:
    kind: str
    cell: int
    face: int
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind} at cell {self.cell} face {self.face} {self.detail}".rstrip()


class CellGraph:
    def __init__(self):
        self.cells: dict[int, Cell] = {}
        self.links: dict[tuple[int, int], tuple[int, int]] = {}
        self._by_name: dict[str, int] = {}
        self._frozen = False
        self._table: Optional[list[tuple[Optional[int], ...]]] = None

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[int]:
        return iter(self.cells)

    def __contains__(self, c) -> bool:
        return c in self.cells

    def add_cell(self, display_name: Optional[str] = None, role: str = "plain") -> int:
        self._check_mutable()
        if role not in ROLES:
            raise ValueError(f"unknown role {role!r}")
        cid = len(self.cells)
        name = display_name if display_name is not None else f"c{cid}"
        if name in self._by_name:
            raise ValueError(f"duplicate cell name {name!r}")
        self.cells[cid] = Cell(cid, name, role)
        self._by_name[name] = cid
        return cid

    def link(self, a: int, f: int, b: int, h: int) -> None:
        self._check_mutable()
        for c in (a, b):
            if c not in self.cells:
                raise UnknownCell(c)
        for face in (f, h):
            if not 0 <= face < NFACES:
                raise ValueError(f"bad face {face}")
        if a == b and f == h:
            raise SelfLink(f"cell {a} face {f}")
        for end in ((a, f), (b, h)):
            if end in self.links:
                raise FaceOccupied(f"cell {self.name(end[0])} face {end[1]}")
        self.links[(a, f)] = (b, h)
        self.links[(b, h)] = (a, f)

    def neighbor(self, c: int, f: int) -> Optional[int]:
        if c not in self.cells:
            raise UnknownCell(c)
        end = self.links.get((c, f))
        return None if end is None else end[0]

    def neighbors(self, c: int) -> tuple[Optional[int], ...]:
        return tuple(self.neighbor(c, f) for f in range(NFACES))

    def degree(self, c: int) -> int:
        return sum(1 for f in range(NFACES) if (c, f) in self.links)

    def free_faces(self, c: int) -> list[int]:
        return [f for f in range(NFACES) if (c, f) not in self.links]

    def role(self, c: int) -> str:
        return self.cells[c].role

    def name(self, c: int) -> str:
        return self.cells[c].name

    def by_name(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownCell(name) from None

    def cells_with_role(self, role: str) -> list[int]:
        return [c for c, cell in self.cells.items() if cell.role == role]

    def freeze(self) -> "CellGraph":
        self._frozen = True
        self._table = None
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def _check_mutable(self) -> None:
        if self._frozen:
            raise LatticeError("graph is frozen")
        self._table = None

    def neighbor_table(self) -> list[tuple[Optional[int], ...]]:
        """Neighbour ids per cell id; cached once the graph is frozen."""
        if self._table is None:
            table = [self.neighbors(c) for c in range(len(self.cells))]
            if not self._frozen:
                return table
            self._table = table
        return self._table

    def copy(self) -> "CellGraph":
        g = CellGraph()
        g.cells = {c: Cell(x.id, x.name, x.role) for c, x in self.cells.items()}
        g.links = dict(self.links)
        g._by_name = dict(self._by_name)
        return g


def add_cell(g: CellGraph, display_name=None, role="plain") -> int:
    return g.add_cell(display_name, role)


def link(g: CellGraph, a: int, f: int, b: int, h: int) -> None:
    g.link(a, f, b, h)


def neighborhood_word(g: CellGraph, cfg: Mapping[int, State], c: int) -> NeighborhoodWord:
    if c not in g.cells:
        raise UnknownCell(c)
    nbrs = tuple(W if n is None else cfg.get(n, W) for n in g.neighbors(c))
    return NeighborhoodWord(cfg.get(c, W), nbrs)


def validate_graph(g: CellGraph) -> list[Defect]:
    defects = []
    for (a, f), (b, h) in sorted(g.links.items()):
        if a not in g.cells:
            defects.append(Defect("dangling", a, f, "source cell missing"))
            continue
        if b not in g.cells:
            defects.append(Defect("dangling", a, f, f"-> missing cell {b}"))
            continue
        if not (0 <= f < NFACES and 0 <= h < NFACES):
            defects.append(Defect("bad-face", a, f, f"-> {b}:{h}"))
            continue
        back = g.links.get((b, h))
        if back != (a, f):
            defects.append(Defect("non-reciprocal", a, f, f"-> {b}:{h} returns {back}"))
    ends: dict[tuple[int, int], list] = {}
    for src, dst in g.links.items():
        ends.setdefault(dst, []).append(src)
    for dst, srcs in sorted(ends.items()):
        if len(srcs) > 1:
            defects.append(Defect("duplicate-face", dst[0], dst[1], f"claimed by {sorted(srcs)}"))
    return defects


def support(cfg: Mapping[int, State]) -> set[int]:
    return {c for c, s in cfg.items() if s == B}


def blank_configuration(g: CellGraph) -> Configuration:
    return {c: W for c in g.cells}


# --- scenario files -------------------------------------------------------


@dataclass
class Scenario:
    name: str
    graph: CellGraph
    initial: Configuration
    probes: list[int]
    steps: int = 0
    description: str = ""
    rules: str = "full"
    meta: dict = field(default_factory=dict)

    def probe_names(self) -> list[str]:
        return [self.graph.name(c) for c in self.probes]


def dump_scenario(s: Scenario) -> str:
    g = s.graph
    lines = [f"-- scenario {s.name}"]
    if s.description:
        lines.append(f"-- {s.description}")
    lines.append(f"-- recommended steps: {s.steps}")
    for c in sorted(g.cells):
        cell = g.cells[c]
        lines.append(f"CELL {cell.name} {cell.role} {s.initial.get(c, W)}")
    for (a, f), (b, h) in sorted(g.links.items()):
        if (a, f) < (b, h):
            lines.append(f"LINK {g.name(a)} {f} {g.name(b)} {h}")
    if s.probes:
        lines.append("PROBE " + " ".join(g.name(c) for c in s.probes))
    return "\n".join(lines) + "\n"


def load_scenario(text: str, name: str = "imported") -> Scenario:
    """Parse a scenario file; raises ScenarioFormatError with a line number."""
    g = CellGraph()
    cfg: Configuration = {}
    probes: list[int] = []
    pending = []
    steps = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("-- recommended steps:"):
            try:
                steps = int(line.split(":", 1)[1])
            except ValueError:
                raise ScenarioFormatError(lineno, "bad step count") from None
            continue
        if not line or line.startswith("--"):
            continue
        kw, *args = line.split()
        if kw == "CELL":
            if len(args) != 3:
                raise ScenarioFormatError(lineno, "CELL needs <name> <role> <W|B>")
            cname, role, st = args
            if role not in ROLES:
                raise ScenarioFormatError(lineno, f"unknown role {role!r}")
            if st not in ("W", "B"):
                raise ScenarioFormatError(lineno, f"bad state {st!r}")
            try:
                c = g.add_cell(cname, role)
            except ValueError as exc:
                raise ScenarioFormatError(lineno, str(exc)) from None
            cfg[c] = State.parse(st)
        elif kw == "LINK":
            if len(args) != 4:
                raise ScenarioFormatError(lineno, "LINK needs <name> <face> <name> <face>")
            pending.append((lineno, args))
        elif kw == "PROBE":
            pending.append((lineno, ["PROBE", *args]))
        else:
            raise ScenarioFormatError(lineno, f"unknown directive {kw!r}")
    for lineno, args in pending:
        try:
            if args[0] == "PROBE":
                probes.extend(g.by_name(n) for n in args[1:])
                continue
            a, f, b, h = args
            g.link(g.by_name(a), int(f), g.by_name(b), int(h))
        except (LatticeError, ValueError) as exc:
            raise ScenarioFormatError(lineno, f"{type(exc).__name__}: {exc}") from None
    return Scenario(name, g.freeze(), cfg, probes, steps)


def iter_link_pairs(g: CellGraph) -> Iterable[tuple[tuple[int, int], tuple[int, int]]]:
    for src, dst in sorted(g.links.items()):
        if src < dst:
            yield src, dst
