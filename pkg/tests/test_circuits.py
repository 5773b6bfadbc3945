import pytest

from dodecarail import circuits, engine, lattice
from dodecarail.circuits import AssemblyWord, IncompatiblePorts
from dodecarail.rules import B, NeighborhoodWord, W, blacks_at, lookup

PLAIN_ROLES = ("track", "plain")


def rest_word(p):
    return lattice.neighborhood_word(p.graph, p.configuration(), p.track[0]).neighbors


def scen_history(s, table, steps=None):
    return engine.history(s.graph, table, s.initial, s.steps if steps is None else steps)


def particles(g, cfg):
    return [g.name(c) for c in g.cells if g.role(c) in PLAIN_ROLES and cfg[c] == B]


def by_name(g, cfg, *names):
    return tuple(cfg[g.by_name(n)] for n in names)


# --- elements --------------------------------------------------------------


def test_straight_variants():
    p = circuits.straight_element("direct")
    assert rest_word(p) == blacks_at({2, 5, 6, 7})
    assert len(p.graph.cells_with_role("milestone")) == 4
    assert rest_word(circuits.straight_element("special3")) == blacks_at({2, 6, 7})
    assert rest_word(circuits.straight_element("bottom0")) == blacks_at({0, 5, 6, 7})
    assert {f for _, f in circuits.straight_element("bottom0").in_ports} >= {3, 4}
    assert {f for _, f in circuits.straight_element("bottom2").in_ports} >= {3, 8}


def test_special_element_rests_under_fallback(table):
    assert lookup(table, NeighborhoodWord(W, blacks_at({2, 6, 7}))) == W


def test_corners():
    assert rest_word(circuits.corner("fwd_1to2")) == blacks_at({3, 5, 6, 7, 8, 10, 11})
    assert rest_word(circuits.corner("fwd_1to2", True)) == blacks_at({0, 3, 5, 6, 7, 8, 10, 11})
    assert rest_word(circuits.corner("rev_2to1")) == blacks_at({3, 5, 6, 7, 8, 9, 11})
    q = circuits.corner("rev_2to1")
    assert q.in_ports == [(q.track[0], 2)] and q.out_ports == [(q.track[0], 1)]
    with pytest.raises(ValueError):
        circuits.corner("sideways")


@pytest.mark.parametrize("letter", sorted(circuits.LETTERS))
def test_declared_entries_are_accepted_by_rules(table, letter):
    pat = circuits.LETTERS[letter]
    ms = set(pat.milestones)
    for e in pat.entries:
        assert lookup(table, NeighborhoodWord(W, blacks_at(ms | {e}))) == B
        assert lookup(table, NeighborhoodWord(B, blacks_at(ms))) == W
        assert lookup(table, NeighborhoodWord(W, blacks_at(ms | {pat.exit}))) == W


def test_special_element_has_no_face3_entry(table):
    from dodecarail.rules import MissingRule

    with pytest.raises(MissingRule):
        lookup(table, NeighborhoodWord(W, blacks_at({2, 3, 6, 7})))


def test_ports_are_free_faces():
    for make in (
        lambda: circuits.straight_element("bottom2"),
        lambda: circuits.track_segment("(S Q_fwd)^3 S3"),
        circuits.flip_flop_switch,
        circuits.passive_memory_switch,
        circuits.active_memory_switch,
        circuits.fixed_switch,
    ):
        p = make()
        for c, f in p.in_ports + p.out_ports:
            assert (c, f) not in p.graph.links


# --- words and segments ------------------------------------------------------


def test_word_parsing():
    w = AssemblyWord.parse("(S Q_fwd)^4 Q_fwd")
    assert len(w) == 9 and str(w).split()[:2] == ["S", "Q_fwd"]
    assert len(AssemblyWord.parse("s1 {c s0} s1 c s0 c s1")) == 8
    assert str(AssemblyWord.parse("S:10 Q")) == "S:10 Q"
    with pytest.raises(ValueError):
        AssemblyWord.parse("S X")
    with pytest.raises(ValueError):
        AssemblyWord.parse("(S Q")


def test_return_words():
    assert str(circuits.return_word(AssemblyWord.parse("S:10 Q"))) == "s1 s1 c s0 c s1"
    assert str(circuits.return_word(AssemblyWord.parse("S Q"))) == "s1 c s0 s1 c s0 c s1"
    assert len(circuits.return_word(AssemblyWord.parse("(S Q)^3"))) == 24
    with pytest.raises(ValueError):
        circuits.return_word(AssemblyWord.parse("S S"))


def feed_and_run(p, table, steps):
    src = circuits.prepend_track(p, "in", 1, prefix="src")
    p.initial_states[src[0]] = B
    return engine.history(p.graph, table, p.configuration(), steps)


def test_sq_unit_traversal(table):
    p = circuits.track_segment("S Q_fwd")
    assert len(p.track) == 2
    h = feed_and_run(p, table, 3)
    assert [p.track.index(c) for c in p.track if h[1][c]] == [0]
    assert h[2][p.track[1]] == B
    assert not any(h[3][c] for c in p.track)


def test_s6_reaches_exit_at_time_6(table):
    p = circuits.track_segment("S S S S S S")
    h = feed_and_run(p, table, 6)
    assert h[6][p.track[-1]] == B and sum(h[6][c] for c in p.track) == 1


@pytest.mark.parametrize(
    "word", ["S:10 Q_fwd S:3 Q_rev S:8", "s1 c s0 s1 c s0 c s1", "s1 s1 c s0 c s1 S3 S2:8 S0:3", "Q_fwd0 Q_fwd Q_rev0"]
)
def test_segments_carry_particle(table, word):
    p = circuits.track_segment(word)
    n = len(p.track)
    h = feed_and_run(p, table, n)
    for t in range(1, n + 1):
        assert [c for c in p.track if h[t][c]] == [p.track[t - 1]]


def test_return_word_segment_runs(table):
    p = circuits.track_segment(circuits.return_word(AssemblyWord.parse("S:10 Q S Q")))
    h = feed_and_run(p, table, len(p.track))
    assert h[-1][p.track[-1]] == B


def test_incompatible_ports():
    with pytest.raises(IncompatiblePorts) as exc:
        circuits.track_segment("S S3:3")
    assert exc.value.position == 1
    with pytest.raises(IncompatiblePorts) as exc:
        circuits.track_segment("S Q_fwd:2")
    assert exc.value.position == 1
    with pytest.raises(IncompatiblePorts):
        circuits.track_segment("")


# --- injection and catalog ---------------------------------------------------


def test_inject():
    p = circuits.flip_flop_switch("a")
    before = len(lattice.support(p.configuration()))
    circuits.inject_particle(p, "u")
    assert len(lattice.support(p.configuration())) == before + 1
    with pytest.raises(circuits.PortOccupied):
        circuits.inject_particle(p, "u")


def test_inject_at_u_port_gives_table1_start(table):
    from conftest import GOLDEN

    p = circuits.inject_particle(circuits.flip_flop_switch("a"), "u")
    cfg = engine.step(p.graph, table, p.configuration())
    tr = engine.run(p.graph, table, cfg, 5, p.probe_order)
    assert engine.compare_trace(tr, (GOLDEN / "t_flip_flop.txt").read_text())


def test_catalog():
    names = circuits.scenario_catalog()
    for required in (
        "straight-track corner-turn fixed-left fixed-right flipflop-selected-a flipflop-selected-b "
        "memo-passive-nonselected memo-passive-selected memo-active-signal memo-full"
    ).split():
        assert required in names
    with pytest.raises(circuits.UnknownScenario):
        circuits.get_scenario("loop-the-loop")


def test_straight_track_position(table):
    s = circuits.get_scenario("straight-track")
    h = scen_history(s, table)
    for n, cfg in enumerate(h):
        assert particles(s.graph, cfg) == [str(n)]


@pytest.mark.parametrize("name", circuits.scenario_catalog())
def test_catalog_entries_valid_and_stable(table, name):
    s = circuits.get_scenario(name)
    assert lattice.validate_graph(s.graph) == []
    ms = s.graph.cells_with_role("milestone")
    for cfg in scen_history(s, table):
        assert all(cfg[m] == B for m in ms)
        limit = 2 if name.startswith("memo") else 1
        assert len(particles(s.graph, cfg)) <= limit


@pytest.mark.parametrize("name", ["straight-track", "corner-turn", "fixed-left", "fixed-right"])
def test_single_particle_plain_tracks(table, name):
    s = circuits.get_scenario(name)
    for cfg in scen_history(s, table):
        assert len(particles(s.graph, cfg)) == 1


@pytest.mark.parametrize("name", [n for n in circuits.CATALOG if n.startswith(("flipflop", "memo"))])
def test_marker_exclusivity(table, name):
    s = circuits.get_scenario(name)
    g = s.graph
    groups = [
        [c for c in g.cells_with_role("sensor") if g.name(c).startswith(pre)] for pre in ("p", "a", "")
    ]
    groups = [grp for grp in groups if len(grp) == 2] or [g.cells_with_role("sensor")]
    for cfg in scen_history(s, table):
        for grp in groups:
            assert sum(cfg[c] for c in grp) == 1


# --- switches ----------------------------------------------------------------


@pytest.mark.parametrize("side", ["left", "right"])
@pytest.mark.parametrize("branch,path", [("a", "10 9 8 4 3 2 1"), ("b", "7 6 5 4 3 2 1")])
def test_fixed_switch_collects(table, side, branch, path):
    p = circuits.inject_particle(circuits.fixed_switch(side), branch)
    h = engine.history(p.graph, table, p.configuration(), 6)
    g = p.graph
    assert [particles(g, cfg) for cfg in h] == [[n] for n in path.split()]
    route = {g.by_name(n) for n in path.split()}
    for a, b in zip(h, h[1:]):
        assert {c for c in g.cells if a[c] != b[c]} <= route


def test_fixed_switch_companion_line(table):
    p = circuits.fixed_switch("left")
    circuits.inject_particle(p, "line_in")
    h = engine.history(p.graph, table, p.configuration(), 6)
    assert h[6][p.ports["line_out"][0]] == B
    with pytest.raises(ValueError):
        circuits.fixed_switch("up")


def test_flip_flop_examples(table):
    s = circuits.get_scenario("flipflop-selected-a")
    g, h = s.graph, scen_history(s, table)
    assert by_name(g, h[3], "13", "8") == (B, B)
    assert by_name(g, h[4], "11", "12") == (W, B)
    sb = circuits.get_scenario("flipflop-selected-b")
    hb = scen_history(sb, table)
    assert particles(sb.graph, hb[5]) == ["7"]
    assert by_name(sb.graph, hb[5], "11", "12") == (B, W)


def two_crossings(make, table, gap=4):
    p = make()
    f = circuits.prepend_track(p, "u", gap + 1)
    p.initial_states[f[-1]] = B
    p.initial_states[f[-1 - gap]] = B
    h = engine.history(p.graph, table, p.configuration(), gap + 14)
    g = p.graph
    exits = [n for cfg in h for n in ("7", "10") if cfg[g.by_name(n)]]
    return g, h, exits


@pytest.mark.parametrize("selected", ["a", "b"])
def test_flip_flop_involution(table, selected):
    g, h, exits = two_crossings(lambda: circuits.flip_flop_switch(selected), table)
    assert len(exits) == 2 and exits[0] != exits[1]
    assert by_name(g, h[0], "11", "12") == by_name(g, h[-1], "11", "12")


def test_passive_selected_crossing_is_silent(table):
    s = circuits.get_scenario("memo-passive-selected")
    g = s.graph
    for cfg in scen_history(s, table):
        assert by_name(g, cfg, "13", "14", "15") == (W, W, W)
        assert by_name(g, cfg, "11", "12") == (W, B)


def test_passive_signal_speed(table):
    s = circuits.get_scenario("memo-passive-nonselected")
    g, h = s.graph, scen_history(s, table)
    assert [h[t][g.by_name(n)] for t, n in ((2, "13"), (3, "14"), (4, "15"))] == [B, B, B]
    assert by_name(g, h[3], "11", "12") == (B, W)


def test_passive_switch_both_selections(table):
    # selected b: marker 11 black, the crossing through a flashes
    p = circuits.inject_particle(circuits.passive_memory_switch("b"), "a")
    h = engine.history(p.graph, table, p.configuration(), 7)
    g = p.graph
    assert any(cfg[g.by_name("13")] for cfg in h)
    assert by_name(g, h[-1], "11", "12") == (W, B)


def test_active_crossing_leaves_controller_alone(table):
    s = circuits.get_scenario("memo-active-crossing")
    g = s.graph
    h = scen_history(s, table)
    assert particles(g, h[-1]) == ["10"]
    for cfg in h:
        assert by_name(g, cfg, "11", "12", "13") == (B, W, W)


def test_active_signal_flash(table):
    s = circuits.get_scenario("memo-active-signal")
    g, h = s.graph, scen_history(s, table)
    flashes = [t for t, cfg in enumerate(h) if cfg[g.by_name("13")]]
    assert flashes == [3]
    assert by_name(g, h[3], "11", "12") == (B, W)
    assert by_name(g, h[4], "11", "12") == (W, B)


def test_two_signal_pulses_restore(table):
    p = circuits.active_signal_feeder("a", length=3, pulses=2, spacing=3)
    h = engine.history(p.graph, table, p.configuration(), 12)
    g = p.graph
    assert sum(cfg[g.by_name("13")] for cfg in h) == 2
    assert by_name(g, h[-1], "11", "12") == by_name(g, h[0], "11", "12")


def test_active_crossing_after_signal_takes_other_branch(table):
    # the flash is at time 3; the particle reaches cell 4 at time 5
    p = circuits.active_signal_feeder("a", length=3)
    f = circuits.prepend_track(p, "u", 2, prefix="u")
    circuits.inject_particle(p, f[0])
    h = engine.history(p.graph, table, p.configuration(), 10)
    g = p.graph
    assert [n for cfg in h for n in ("7", "10") if cfg[g.by_name(n)]] == ["7"]


def test_particle_under_flash_is_unruled(table):
    from dodecarail.rules import MissingRule

    p = circuits.active_signal_feeder("a", length=3)
    circuits.inject_particle(p, "1")
    with pytest.raises(MissingRule) as exc:
        engine.history(p.graph, table, p.configuration(), 9)
    assert exc.value.cell == "4"


PATHS = {3: "S S", 6: "(S Q_fwd)^2 S", 10: "(S Q_fwd)^4 Q_fwd"}


@pytest.mark.parametrize("L", sorted(PATHS))
def test_memory_switch_delay(table, L):
    m = circuits.memory_switch("a", PATHS[L])
    assert m.signal_hops == L
    p = circuits.inject_particle(m.patch, "p6")
    g = p.graph
    h = engine.history(g, table, p.configuration(), 12 + len(m.connector))
    flash = next(t for t, cfg in enumerate(h) if cfg[g.by_name("p13")])
    swap = next(t for t, cfg in enumerate(h) if cfg[g.by_name("a12")])
    assert swap == flash + L + 1
    exits = [n for cfg in h for n in ("a7", "a10") if cfg[g.by_name(n)]]
    assert exits == ["a7"]


@pytest.mark.parametrize("L", sorted(PATHS))
def test_memory_switch_selected_crossing(table, L):
    m = circuits.memory_switch("a", PATHS[L])
    p = circuits.inject_particle(m.patch, "p9")
    g = p.graph
    h = engine.history(g, table, p.configuration(), 12 + len(m.connector))
    for cfg in h:
        assert by_name(g, cfg, "a11", "a12", "p13") == (B, W, W)
    assert [n for cfg in h for n in ("a7", "a10") if cfg[g.by_name(n)]] == ["a10"]


def test_memory_switch_needs_a_path():
    with pytest.raises(IncompatiblePorts):
        circuits.memory_switch("a", "")
    with pytest.raises(IncompatiblePorts):
        circuits.memory_switch("a", "S S3:10")
