import xml.etree.ElementTree as ET
from math import comb

import pytest

from signotopes import (
    SignFunction,
    WiringDiagram,
    crossing_constraints,
    enumerate_monotone,
    is_acyclic,
    render_svg,
    signs_from_wiring,
    sweep_text,
    wiring_diagram,
)
from signotopes.geometry import parse_sweep_text, validate_wiring
from signotopes.errors import InvalidArgument, InvalidWiring, NotMonotone

EXAMPLE_134 = SignFunction.from_string(3, 4, "-+-+")


class TestConstraints:
    def test_all_minus_chain(self):
        succ = crossing_constraints(SignFunction.constant(3, 3))
        assert succ == {(1, 2): {(1, 3)}, (1, 3): {(2, 3)}, (2, 3): set()}

    def test_all_plus_reversed_chain(self):
        succ = crossing_constraints(SignFunction.constant(3, 3, 1))
        assert succ == {(2, 3): {(1, 3)}, (1, 3): {(1, 2)}, (1, 2): set()}

    def test_acyclic_for_every_monotone_coloring(self):
        for n in (4, 5):
            for c in enumerate_monotone(3, n):
                assert is_acyclic(crossing_constraints(c))

    def test_rejects_non_monotone(self):
        with pytest.raises(NotMonotone):
            crossing_constraints(EXAMPLE_134)

    def test_rejects_wrong_uniformity(self):
        with pytest.raises(InvalidArgument):
            crossing_constraints(SignFunction.constant(2, 4))

    def test_cycle_detection(self):
        assert not is_acyclic({"a": {"b"}, "b": {"a"}})


class TestWiring:
    def test_all_minus_sweep(self):
        w = wiring_diagram(SignFunction.constant(3, 3))
        assert w.sweep == ((1, 2), (1, 3), (2, 3))

    def test_sweep_structure(self):
        for c in enumerate_monotone(3, 5):
            w = wiring_diagram(c)
            assert len(w.sweep) == comb(5, 2)
            assert len(set(w.sweep)) == len(w.sweep)
            assert w.trace[0] == (1, 2, 3, 4, 5)
            assert w.trace[-1] == (5, 4, 3, 2, 1)

    def test_round_trip_exhaustive(self):
        for n in (3, 4, 5):
            for c in enumerate_monotone(3, n):
                assert signs_from_wiring(wiring_diagram(c)) == c

    def test_distinct_colorings_get_distinct_sweeps(self):
        sweeps = {wiring_diagram(c).sweep for c in enumerate_monotone(3, 5)}
        assert len(sweeps) == 62

    def test_mixed_example_has_a_sweep(self):
        found = 0
        for c in enumerate_monotone(3, 4):
            if c.color((1, 2, 3)) == -1 and c.color((2, 3, 4)) == 1:
                w = wiring_diagram(c)
                assert len(w.sweep) == 6
                found += 1
        assert found > 0


class TestWiringValidation:
    def test_sweep_text_round_trip(self):
        w = wiring_diagram(SignFunction.constant(3, 4))
        again = parse_sweep_text(4, sweep_text(w))
        assert again.sweep == w.sweep
        assert again.trace == w.trace

    def test_non_adjacent_swap_rejected(self):
        with pytest.raises(InvalidWiring):
            validate_wiring(WiringDiagram(3, ((1, 3), (1, 2), (2, 3)), ()))

    def test_repeated_pair_rejected(self):
        with pytest.raises(InvalidWiring):
            validate_wiring(WiringDiagram(3, ((1, 2), (1, 2), (2, 3)), ()))

    def test_wrong_length_rejected(self):
        with pytest.raises(InvalidWiring):
            validate_wiring(WiringDiagram(3, ((1, 2),), ()))

    def test_signs_need_three_wires(self):
        with pytest.raises(InvalidArgument):
            signs_from_wiring(WiringDiagram(2, ((1, 2),), ((1, 2), (2, 1))))


class TestSvg:
    def test_single_wire(self):
        svg = render_svg(WiringDiagram(1, (), ((1,),)))
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")
        assert len([e for e in root.iter() if e.tag.endswith("polyline")]) == 1

    def test_crossing_glyph_count(self):
        for n in (3, 4, 5):
            w = wiring_diagram(SignFunction.constant(3, n))
            root = ET.fromstring(render_svg(w))
            glyphs = [
                e for e in root.iter()
                if e.tag.endswith("circle") and e.get("class") == "crossing"
            ]
            assert len(glyphs) == comb(n, 2)

    def test_deterministic_bytes(self):
        a = render_svg(wiring_diagram(SignFunction.constant(3, 5)))
        b = render_svg(wiring_diagram(SignFunction.constant(3, 5)))
        assert a == b

    def test_wire_count(self):
        w = wiring_diagram(SignFunction.constant(3, 4))
        root = ET.fromstring(render_svg(w))
        polylines = [e for e in root.iter() if e.tag.endswith("polyline")]
        assert len(polylines) == 4
