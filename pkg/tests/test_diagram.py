"""SVG amplitude diagrams: schema validation and bar geometry."""

import xml.etree.ElementTree as ET

import numpy as np
import pytest

from qsim.diagram import render_svg, state_from_json_dict
from qsim.errors import StateError

SVG_NS = "{http://www.w3.org/2000/svg}"


def _groups(svg: str):
    root = ET.fromstring(svg)
    return root.findall(f"{SVG_NS}g")


def _bar_heights(group):
    real = group.find(f"{SVG_NS}rect[@class='real']")
    imag = group.find(f"{SVG_NS}rect[@class='imag']")
    return float(real.get("height")), float(imag.get("height"))


def test_schema_accepts_valid_payload():
    qubits, vec = state_from_json_dict(
        {"qubits": 1, "amplitudes": [[0.7071067811865475, 0.0], [0.7071067811865475, 0.0]]}
    )
    assert qubits == 1
    np.testing.assert_allclose(vec, [0.7071067811865475] * 2)


@pytest.mark.parametrize(
    "payload",
    [
        [],
        {"qubits": 2},
        {"amplitudes": [[1, 0]]},
        {"qubits": 0, "amplitudes": []},
        {"qubits": 2, "amplitudes": []},
        {"qubits": 2, "amplitudes": [[1, 0]]},
        {"qubits": 1, "amplitudes": [[1, 0], ["x", 0]]},
        {"qubits": 1, "amplitudes": [[1, 0], [0]]},
        {"qubits": True, "amplitudes": [[1, 0], [0, 0]]},
    ],
)
def test_schema_rejects_malformed(payload):
    with pytest.raises(StateError):
        state_from_json_dict(payload)


def test_example_state_bar_groups():
    svg = render_svg(2, [0.8, 0, 0, 0.6])
    groups = _groups(svg)
    assert len(groups) == 4
    assert [g.get("data-basis") for g in groups] == ["|00⟩", "|01⟩", "|10⟩", "|11⟩"]
    heights = [_bar_heights(g) for g in groups]
    assert heights[0][0] > 0 and heights[3][0] > 0
    assert heights[1] == (0.0, 0.0) and heights[2] == (0.0, 0.0)
    # axis scales to the max component (0.8), so group 0 is the tallest
    assert heights[0][0] > heights[3][0]


def test_uniform_state_equal_red_bars():
    svg = render_svg(1, [0.7071067811865475, 0.7071067811865475])
    heights = [_bar_heights(g) for g in _groups(svg)]
    assert heights[0][0] == heights[1][0] > 0
    assert heights[0][1] == heights[1][1] == 0.0


def test_default_and_custom_colors():
    svg = render_svg(1, [1, 0])
    assert 'fill="red"' in svg and 'fill="yellow"' in svg
    svg = render_svg(1, [1, 0], real_color="#123456", imag_color="#abcdef")
    assert 'fill="#123456"' in svg and 'fill="#abcdef"' in svg


def test_negative_amplitudes_draw_below_baseline():
    svg = render_svg(1, [-1, 0])
    root = ET.fromstring(svg)
    baseline = float(root.find(f"{SVG_NS}line").get("y1"))
    bar = _groups(svg)[0].find(f"{SVG_NS}rect[@class='real']")
    assert float(bar.get("y")) == baseline


def test_imaginary_parts_rendered():
    svg = render_svg(1, [1j, 0])
    heights = [_bar_heights(g) for g in _groups(svg)]
    assert heights[0] == (0.0, pytest.approx(heights[0][1])) and heights[0][1] > 0


def test_length_mismatch():
    with pytest.raises(StateError):
        render_svg(2, [1, 0])
