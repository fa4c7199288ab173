"""SVG amplitude diagrams: one bar group per basis state, split into a
real and an imaginary bar. Default colors are red (real) and yellow
(imaginary); bars grow from a central baseline so negative amplitudes
point down. The vertical scale follows the largest component magnitude.
"""

from __future__ import annotations

import numpy as np

from .errors import StateError

BAR_WIDTH = 14
BAR_GAP = 4
GROUP_GAP = 18
MARGIN = 24
PANEL_HEIGHT = 240
LABEL_SPACE = 22


def state_from_json_dict(payload) -> tuple[int, np.ndarray]:
    """Validate the `{"qubits": n, "amplitudes": [[re, im], ...]}` schema."""
    if not isinstance(payload, dict):
        raise StateError("state JSON must be an object")
    qubits = payload.get("qubits")
    amps = payload.get("amplitudes")
    if not isinstance(qubits, int) or isinstance(qubits, bool) or qubits < 1:
        raise StateError("state JSON needs an integer 'qubits' >= 1")
    if not isinstance(amps, list) or not amps:
        raise StateError("state JSON needs a nonempty 'amplitudes' list")
    if len(amps) != 2**qubits:
        raise StateError(f"expected {2 ** qubits} amplitudes for {qubits} qubits, got {len(amps)}")
    vec = np.zeros(len(amps), dtype=np.complex128)
    for i, entry in enumerate(amps):
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
        ):
            raise StateError(f"amplitude {i} must be a [re, im] pair of numbers")
        vec[i] = complex(entry[0], entry[1])
    return qubits, vec


def amplitudes_to_json(vec) -> list[list[float]]:
    amps = np.asarray(vec, dtype=np.complex128).reshape(-1)
    return [[float(z.real) + 0.0, float(z.imag) + 0.0] for z in amps]


def render_svg(
    qubits: int,
    amplitudes,
    real_color: str = "red",
    imag_color: str = "yellow",
) -> str:
    """Amplitude bar chart as a standalone SVG document string."""
    vec = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if vec.size != 2**qubits:
        raise StateError(f"expected {2 ** qubits} amplitudes, got {vec.size}")
    vmax = float(max(np.max(np.abs(vec.real)), np.max(np.abs(vec.imag))))
    scale = (PANEL_HEIGHT / 2 - MARGIN) / vmax if vmax > 0 else 0.0
    baseline = PANEL_HEIGHT / 2
    group_width = 2 * BAR_WIDTH + BAR_GAP
    width = MARGIN * 2 + vec.size * group_width + (vec.size - 1) * GROUP_GAP
    height = PANEL_HEIGHT + LABEL_SPACE

    def bar(x: float, value: float, color: str, kind: str) -> str:
        h = abs(value) * scale
        y = baseline - h if value >= 0 else baseline
        return (
            f'<rect class="{kind}" x="{x:.1f}" y="{y:.1f}" '
            f'width="{BAR_WIDTH}" height="{h:.2f}" fill="{color}"/>'
        )

    groups = []
    for i, z in enumerate(vec):
        x0 = MARGIN + i * (group_width + GROUP_GAP)
        label = format(i, f"0{qubits}b")
        groups.append(
            f'<g class="bar-group" data-basis="|{label}⟩">'
            + bar(x0, float(z.real), real_color, "real")
            + bar(x0 + BAR_WIDTH + BAR_GAP, float(z.imag), imag_color, "imag")
            + f'<text x="{x0 + group_width / 2:.1f}" y="{PANEL_HEIGHT + 14}" '
            f'text-anchor="middle" font-size="11">|{label}⟩</text>'
            + "</g>"
        )

    axis = f'<line x1="0" y1="{baseline}" x2="{width}" y2="{baseline}" stroke="#888"/>'
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
        + axis
        + "".join(groups)
        + "</svg>"
    )
