"""Graphic emission of the weight-space decomposition (delta 2 and 3).

Scaling a weight vector does not change its stratum, so the decomposition
of the positive orthant descends to the chart normalizing the last
coordinate to 1: a marked line for delta = 2 and a plane figure for
delta = 3.  Top-dimensional strata project to points, which are marked and
classed by which of the two one-sided decompositions they saturate
("xmark" when the focus-X locus is full, "starmark" for focus-Y, "bothmark"
for both, "crossmark" for neither); for delta = 3 the one-dimensional cells
of the focus-X (resp. focus-Y) decomposition are drawn as solid (resp.
dashed) segments.

All classification is exact; floating point appears only when rational
chart coordinates are rendered to 12 significant digits for display.
"""

from __future__ import annotations

from fractions import Fraction
from .model import CurveConfig
from .strata import _side_candidates, enumerate_strata, stratum_dim, stratum_key

__all__ = ["fan_data", "emit_fan_svg"]


def _mark_class(config, s):
    full_x = len(s.I) == config.delta and s.alpha_total > config.g_y
    full_y = len(s.J) == config.delta and s.beta_total > config.g_x
    if full_x and full_y:
        return "bothmark"
    if full_x:
        return "xmark"
    if full_y:
        return "starmark"
    return "crossmark"


def _marks(config, strata):
    out = []
    for s in strata:
        if stratum_dim(config, s)["dim"] != config.delta - 1:
            continue
        base = s.witness_mu[config.delta - 1]
        coords = tuple(m / base for m in s.witness_mu[: config.delta - 1])
        out.append((coords, _mark_class(config, s), stratum_key(config, s)))
    out.sort(key=lambda m: (m[0], m[1]))
    return out


def _side_line_cells(bound, delta):
    """Focus-side data (weights, locus) whose chart image is a line: locus of
    size 2 and total weight above the saturation bound."""
    if bound == 0:
        return
    for weights, locus in _side_candidates(bound, delta):
        if len(locus) == 2 and sum(weights) > bound:
            yield weights, locus


def _form(p):
    # linear form over (u0, u1, 1) picking the chart value of coordinate p
    base = [Fraction(0)] * 3
    base[p] = Fraction(1)
    return tuple(base)


def _scale(form, c):
    return tuple(c * x for x in form)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cell_segment(weights, locus, delta, box):
    """Endpoints of one chart line cell, clipped to the box, or None."""
    p, q = sorted(locus)
    eq = _sub(_scale(_form(p), weights[p]), _scale(_form(q), weights[q]))
    level = _scale(_form(p), weights[p])
    strict = []
    for r in range(delta):
        if r in locus:
            continue
        strict.append(_sub(level, _scale(_form(r), weights[r])))
        strict.append(_sub(_scale(_form(r), weights[r] + 1), level))
    strict.append(_form(0))
    strict.append(_form(1))
    weak = [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(-1), Fraction(0), box),
        (Fraction(0), Fraction(-1), box),
    ]
    e0, e1, e2 = eq
    if e1 != 0:
        point = (Fraction(0), -e2 / e1)
    elif e0 != 0:
        point = (-e2 / e0, Fraction(0))
    else:
        return None
    direction = (-e1, e0)
    lo, hi = None, None
    lo_strict = hi_strict = False
    for form, is_strict in [(f, True) for f in strict] + [(f, False) for f in weak]:
        slope = form[0] * direction[0] + form[1] * direction[1]
        value = form[0] * point[0] + form[1] * point[1] + form[2]
        if slope == 0:
            if value < 0 or (is_strict and value == 0):
                return None
            continue
        bound = -value / slope
        if slope > 0:
            if lo is None or bound > lo:
                lo, lo_strict = bound, is_strict
            elif bound == lo and is_strict:
                lo_strict = True
        else:
            if hi is None or bound < hi:
                hi, hi_strict = bound, is_strict
            elif bound == hi and is_strict:
                hi_strict = True
    if lo is None or hi is None or lo > hi or (lo == hi and (lo_strict or hi_strict)):
        return None
    a = (point[0] + lo * direction[0], point[1] + lo * direction[1])
    b = (point[0] + hi * direction[0], point[1] + hi * direction[1])
    if a == b:
        return None
    return a, b


def fan_data(config: CurveConfig, strata=None) -> dict:
    """Exact geometric data behind the figure (marks, and segments for delta 3)."""
    if config.delta not in (2, 3):
        raise ValueError("fan emission supports delta 2 or 3 only")
    if strata is None:
        strata = enumerate_strata(config)
    marks = _marks(config, strata)
    if config.delta == 2:
        return {"delta": 2, "marks": marks}
    coords = [c for m in marks for c in m[0]]
    box = max(coords) * Fraction(5, 4) + 1 if coords else Fraction(2)
    solid, dashed = [], []
    for weights, locus in _side_line_cells(config.g_y, 3):
        seg = _cell_segment(weights, locus, 3, box)
        if seg:
            solid.append(seg)
    for weights, locus in _side_line_cells(config.g_x, 3):
        seg = _cell_segment(weights, locus, 3, box)
        if seg:
            dashed.append(seg)
    solid.sort()
    dashed.sort()
    return {"delta": 3, "marks": marks, "solid": solid, "dashed": dashed, "box": box}


def _fmt(x) -> str:
    return f"{float(x):.12g}"


_GLYPHS = {"xmark": "×", "starmark": "∗", "bothmark": "×∗", "crossmark": "·"}


def emit_fan_svg(config: CurveConfig, strata=None) -> str:
    """Deterministic standalone SVG for the chart decomposition."""
    data = fan_data(config, strata)
    lines = []
    if data["delta"] == 2:
        width, height = 760, 220
        positions = [m[0][0] for m in data["marks"]]
        xmax = max(positions) * Fraction(6, 5) + Fraction(1, 2) if positions else Fraction(2)

        def px(x):
            return 40 + 680 * x / xmax

        lines.append(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">'
        )
        lines.append('<style>.axis{stroke:#000}.mark{stroke:#000;fill:#fff}</style>')
        lines.append('<line class="axis" x1="40" y1="120" x2="720" y2="120"/>')
        for (pos,), cls, _key in data["marks"]:
            x = _fmt(px(pos))
            lines.append(f'<circle class="mark {cls}" cx="{x}" cy="120" r="4"/>')
            lines.append(f'<text class="glyph" x="{x}" y="105" text-anchor="middle">{_GLYPHS[cls]}</text>')
            lines.append(
                f'<text class="pos" x="{x}" y="145" text-anchor="middle">'
                f"{pos.numerator}/{pos.denominator}</text>"
            )
    else:
        width = height = 640
        box = data["box"]

        def px(u):
            return 40 + 560 * u / box

        def py(v):
            return 600 - 560 * v / box

        lines.append(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">'
        )
        lines.append(
            "<style>.ux{stroke:#000}.uy{stroke:#555;stroke-dasharray:6 4}"
            ".mark{stroke:#000;fill:#fff}</style>"
        )
        for (a, b) in data["solid"]:
            lines.append(
                f'<line class="ux" x1="{_fmt(px(a[0]))}" y1="{_fmt(py(a[1]))}" '
                f'x2="{_fmt(px(b[0]))}" y2="{_fmt(py(b[1]))}"/>'
            )
        for (a, b) in data["dashed"]:
            lines.append(
                f'<line class="uy" x1="{_fmt(px(a[0]))}" y1="{_fmt(py(a[1]))}" '
                f'x2="{_fmt(px(b[0]))}" y2="{_fmt(py(b[1]))}"/>'
            )
        for coords, cls, _key in data["marks"]:
            lines.append(
                f'<circle class="mark {cls}" cx="{_fmt(px(coords[0]))}" '
                f'cy="{_fmt(py(coords[1]))}" r="5"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
