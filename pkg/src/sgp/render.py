"""Integer-strip drawings.

Integers are laid out on a strip of width b: the cell in column
x (0 <= x < b) of row y shows origin + x*a + y*b, so for gcd(a, b) = 1
every integer of the covered band appears exactly once.  Named layers
highlight integer sets; a cell belonging to several layers gets a
combined style (a distinct glyph in text mode, a blended fill in SVG).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadStrip

_GLYPHS = "*+o^~%&="
_PALETTE = ("#ffd54f", "#4fc3f7", "#aed581", "#f48fb1",
            "#b39ddb", "#ffab91", "#80cbc4", "#e6ee9c")
_OVERLAP_GLYPH = "#"
_CELL = 30          # svg cell size in px
_LABEL_LIMIT = 1500  # omit numbers when the grid has more cells than this


@dataclass(frozen=True)
class Layer:
    name: str
    values: frozenset[int]
    glyph: str | None = None
    color: str | None = None


@dataclass(frozen=True)
class StripSpec:
    a: int
    b: int
    origin: int
    row_range: tuple[int, int]  # (v_lo, v_hi), inclusive
    layers: tuple[Layer, ...] = ()


@dataclass(frozen=True)
class Cell:
    x: int
    y: int
    value: int
    layers: tuple[str, ...]


def _validate(spec: StripSpec) -> None:
    if spec.a < 1 or spec.b < 1 or math.gcd(spec.a, spec.b) != 1:
        raise BadStrip(f"need coprime positive a, b; got ({spec.a}, {spec.b})")
    if spec.row_range[0] > spec.row_range[1]:
        raise BadStrip(f"empty row range {spec.row_range}")


def build_grid(spec: StripSpec) -> list[list[Cell]]:
    """Rows of cells, top row first (largest y)."""
    _validate(spec)
    v_lo, v_hi = spec.row_range
    grid = []
    for y in range(v_hi, v_lo - 1, -1):
        row = []
        for x in range(spec.b):
            value = spec.origin + x * spec.a + y * spec.b
            names = tuple(layer.name for layer in spec.layers
                          if value in layer.values)
            row.append(Cell(x, y, value, names))
        grid.append(row)
    return grid


def layer_cells(spec: StripSpec, name: str) -> set[int]:
    """Values of the band that the named layer actually highlights."""
    return {cell.value for row in build_grid(spec) for cell in row
            if name in cell.layers}


def _glyph_of(spec: StripSpec) -> dict[str, str]:
    return {layer.name: layer.glyph or _GLYPHS[i % len(_GLYPHS)]
            for i, layer in enumerate(spec.layers)}


def _color_of(spec: StripSpec) -> dict[str, str]:
    return {layer.name: layer.color or _PALETTE[i % len(_PALETTE)]
            for i, layer in enumerate(spec.layers)}


def _blend(colors: list[str]) -> str:
    chans = [(int(c[1:3], 16), int(c[3:5], 16), int(c[5:7], 16))
             for c in colors]
    mixed = tuple(sum(ch) // len(chans) for ch in zip(*chans))
    return "#%02x%02x%02x" % mixed


def _render_text(spec: StripSpec) -> str:
    grid = build_grid(spec)
    glyphs = _glyph_of(spec)
    width = max(len(str(cell.value)) for row in grid for cell in row)
    lines = []
    for row in grid:
        parts = []
        for cell in row:
            if not cell.layers:
                mark = " "
            elif len(cell.layers) == 1:
                mark = glyphs[cell.layers[0]]
            else:
                mark = _OVERLAP_GLYPH
            parts.append(str(cell.value).rjust(width) + mark)
        lines.append(f"y={row[0].y:+d} | " + " ".join(parts))
    return "\n".join(lines) + "\n"


def _render_svg(spec: StripSpec) -> str:
    grid = build_grid(spec)
    colors = _color_of(spec)
    n_rows, n_cols = len(grid), spec.b
    show_numbers = n_rows * n_cols <= _LABEL_LIMIT
    w, h = n_cols * _CELL, n_rows * _CELL
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    for ry, row in enumerate(grid):
        for cell in row:
            px, py = cell.x * _CELL, ry * _CELL
            if not cell.layers:
                fill = "#ffffff"
            elif len(cell.layers) == 1:
                fill = colors[cell.layers[0]]
            else:
                fill = _blend([colors[name] for name in cell.layers])
            out.append(
                f'<rect x="{px}" y="{py}" width="{_CELL}" height="{_CELL}" '
                f'fill="{fill}" stroke="#888888"/>')
            if show_numbers:
                out.append(
                    f'<text x="{px + _CELL // 2}" y="{py + _CELL // 2 + 4}" '
                    f'font-size="10" text-anchor="middle" '
                    f'font-family="monospace">{cell.value}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_strip(spec: StripSpec, fmt: str = "text") -> str:
    """Render the strip as ``text`` or self-contained ``svg``."""
    _validate(spec)
    if fmt == "text":
        return _render_text(spec)
    if fmt == "svg":
        return _render_svg(spec)
    raise BadStrip(f"unknown format {fmt!r}")
