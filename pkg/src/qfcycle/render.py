"""Deterministic SVG pictures of fundamental domains, geodesics and paths."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .forms import Form, Mat, T, discriminant
from .geometry import QuadPoint
from .pell import PathSegment

Y_MAX = Fraction(5, 2)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Tile:
    """The image g F of the standard fundamental region."""

    g: Mat


@dataclass(frozen=True)
class GeodesicCurve:
    form: Form


@dataclass(frozen=True)
class SegmentCurve:
    segment: PathSegment


@dataclass
class Scene:
    level: int = 1
    curves: list = field(default_factory=list)
    labels: List[Tuple[str, QuadPoint]] = field(default_factory=list)
    viewport: Optional[Tuple[Fraction, Fraction, Fraction]] = None

    def __post_init__(self):
        if self.viewport is None:
            half = Fraction(self.level + 1, 2)
            self.viewport = (-half, half, Y_MAX)
        x0, x1, y1 = self.viewport
        if not (x0 < x1 and y1 > 0):
            raise ValueError("empty viewport")


def domain_scene(level: int = 1) -> Scene:
    """The level-N region as N + 1 tiles, or F alone at level 1."""
    if level == 1:
        tiles = [Tile(T(0))]
    else:
        from .leveln import make_context

        tiles = [Tile(g) for g in make_context(level).transversal]
    return Scene(level, tiles)


def fit_viewport(scene: Scene) -> None:
    """Widen the viewport so every geodesic in the scene is visible."""
    x0, x1, y1 = scene.viewport
    for item in scene.curves:
        if isinstance(item, GeodesicCurve):
            q = item.form
            center = Fraction(-q.B, 2 * q.A)
            r = Fraction(math.isqrt(discriminant(q)) + 1, 2 * abs(q.A))
            x0, x1 = min(x0, math.floor(center - r) - HALF), max(x1, math.ceil(center + r) + HALF)
            y1 = max(y1, r * Fraction(11, 10))
    scene.viewport = (Fraction(x0), Fraction(x1), Fraction(y1))


class _Canvas:
    def __init__(self, viewport, width: int):
        self.x0, self.x1, self.y1 = (float(v) for v in viewport)
        self.scale = width / (self.x1 - self.x0)
        self.width = width
        self.height = int(round(self.y1 * self.scale))

    def pt(self, x: float, y: float) -> str:
        return f"{(x - self.x0) * self.scale:.6f} {(self.y1 - y) * self.scale:.6f}"

    def arc(self, r: float, x: float, y: float, sweep: int) -> str:
        rr = r * self.scale
        return f"A {rr:.6f} {rr:.6f} 0 0 {sweep} {self.pt(x, y)}"


def _tile_path(c: _Canvas, g: Mat, y_top: float) -> str:
    h = math.sqrt(3) / 2
    if g.c == 0:
        t = g.b / g.a
        return (
            f"M {c.pt(t - 0.5, y_top)} L {c.pt(t - 0.5, h)} "
            f"{c.arc(1, t + 0.5, h, 1)} L {c.pt(t + 0.5, y_top)} Z"
        )
    # S F: bounded by |z + 1| = 1, |z - 1| = 1 and the unit circle
    return (
        f"M {c.pt(-0.5, h)} {c.arc(1, 0, 0, 1)} {c.arc(1, 0.5, h, 1)} "
        f"{c.arc(1, -0.5, h, 0)} Z"
    )


def _semicircle(c: _Canvas, q: Form) -> str:
    center = -q.B / (2 * q.A)
    r = math.sqrt(discriminant(q)) / (2 * abs(q.A))
    return f"M {c.pt(center - r, 0)} {c.arc(r, center + r, 0, 1)}"


def _segment_path(c: _Canvas, seg: PathSegment) -> str:
    p, q, carrier = seg.start, seg.end, seg.carrier
    pz, qz = complex(p), complex(q)
    if carrier.A == 0:
        return f"M {c.pt(pz.real, pz.imag)} L {c.pt(qz.real, qz.imag)}"
    center = -carrier.B / (2 * carrier.A)
    r = abs(pz - center)
    # moving right along an upper arc is clockwise on screen
    sweep = 1 if qz.real > pz.real else 0
    return f"M {c.pt(pz.real, pz.imag)} {c.arc(r, qz.real, qz.imag, sweep)}"


def render_scene(scene: Scene, width: int = 800) -> str:
    c = _Canvas(scene.viewport, width)
    y_top = c.y1
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c.width}" height="{c.height}" '
        f'viewBox="0 0 {c.width} {c.height}">',
        '<defs><clipPath id="view">'
        f'<rect x="0" y="0" width="{c.width}" height="{c.height}"/></clipPath></defs>',
        f'<line class="axis" x1="0" y1="{c.height}" x2="{c.width}" y2="{c.height}" stroke="black"/>',
        '<g clip-path="url(#view)" fill="none" stroke-width="1.5">',
    ]
    for item in scene.curves:
        if isinstance(item, Tile):
            out.append(f'<path class="tile" d="{_tile_path(c, item.g, y_top)}" stroke="black" fill="#eef"/>')
        elif isinstance(item, GeodesicCurve):
            out.append(f'<path class="geodesic" d="{_semicircle(c, item.form)}" stroke="#c00"/>')
        elif isinstance(item, SegmentCurve):
            out.append(f'<path class="segment" d="{_segment_path(c, item.segment)}" stroke="#06c"/>')
        else:
            raise TypeError(f"cannot draw {item!r}")
    out.append("</g>")
    for text, p in scene.labels:
        z = complex(p)
        x, y = c.pt(z.real, z.imag).split()
        out.append(f'<text x="{x}" y="{y}" font-size="12">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
