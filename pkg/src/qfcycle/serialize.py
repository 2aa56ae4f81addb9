"""JSON and plain-text views of cycles, forms, matrices and points."""

from __future__ import annotations

import json
from fractions import Fraction

from .cycles import Cycle
from .forms import CycleStep, Form, Mat, discriminant
from .geometry import QuadPoint

CASE_LABELS = {
    "c1": "1",
    "c2": "2",
    "c3": "3",
    "c4": "4",
    "c5": "5",
    "cusp0": "0",
    "cuspInf": "inf",
    "level1": "level1",
}
CASE_TAGS = {v: k for k, v in CASE_LABELS.items()}


def matrix_json(m: Mat):
    return m.canonical().rows()


def form_json(q: Form):
    return q.to_list()


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def point_json(p: QuadPoint):
    return {"x": _frac(p.x), "y_coeff": _frac(p.y_coeff), "y_rad": p.y_rad, "text": str(p)}


def cycle_dict(c: Cycle):
    return {
        "level": c.level,
        "steps": [
            {
                "n": s.index,
                "form": form_json(s.form),
                "matrix": matrix_json(s.code_matrix),
                "case": CASE_LABELS[s.case_tag],
            }
            for s in c.steps
        ],
        "closed": c.closed,
    }


def serialize_cycle(c: Cycle) -> str:
    return json.dumps(cycle_dict(c), sort_keys=False)


def parse_cycle(text: str) -> Cycle:
    data = json.loads(text)
    steps = []
    for row in data["steps"]:
        (a, b), (c, d) = row["matrix"]
        q = Form(*row["form"])
        steps.append(CycleStep(row["n"], q, Mat(a, b, c, d), CASE_TAGS[row["case"]], discriminant(q)))
    return Cycle(steps, data["closed"], data["level"])


def _mat_text(m: Mat) -> str:
    (a, b), (c, d) = matrix_json(m)
    return f"({a}, {b}; {c}, {d})"


def cycle_table(c: Cycle) -> str:
    """Rows of n, Q_n, M_n and, at level N, the case column."""
    rows = [("n", "Q_n", "M_n") + (("Case",) if c.level != 1 else ())]
    for s in c.steps:
        row = (str(s.index), str(s.form), _mat_text(s.code_matrix))
        if c.level != 1:
            label = CASE_LABELS[s.case_tag]
            row += ("oo" if label == "inf" else label,)
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    if not c.closed:
        lines.append("(not closed)")
    return "\n".join(lines)
