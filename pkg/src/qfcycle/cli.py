"""Command line entry point: ``qfcycle <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 iteration cap reached (the
partial result is still printed), 4 unsupported or not normalisable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .cycles import cycle
from .errors import InvalidInput, IterationCap, NotNormalisable, Unsupported
from .forms import Form
from .geometry import QuadPoint
from .leveln import make_context, n_cycle, n_reduce
from .pell import fundamental_unit, pell_fundamental, regular_path_decomposition
from .reduction import DEFAULT_CAP, def_reduce, indef_reduce
from .render import GeodesicCurve, SegmentCurve, domain_scene, fit_viewport, render_scene
from .serialize import cycle_dict, cycle_table, form_json, matrix_json, point_json

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_UNSUPPORTED = 0, 2, 3, 4


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _form(text: str) -> Form:
    try:
        return Form.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _point(text: str) -> QuadPoint:
    try:
        return QuadPoint.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _default_cap() -> int:
    raw = os.environ.get("QFCYCLE_MAX_STEPS")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidInput(f"QFCYCLE_MAX_STEPS={raw!r} is not an integer")
    if cap <= 0:
        raise InvalidInput("QFCYCLE_MAX_STEPS must be positive")
    return cap


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qfcycle", description=__doc__.splitlines()[0])
    p.add_argument("--text", action="store_true", help="print tables instead of JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_form(sp, required=True):
        sp.add_argument("--form", type=_form, required=required, metavar="A,B,C")
        sp.add_argument("--batch", metavar="FILE", help="one A,B,C form per line")
        sp.add_argument("--text", action="store_true", default=argparse.SUPPRESS)

    r = sub.add_parser("reduce", help="reduce a form")
    with_form(r, required=False)
    r.add_argument("--level", type=int)
    r.add_argument("--definite", action="store_true")

    c = sub.add_parser("cycle", help="level-1 cycle of an indefinite form")
    with_form(c, required=False)
    c.add_argument("--tau", type=_point, metavar="x,yc,yr")
    c.add_argument("--max-steps", type=int)

    n = sub.add_parser("ncycle", help="N-cycle for Gamma^0(N)")
    with_form(n, required=False)
    n.add_argument("--level", type=int, required=True)
    n.add_argument("--tau", type=_point, metavar="x,yc,yr")
    n.add_argument("--max-steps", type=int)

    pl = sub.add_parser("pell", help="fundamental Pell solution")
    pl.add_argument("--d", type=int, required=True)
    pl.add_argument("--unit", action="store_true", help="also report the fundamental unit")
    pl.add_argument("--text", action="store_true", default=argparse.SUPPRESS)

    pa = sub.add_parser("path", help="regular path decomposition")
    with_form(pa, required=False)
    pa.add_argument("--level", type=int)
    pa.add_argument("--tau", type=_point, required=True, metavar="x,yc,yr")

    rd = sub.add_parser("render", help="SVG picture of the fundamental region")
    rd.add_argument("--level", type=int, required=True)
    rd.add_argument("--form", type=_form, action="append", default=[], metavar="A,B,C")
    rd.add_argument("--tau", type=_point, metavar="x,yc,yr", help="also draw the path from this base point")
    rd.add_argument("--out", required=True, metavar="FILE.svg")
    rd.add_argument("--width", type=int, default=800)
    return p


def _cap(args) -> int:
    cap = getattr(args, "max_steps", None)
    if cap is None:
        return _default_cap()
    if cap <= 0:
        raise InvalidInput("--max-steps must be positive")
    return cap


def _reduced(q: Form, args):
    if args.definite:
        res = def_reduce(q)
        return {"form": form_json(res.reduced), "matrix": matrix_json(res.transform)}
    if args.level is not None and args.level != 1:
        q2, m = n_reduce(q, make_context(args.level))
        return {"form": form_json(q2), "matrix": matrix_json(m), "level": args.level}
    res = indef_reduce(q)
    return {"form": form_json(res.reduced), "matrix": matrix_json(res.transform)}


def _run_one(command: str, q: Form, args):
    """(payload, text) for one form; exceptions propagate."""
    if command == "reduce":
        out = _reduced(q, args)
        return out, f"{out['form']}  {out['matrix']}"
    if command == "cycle":
        c = cycle(q, args.tau, _cap(args))
        return cycle_dict(c), cycle_table(c)
    if command == "ncycle":
        c = n_cycle(q, make_context(args.level), _cap(args), args.tau)
        return cycle_dict(c), cycle_table(c)
    if command == "path":
        level = None if args.level in (None, 1) else args.level
        if level is not None:
            make_context(level)
        segs = regular_path_decomposition(q, args.tau, level)
        out = {
            "segments": [
                {"start": point_json(s.start), "end": point_json(s.end), "carrier": form_json(s.carrier)}
                for s in segs
            ]
        }
        text = "\n".join(f"{{{s.start}, {s.end}}} on {s.carrier}" for s in segs)
        return out, text
    raise AssertionError(command)


def _partial(e: IterationCap):
    if e.partial is not None and hasattr(e.partial, "steps"):
        return cycle_dict(e.partial), cycle_table(e.partial)
    return {"error": str(e)}, str(e)


def _guarded(command: str, q: Form, args):
    """(exit code, payload, text, error message) for one form."""
    try:
        payload, text = _run_one(command, q, args)
        return EXIT_OK, payload, text, None
    except IterationCap as e:
        payload, text = _partial(e)
        return EXIT_CAP, payload, text, str(e)
    except (Unsupported, NotNormalisable) as e:
        return EXIT_UNSUPPORTED, None, None, str(e)
    except (InvalidInput, ZeroDivisionError) as e:
        return EXIT_INVALID, None, None, str(e)


def _guarded_star(job):
    return _guarded(*job)


def _read_batch(path: str) -> List[Form]:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    return [Form.parse(ln) for ln in lines if ln and not ln.startswith("#")]


def _emit(payload, text, as_text: bool, out):
    if as_text:
        print(text, file=out)
    else:
        print(json.dumps(payload), file=out)


def _form_command(args, out, err) -> int:
    if args.batch is None:
        if args.form is None:
            raise InvalidInput("--form or --batch is required")
        code, payload, text, msg = _guarded(args.command, args.form, args)
        if payload is not None:
            _emit(payload, text, args.text, out)
        if msg:
            print(f"qfcycle: {msg}", file=err)
        return code
    forms = _read_batch(args.batch)
    jobs = [(args.command, q, args) for q in forms]
    if len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_guarded_star, jobs))
    else:
        results = [_guarded_star(j) for j in jobs]
    worst = EXIT_OK
    for q, (code, payload, text, msg) in zip(forms, results):
        if args.text:
            print(f"# {q}", file=out)
            print(text if text is not None else f"error: {msg}", file=out)
        else:
            row = {"input": form_json(q), "exit": code}
            row["result" if payload is not None else "error"] = payload if payload is not None else msg
            print(json.dumps(row), file=out)
        worst = max(worst, code)
    return worst


def _pell(args, out) -> int:
    x, y = pell_fundamental(args.d)
    payload = {"x": x, "y": y}
    text = f"x = {x}, y = {y}"
    if args.unit:
        u = fundamental_unit(args.d)
        payload["unit"] = {"t": u.t, "u": u.u, "norm": u.norm}
        text += f"\nunit = ({u.t} + {u.u} sqrt({args.d}))/2, norm {u.norm:+d}"
    _emit(payload, text, args.text, out)
    return EXIT_OK


def _render(args, out) -> int:
    if args.width <= 0:
        raise InvalidInput("--width must be positive")
    if args.level != 1:
        make_context(args.level)
    scene = domain_scene(args.level)
    tiles = len(scene.curves)
    level = None if args.level == 1 else args.level
    for q in args.form:
        scene.curves.append(GeodesicCurve(q))
        if args.tau is not None:
            segs = regular_path_decomposition(q, args.tau, level)
            scene.curves.extend(SegmentCurve(seg) for seg in segs)
            scene.labels.append(("tau0", args.tau))
            if len(segs) == 3:
                scene.labels += [("b", segs[0].end), ("b''", segs[1].end), ("b'", segs[2].start)]
    fit_viewport(scene)
    svg = render_scene(scene, args.width)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    _emit({"out": args.out, "tiles": tiles}, args.out, args.text, out)
    return EXIT_OK


_VALUE_FLAGS = ("--form", "--tau")


def _glue_values(argv: List[str]) -> List[str]:
    """Rewrite '--form -1,2,3' as '--form=-1,2,3' so argparse does not read a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and "," in argv[i + 1]:
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_glue_values(list(argv)))
        if not hasattr(args, "text"):
            args.text = False
        if args.command == "pell":
            return _pell(args, out)
        if args.command == "render":
            return _render(args, out)
        return _form_command(args, out, err)
    except _ArgError as e:
        print(f"qfcycle: {e}", file=err)
        return EXIT_INVALID
    except (Unsupported, NotNormalisable) as e:
        print(f"qfcycle: {e}", file=err)
        return EXIT_UNSUPPORTED
    except (InvalidInput, OSError) as e:
        print(f"qfcycle: {e}", file=err)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
