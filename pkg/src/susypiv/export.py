"""CSV / JSON serialization of sampled curves.

Numbers are written with 17 significant digits (``%.17g``), which round-trips
every binary64 value exactly, so ``parse_table(render_table(gf)) == gf``.
"""

import json
import os

from .grid import GridFunction

FORMATS = ("csv", "json")


def _num(v):
    return "%.17g" % v


def render_table(gf, fmt="csv"):
    if not isinstance(gf, GridFunction):
        raise TypeError(f"expected a GridFunction, got {type(gf).__name__}")
    if fmt == "csv":
        rows = ["x,value"] + [f"{_num(x)},{_num(v)}" for x, v in zip(gf.xs, gf.values)]
        return "\n".join(rows) + "\n"
    if fmt == "json":
        xs = ",".join(_num(x) for x in gf.xs)
        vs = ",".join(_num(v) for v in gf.values)
        return f'{{"x":[{xs}],"value":[{vs}]}}\n'
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_table(text, fmt="csv"):
    """Inverse of :func:`render_table`."""
    if fmt == "json":
        # integers such as "-0" must stay floats to keep the sign bit
        data = json.loads(text, parse_int=float)
        return GridFunction(data["x"], data["value"])
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    lines = text.splitlines()
    if not lines or lines[0] != "x,value":
        raise ValueError("CSV table must start with the header 'x,value'")
    xs, vs = [], []
    for ln in lines[1:]:
        x, v = ln.split(",")
        xs.append(float(x))
        vs.append(float(v))
    return GridFunction(xs, vs)


def write_text(text, destination):
    """Write to a path (UTF-8, LF endings) or to an open text stream."""
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {os.fspath(destination)!r}: {exc.strerror or exc}") from exc


def export_table(gf, fmt, destination):
    """Render ``gf`` and write it; the text is built completely before anything is written."""
    write_text(render_table(gf, fmt), destination)
