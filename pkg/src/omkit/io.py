"""JSON file formats for matrices, interval boxes and networks."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .crn.network import Network
from .errors import NetworkError, OmkitError, ShapeError
from .feasibility import Interval, IntervalBox
from .matrix import ExactMatrix
from .scalars import Polynomial, Scalar, format_scalar, parse_scalar


class InputError(OmkitError, ValueError):
    pass


def _entry(value, variables) -> Scalar:
    if isinstance(value, bool):
        raise InputError(f"boolean {value!r} is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(f"floating-point entry {value!r}; write it as a rational string such as \"1/2\"")
    if isinstance(value, str):
        return parse_scalar(value, variables)
    raise InputError(f"cannot read {value!r} as a scalar")


def matrix_from_json(data: Any) -> ExactMatrix:
    """``{"variables": [...], "rows": [[...], ...]}`` or a bare list of rows."""
    if isinstance(data, list):
        data = {"rows": data}
    if not isinstance(data, dict) or "rows" not in data:
        raise InputError("matrix JSON needs a 'rows' list")
    variables = tuple(data.get("variables") or ())
    rows = data["rows"]
    n_cols = data.get("n_cols")
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    try:
        return ExactMatrix.from_rows([[_entry(x, variables) for x in r] for r in rows], n_cols)
    except ShapeError as exc:
        raise InputError(str(exc)) from None


def matrix_to_json(M: ExactMatrix) -> dict:
    out: dict = {"rows": [[format_scalar(x) for x in r] for r in M.rows()]}
    if M.variables:
        out["variables"] = list(M.variables)
    if not M.n_rows:
        out["n_cols"] = M.n_cols
    return out


def box_from_json(data: Any) -> IntervalBox:
    if not isinstance(data, list):
        raise InputError("interval JSON must be a list of interval objects")
    intervals = []
    for k, item in enumerate(data):
        try:
            intervals.append(
                Interval(
                    str(item["lower"]),
                    str(item["upper"]),
                    bool(item.get("lower_closed", True)),
                    bool(item.get("upper_closed", True)),
                )
            )
        except KeyError as exc:
            raise InputError(f"interval {k + 1} lacks {exc.args[0]!r}") from None
    return IntervalBox(intervals)


def network_from_json(data: Any) -> Network:
    try:
        variables = tuple(data.get("variables") or ())
        species = tuple(data.get("species") or ())
        vertices = []
        y = {}
        ytilde = {}
        for v in data["vertices"]:
            vid = v["id"]
            vertices.append(vid)
            y[vid] = [_entry(x, ()) for x in v["y"]]
            if v.get("ytilde") is not None:
                ytilde[vid] = [_entry(x, variables) for x in v["ytilde"]]
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed network JSON: {exc}") from None
    sizes = {len(c) for c in list(y.values()) + list(ytilde.values())}
    if species:
        sizes.add(len(species))
    if len(sizes) > 1:
        raise NetworkError("complexes have inconsistent lengths")
    return Network.from_complexes(vertices, edges, y, ytilde, species, variables)


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def scalar_to_json(x: Scalar):
    """Integers stay JSON numbers; everything else becomes a grammar string."""
    if not isinstance(x, Polynomial) and Fraction(x).denominator == 1:
        return int(x)
    return format_scalar(x)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
