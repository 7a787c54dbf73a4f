"""JSON and CSV codecs for specs, step functions, Blaschke products and reports.

Complex numbers travel as ``[re, im]`` pairs and angles are in radians.
Parse errors raise ``InputError`` naming the offending field.
"""

import csv
import io
import json
import math

import numpy as np

from .blaschke import RationalInner
from .exceptions import DomainError
from .stepfn import AlternatingStepFunction
from .toeplitz import HermitianToeplitzSpec


class InputError(DomainError):
    """A file or document does not match its expected layout."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


def _require(doc, field, kind=None):
    if not isinstance(doc, dict):
        raise InputError("<root>", "expected a JSON object")
    if field not in doc:
        raise InputError(field, "missing")
    value = doc[field]
    if kind is not None and (not isinstance(value, kind) or isinstance(value, bool)):
        raise InputError(field, f"expected {getattr(kind, '__name__', kind)}")
    return value


def _number(x, field):
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise InputError(field, f"expected a finite number, got {x!r}")
    return float(x)


def complex_list(values, field):
    """``[[re, im], ...]`` to a complex array."""
    if not isinstance(values, list) or not values:
        raise InputError(field, "expected a non-empty list of [re, im] pairs")
    out = np.empty(len(values), dtype=complex)
    for i, pair in enumerate(values):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"{field}[{i}]", "expected a [re, im] pair")
        out[i] = complex(_number(pair[0], f"{field}[{i}]"), _number(pair[1], f"{field}[{i}]"))
    return out


def complex_pairs(values):
    return [[float(z.real), float(z.imag)] for z in np.asarray(values, dtype=complex)]


def spec_from_json(doc):
    n = _require(doc, "n", int)
    a = complex_list(_require(doc, "coefficients"), "coefficients")
    if n < 0 or a.size != n + 1:
        raise InputError("coefficients", f"expected n + 1 = {n + 1} entries, got {a.size}")
    try:
        return HermitianToeplitzSpec(a)
    except DomainError as exc:
        raise InputError("coefficients", str(exc)) from exc


def spec_to_json(spec):
    return {"n": spec.order_n, "coefficients": complex_pairs(spec.coefficients)}


def step_from_json(doc):
    height = _number(_require(doc, "height"), "height")
    jumps = _require(doc, "jumps_radians", list)
    jumps = [_number(x, f"jumps_radians[{i}]") for i, x in enumerate(jumps)]
    sign = doc.get("first_sign", 1) if isinstance(doc, dict) else 1
    if sign not in (1, -1) or isinstance(sign, bool):
        raise InputError("first_sign", f"expected 1 or -1, got {sign!r}")
    if len(jumps) % 2:
        raise InputError(
            "jumps_radians", f"an alternating step function needs an even number of jumps, got {len(jumps)}"
        )
    if any(x < 0 or x >= 2 * math.pi for x in jumps):
        raise InputError("jumps_radians", "angles must lie in [0, 2*pi) radians")
    try:
        if not jumps:
            return AlternatingStepFunction.constant(sign * height)
        return AlternatingStepFunction(height, np.array(jumps), sign)
    except DomainError as exc:
        raise InputError("jumps_radians", str(exc)) from exc


def step_to_json(psi):
    return psi.to_json()


def inner_from_json(doc):
    num = complex_list(_require(doc, "numerator"), "numerator")
    den = complex_list(_require(doc, "denominator"), "denominator")
    w = RationalInner(num, den)
    order = _require(doc, "order", int)
    if order != w.order:
        raise InputError("order", f"declared {order} but coefficients give {w.order}")
    return w


def inner_to_json(w):
    return w.to_json()


def arcs_from_json(doc):
    arcs = _require(doc, "arcs", list)
    out = []
    for i, pair in enumerate(arcs):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"arcs[{i}]", "expected a [start, end] pair")
        out.append((_number(pair[0], f"arcs[{i}]"), _number(pair[1], f"arcs[{i}]")))
    return out


def arcs_to_json(arcs):
    return {"arcs": [[float(a), float(b)] for a, b in arcs]}


def load_json(path):
    """Read a JSON document, mapping I/O and syntax errors to ``InputError``."""
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(str(path), exc.strerror or str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise InputError(str(path), f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def dumps(doc):
    """Deterministic JSON text (sorted keys, repr-exact floats)."""
    return json.dumps(_plain(doc), sort_keys=True, indent=2, allow_nan=True)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (np.floating, float)):
        return float(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def report_csv(reports):
    """Bound reports as CSV with columns n, param_1.., norm, ratio, paper_lo, paper_hi, pass."""
    width = max((len(r.params) for r in reports), default=0)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", *[f"param_{i + 1}" for i in range(width)], "norm", "ratio", "paper_lo", "paper_hi", "pass"])
    for r in reports:
        params = [repr(float(p)) for p in r.params] + [""] * (width - len(r.params))
        # rows without a reference interval are exploratory and carry no verdict
        verdict = "" if math.isnan(r.paper_lo) else str(bool(r.passed)).lower()
        writer.writerow(
            [
                r.n,
                *params,
                repr(float(r.norm)),
                repr(float(r.ratio)),
                repr(float(r.paper_lo)),
                repr(float(r.paper_hi)),
                verdict,
            ]
        )
    return buf.getvalue()
