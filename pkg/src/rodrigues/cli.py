"""Command-line front end: ``rodrigues <subcommand> ...``.

Rotation records are JSON objects, one per line, tagged by ``type``::

    {"type": "axis_angle", "theta": 1.5707963267948966, "w": [0, 0, 1]}
    {"type": "quaternion", "a": 1, "b": 0, "c": 0, "d": 0}
    {"type": "matrix", "m": [1, 0, 0, 0, 1, 0, 0, 0, 1]}
    {"type": "euler_zyz", "phi": 0, "theta": 0, "psi": 0}

Numbers are written with 17 significant digits in a fixed key order, so
reading a record and writing it back reproduces the line byte for byte.
Blank lines, lines starting with ``#`` and ``{"type": "meta"}`` lines are
skipped on input.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from . import extras, kinematics, matrix_rep, rotation, spherical, verify
from .quaternion import Quaternion, UnitQuaternion, multiply, random_unit_quaternion
from .rotation import AxisAngle, EulerZYZ

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

RECORD_FIELDS = {
    "axis_angle": ("theta", "w"),
    "quaternion": ("a", "b", "c", "d"),
    "matrix": ("m",),
    "euler_zyz": ("phi", "theta", "psi"),
}
ANGLE_FIELDS = {"axis_angle": ("theta",), "euler_zyz": ("phi", "theta", "psi")}
VECTOR_SIZES = {"w": 3, "m": 9}
COMPOSE_METHODS = ("rodrigues", "matrix", "geometric", "small_angle")


class InputError(ValueError):
    """Bad user input; reported on stderr with exit code 2."""


# -- records --------------------------------------------------------------


def fmt(x: float) -> str:
    """Canonical decimal for a float: 17 significant digits, shortest exponent form."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class Record:
    """A rotation in one of four representations, holding the numbers as given."""

    kind: str
    values: tuple  # field values in RECORD_FIELDS order; vector fields are tuples

    def to_json(self) -> str:
        parts = [f'"type": "{self.kind}"']
        for name, value in zip(RECORD_FIELDS[self.kind], self.values):
            if isinstance(value, tuple):
                parts.append(f'"{name}": [{", ".join(fmt(v) for v in value)}]')
            else:
                parts.append(f'"{name}": {fmt(value)}')
        return "{" + ", ".join(parts) + "}"

    def field(self, name: str):
        return self.values[RECORD_FIELDS[self.kind].index(name)]


def _number(name: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"field {name!r} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise InputError(f"field {name!r} must be finite, got {value!r}")
    return float(value)


def parse_record(obj: dict) -> Record:
    """Build a record from a decoded JSON object and check its invariants."""
    if not isinstance(obj, dict):
        raise InputError(f"record must be a JSON object, got {obj!r}")
    kind = obj.get("type")
    if kind not in RECORD_FIELDS:
        raise InputError(f"unknown record type {kind!r}; expected one of {sorted(RECORD_FIELDS)}")
    names = RECORD_FIELDS[kind]
    extra = set(obj) - set(names) - {"type"}
    if extra:
        raise InputError(f"{kind} record has unexpected fields {sorted(extra)}")
    values = []
    for name in names:
        if name not in obj:
            raise InputError(f"{kind} record is missing field {name!r}")
        raw = obj[name]
        if name in VECTOR_SIZES:
            if not isinstance(raw, list) or len(raw) != VECTOR_SIZES[name]:
                raise InputError(f"field {name!r} must be a list of {VECTOR_SIZES[name]} numbers, got {raw!r}")
            values.append(tuple(_number(name, v) for v in raw))
        else:
            values.append(_number(name, raw))
    record = Record(kind, tuple(values))
    to_axis_angle(record)  # validates the embedded invariants
    return record


def loads_record(line: str) -> Record:
    # parse_int=float keeps "-0" as negative zero so re-serialization is exact
    try:
        obj = json.loads(line, parse_int=float)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return parse_record(obj)


def _data_lines(stream: Iterable[str]) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text.startswith("#") or text.startswith('{"type": "meta"'):
            continue
        yield lineno, text


def read_records(stream: Iterable[str], source: str = "<input>") -> list[Record]:
    out = []
    for lineno, text in _data_lines(stream):
        try:
            out.append(loads_record(text))
        except InputError as exc:
            raise InputError(f"{source}:{lineno}: {exc}") from None
    return out


def _open(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_records(paths: Sequence[str]) -> list[Record]:
    records = []
    for path in paths:
        stream = _open(path)
        try:
            records.extend(read_records(stream, path))
        finally:
            if stream is not sys.stdin:
                stream.close()
    return records


# -- conversions ------------------------------------------------------------


def _clean(x: float) -> float:
    return float(x) + 0.0  # turns -0.0 into 0.0


def fold(p: AxisAngle) -> AxisAngle:
    """Same rotation with ``theta`` in ``[0, pi]``."""
    theta = math.remainder(p.theta, 2.0 * math.pi)
    if p.axis_arbitrary or theta == 0.0:
        return AxisAngle(0.0, rotation.E3, axis_arbitrary=True)
    if theta < 0.0:
        return AxisAngle(-theta, -p.w)
    return AxisAngle(theta, p.w)


def to_axis_angle(r: Record) -> AxisAngle:
    try:
        if r.kind == "axis_angle":
            return AxisAngle(r.field("theta"), np.array(r.field("w")))
        if r.kind == "quaternion":
            return rotation.from_quaternion(UnitQuaternion(*r.values))
        if r.kind == "matrix":
            return rotation.from_matrix(np.array(r.field("m")).reshape(3, 3))
        return rotation.from_matrix(rotation.euler_to_matrix(EulerZYZ(*r.values)))
    except ValueError as exc:
        raise InputError(f"invalid {r.kind} record: {exc}") from None


def to_matrix(r: Record) -> np.ndarray:
    if r.kind == "matrix":
        return rotation.check_rotation(np.array(r.field("m")).reshape(3, 3))
    if r.kind == "euler_zyz":
        return rotation.euler_to_matrix(EulerZYZ(*r.values))
    if r.kind == "quaternion":
        return rotation.conjugation_matrix(UnitQuaternion(*r.values))
    return rotation.to_matrix(to_axis_angle(r))


def to_unit_quaternion(r: Record) -> UnitQuaternion:
    """The record's quaternion; other representations use the non-negative-scalar lift."""
    if r.kind == "quaternion":
        return UnitQuaternion(*r.values)
    if r.kind == "axis_angle":
        return rotation.to_quaternion(to_axis_angle(r))
    return rotation.double_cover_fibre(to_matrix(r))[0]


def _vec(v) -> tuple:
    return tuple(_clean(x) for x in v)


def from_axis_angle(p: AxisAngle) -> Record:
    p = fold(p)
    return Record("axis_angle", (_clean(p.theta), _vec(p.w)))


def from_quaternion(q: Quaternion) -> Record:
    return Record("quaternion", _vec(q))


def from_matrix(U: np.ndarray) -> Record:
    return Record("matrix", (_vec(np.asarray(U).ravel()),))


def from_euler(e: EulerZYZ) -> Record:
    return Record("euler_zyz", _vec((e.phi, e.theta, e.psi)))


def convert(r: Record, target: str) -> tuple[Record, list[str]]:
    """Convert a record; also returns the chain of representations used."""
    if target not in RECORD_FIELDS:
        raise InputError(f"unknown target {target!r}; expected one of {sorted(RECORD_FIELDS)}")
    if target == r.kind:
        return r, [r.kind]
    if target == "axis_angle":
        via = ["matrix"] if r.kind == "euler_zyz" else []
        return from_axis_angle(to_axis_angle(r)), [r.kind, *via, target]
    if target == "quaternion":
        if r.kind == "axis_angle":
            return from_quaternion(rotation.to_quaternion(to_axis_angle(r))), [r.kind, target]
        q, _ = rotation.double_cover_fibre(to_matrix(r))
        return from_quaternion(q), [r.kind, *([] if r.kind == "matrix" else ["matrix"]), target]
    if target == "matrix":
        return from_matrix(to_matrix(r)), [r.kind, target]
    return from_euler(rotation.matrix_to_euler(to_matrix(r))), [r.kind, *([] if r.kind == "matrix" else ["matrix"]), target]


# -- degrees at the boundary ------------------------------------------------


def _scale_angles(r: Record, factor: float) -> Record:
    if r.kind not in ANGLE_FIELDS:
        return r
    values = list(r.values)
    for name in ANGLE_FIELDS[r.kind]:
        i = RECORD_FIELDS[r.kind].index(name)
        values[i] = values[i] * factor
    return Record(r.kind, tuple(values))


def record_in(r: Record, degrees: bool) -> Record:
    return _scale_angles(r, math.pi / 180.0) if degrees else r


def record_out(r: Record, degrees: bool) -> Record:
    return _scale_angles(r, 180.0 / math.pi) if degrees else r


# -- output -------------------------------------------------------------------


class Output:
    def __init__(self, fmt_name: str, stream: TextIO):
        self.json = fmt_name == "json-lines"
        self.stream = stream

    def record(self, r: Record) -> None:
        print(r.to_json(), file=self.stream)

    def meta(self, **fields) -> None:
        """Side information: a ``meta`` JSON line or a ``#`` comment in text mode."""
        if self.json:
            print(json.dumps({"type": "meta", **fields}), file=self.stream)
        else:
            for k, v in fields.items():
                print(f"# {k}: {v}", file=self.stream)

    def vector(self, v) -> None:
        if self.json:
            print('{"type": "vector", "v": [' + ", ".join(fmt(x) for x in v) + "]}", file=self.stream)
        else:
            print(" ".join(fmt(x) for x in v), file=self.stream)


# -- subcommands --------------------------------------------------------------


def _records_from_args(args) -> list[Record]:
    records = load_records(args.inputs or ["-"])
    return [record_in(r, args.degrees) for r in records]


def cmd_convert(args, out: Output) -> int:
    for r in _records_from_args(args):
        result, path = convert(r, args.to)
        out.meta(path=" -> ".join(path))
        out.record(record_out(result, args.degrees))
    return EXIT_OK


def _composer(method: str) -> Callable[[AxisAngle, AxisAngle], AxisAngle]:
    return {
        "rodrigues": rotation.compose_rodrigues,
        "matrix": rotation.compose_matrix,
        "geometric": spherical.compose_geometric,
        "small_angle": rotation.compose_small_angle,
    }[method]


def compose_records(records: Sequence[Record], method: str) -> AxisAngle:
    """Fold the records left to right, the first listed acting first."""
    if len(records) < 2:
        raise InputError(f"compose needs at least two records, got {len(records)}")
    step = _composer(method)
    acc = to_axis_angle(records[0])
    for r in records[1:]:
        try:
            acc = step(acc, to_axis_angle(r))
        except spherical.ParallelAxesError as exc:
            raise InputError(f"{method}: {exc}") from None
    return acc


def cmd_compose(args, out: Output) -> int:
    records = _records_from_args(args)
    if args.method != "all":
        out.record(record_out(from_axis_angle(compose_records(records, args.method)), args.degrees))
        return EXIT_OK
    results: dict[str, AxisAngle] = {}
    for method in COMPOSE_METHODS:
        try:
            results[method] = compose_records(records, method)
        except InputError as exc:
            if len(records) < 2:
                raise
            out.meta(method=method, error=str(exc))
            continue
        out.meta(method=method)
        out.record(record_out(from_axis_angle(results[method]), args.degrees))
    names = list(results)
    for i, m1 in enumerate(names):
        for m2 in names[i + 1 :]:
            dev = float(np.max(np.abs(rotation.to_matrix(results[m1]) - rotation.to_matrix(results[m2]))))
            out.meta(pair=f"{m1} vs {m2}", max_matrix_deviation=fmt(dev))
    return EXIT_OK


def _three(values: Sequence[float], name: str) -> np.ndarray:
    v = np.array(values, dtype=float)
    if not np.all(np.isfinite(v)):
        raise InputError(f"{name} must be finite")
    return v


def cmd_rotate(args, out: Output) -> int:
    x = _three(args.vector, "--vector")
    for r in _records_from_args(args):
        out.vector(rotation.rotate(to_axis_angle(r), x))
    return EXIT_OK


def cmd_reflect(args, out: Output) -> int:
    a = _three(args.normal, "--normal")
    try:
        if args.second is not None:
            two = matrix_rep.rotation_from_two_reflections(a, _three(args.second, "--second"))
            out.record(record_out(from_axis_angle(two.axis_angle), args.degrees))
            out.record(from_quaternion(two.quaternion))
            return EXIT_OK
        if args.vector is None:
            raise InputError("reflect needs --vector or --second")
        x = _three(args.vector, "--vector")
        route = matrix_rep.reflect_matrix if args.method == "matrix" else matrix_rep.reflect
        out.vector(route(a, x))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None
    return EXIT_OK


def read_omega_series(stream: Iterable[str], source: str = "<omega>") -> tuple[np.ndarray, np.ndarray]:
    """Parse ``{"t": ..., "omega": [x, y, z]}`` lines; times must strictly increase."""
    ts, ws = [], []
    for lineno, text in _data_lines(stream):
        where = f"{source}:{lineno}"
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{where}: not valid JSON: {exc}") from None
        if not isinstance(obj, dict) or set(obj) != {"t", "omega"}:
            raise InputError(f'{where}: expected an object with exactly "t" and "omega"')
        try:
            t = _number("t", obj["t"])
            w = obj["omega"]
            if not isinstance(w, list) or len(w) != 3:
                raise InputError("field 'omega' must be a list of 3 numbers")
            w = [_number("omega", v) for v in w]
        except InputError as exc:
            raise InputError(f"{where}: {exc}") from None
        if ts and not t > ts[-1]:
            raise InputError(f"{where}: timestamps must be strictly increasing ({t!r} after {ts[-1]!r})")
        ts.append(t)
        ws.append(w)
    if len(ts) < 2:
        raise InputError(f"{source}: need at least two samples, got {len(ts)}")
    return np.array(ts), np.array(ws)


def omega_interpolant(ts: np.ndarray, ws: np.ndarray) -> Callable[[float], np.ndarray]:
    """Cubic spline through the samples (linear for two points); no extrapolation."""
    from scipy.interpolate import CubicSpline

    spline = CubicSpline(ts, ws, axis=0, bc_type="not-a-knot" if len(ts) > 3 else "natural")
    lo, hi = ts[0], ts[-1]

    def omega(t: float) -> np.ndarray:
        if t < lo - 1e-12 or t > hi + 1e-12:
            raise InputError(f"t = {t!r} lies outside the omega series [{lo!r}, {hi!r}]")
        return spline(min(max(t, lo), hi))

    return omega


def cmd_propagate(args, out: Output) -> int:
    initial = load_records([args.initial])
    if len(initial) != 1:
        raise InputError(f"{args.initial}: expected exactly one initial record, got {len(initial)}")
    q0 = to_unit_quaternion(record_in(initial[0], args.degrees))
    stream = _open(args.omega)
    try:
        ts, ws = read_omega_series(stream, args.omega)
    finally:
        if stream is not sys.stdin:
            stream.close()
    omega = omega_interpolant(ts, ws)
    t0 = ts[0] if args.t0 is None else args.t0
    t1 = ts[-1] if args.t1 is None else args.t1
    if not (ts[0] <= t0 < t1 <= ts[-1]):
        raise InputError(f"need {ts[0]!r} <= t0 < t1 <= {ts[-1]!r}, got t0={t0!r}, t1={t1!r}")
    if not args.h > 0:
        raise InputError(f"--h must be positive, got {args.h!r}")

    sink = open(args.output, "w", encoding="utf-8") if args.output else None
    try:
        last = None
        for i, step in enumerate(kinematics.integrate(q0, omega, t0, t1, args.h)):
            last = step
            if sink and i % args.every == 0:
                sink.write('{"t": ' + fmt(step.t) + ', "q": [' + ", ".join(fmt(v) for v in step.q) + "]}\n")
        if sink and i % args.every != 0:
            sink.write('{"t": ' + fmt(last.t) + ', "q": [' + ", ".join(fmt(v) for v in last.q) + "]}\n")
    finally:
        if sink:
            sink.close()
    out.record(from_quaternion(last.q))
    if args.convergence:
        hs = [args.h, args.h / 2, args.h / 4]
        finals = [kinematics.propagate(q0, omega, t0, t1, h) for h in hs]
        # the sign of q is continuous along the path, so differences are meaningful
        d1 = max(abs(x - y) for x, y in zip(finals[0], finals[1]))
        d2 = max(abs(x - y) for x, y in zip(finals[1], finals[2]))
        order = kinematics.convergence_order([d1, d2])[0]
        out.meta(observed_order=fmt(order), steps=" ".join(fmt(h) for h in hs))
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    checks = verify.run(args.suite, seed=args.seed)
    for c in checks:
        if out.json:
            print(json.dumps({"type": "check", **c.as_dict()}), file=out.stream)
        else:
            print(c.line(), file=out.stream)
    failed = sum(not c.passed for c in checks)
    if not out.json:
        print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out.stream)
    return EXIT_OK if failed == 0 else EXIT_FAIL


class _Counted:
    """Number stand-in that tallies multiplications and additions."""

    tally = {"mul": 0, "add": 0}

    def __init__(self, v=1.0):
        self.v = v

    def __mul__(self, other):
        _Counted.tally["mul"] += 1
        return _Counted()

    def _add(self, other):
        _Counted.tally["add"] += 1
        return _Counted()

    __add__ = __radd__ = __sub__ = __rsub__ = _add

    def __neg__(self):
        return self


def quaternion_product_op_count() -> tuple[int, int]:
    """(multiplications, additions) performed by one ``multiply`` call."""
    _Counted.tally = {"mul": 0, "add": 0}
    try:
        multiply(tuple(_Counted() for _ in range(4)), tuple(_Counted() for _ in range(4)))
    except (TypeError, ValueError):
        pass  # the final Quaternion() coercion rejects the stand-ins; arithmetic is done by then
    return _Counted.tally["mul"], _Counted.tally["add"]


def _euler_route(e1: EulerZYZ, e2: EulerZYZ) -> EulerZYZ:
    # six elementary matrices multiplied out, then angles re-extracted
    factors = [
        rotation.g3(e2.phi), rotation.g2(e2.theta), rotation.g3(e2.psi),
        rotation.g3(e1.phi), rotation.g2(e1.theta), rotation.g3(e1.psi),
    ]  # fmt: skip
    U = factors[0]
    for f in factors[1:]:
        U = U @ f
    return rotation.matrix_to_euler(U)


def _median_time(fn: Callable, args_list: list) -> float:
    times = []
    for a in args_list:
        start = time.perf_counter()
        fn(*a)
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench(n: int, seed: int) -> dict[str, float]:
    if n < 100:
        raise InputError(f"bench needs n >= 100, got {n}")
    rng = np.random.default_rng(seed)
    quats = [(random_unit_quaternion(rng), random_unit_quaternion(rng)) for _ in range(n)]
    eulers = [tuple(rotation.matrix_to_euler(rotation.conjugation_matrix(q)) for q in pair) for pair in quats]
    mults, adds = quaternion_product_op_count()
    near = verify.euler_pathology(rng, n=n, theta=1e-9, nudge=5e-10)
    far = verify.euler_pathology(rng, n=n, theta=1.0, nudge=5e-10)
    return {
        "samples": n,
        "quaternion_product_median_s": _median_time(multiply, quats),
        "euler_route_median_s": _median_time(_euler_route, eulers),
        "quaternion_product_multiplies": mults,
        "quaternion_product_additions": adds,
        "near_gimbal_euler_deviation": near["euler_parameter"],
        "near_gimbal_matrix_deviation": near["rotation_matrix"],
        "near_gimbal_rodrigues_action_deviation": near["rodrigues_action"],
        "far_euler_deviation": far["euler_parameter"],
        "far_matrix_deviation": far["rotation_matrix"],
        "far_rodrigues_action_deviation": far["rodrigues_action"],
    }


def cmd_bench(args, out: Output) -> int:
    report = bench(args.n, args.seed)
    if out.json:
        print(json.dumps({"type": "bench", **report}), file=out.stream)
    else:
        width = max(map(len, report))
        for k, v in report.items():
            print(f"{k:<{width}}  {v:.3e}" if isinstance(v, float) else f"{k:<{width}}  {v}", file=out.stream)
    return EXIT_OK


def cmd_extras(args, out: Output) -> int:
    try:
        if args.what == "legendre":
            if args.x is None:
                raise InputError("legendre needs --x")
            value = extras.legendre(args.n, args.x)
            coeffs = [str(c) for c in extras.legendre_coefficients(args.n)]
            if out.json:
                print(json.dumps({"type": "legendre", "n": args.n, "x": args.x, "value": value, "coefficients": coeffs}), file=out.stream)
            else:
                print(f"P_{args.n}({fmt(args.x)}) = {fmt(value)}", file=out.stream)
                print("coefficients (x^0 upward): " + " ".join(coeffs), file=out.stream)
        else:
            poly = extras.inversion_generating_polynomial(args.n)
            if out.json:
                print(json.dumps({"type": "inversions", "n": args.n, "coefficients": list(poly)}), file=out.stream)
            else:
                print(f"R_{args.n}(q) coefficients (q^0 upward): " + " ".join(map(str, poly)), file=out.stream)
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
    common.add_argument("--degrees", action="store_true", help="angles in records are in degrees")
    common.add_argument("--format", choices=("text", "json-lines"), default="text", dest="fmt")

    parser = argparse.ArgumentParser(prog="rodrigues", description="Quaternion rotations, compositions and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="convert rotation records")
    p.add_argument("inputs", nargs="*", help="record files ('-' or none for stdin)")
    p.add_argument("--to", required=True, choices=sorted(RECORD_FIELDS))
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("compose", parents=[common], help="compose records, first listed applied first")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--method", choices=(*COMPOSE_METHODS, "all"), default="rodrigues")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("rotate", parents=[common], help="apply each record to a vector")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--vector", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.set_defaults(run=cmd_rotate)

    p = sub.add_parser("reflect", parents=[common], help="reflect a vector, or build a rotation from two mirrors")
    p.add_argument("--normal", type=float, nargs=3, required=True, metavar=("A1", "A2", "A3"))
    p.add_argument("--vector", type=float, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--second", type=float, nargs=3, metavar=("B1", "B2", "B3"), help="second mirror normal")
    p.add_argument("--method", choices=("vector", "matrix"), default="vector")
    p.set_defaults(run=cmd_reflect)

    p = sub.add_parser("propagate", parents=[common], help="integrate attitude under a sampled body angular velocity")
    p.add_argument("initial", help="file holding one initial rotation record")
    p.add_argument("omega", help='omega series, lines of {"t": ..., "omega": [x, y, z]}')
    p.add_argument("--t0", type=float)
    p.add_argument("--t1", type=float)
    p.add_argument("--h", type=float, default=kinematics.DEFAULT_STEP)
    p.add_argument("--output", help="write the sampled trajectory here")
    p.add_argument("--every", type=int, default=1, help="keep every n-th step in the trajectory")
    p.add_argument("--convergence", action="store_true", help="also report the observed order from step halving")
    p.set_defaults(run=cmd_propagate)

    p = sub.add_parser("verify", parents=[common], help="run invariant checks")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="timing and near-gimbal error comparison")
    p.add_argument("--n", type=int, default=1000)
    p.set_defaults(run=cmd_bench)

    p = sub.add_parser("extras", parents=[common], help="Legendre polynomials and inversion counts")
    p.add_argument("what", choices=("legendre", "inversions"))
    p.add_argument("n", type=int)
    p.add_argument("--x", type=float)
    p.set_defaults(run=cmd_extras)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    out = Output(args.fmt, stdout or sys.stdout)
    try:
        return args.run(args, out)
    except InputError as exc:
        print(f"rodrigues {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
