import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose

import oracles
from rodrigues import cli
from rodrigues.rotation import to_matrix


def run(argv, stdin=""):
    """Run the CLI in-process and return (exit code, stdout lines)."""
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = cli.main(argv, stdout=out)
    finally:
        sys.stdin = old
    return code, out.getvalue().splitlines()


def data(lines):
    return [json.loads(l) for l in lines if l and not l.startswith("#") and '"meta"' not in l]


QUARTER_E3 = '{"type": "axis_angle", "theta": 1.5707963267948966, "w": [0, 0, 1]}'
QUARTER_E1 = '{"type": "axis_angle", "theta": 1.5707963267948966, "w": [1, 0, 0]}'


@pytest.mark.parametrize(
    "line",
    [
        QUARTER_E3,
        '{"type": "quaternion", "a": 0.10000000000000001, "b": -0, "c": 0.69999999999999996, "d": -0.70710678118654757}',
        '{"type": "matrix", "m": [1, 0, 0, 0, 1, 0, 0, 0, 1]}',
        '{"type": "euler_zyz", "phi": -3.1000000000000001, "theta": 1.0000000000000001e-09, "psi": 2.5}',
    ],
)
def test_record_round_trip_is_byte_identical(line):
    assert cli.loads_record(line).to_json() == line


def test_non_canonical_input_settles_after_one_pass():
    once = cli.loads_record('{"type":"euler_zyz","phi":0.0,"theta":1e-9,"psi":2.50}').to_json()
    assert once == '{"type": "euler_zyz", "phi": 0, "theta": 1.0000000000000001e-09, "psi": 2.5}'
    assert cli.loads_record(once).to_json() == once


def test_random_records_round_trip(rng):
    for _ in range(200):
        q = rng.standard_normal(4)
        q /= np.linalg.norm(q)
        rec = cli.Record("quaternion", tuple(float(x) for x in q))
        text = rec.to_json()
        assert cli.loads_record(text).to_json() == text
        assert cli.loads_record(text).values == rec.values


@pytest.mark.parametrize(
    "line, message",
    [
        ('{"type": "quaternion", "a": 2, "b": 0, "c": 0, "d": 0}', "unit quaternion"),
        ('{"type": "axis_angle", "theta": 1, "w": [1, 1, 0]}', "unit vector"),
        ('{"type": "matrix", "m": [1, 0, 0, 0, 1, 0, 0, 0, -1]}', "proper rotation"),
        ('{"type": "matrix", "m": [1, 0, 0]}', "9 numbers"),
        ('{"type": "spinor", "x": 1}', "unknown record type"),
        ('{"type": "quaternion", "a": 1, "b": 0, "c": 0}', "missing field"),
        ('{"type": "quaternion", "a": 1, "b": 0, "c": 0, "d": 0, "e": 0}', "unexpected"),
        ('{"type": "euler_zyz", "phi": "x", "theta": 0, "psi": 0}', "number"),
        ("not json", "JSON"),
    ],
)
def test_invalid_records_name_the_problem(line, message):
    with pytest.raises(cli.InputError, match=message):
        cli.loads_record(line)


def test_convert_axis_angle_to_quaternion():
    code, lines = run(["convert", "--to", "quaternion"], QUARTER_E3)
    assert code == 0
    assert "# path: axis_angle -> quaternion" in lines
    (rec,) = data(lines)
    assert_allclose([rec[k] for k in "abcd"], [math.cos(math.pi / 4), 0, 0, math.sin(math.pi / 4)], atol=1e-16)


def test_convert_identity_quaternion_to_euler():
    code, lines = run(["convert", "--to", "euler_zyz"], '{"type": "quaternion", "a": 1, "b": 0, "c": 0, "d": 0}')
    assert code == 0
    assert lines[-1] == '{"type": "euler_zyz", "phi": 0, "theta": 0, "psi": 0}'


def test_convert_path_metadata_json():
    code, lines = run(["convert", "--to", "axis_angle", "--format", "json-lines"], '{"type": "euler_zyz", "phi": 0.1, "theta": 0.2, "psi": 0.3}')
    assert json.loads(lines[0]) == {"type": "meta", "path": "euler_zyz -> matrix -> axis_angle"}


def test_convert_round_trip_through_all_representations(rng):
    for _ in range(100):
        theta = rng.uniform(0, math.pi)
        w = rng.standard_normal(3)
        w /= np.linalg.norm(w)
        rec = cli.from_axis_angle(cli.AxisAngle(theta, w))
        start = cli.to_matrix(rec)
        for target in ("quaternion", "matrix", "euler_zyz", "axis_angle"):
            rec, _ = cli.convert(rec, target)
        assert rec.field("theta") == pytest.approx(theta, abs=1e-9)
        assert_allclose(cli.to_matrix(rec), start, atol=1e-9)


def test_degrees_flag_converts_at_the_boundary():
    code, lines = run(["convert", "--to", "axis_angle", "--degrees"], '{"type": "axis_angle", "theta": 90, "w": [0, 0, 1]}')
    assert data(lines)[0]["theta"] == pytest.approx(90.0)
    code, lines = run(["convert", "--to", "quaternion", "--degrees"], '{"type": "axis_angle", "theta": 90, "w": [0, 0, 1]}')
    assert data(lines)[0]["d"] == pytest.approx(math.sqrt(0.5))


def test_compose_worked_case():
    code, lines = run(["compose"], QUARTER_E3 + "\n" + QUARTER_E1 + "\n")
    assert code == 0
    (rec,) = data(lines)
    assert rec["theta"] == pytest.approx(oracles.WORKED_THETA, abs=1e-12)
    assert_allclose(rec["w"], oracles.WORKED_AXIS, atol=1e-12)


def test_compose_identity_then_p():
    ident = '{"type": "quaternion", "a": 1, "b": 0, "c": 0, "d": 0}'
    for method in cli.COMPOSE_METHODS:
        code, lines = run(["compose", "--method", method], ident + "\n" + QUARTER_E3 + "\n")
        assert code == 0
        (rec,) = data(lines)
        assert rec["theta"] == pytest.approx(math.pi / 2, abs=1e-15)
        assert rec["w"] == [0, 0, 1]


def test_compose_all_reports_pairwise_deviations(rng, tmp_path):
    p = tmp_path / "pair.jsonl"
    recs = [cli.from_axis_angle(cli.rotation.random_axis_angle(rng)).to_json() for _ in range(2)]
    p.write_text("\n".join(recs) + "\n")
    code, lines = run(["compose", "--method", "all", "--format", "json-lines", str(p)])
    assert code == 0
    pairs = [json.loads(l) for l in lines if '"pair"' in l]
    assert len(pairs) == 6
    for entry in pairs:
        if "small_angle" not in entry["pair"]:
            assert float(entry["max_matrix_deviation"]) <= 1e-9


def test_compose_geometric_parallel_axes_is_an_input_error(capsys):
    code, _ = run(["compose", "--method", "geometric"], QUARTER_E3 + "\n" + QUARTER_E3 + "\n")
    assert code == 2
    assert "parallel" in capsys.readouterr().err


def test_compose_needs_two_records():
    assert run(["compose"], QUARTER_E3)[0] == 2


def test_rotate_and_reflect():
    code, lines = run(["rotate", "--vector", "1", "0", "0"], QUARTER_E3)
    assert_allclose([float(x) for x in lines[0].split()], [0, 1, 0], atol=1e-15)
    code, lines = run(["reflect", "--normal", "1", "0", "0", "--vector", "1", "2", "3", "--method", "matrix"])
    assert lines == ["-1 2 3"]
    h = str(math.sqrt(0.5))
    code, lines = run(["reflect", "--normal", "1", "0", "0", "--second", h, h, "0", "--format", "json-lines"])
    rot = json.loads(lines[0])
    assert rot["theta"] == pytest.approx(math.pi / 2) and rot["w"] == pytest.approx([0, 0, 1])


def test_reflect_opposite_normals_fail():
    assert run(["reflect", "--normal", "0", "0", "1", "--second", "0", "0", "-1"])[0] == 2


def _omega_file(path, samples):
    path.write_text("".join(json.dumps({"t": t, "omega": w}) + "\n" for t, w in samples))
    return str(path)


def test_propagate_half_turn_and_convergence(tmp_path):
    init = tmp_path / "q0.jsonl"
    init.write_text('{"type": "quaternion", "a": 1, "b": 0, "c": 0, "d": 0}\n')
    omega = _omega_file(tmp_path / "w.jsonl", [(k * math.pi / 8, [0, 0, 1]) for k in range(9)])
    traj = tmp_path / "traj.jsonl"
    code, lines = run(["propagate", str(init), omega, "--h", "0.01", "--output", str(traj), "--convergence"])
    assert code == 0
    (rec,) = data(lines)
    q = [rec[k] for k in "abcd"]
    assert_allclose(to_matrix(cli.to_axis_angle(cli.parse_record(rec))), np.diag([-1.0, -1.0, 1.0]), atol=1e-8)
    assert_allclose(q, [0, 0, 0, 1], atol=1e-8)
    order = float(next(l for l in lines if "observed_order" in l).split(":")[1])
    assert 3.5 <= order <= 4.5
    first, *_, last = traj.read_text().splitlines()
    assert json.loads(first) == {"t": 0, "q": [1, 0, 0, 0]}
    assert json.loads(last)["t"] == pytest.approx(math.pi)


def test_propagate_zero_rate_is_constant(tmp_path):
    init = tmp_path / "q0.jsonl"
    line = '{"type": "quaternion", "a": 0.5, "b": 0.5, "c": -0.5, "d": 0.5}'
    init.write_text(line + "\n")
    omega = _omega_file(tmp_path / "w.jsonl", [(0.0, [0, 0, 0]), (1.0, [0, 0, 0])])
    code, lines = run(["propagate", str(init), omega])
    assert code == 0 and lines == [line]


@pytest.mark.parametrize(
    "samples, message",
    [
        ([(0.0, [0, 0, 1]), (0.0, [0, 0, 1])], "strictly increasing"),
        ([(0.0, [0, 0, 1]), (1.0, [0, 1])], "omega"),
        ([(0.0, [0, 0, 1])], "at least two"),
    ],
)
def test_propagate_rejects_bad_series(tmp_path, capsys, samples, message):
    init = tmp_path / "q0.jsonl"
    init.write_text('{"type": "quaternion", "a": 1, "b": 0, "c": 0, "d": 0}\n')
    code, _ = run(["propagate", str(init), _omega_file(tmp_path / "w.jsonl", samples)])
    assert code == 2
    assert message in capsys.readouterr().err


def test_verify_exit_codes(monkeypatch):
    code, lines = run(["verify", "--suite", "generators", "--format", "json-lines"])
    assert code == 0
    assert all(json.loads(l)["pass"] for l in lines)
    failing = cli.verify.Check("forced", 1, 1.0, 0.0)
    monkeypatch.setattr(cli.verify, "run", lambda suite, seed: [failing])
    assert run(["verify", "--suite", "generators"])[0] == 1


def test_bench_reports_counts_and_gimbal_contrast():
    code, lines = run(["bench", "--n", "100", "--format", "json-lines"])
    assert code == 0
    report = json.loads(lines[0])
    assert (report["quaternion_product_multiplies"], report["quaternion_product_additions"]) == (16, 12)
    assert report["near_gimbal_euler_deviation"] >= 0.1
    assert report["near_gimbal_matrix_deviation"] <= 1e-9
    assert report["near_gimbal_rodrigues_action_deviation"] <= 1e-9
    assert report["far_euler_deviation"] <= 1e-8


def test_bench_deterministic_parts():
    strip = lambda r: {k: v for k, v in r.items() if not k.endswith("_s")}
    a = strip(cli.bench(100, seed=5))
    assert a == strip(cli.bench(100, seed=5))
    assert run(["bench", "--n", "10"])[0] == 2


def test_extras_commands():
    code, lines = run(["extras", "legendre", "2", "--x", "0.5"])
    assert lines[0] == "P_2(0.5) = -0.125"
    code, lines = run(["extras", "inversions", "4", "--format", "json-lines"])
    assert json.loads(lines[0])["coefficients"] == [1, 3, 5, 6, 5, 3, 1]
    assert run(["extras", "inversions", "13"])[0] == 2


def test_usage_error_exit_code():
    assert run(["convert"])[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rodrigues", "extras", "inversions", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("1 2 2 1")
