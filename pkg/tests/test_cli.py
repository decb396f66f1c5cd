import io
import json
import os
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from wittc.cli import main


GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    (["euler", "--f", "t^3-t"], "euler_t3mt.json"),
    (
        ["euler", "--f", "t^3-t", "--trace-oracle", "--split", "t", "t^2-1"],
        "euler_t3mt_full.json",
    ),
    (
        ["form", "diag", '{"field":"Q","gram":[["0","1"],["1","0"]]}'],
        "form_diag_hyperbolic.json",
    ),
    (
        [
            "form",
            "witt-equal",
            '{"field":"Q","gram":[["2","0"],["0","2"]]}',
            '{"field":"Q","gram":[["1","0"],["0","1"]]}',
        ],
        "form_witt_equal_22_11.json",
    ),
    (
        ["form", "witt-trivial", '{"field":{"Fp":5},"gram":[["1","0"],["0","1"]]}'],
        "form_witt_trivial_f5.json",
    ),
    (["lemma", "sqmet", "--e", "t", "--n", "4"], "lemma_sqmet_t4.json"),
    (["lemma", "sqmet", "--e", "t", "--n", "3"], "lemma_sqmet_t3.json"),
    (["lemma", "square-unit", "--q", "4"], "lemma_square_unit_4.json"),
    (["homotopy", "--f0", "t^3-t", "--f1", "t^3"], "homotopy_t3mt_t3.json"),
    (["transfer", "--min-poly", "t^2+1"], "transfer_t2p1.json"),
    (
        [
            "compose",
            str(GOLDEN / "compose_left_input.json"),
            str(GOLDEN / "compose_right_input.json"),
        ],
        "compose_proj_eps.json",
    ),
]


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("argv,golden", GOLDEN_CASES, ids=[g for _, g in GOLDEN_CASES])
def test_golden(argv, golden):
    code, out = run_cli(argv)
    assert code == 0
    expected = (GOLDEN / golden).read_text()
    assert out == expected


@pytest.mark.parametrize("argv,golden", GOLDEN_CASES[:4], ids=[g for _, g in GOLDEN_CASES[:4]])
def test_rerun_byte_identical(argv, golden):
    _, first = run_cli(argv)
    _, second = run_cli(argv)
    assert first == second


def test_output_reparses_to_equal_values():
    for argv, _ in GOLDEN_CASES:
        code, out = run_cli(argv)
        doc = json.loads(out)
        assert json.loads(json.dumps(doc, sort_keys=True)) == doc
        assert doc["status"] == "ok"


def test_worked_example_values():
    _, out = run_cli(["euler", "--f", "t^3-t"])
    doc = json.loads(out)
    inv = doc["payload"]["invariants"]
    assert inv["rank"] == 3 and inv["signature"] == 1 and inv["disc"] == "-1"

    _, out = run_cli(["lemma", "sqmet", "--e", "t", "--n", "4"])
    assert json.loads(out)["payload"]["metabolic"] is True

    _, out = run_cli(["homotopy", "--f0", "t^3-t", "--f1", "t^3"])
    doc = json.loads(out)
    assert doc["payload"]["witt_equal"] is True
    assert doc["payload"]["class"]["rank"] == 3

    _, out = run_cli(["lemma", "square-unit", "--q", "4"])
    assert json.loads(out)["payload"]["witness"] == "2"


def test_witt_equal_mismatch_exits_1():
    code, out = run_cli(
        [
            "form",
            "witt-equal",
            '{"field":"Q","gram":[["1"]]}',
            '{"field":"Q","gram":[["-1"]]}',
        ]
    )
    assert code == 1
    assert json.loads(out)["status"] == "mismatch"


def test_char2_field_rejected_exit_2(capsys):
    code = main(["euler", "--field", '{"Fp":2}', "--f", "t^2+t"])
    assert code == 2


def test_unknown_verb_exit_2(capsys):
    assert main(["frobnicate"]) == 2


def test_malformed_json_exit_2(capsys):
    assert main(["form", "diag", '{"field":"Q","gram":[[']) == 2


def test_missing_file_exit_2(capsys):
    assert main(["form", "diag", "/nonexistent/space.json"]) == 2


def test_mathematical_error_exit_1():
    code, out = run_cli(["form", "diag", '{"field":"Q","gram":[["1","1"],["1","1"]]}'])
    assert code == 1
    assert json.loads(out)["status"] == "error"


def test_selfcheck_ok_and_deterministic(capsys):
    code1 = main(["selfcheck", "--seed", "7", "--iters", "4"])
    out1 = capsys.readouterr().out
    code2 = main(["selfcheck", "--seed", "7", "--iters", "4"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["payload"]["all_ok"] is True


def test_selfcheck_injected_fault_exit_3(capsys):
    code = main(["selfcheck", "--seed", "7", "--iters", "2", "--inject-fault", "oracle"])
    out = capsys.readouterr().out
    assert code == 3
    doc = json.loads(out)
    assert doc["status"] == "error"
    assert any(
        r["suite"] == "oracle" and not r["ok"] for r in doc["payload"]["results"]
    )


def test_seed_env_var(capsys):
    env_backup = os.environ.get("WITTC_SEED")
    os.environ["WITTC_SEED"] = "99"
    try:
        code = main(["selfcheck", "--iters", "2"])
        out = capsys.readouterr().out
        assert code == 0
        assert json.loads(out)["payload"]["seed"] == 99
    finally:
        if env_backup is None:
            del os.environ["WITTC_SEED"]
        else:
            os.environ["WITTC_SEED"] = env_backup


def test_subprocess_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wittc.cli", "euler", "--f", "t^2+1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["payload"]["gram"] == [["0", "1"], ["1", "0"]]


def test_stdin_input():
    proc = subprocess.run(
        [sys.executable, "-m", "wittc.cli", "form", "invariants", "-"],
        input='{"field":"Q","gram":[["1","0"],["0","-1"]]}',
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    inv = json.loads(proc.stdout)["payload"]["invariants"]
    assert inv["signature"] == 0 and inv["disc"] == "-1"
