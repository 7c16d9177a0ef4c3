"""CLI: subcommands, exit codes, report formats, determinism."""

import json

import pytest

from qhyper.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

REPORT_FIELDS = {"id", "mode", "seed", "trial", "pass", "deviation_num", "deviation_den", "notes"}


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_passing_suite(capsys):
    code, out, _ = run(
        ["check", "--suite", "euler-pair", "--trials", "3", "--seed", "7"], capsys
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["suite"] == "euler-pair"
    assert len(doc["reports"]) == 3
    for rep in doc["reports"]:
        assert set(rep) == REPORT_FIELDS
        assert rep["pass"] is True
        assert rep["deviation_num"] == "0"
        assert rep["deviation_den"] == "1"


def test_check_unknown_suite(capsys):
    code, _, err = run(["check", "--suite", "nosuch"], capsys)
    assert code == EXIT_USAGE
    assert "nosuch" in err and "euler-pair" in err


def test_check_remark2_reports_residuals(capsys):
    code, out, _ = run(
        ["check", "--suite", "remark2", "--trials", "1", "--format", "json"], capsys
    )
    assert code in (EXIT_OK, EXIT_FAIL)
    doc = json.loads(out)
    ids = {r["id"] for r in doc["reports"]}
    assert ids == {f"remark2:item{i:02d}" for i in range(1, 12)}


def test_check_byte_identical_reports(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _, _ = run(
            [
                "check", "--suite", "remark2", "--trials", "2", "--seed", "42",
                "--report-path", str(p),
            ],
            capsys,
        )
        assert code == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_check_tsv_format(capsys):
    code, out, _ = run(
        ["check", "--suite", "shift-identity", "--trials", "2", "--format", "tsv"],
        capsys,
    )
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == [
        "id", "mode", "seed", "trial", "pass", "deviation_num", "deviation_den", "notes"
    ]
    assert len(lines) == 3


def test_check_human_format(capsys):
    code, out, _ = run(
        ["check", "--suite", "shift-identity", "--trials", "1", "--format", "human"],
        capsys,
    )
    assert code == EXIT_OK
    assert "1/1 passed" in out


def test_env_seed_override(capsys, monkeypatch):
    code, out_default, _ = run(
        ["check", "--suite", "euler-pair", "--trials", "1"], capsys
    )
    monkeypatch.setenv("QHYPER_SEED", "99")
    code, out_env, _ = run(["check", "--suite", "euler-pair", "--trials", "1"], capsys)
    assert json.loads(out_default)["config"]["seed"] == 42
    assert json.loads(out_env)["config"]["seed"] == 99
    # explicit flag beats the environment
    code, out_flag, _ = run(
        ["check", "--suite", "euler-pair", "--trials", "1", "--seed", "7"], capsys
    )
    assert json.loads(out_flag)["config"]["seed"] == 7


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "euler-pair", "trials": 2, "seed": 5}))
    code, out, _ = run(["check", "--config", str(cfg)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["suite"] == "euler-pair"
    assert doc["config"]["trials"] == 2
    assert doc["config"]["seed"] == 5


def test_config_file_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "euler-pair", "bogus": 1}))
    code, _, err = run(["check", "--config", str(cfg)], capsys)
    assert code == EXIT_USAGE
    assert "bogus" in err


def test_eval_cauchy_polynomial(capsys):
    code, out, _ = run(
        ["eval", "P", "--n", "2", "--x", "1", "--y", "1/2", "--q", "1/3"], capsys
    )
    assert code == EXIT_OK
    assert out.startswith("5/12 ")


def test_eval_psi_trivial_and_n1(capsys):
    code, out, _ = run(
        [
            "eval", "Psi", "--n", "0", "--r", "0", "--s", "0",
            "--x", "2", "--y", "1", "--z", "3", "--q", "1/2",
        ],
        capsys,
    )
    assert code == EXIT_OK
    assert out.startswith("1/1 ")
    code, out, _ = run(
        [
            "eval", "Psi", "--n", "1", "--r", "0", "--s", "0",
            "--x", "2", "--y", "1", "--z", "3", "--q", "1/2",
        ],
        capsys,
    )
    assert code == EXIT_OK
    assert out.startswith("4/1 ")


def test_eval_with_parameter_vectors(capsys):
    code, out, _ = run(
        [
            "eval", "Psi", "--n", "2", "--a", "1/2,1/3", "--b", "1/5",
            "--x", "1", "--y", "2", "--z", "1/4", "--q", "1/2",
        ],
        capsys,
    )
    assert code == EXIT_OK


def test_eval_arity_mismatch(capsys):
    code, _, err = run(
        [
            "eval", "Psi", "--n", "1", "--r", "2", "--a", "1/2",
            "--x", "1", "--y", "1", "--z", "1", "--q", "1/2",
        ],
        capsys,
    )
    assert code == EXIT_USAGE
    assert "upper" in err


def test_eval_missing_argument(capsys):
    code, _, err = run(["eval", "P", "--n", "2", "--x", "1", "--q", "1/3"], capsys)
    assert code == EXIT_USAGE
    assert "--y" in err


def test_expand_euler_zero(capsys):
    code, out, _ = run(
        ["expand", "euler", "--c", "0", "--order", "4", "--q", "1/2"], capsys
    )
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0] == "t^0\t1/1"
    assert all(line.endswith("\t0/1") for line in lines[1:])
    assert len(lines) == 5


def test_expand_cauchy_ratio_hand_value(capsys):
    # (yt;q)_inf/(xt;q)_inf = 1 + (x-y) t + P_2(x,y)/(q;q)_2 t^2 + ...
    code, out, _ = run(
        [
            "expand", "cauchy-ratio", "--x", "1/2", "--y", "1/3",
            "--q", "1/4", "--order", "2",
        ],
        capsys,
    )
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0] == "t^0\t1/1"
    assert lines[1] == "t^1\t2/9"  # (1/2 - 1/3)/(1 - 1/4)
    # P_2(1/2,1/3)/( (3/4)(15/16) ) = (1/6)(5/12)/(45/64) = 8/81
    assert lines[2] == "t^2\t8/81"


def test_expand_gf_psi_sides_agree(capsys):
    flags = [
        "--a", "1/2,1/5", "--b", "1/7", "--x", "1/3", "--y", "1/4",
        "--z", "2/5", "--q", "1/2", "--order", "8",
    ]
    code, lhs, _ = run(["expand", "gf-psi-lhs", *flags], capsys)
    assert code == EXIT_OK
    code, rhs, _ = run(["expand", "gf-psi-rhs", *flags], capsys)
    assert code == EXIT_OK
    assert lhs == rhs
