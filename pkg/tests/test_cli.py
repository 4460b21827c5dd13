import json

import jsonschema
import pytest

from pcskit import build_semigroup, evaluate
from pcskit.cli import JSON_SCHEMA, main, read_sg, write_sg
from pcskit.terms import builtin

from conftest import B2_TABLE, RZ2_MON_TABLE


@pytest.fixture()
def sg_dir(tmp_path):
    def save(name, table, labels=None):
        S = build_semigroup(table, labels=labels)
        p = tmp_path / f"{name}.sg"
        p.write_text(write_sg(S))
        return str(p)
    return save


@pytest.fixture()
def rz2_file(sg_dir):
    return sg_dir("rz2", [[0, 1], [0, 1]], labels=["e", "f"])


@pytest.fixture()
def rz2_mon_file(sg_dir):
    return sg_dir("rz2_mon", RZ2_MON_TABLE)


def run_json(capsys, argv):
    code = main(argv)
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, JSON_SCHEMA)
    return code, payload


def test_sg_round_trip(tmp_path):
    S = build_semigroup(B2_TABLE, labels=list("zabcd"))
    p = tmp_path / "b2.sg"
    p.write_text(write_sg(S, comment="Brandt"))
    table, labels = read_sg(str(p))
    assert table == S.rows
    assert labels == list("zabcd")


def test_check_member_exit_zero(capsys, rz2_file):
    code, payload = run_json(capsys, ["check", "--variety", "pcs",
                                      "--json", rz2_file])
    assert code == 0
    assert payload["result"]["member"] is True
    assert len(payload["result"]["methods"]) == 7


def test_check_non_member_exit_three(capsys, rz2_mon_file):
    code, payload = run_json(capsys, ["check", "--variety", "pcs",
                                      "--json", rz2_mon_file])
    assert code == 3
    assert payload["result"]["member"] is False
    assert payload["result"]["methods"]["asb"]["witness"] == [0, 0]


def test_check_single_method(capsys, rz2_mon_file):
    code, payload = run_json(capsys, ["check", "--variety", "pcs",
                                      "--method", "asb", "--json",
                                      rz2_mon_file])
    assert code == 3
    assert list(payload["result"]["methods"]) == ["asb"]


def test_basis_witness_replays(capsys, rz2_mon_file):
    """A counterexample reported in JSON re-evaluates to the same verdict."""
    _, payload = run_json(capsys, ["check", "--variety", "pcs",
                                   "--method", "basis:iii", "--json",
                                   rz2_mon_file])
    w = payload["result"]["methods"]["basis:iii"]["witness"]
    table, labels = read_sg(rz2_mon_file)
    S = build_semigroup(table, labels=labels)
    pid = builtin(w["identity"])
    asg = {k: int(v) for k, v in w["assignment"].items()}
    assert evaluate(S, pid.lhs, asg) == w["lhs"]
    assert evaluate(S, pid.rhs, asg) == w["rhs"]
    assert w["lhs"] != w["rhs"]
    # and the eval subcommand agrees
    code = main(["eval", "--id", "x((ax)^w(bx)^w)^w = x((bx)^w(ax)^w)^w",
                 rz2_mon_file])
    assert code == 3


def test_eval_satisfied(capsys, rz2_file):
    code, payload = run_json(capsys, ["eval", "--id",
                                      "(x^w y^w)^w = (y^w x^w)^w",
                                      "--json", rz2_file])
    assert code == 3  # right zeros violate the block group identity
    assert payload["result"]["counterexample"]["assignment"] == {
        "x": 0, "y": 1}


def test_power_json(capsys, rz2_file):
    code, payload = run_json(capsys, ["power", "--json", rz2_file])
    assert code == 0
    assert payload["result"]["order"] == 3
    code, payload = run_json(capsys, ["power", "--with-empty", "--json",
                                      rz2_file])
    assert payload["result"]["order"] == 4


def test_green_and_ideal(capsys, rz2_mon_file):
    code, payload = run_json(capsys, ["green", "--json", rz2_mon_file])
    assert code == 0
    assert payload["result"]["j_class"] == [0, 1, 1]
    code, payload = run_json(capsys, ["ideal", "--element", "1",
                                      "--side", "left", "--json",
                                      rz2_mon_file])
    assert payload["result"]["members"] == [1]


def test_rees_subcommand(capsys, sg_dir):
    g = sg_dir("z2", [[0, 1], [1, 0]])
    code, payload = run_json(capsys, ["rees", "--group", g,
                                      "--p", "0,0;0,1", "--json"])
    assert code == 0
    assert payload["result"]["order"] == 8


def test_consolidate_division_verify(capsys, rz2_file):
    code, payload = run_json(capsys, ["consolidate", "--json", rz2_file])
    assert code == 0
    assert payload["result"]["order"] == 7
    assert payload["result"]["block_group"] is True

    code, payload = run_json(capsys, ["division", "--json", rz2_file])
    assert code == 0
    assert payload["result"]["cover"] == [0, 1]

    code, payload = run_json(capsys, ["verify-theorem", "--json", rz2_file])
    assert code == 0
    assert payload["result"]["nonempty_preimages"] == 4


def test_census_subcommand(capsys):
    code, payload = run_json(capsys, ["census", "--order", "3",
                                      "--cross-validate", "--json"])
    assert code == 0
    assert payload["result"]["count"] == 113
    assert payload["result"]["report"]["count_members"] == 107


def test_transform_subcommand(capsys):
    code, payload = run_json(capsys, ["transform-star-rz", "--id",
                                      "(x^w y^w)^w = (y^w x^w)^w", "--json"])
    assert code == 0
    assert payload["result"]["count"] == 4


def test_usage_errors(capsys):
    assert main(["frobnicate"]) == 1
    assert main([]) == 1
    assert main(["check", "/tmp/x.sg"]) == 1  # missing --variety


def test_invalid_input(capsys, tmp_path):
    assert main(["green", str(tmp_path / "missing.sg")]) == 2
    bad = tmp_path / "bad.sg"
    bad.write_text("2\n1 0\n0 0\n")  # not associative
    assert main(["green", str(bad)]) == 2
    syn = tmp_path / "syn.sg"
    syn.write_text("hello\n")
    assert main(["green", str(syn)]) == 2
    assert main(["eval", "--id", "x^", str(bad)]) == 2
