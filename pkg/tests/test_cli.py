"""Command line behaviour: encodings, determinism, exit codes."""

import json

from wqsym.cli import main
from wqsym.hopf import LawReport
from wqsym.lincomb import lincomb_from_json
from wqsym.words import text_to_perm
from wqsym.compositions import text_to_comp


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_product_hsym_worked_example(capsys):
    code, out, _ = run(
        capsys, "product", "--algebra", "hsym", "--lambda", "-1", "1,-2", "2,-1"
    )
    assert code == 0
    blob = json.loads(out)
    terms = {t["key"]: t["coeff"] for t in blob["terms"]}
    assert terms == {
        "1,3,-2": "-1",
        "3,1,-2": "-1",
        "1,-2,4,-3": "1",
        "1,4,-3,-2": "1",
        "1,4,-2,-3": "1",
        "4,-3,1,-2": "1",
        "4,1,-3,-2": "1",
        "4,1,-2,-3": "1",
    }


def test_map_phi2_example(capsys):
    code, out, _ = run(capsys, "map", "--which", "phi2", "-3,1,2,-4")
    assert code == 0
    assert json.loads(out) == {"terms": [{"coeff": "-1", "key": "1,2"}]}


def test_verify_square_summary(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "square", "--max-degree", "3", "--format", "text"
    )
    assert code == 0
    assert "0 mismatches / 59 checks" in out


def test_product_output_reparses(capsys):
    code, out, _ = run(
        capsys, "product", "--algebra", "rqsym-f", "1,e", "1,e"
    )
    assert code == 0
    lc = lincomb_from_json(json.loads(out), text_to_comp)
    from wqsym.hopf import rqsym_product_f

    assert lc == rqsym_product_f(text_to_comp("1,e"), text_to_comp("1,e"))


def test_output_is_deterministic(capsys):
    args = ("product", "--algebra", "hsym", "--lambda", "2/3", "1,-2", "-1")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_coproduct_and_antipode(capsys):
    code, out, _ = run(capsys, "coproduct", "--algebra", "rqsym-m", "1,e")
    assert code == 0
    blob = json.loads(out)
    assert {tuple(t["key"]) for t in blob["terms"]} == {
        ("empty", "1,e"),
        ("1", "e"),
        ("1,e", "empty"),
    }
    code, out, _ = run(capsys, "antipode", "--algebra", "rqsym-m", "e")
    assert json.loads(out) == {"terms": [{"coeff": "-1", "key": "e"}]}
    code, out, _ = run(capsys, "antipode", "--algebra", "hsym", "2,1")
    assert code == 0
    lc = lincomb_from_json(json.loads(out), text_to_perm)
    from wqsym.hopf import hsym_context

    assert lc == hsym_context(-1).antipode((2, 1))


def test_convert_round_trip(capsys):
    code, out, _ = run(capsys, "convert", "--from", "f", "--to", "m", "2")
    assert code == 0
    assert {t["key"] for t in json.loads(out)["terms"]} == {"2", "1,1"}
    code, out, _ = run(capsys, "convert", "--from", "m", "--to", "f", "2")
    assert code == 0
    code, _, err = run(capsys, "convert", "--from", "f", "--to", "f", "2")
    assert code == 2


def test_expand_command(capsys):
    code, out, _ = run(capsys, "expand", "--basis", "m", "--vars", "2", "1,e")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"k": 2, "terms": [{"coeff": "1", "exps": ["1", "e"]}]}


def test_gamma_command(tmp_path, capsys):
    poset = tmp_path / "fork.poset"
    poset.write_text("-4 < 2\n2 < -1\n2 < -3\n")
    code, out, _ = run(capsys, "gamma", "--poset", str(poset), "--vars", "2")
    assert code == 0
    blob = json.loads(out)
    assert blob["terms"] == [{"coeff": "1", "exps": ["1", "e"]}]
    code, _, err = run(capsys, "gamma", "--poset", str(tmp_path / "nope"), "--vars", "2")
    assert code == 2 and "cannot read" in err


def test_parse_errors_exit_two(capsys):
    code, _, err = run(capsys, "product", "--algebra", "hsym", "1,1", "2,-1")
    assert code == 2
    code, _, err = run(capsys, "product", "--algebra", "ssym", "-1", "1")
    assert code == 2
    code, _, err = run(capsys, "product", "--algebra", "qsym", "e", "1")
    assert code == 2
    code, _, err = run(capsys, "map", "--which", "d1", "-1,2")
    assert code == 2
    code, _, err = run(capsys, "verify", "--suite", "hopf", "--max-degree", "1")
    assert code == 2 and "lambda" in err


def test_verification_failure_exits_one(capsys, monkeypatch):
    import wqsym.cli as cli

    def fake(payload):
        law = LawReport("always fails")
        law.record(False, ["x"], "a", "b")
        return [law]

    monkeypatch.setattr(cli, "_suite_shard", fake)
    code, out, _ = run(capsys, "verify", "--suite", "square", "--max-degree", "1")
    assert code == 1
    assert json.loads(out)["summary"]["status"] == "fail"


def test_jobs_do_not_change_output(capsys):
    args = ("verify", "--suite", "square", "--max-degree", "2")
    _, solo, _ = run(capsys, *args, "--jobs", "1")
    _, duo, _ = run(capsys, *args, "--jobs", "2")
    assert solo == duo


def test_text_format_rendering(capsys):
    code, out, _ = run(
        capsys,
        "product", "--algebra", "rqsym-f", "--format", "text", "1,e", "1,e",
    )
    assert code == 0
    assert out.strip() == (
        "-1*F[2,e] - 1*F[1,1,e] + 2*F[2,e,e] + 2*F[1,e,1,e] + 2*F[1,1,e,e]"
    )
