import json
from importlib.resources import files

import jsonschema
import pytest

from skewcoh.algebras import unipotent_action, presentation_A, smash_presentation
from skewcoh.cli import main
from skewcoh.freealg import complete
from skewcoh.presentation import read_presentation


@pytest.fixture(scope="module")
def schema():
    return json.loads(files("skewcoh").joinpath("report_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_anick_table(capsys):
    code, out = run(capsys, "verify", "--p", "3", "--suite", "anick", "--max-degree", "8")
    assert code == 0
    assert "[1, 2, 3, 4, 5, 6, 7, 8, 9]" in out
    assert "0 failed" in out


def test_verify_all_json_is_valid_and_deterministic(tmp_path, schema):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--format", "json", "--out", str(a)]) == 0
    assert main(["verify", "--format", "json", "--out", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    jsonschema.validate(data, schema)
    assert data["summary"]["fail"] == 0
    suites = [s["suite"] for s in data["sections"]]
    assert suites == ["groebner", "anick", "bar", "classes", "action", "lhs"]


def test_table_and_json_carry_the_same_numbers(capsys):
    _, table = run(capsys, "verify", "--suite", "lhs")
    _, js = run(capsys, "verify", "--suite", "lhs", "--format", "json")
    data = json.loads(js)
    for chk in data["sections"][0]["checks"]:
        assert chk["name"] in table
        assert json.dumps(chk["computed"], sort_keys=True) in table


def test_budget_skips_and_strict(capsys, schema):
    code, out = run(capsys, "verify", "--suite", "bar", "--budget-mb", "0.01", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema)
    assert data["summary"]["skipped"] > 0 and data["summary"]["fail"] == 0
    assert code == 0
    code, _ = run(capsys, "verify", "--suite", "bar", "--budget-mb", "0.01", "--strict")
    assert code == 1


@pytest.mark.parametrize("bad", ["4", "2", "1", "x"])
def test_invalid_p_is_a_usage_error(bad, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--p", bad])
    assert exc.value.code == 2


def test_chains_command(capsys):
    code, out = run(capsys, "chains", "--p", "5", "--n", "4")
    assert code == 0
    assert set(out.splitlines()[1:]) == {"b^10", "a^10", "b^5a^5", "b^6a", "ba^6"}


def test_export_A(tmp_path, capsys):
    path = tmp_path / "A3.txt"
    assert main(["export", "A", "3", str(path)]) == 0
    text = path.read_text()
    assert "relation: b*a + 2*a*b + a^2" in text
    assert "relation: a^3" in text and "relation: b^3" in text
    pres = read_presentation(path)
    ref = presentation_A(3)
    assert complete(pres.relations, pres.order).describe() == complete(ref.relations, ref.order).describe()


def test_export_smash_round_trip(tmp_path, capsys):
    path = tmp_path / "smash.txt"
    assert main(["export", "smash", "3", str(path)]) == 0
    text = path.read_text()
    assert "relation: h^3" in text
    assert "relation: h*b + 2*b*h + a*h + a" in text
    pres = read_presentation(path)
    assert pres.name == "A#kG"
    ref = smash_presentation(presentation_A(3), unipotent_action(3))
    g1 = complete(pres.relations, pres.order)
    assert g1.confirmed
    assert g1.describe() == complete(ref.relations, ref.order).describe()
