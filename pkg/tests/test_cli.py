import json

import pytest

from dynres.cli import main
from dynres.report import Report


def test_table_stdout(capsys):
    rc = main(["table", "--family", "unicritical", "--d", "2", "--m", "2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["var"] == ["c", "x"]
    # delta_2 = x - 4c - 4
    assert doc["terms"] == [{"exps": [0, 1], "coef": "1"},
                            {"exps": [1, 0], "coef": "-4"},
                            {"exps": [0, 0], "coef": "-4"}]


def test_table_files(tmp_path, capsys):
    stem = str(tmp_path / "delta")
    rc = main(["table", "--family", "unicritical", "--d", "2", "--m", "1",
               "--format", "both", "--out", stem])
    assert rc == 0
    capsys.readouterr()
    doc = json.loads((tmp_path / "delta.json").read_text())
    # delta_1 = x^2 - 2x + 4c
    assert doc["terms"] == [{"exps": [0, 2], "coef": "1"},
                            {"exps": [0, 1], "coef": "-2"},
                            {"exps": [1, 0], "coef": "4"}]
    csv_text = (tmp_path / "delta.csv").read_text()
    assert csv_text == "e_c,e_x,coef\n0,2,1\n0,1,-2\n1,0,4\n"


def test_table_rescaled(capsys):
    rc = main(["table", "--family", "linearterm", "--d", "2", "--m", "1",
               "--rescaled"])
    assert rc == 0
    out, err = capsys.readouterr()
    assert "# scaled by 2 before rescaling" in err
    assert json.loads(out)["var"] == ["C", "x"]


def test_table_rescaled_rejects_quadcrit(capsys):
    rc = main(["table", "--family", "quadcrit", "--d", "1", "--rescaled"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_table_resultant(capsys):
    rc = main(["table", "--family", "unicritical", "--d", "2", "--m", "1",
               "--resultant", "2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    # Res_x(x + 1, delta_1) = delta_1(-1) = 4c + 3
    assert doc["var"] == ["c"]
    assert doc["terms"] == [{"exps": [1], "coef": "4"},
                            {"exps": [0], "coef": "3"}]


def test_table_guardrail(capsys):
    rc = main(["table", "--family", "unicritical", "--d", "2", "--m", "7"])
    assert rc == 3
    assert "guardrail" in capsys.readouterr().err


def test_polygon(capsys):
    rc = main(["polygon", "--d", "2", "--k-max", "2"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert sorted(data) == ["unicritical-d=2-iterate-1",
                            "unicritical-d=2-iterate-2"]
    assert data["unicritical-d=2-iterate-2"]["vertices"] == [[0, -2], [4, 0]]


def test_verify_suite(tmp_path, capsys):
    report = str(tmp_path / "report.json")
    rc = main(["verify", "--suite", "degrees", "--quick",
               "--report", report])
    assert rc == 0
    out = capsys.readouterr().out
    assert ", 0 failed" in out
    assert out.count("pass") >= 4
    rep = Report.from_json((tmp_path / "report.json").read_text())
    assert rep.all_passed
    assert rep.parameters == {"suite": "degrees", "quick": True}


def test_verify_goldens(capsys):
    rc = main(["verify", "--suite", "goldens"])
    assert rc == 0
    out = capsys.readouterr().out
    assert ", 0 failed" in out
    assert out.count("pass golden-recompute") == 47


def test_parabolic_single(capsys):
    rc = main(["parabolic", "--c=-3/4"])
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[0] == "-3/4: parabolic m=1 j=2"


def test_parabolic_logistic(capsys):
    rc = main(["parabolic", "--logistic", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "-3/4: parabolic m=1 j=2" in out
    assert "note: logistic parameter a = 3" in out


def test_parabolic_enumeration(capsys):
    rc = main(["parabolic"])
    assert rc == 0
    lines = [l for l in capsys.readouterr().out.splitlines()
             if not l.startswith("  note:")]
    assert len(lines) == 10
    assert lines[0] == "-2: repelling-all-tested"
    assert lines[-1] == "1/4: parabolic m=1 j=1"


def test_parabolic_linearterm_needs_c(capsys):
    rc = main(["parabolic", "--family", "linearterm", "--d", "1"])
    assert rc == 2
    assert "explicit --c" in capsys.readouterr().err


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["table"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "no-such-suite"])
    assert exc.value.code == 2
