import io
import json

import pytest

from tropcyclic.bounds import natural_pattern
from tropcyclic.cli import main


@pytest.fixture
def pattern_file(tmp_path):
    def write(text, name="pattern.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys, pattern_file):
    code, out, _ = run(capsys, "count", pattern_file("+-+\n+-+\n"))
    assert code == 0
    assert out.split() == ["ntrop", "5", "nclass", "5"]
    code, out, _ = run(capsys, "count", "--json", pattern_file("++++\n++++\n++++\n"))
    assert json.loads(out) == {"p": 3, "d": 4, "ntrop": 4, "nclass": 4}


def test_count_natural_pattern(capsys, pattern_file):
    text = natural_pattern(14, 7).to_string()
    code, out, _ = run(capsys, "count", "--json", pattern_file(text))
    assert code == 0
    assert json.loads(out)["ntrop"] >= 210


def test_count_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("+-+\n+-+\n"))
    code, out, _ = run(capsys, "count", "-")
    assert code == 0 and "ntrop 5" in out


def test_enumerate_json(capsys, pattern_file):
    code, out, _ = run(capsys, "enumerate", pattern_file("+-+\n+-+\n"))
    assert code == 0
    rays = json.loads(out)
    assert [r["coords"] for r in rays] == [
        [0, "-inf", "-inf"], [1, 0, "-inf"], [1, 1, 0], ["-inf", 0, 0], ["-inf", "-inf", 0],
    ]
    assert rays[2]["path"] == {"I": [1, 2], "J": [1, 2, 3]}


def test_enumerate_custom_t_and_oracle(capsys, pattern_file):
    code, out, err = run(capsys, "enumerate", pattern_file("+-+\n+-+\n"), "--t", "0", "3", "--oracle", "--compact")
    assert code == 0
    assert "oracle: MATCH" in err
    coords = [r["coords"] for r in json.loads(out)]
    assert [3, 0, "-inf"] in coords and [3, 3, 0] in coords


def test_enumerate_art(capsys, pattern_file):
    code, out, _ = run(capsys, "enumerate", "--art", pattern_file("+-+\n+-+\n"))
    assert code == 0
    assert out.count("ray ") == 5
    assert "+..\n+.." in out


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--p-min", "3", "--p-max", "4", "--d-min", "5", "--d-max", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [(r["lower"], r["upper"]) for r in rows] == [(20, 20), (26, 27)]
    code, out, _ = run(capsys, "table", "--p-max", "2", "--d-max", "4", "--mode", "formula-only")
    assert out.splitlines()[0].startswith("p\td\tlower\tupper")
    assert len(out.splitlines()) == 5
    code, out, _ = run(capsys, "table", "--p-max", "2", "--d-max", "3", "--format", "grid")
    assert out.splitlines()[1] == "3\t4\t5"


def test_search(capsys):
    code, out, _ = run(capsys, "search", "2", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["max"] == 5 and data["exhaustive"]
    code, out, _ = run(capsys, "search", "4", "5")
    assert "max=26 (exact) upper=27" in out
    code, out, _ = run(capsys, "search", "5", "5", "--random", "3000")
    assert "lower bound" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "semiring")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 checks passed"


def test_deform_check(capsys, pattern_file):
    path = pattern_file("+-+\n+-+\n")
    code, out, _ = run(capsys, "deform-check", path)
    assert code == 0
    assert len(out.splitlines()) == 15
    assert "member=false" not in out
    code, out, _ = run(capsys, "deform-check", path, "--x", "0", "5", "-inf", "--beta", "1")
    assert code == 1 and "member=false" in out


def test_exit_codes(capsys, pattern_file, tmp_path):
    assert run(capsys, "count", str(tmp_path / "missing.txt"))[0] == 2
    code, _, err = run(capsys, "count", pattern_file("+x\n"))
    assert code == 2 and "column 2" in err
    assert run(capsys, "count", pattern_file("+-\n+\n"))[0] == 2
    assert run(capsys, "enumerate", pattern_file("+-+\n"), "--t", "1", "0")[0] == 2
    assert run(capsys, "search", "5", "5", "--exhaustive")[0] == 3
    big = pattern_file(("+-" * 3 + "\n") * 6)
    assert run(capsys, "enumerate", big, "--oracle")[0] == 3
    with pytest.raises(SystemExit):
        main(["frobnicate"])
