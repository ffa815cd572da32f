import json
import subprocess
import sys

import pytest

from classavg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


def test_moment_examples(capsys):
    code, recs = run(capsys, "moment", "--group", "u", "--n", "2", "--k", "2", "--method", "closed")
    assert code == 0 and recs[0]["value_exact"] == "20"
    code, recs = run(capsys, "moment", "--group", "sp", "--n", "1", "--k", "2", "--method", "quad", "--order", "40")
    assert code == 0 and abs(recs[0]["value_float"] - 5) < 1e-8
    code, recs = run(capsys, "moment", "--group", "o", "--n", "2", "--k", "2")
    assert recs[0]["value_exact"] == "5"


def test_closed_and_ct_agree(capsys):
    code, recs = run(capsys, "moment", "--group", "so-even", "--n", "2", "--k", "2", "--method", "closed", "--method", "ct")
    assert code == 0
    assert [r["value_exact"] for r in recs] == ["10", "10"]
    assert set(recs[0]) >= {"value_exact", "value_float", "method", "group", "params", "status"}


def test_average_examples(capsys):
    code, recs = run(capsys, "average", "product", "--group", "so-odd", "--n", "1", "--x", "1/2")
    assert code == 0 and recs[0]["value_exact"] == "7/8"
    code, recs = run(capsys, "average", "ratio", "--group", "u", "--n", "3", "--gamma", "1/2", "--delta", "1/2")
    assert code == 0 and recs[0]["value_exact"] == "4/3"
    code, recs = run(capsys, "average", "ratio", "--group", "sp", "--n", "2", "--x", "1/3", "--y", "1/4", "--check")
    assert code == 0 and recs[1]["status"] == "pass"


@pytest.mark.parametrize(
    "argv,code",
    [
        (["average", "product", "--group", "sp", "--n", "1", "--x", "1", "--x", "1"], 4),
        (["average", "ratio", "--group", "sp", "--n", "1", "--y", "1"], 5),
        (["moment", "--group", "g2", "--n", "1", "--k", "1"], 3),
        (["moment", "--group", "o", "--n", "1", "--k", "1", "--method", "quad"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["average", "product", "--group", "sp", "--n", "1", "--x", "one half"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["moment", "--group", "u", "--n", "0", "--k", "1"])
    assert exc.value.code == 2


def test_verify_is_deterministic(tmp_path):
    argv = [sys.executable, "-m", "classavg", "verify", "--suite", "rect", "--max-k", "2", "--max-n", "2"]
    first = subprocess.run(argv + ["--report", str(tmp_path / "a.json")], capture_output=True, text=True)
    second = subprocess.run(argv + ["--report", str(tmp_path / "b.json")], capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert (tmp_path / "a.json").read_text() == (tmp_path / "b.json").read_text()
    summary = json.loads(first.stdout.splitlines()[-1])
    assert summary["summary"]["fail"] == 0
    literal = [json.loads(l) for l in first.stdout.splitlines()[:-1]]
    assert any(r["identity"] == "o-odd-columns-literal" and r["status"] == "expected-fail" for r in literal)
