import json
import subprocess
import sys

import pytest

from oracles import partition_numbers
from qmatch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_examples(capsys):
    assert run(capsys, "expand", "-N", "6", "ph(1,1)")[:2] == (0, "1,-1,-1,0,0,1\n")
    assert run(capsys, "expand", "-N", "5", "ph(1,1)^-1")[1] == "1,1,2,3,5\n"
    assert run(capsys, "expand", "-N", "3", "q^2")[1] == "0,0,1\n"


def test_expand_laurent(capsys):
    code, out, _ = run(capsys, "expand", "-N", "3", "q^-2*f(1)")
    assert code == 0
    assert out == "# from q^-2\n1,-1,-1,0,0\n"


def test_expand_json_csv(capsys):
    _, out, _ = run(capsys, "expand", "-N", "5", "--format", "json", "ph(1,1)^-1")
    assert json.loads(out) == {"start": 0, "order": 5, "coefficients": [1, 1, 2, 3, 5]}
    _, out, _ = run(capsys, "expand", "-N", "3", "--format", "csv", "f(1)")
    assert out == "n,coefficient\n0,1\n1,-1\n2,-1\n"


def test_expand_big_integers_in_full(capsys):
    _, out, _ = run(capsys, "expand", "-N", "1001", "ph(1,1)^-1")
    last = out.strip().split(",")[-1]
    assert int(last) == partition_numbers(1001)[1000]
    assert "e" not in last


def test_expand_errors(capsys):
    code, _, err = run(capsys, "expand", "R(q^16")
    assert code == 2 and "parse error" in err
    assert run(capsys, "expand", "1/(2+q)")[0] == 3


def test_usage_errors(capsys):
    for argv in (["frobnicate"], ["expand"], ["expand", "-N", "0", "q"], ["list", "--format", "xml"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "T1.5.xxi", "-N", "800")
    assert code == 0 and out.startswith("T1.5.xxi: passed")
    code, out, _ = run(capsys, "verify", "I.newGH2", "-N", "400")
    assert code == 0 and out.startswith("L2.6.2: passed")


def test_verify_conjecture_status(capsys):
    code, out, _ = run(capsys, "verify", "C8.2.omega53", "-N", "5000")
    assert code == 0 and "verified to order" in out


def test_verify_counterexample_exit(capsys):
    code, out, _ = run(capsys, "verify", "C8.3.omega28")
    assert code == 1 and "counterexample" in out


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "T9.9.zz")
    assert code == 2 and "unknown" in err


def test_verify_order_policy(capsys):
    # explicit -N that is too small: exit 3 unless --auto-raise
    assert run(capsys, "verify", "C8.3.omega77", "-N", "600")[0] == 3
    code, _, err = run(capsys, "verify", "C8.2.omega13", "-N", "100", "--auto-raise")
    assert code == 0 and "raised" in err
    # no -N at all: the default auto-raises with a warning
    code, _, err = run(capsys, "verify", "C8.2.omega53")
    assert code == 0 and "raised" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "T1.2.iii", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["id"] == "T1.2.iii" and d["passed"] and d["checked_count"] >= 50
    assert d["details"][0]["checked_count"] >= 50


def test_verify_prefix_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "T1.4", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("id,status,check,passed")
    assert {l.split(",")[0] for l in lines[1:]} == {f"T1.4.{r}" for r in
                                                     "i ii iii iv v vi vii viii ix x xi".split()}


def test_verify_prefix_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "T1.2")
    assert code == 0 and out.strip().endswith("22/22 entries passed")


def test_verify_parallel_byte_identical(capsys):
    a = run(capsys, "verify", "T1.3", "--format", "json", "--jobs", "1")[1]
    b = run(capsys, "verify", "T1.3", "--format", "json", "--jobs", "3")[1]
    assert a == b


def test_scan_examples(capsys):
    code, out, _ = run(capsys, "scan", "ph(1,2)^8", "--max-mod", "2", "-N", "400", "--format", "json")
    assert code == 0
    assert {"cA": 1, "aA": 2, "rA": 1, "cB": -8, "aB": 1, "rB": 0} in json.loads(out)
    code, out, _ = run(capsys, "scan", "f(1)^2/f(5)^2", "--max-mod", "5", "-N", "500")
    assert "A(5n+2) = -B(1n+0)" in out.splitlines()
    code, out, err = run(capsys, "scan", "1", "--max-mod", "3", "-N", "100")
    assert code == 0 and out == "" and "skipped" in err


def test_scan_errors(capsys):
    assert run(capsys, "scan", "2+q")[0] == 3
    assert run(capsys, "scan", "f(1", "-N", "100")[0] == 2
    assert run(capsys, "scan", "f(1)", "-N", "40")[0] == 3


def test_list(capsys):
    code, out, _ = run(capsys, "list", "T1.2")
    assert code == 0 and len(out.strip().splitlines()) == 22
    _, out, _ = run(capsys, "list", "C8", "--format", "json")
    assert [d["id"] for d in json.loads(out)][0] == "C8.1.lambda11"
    _, out, _ = run(capsys, "list", "TW")
    assert out.strip() == ""
    _, out, _ = run(capsys, "list", "TW", "--derived")
    assert out.count("\n") >= 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qmatch", "expand", "-N", "4", "f(1)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,-1,-1,0\n"
