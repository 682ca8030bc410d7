import io
import json
import subprocess
import sys

import pytest

from schubsing import cli, singclass
from schubsing.cli import RunConfig, main, run
from schubsing.perm import parse_one_line

P = parse_one_line


def call(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        status = main(argv)
    finally:
        sys.stdout = old
    return status, buf.getvalue()


def test_classify_json():
    status, out = call(["classify", "461253"])
    doc = json.loads(out)
    assert status == 0 and doc["schema"] == "schubsing/1"
    assert doc["smooth"] is False
    assert doc["witnesses"]["smooth"]["pattern"] in ("3412", "4231")


def test_singlocus_oracle():
    status, out = call(["singlocus", "461253", "--oracle"])
    doc = json.loads(out)
    assert status == 0 and doc["oracle"] == "confirmed"
    assert sorted(doc["components"]) == ["142653", "143265", "241365"]


def test_hilbert_factored():
    status, out = call(["hilbert", "132", "132"])
    doc = json.loads(out)
    assert status == 0
    assert doc["factored"] == "(t1-t3)*(t1-t2)/(t2*t3)"


def test_klpoly_oracle():
    status, out = call(["klpoly", "1234", "3412", "--oracle"])
    doc = json.loads(out)
    assert status == 0 and doc["P"] == "1 + q" and doc["mu"] == 0


def test_pattern_commands():
    status, out = call(["pattern", "31524", "413625", "--bottom", "21534"])
    assert status == 0 and json.loads(out)["embeddings"] == []
    status, out = call(["pattern", "31524", "413625"])
    assert status == 0 and json.loads(out)["embeddings"]


def test_ideal_and_m2(tmp_path):
    f = tmp_path / "i.m2"
    status, out = call(["ideal", "1324", "3412", "--essential", "--oracle", "--emit-m2", str(f)])
    doc = json.loads(out)
    assert status == 0 and doc["oracle"] == "essential = full"
    assert f.read_text().startswith("R=QQ[")


def test_groebner_oracle():
    status, out = call(["groebner", "1234", "3412", "--oracle"])
    doc = json.loads(out)
    assert status == 0 and doc["defining_minors_are_gb"] and doc["squarefree"]


def test_usage_errors_exit_2():
    for argv in (["classify", "3413"], ["hilbert", "3412", "1234"], ["ideal", "123", "1234"],
                 ["pattern", "4231", "312"], ["bogus"]):
        with pytest.raises(SystemExit) as exc:
            call(argv)
        assert exc.value.code == 2


def test_oracle_mismatch_exit_3(monkeypatch):
    monkeypatch.setattr(singclass, "singular_locus", lambda w: [])
    status, out = call(["singlocus", "461253", "--oracle"])
    assert status == 3
    assert json.loads(out)["error"] == "oracle mismatch"


def test_byte_identical_runs():
    cfg = RunConfig(command="classify", perms=[P("526413")], oracle=True)
    a, b = io.StringIO(), io.StringIO()
    run(cfg, a)
    run(cfg, b)
    assert a.getvalue() == b.getvalue()


def test_text_format():
    status, out = call(["klpoly", "1234", "4231", "--format", "text"])
    assert status == 0 and "P: 1 + q" in out


def test_sweep_s5_subprocess():
    res = subprocess.run([sys.executable, "-m", "schubsing", "sweep", "--n", "5", "--check", "smooth-triple"],
                         capture_output=True, text=True, timeout=600)
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["checked"] == 120 and doc["failures"] == []
    assert "[sweep]" in res.stderr


def test_parser_lists_all_commands():
    parser = cli.build_parser()
    text = parser.format_help()
    for c in cli.COMMANDS:
        assert c in text
