import csv
import io
import json
import subprocess
import sys

import pytest

from leafcost.cli import EXIT_FATAL, EXIT_LINE_ERRORS, EXIT_OK, main, survey_stream
from leafcost.constructions import build_cubic_fc3, build_Gm, petersen
from leafcost.graph import emit_graph6, parse_graph6

K4, K3, P3 = "C~", "Bw", "Bg"


def _run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def _records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.fixture
def g6file(tmp_path):
    def write(lines):
        p = tmp_path / "in.g6"
        p.write_text("\n".join(lines) + "\n")
        return str(p)

    return write


def test_fc_records(g6file):
    code, text = _run(["fc", g6file([K4, K3, emit_graph6(petersen())])])
    assert code == EXIT_OK
    recs = _records(text)
    assert [r["phi"] for r in recs] == [0, 2, 2]
    assert [r["line"] for r in recs] == [0, 1, 2]
    assert recs[0]["graph6"] == K4


def test_fc_reads_stdin(monkeypatch):
    code, text = _run(["fc"], stdin=K4 + "\n\n" + K3 + "\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    assert [r["phi"] for r in _records(text)] == [0, 2]


def test_fc_rejects_paths_by_default(g6file):
    code, text = _run(["fc", g6file([P3, K4])])
    assert code == EXIT_LINE_ERRORS
    bad, good = _records(text)
    assert bad["error"] == "NotTwoConnected" and bad["line"] == 0
    assert good["phi"] == 0


def test_fc_skips_when_not_required(g6file):
    code, text = _run(["fc", "--no-require-2-connected", g6file([P3])])
    assert code == EXIT_OK
    rec = _records(text)[0]
    assert rec["phi"] is None and rec["skipped"]


def test_malformed_line_is_a_record(g6file):
    code, text = _run(["ml", g6file(["C~~", K4])])
    assert code == EXIT_LINE_ERRORS
    bad, good = _records(text)
    assert bad["error"] == "MalformedGraph6"
    assert good["ml"] == 1


def test_ml_of_disconnected_graph(g6file):
    code, text = _run(["ml", g6file(["C?"])])
    assert code == EXIT_OK
    assert _records(text)[0] == {"graph6": "C?", "n": 4, "ml": None, "connected": False, "line": 0}


def test_classify_records(g6file):
    code, text = _run(["classify", g6file([emit_graph6(petersen()), K4])])
    assert code == EXIT_OK
    pet, k4 = _records(text)
    assert pet["class"] == "leaf-critical" and pet["hypohamiltonian"]
    assert k4["class"] == "leaf-stable" and k4["ml"] == 1


def test_threads_keep_input_order(g6file):
    lines = [emit_graph6(build_Gm(m).graph) for m in (3, 4, 3, 5)] + [K4, K3] * 3
    _, single = _run(["fc", g6file(lines)])
    _, multi = _run(["fc", "--threads", "2", g6file(lines)])
    assert single == multi
    assert [r["line"] for r in _records(multi)] == list(range(len(lines)))


def test_output_is_deterministic(g6file):
    path = g6file([K4, K3, emit_graph6(build_Gm(3).graph)])
    assert _run(["fc", path]) == _run(["fc", path])


def test_csv_output(g6file):
    code, text = _run(["fc", "--format", "csv", g6file([K4, P3])])
    assert code == EXIT_LINE_ERRORS
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["phi"] == "0" and rows[1]["error"] == "NotTwoConnected"


def test_timeout_record(g6file):
    slow = emit_graph6(build_cubic_fc3(3).graph)
    code, text = _run(["fc", "--timeout-secs", "1", g6file([slow, K4])])
    assert code == EXIT_LINE_ERRORS
    first, second = _records(text)
    assert first["error"] == "Timeout"
    assert second["phi"] == 0


def test_usage_errors_are_fatal(tmp_path):
    assert main(["nonsense"], io.StringIO()) == EXIT_FATAL
    assert main(["fc", str(tmp_path / "missing.g6")], io.StringIO()) == EXIT_FATAL
    assert main(["generate"], io.StringIO()) == EXIT_FATAL


# survey ------------------------------------------------------------------------


def test_survey_jsonl():
    code, text = _run(["survey", "--order", "3-6"])
    assert code == EXIT_OK
    rows = _records(text)
    counts = {r["order"]: {int(k): v for k, v in r["counts"].items()} for r in rows}
    assert counts == {3: {2: 1}, 4: {0: 1, 2: 2}, 5: {0: 3, 2: 7}, 6: {0: 13, 2: 43}}
    assert rows[-1]["total"] == 56


def test_survey_csv_is_long_format():
    code, text = _run(["survey", "--order", "5", "--format", "csv"])
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [(r["phi"], r["count"]) for r in rows] == [("0", "3"), ("2", "7")]
    assert set(rows[0]) == {"order", "filter", "source", "phi", "count"}


def test_survey_cubic():
    code, text = _run(["survey", "--order", "8", "--cubic"])
    assert code == EXIT_OK
    assert {int(k): v for k, v in _records(text)[0]["counts"].items()} == {0: 2, 2: 3}


def test_survey_rejects_unrestricted_connectivity():
    assert main(["survey", "--order", "4", "--connectivity", "any"], io.StringIO()) == EXIT_FATAL
    assert main(["survey"], io.StringIO()) == EXIT_FATAL


def test_survey_from_stdin(monkeypatch):
    code, text = _run(["survey", "--source", "stdin"], stdin=f"{K4}\n{K3}\n{K3}\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    row = _records(text)[0]
    assert {int(k): v for k, v in row["counts"].items()} == {0: 1, 2: 2}


def test_survey_stream_counts_errors():
    row = survey_stream([K4, P3])
    assert row.counts == {0: 1} and row.errors == 1


# generate, construct, fragment ----------------------------------------------------


def test_generate():
    code, text = _run(["generate", "--order", "5"])
    assert code == EXIT_OK
    assert len(text.split()) == 34
    code, text = _run(["generate", "--order", "5", "--connectivity", "2-connected"])
    lines = text.split()
    assert len(lines) == 10
    assert all(parse_graph6(s).n == 5 for s in lines)


def test_construct_gm(tmp_path):
    side = tmp_path / "roles.json"
    code, text = _run(["construct", "gm", "3", "--sidecar", str(side)])
    assert code == EXIT_OK
    rec = _records(text)[0]
    assert rec["n"] == 8 and parse_graph6(rec["graph6"]) == build_Gm(3).graph
    assert json.loads(side.read_text())[0]["roles"] == rec["roles"]


def test_construct_cubic_ring():
    code, text = _run(["construct", "cubic_fc3", "2"])
    assert code == EXIT_OK
    g = parse_graph6(_records(text)[0]["graph6"])
    assert set(g.degrees()) == {3}


def test_construct_errors():
    assert main(["construct", "nosuch"], io.StringIO()) == EXIT_FATAL
    assert main(["construct", "gm"], io.StringIO()) == EXIT_FATAL
    assert main(["construct", "gm", "2"], io.StringIO()) == EXIT_FATAL


def test_construct_lists_several():
    code, text = _run(["construct", "tfc1"])
    assert code == EXIT_OK
    assert [r["n"] for r in _records(text)] == [20, 22]


def test_fragment_command():
    code, text = _run(["fragment", "Bw", "0", "1", "2"])
    assert code == EXIT_OK
    rec = _records(text)[0]
    assert rec["class"] == "weak"
    assert set(rec["witnesses"]) == {"H", "1", "2"}
    assert main(["fragment", "Bw", "0", "0", "1"], io.StringIO()) == EXIT_FATAL


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "leafcost", "fc"], input=K4 + "\n", capture_output=True, text=True, check=False
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["phi"] == 0
