import json
import subprocess
import sys

import pytest

from signed_interval import io
from signed_interval.cli import main
from signed_interval.generators import claw, cycle, path, spider

FIG4 = {"n": 3, "x": ["1", "3", "7"], "y": ["8", "10", "2"]}


@pytest.fixture
def files(tmp_path):
    def write(name, content):
        p = tmp_path / name
        p.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["status"] == {0: "yes", 1: "no", 2: "error", 3: "internal"}[code]
    return code, payload


def test_recognize_p3(files, capsys):
    code, out = run(capsys, "recognize", files("p3.txt", io.format_graph(path(3))))
    assert code == 0
    assert out["ordering"] == [0, 1, 2]
    assert out["model"]["y"] == ["2", "3", "3"]
    assert len(out["biarc"]) == 3


def test_recognize_c4_is_no(files, capsys):
    code, out = run(capsys, "recognize", files("c4.txt", io.format_graph(cycle(4))))
    assert code == 1


def test_recognize_malformed_is_input_error(files, capsys):
    code, out = run(capsys, "recognize", files("bad.txt", "2\nfoo\n"))
    assert code == 2 and "line 2" in out["error"]


def test_missing_file_is_input_error(capsys):
    code, _ = run(capsys, "recognize", "/nonexistent/graph.txt")
    assert code == 2


def test_recognize_emit_choices(files, capsys):
    g = files("p3.txt", io.format_graph(path(3)))
    _, out = run(capsys, "recognize", g, "--emit", "ordering")
    assert set(out) == {"status", "n", "ordering"}
    _, out = run(capsys, "recognize", g, "--emit", "cott")
    assert out["cott"] == {"n": 3, "x": ["1", "2", "3"], "y": ["2", "3", "3"]}


def test_recognize_rays(files, capsys):
    g = files("arc.txt", "3\n0 1\n0 2\n")
    code, out = run(capsys, "recognize", g, "--emit", "rays")
    assert code == 0 and [a["v"] for a in out["rays"]["A"]] == [0]
    code, _ = run(capsys, "recognize", files("p3.txt", io.format_graph(path(3))), "--emit", "rays")
    assert code == 2


def test_check_ordering_digon_violation(files, capsys):
    code, out = run(capsys, "check-ordering", files("digon.txt", "2\n0 1\n1 0\n"), "0,1")
    assert code == 1
    assert out["violation"] == {"a": 0, "a2": 1, "b": 1, "b2": 0, "arcs": [[0, 1], [1, 0]], "missing": [0, 0]}


def test_check_ordering_forms(files, capsys):
    g = files("p3.txt", io.format_graph(path(3)))
    assert run(capsys, "check-ordering", g, "[1, 0, 2]")[0] == 0
    assert run(capsys, "check-ordering", g, files("ord.json", [0, 2, 1]))[0] == 1
    assert run(capsys, "check-ordering", g, "0,1")[0] == 2


def test_convert_cott_to_signed(files, capsys):
    code, out = run(capsys, "convert", files("fig4.json", FIG4), "--from", "cott", "--to", "signed")
    assert code == 0
    assert out["model"]["z"] == out["model"]["y"] == FIG4["y"]


def test_convert_cott_to_tt(files, capsys):
    _, out = run(capsys, "convert", files("fig4.json", FIG4), "--from", "cott", "--to", "tt")
    assert out["model"] == {"n": 3, "w": ["1", "3", "7"], "t": ["9", "13", "9"]}


def test_convert_to_ordering_and_back(files, capsys):
    signed = {"n": 2, "x": ["5", "1"], "y": ["5", "5"], "z": ["5", "5"]}
    _, out = run(capsys, "convert", files("s.json", signed), "--from", "signed", "--to", "ordering")
    assert out["ordering"] == [1, 0]
    _, out = run(capsys, "convert", files("s.json", signed), "--from", "signed", "--to", "biarc")
    _, back = run(capsys, "convert", files("b.json", out["model"]), "--from", "biarc", "--to", "ordering")
    assert back["ordering"] == [1, 0]


def test_convert_signed_to_rays(files, capsys):
    signed = {"n": 2, "x": ["1", "2"], "y": ["2", "0"], "z": ["0", "1"]}
    _, out = run(capsys, "convert", files("s.json", signed), "--from", "signed", "--to", "rays")
    _, realized = run(capsys, "realize", "rays", files("r.json", out["model"]))
    assert realized["graph"] == {"n": 2, "arcs": [[0, 1]]}


def test_convert_unsupported_pair(files, capsys):
    code, _ = run(capsys, "convert", files("fig4.json", FIG4), "--from", "cott", "--to", "rays")
    assert code == 2


def test_realize_cott_standard(files, capsys):
    f = files("fig4.json", FIG4)
    _, out = run(capsys, "realize", "cott", f)
    assert out["graph"]["arcs"] == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [2, 0]]
    _, out = run(capsys, "realize", "cott", f, "--standard-cott")
    assert out["graph"]["arcs"] == [[0, 1], [0, 2], [1, 0], [2, 0]]


def test_realize_bad_json(files, capsys):
    assert run(capsys, "realize", "signed", files("bad.json", "{"))[0] == 2


def test_obstruct(files, capsys):
    code, out = run(capsys, "obstruct", files("s.txt", io.format_graph(spider())))
    assert code == 0 and out["witness"]["type"] == "asteroidal_triple"
    code, out = run(capsys, "obstruct", files("c4.txt", io.format_graph(cycle(4))), "--kind", "invertible")
    assert code == 0 and out["witness"]["pair"] == [0, 1]
    code, out = run(capsys, "obstruct", files("claw.txt", io.format_graph(claw())))
    assert code == 1 and len(out["intervals"]) == 4


def test_obstruct_needs_reflexive_graph(files, capsys):
    assert run(capsys, "obstruct", files("d.txt", "2\n0 1\n1 0\n"))[0] == 2


def test_hom(files, capsys):
    h = files("h.txt", io.format_graph(path(3)))
    g = files("g.txt", "3\n0 1\n1 2\n")
    code, out = run(capsys, "hom", "--template", h, "--input", g)
    assert code == 0 and len(out["map"]) == 3
    code, out = run(capsys, "hom", "--template", h, "--input", g, "--lists", files("l.json", {"0": []}))
    assert code == 1
    code, _ = run(capsys, "hom", "--template", files("c4.txt", io.format_graph(cycle(4))), "--input", g)
    assert code == 2


def test_matrix(files, capsys):
    c6 = files("c6.txt", "101\n110\n011\n")
    assert run(capsys, "matrix", c6, "--independent")[0] == 1
    assert run(capsys, "matrix", c6, "--independent", "--method", "brute")[0] == 1
    code, out = run(capsys, "matrix", c6, "--pattern", "K")
    assert code == 0 and out["rows"] == [0, 1] and out["cols"] == [1, 2]
    code, out = run(capsys, "matrix", files("l.txt", "01\n11\n"), "--transform", "rotate180")
    assert out["matrix"] == ["11", "10"]
    code, out = run(capsys, "matrix", files("one.txt", "1\n"), "--augment")
    assert out["matrix"] == ["01", "00"]
    code, out = run(capsys, "matrix", files("z.txt", "000\n000\n000\n"), "--min-orderable")
    assert code == 0 and out["permutation"] == [0, 1, 2]


def test_sweep_n3(capsys):
    code, out = run(capsys, "sweep", "--n", "3")
    assert code == 0
    c1 = out["checks"][0]
    assert c1["key"] == "C1" and c1["instances"] == 512
    assert "seconds" not in c1


def test_sweep_rejects_unknown_criteria(capsys):
    assert run(capsys, "sweep", "--criteria", "C99")[0] == 2


def test_output_is_byte_identical(files):
    g = files("p3.txt", io.format_graph(path(3)))
    cmd = [sys.executable, "-m", "signed_interval", "--pretty", "recognize", g]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"{\n")


def test_help_lists_every_subcommand():
    out = subprocess.run([sys.executable, "-m", "signed_interval", "--help"], capture_output=True, text=True).stdout
    for name in ("recognize", "check-ordering", "realize", "convert", "obstruct", "hom", "matrix", "sweep"):
        assert name in out
