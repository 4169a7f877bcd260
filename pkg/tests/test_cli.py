import json

import pytest

from klr_crystals import build_graph, export_graph, hw_crystal
from klr_crystals.cli import main


def run(capsysbinary, *argv):
    code = main(list(argv))
    return code, capsysbinary.readouterr().out


def test_graph_dot_matches_library(capsysbinary):
    code, out = run(
        capsysbinary,
        "graph", "--ell", "3", "--hw", "0", "--model", "restricted",
        "--depth", "3", "--format", "dot",
    )
    assert code == 0
    want = export_graph(build_graph(hw_crystal(3, 0, "restricted"), [()], 3), "dot")
    assert out == want
    assert out.count(b"[shape=box]") == 6
    assert out.count(b"->") == 5


def test_graph_json(capsysbinary):
    code, out = run(
        capsysbinary,
        "graph", "--ell", "2", "--hw", "1", "--model", "regular",
        "--depth", "4", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out.decode("utf-8"))
    assert list(doc) == ["ell", "depth", "nodes", "edges"]
    assert doc["ell"] == 2 and doc["depth"] == 4


def test_graph_out_file_same_bytes(tmp_path, capsysbinary):
    args = ["graph", "--ell", "3", "--hw", "0", "--model", "restricted",
            "--depth", "4", "--format", "json"]
    code, out = run(capsysbinary, *args)
    assert code == 0
    target = tmp_path / "g.json"
    code2, out2 = run(capsysbinary, *args, "--out", str(target))
    assert code2 == 0
    assert out2 == b""
    assert target.read_bytes() == out


def test_repeat_invocations_identical(capsysbinary):
    args = ["graph", "--ell", "4", "--hw", "2", "--model", "restricted",
            "--depth", "5", "--format", "json"]
    _, first = run(capsysbinary, *args)
    _, second = run(capsysbinary, *args)
    assert first == second


def test_iso_report(capsysbinary):
    code, out = run(
        capsysbinary, "iso", "--ell", "3", "--hw", "0", "--depth", "4",
        "--direction", "row",
    )
    assert code == 0
    doc = json.loads(out.decode("utf-8"))
    assert doc["suite"] == "iso"
    assert doc["failed"] == 0 and doc["failures"] == []


def test_iso_column(capsysbinary):
    code, out = run(
        capsysbinary, "iso", "--ell", "3", "--hw", "0", "--depth", "4",
        "--direction", "column",
    )
    assert code == 0
    assert json.loads(out.decode("utf-8"))["failed"] == 0


def test_shuffle_json(capsysbinary):
    code, out = run(capsysbinary, "shuffle", "--ell", "3", "--left", "1", "--right", "0,1")
    assert code == 0
    doc = json.loads(out.decode("utf-8"))
    assert doc == {
        "ell": 3,
        "terms": [
            {"seq": [0, 1, 1], "poly": [[-1, 1], [1, 1]]},
            {"seq": [1, 0, 1], "poly": [[0, 1]]},
        ],
    }


def test_shuffle_q1(capsysbinary):
    code, out = run(
        capsysbinary, "shuffle", "--ell", "3", "--left", "1", "--right", "0,1", "--q1",
    )
    assert code == 0
    doc = json.loads(out.decode("utf-8"))
    assert doc["terms"] == [
        {"seq": [0, 1, 1], "poly": [[0, 2]]},
        {"seq": [1, 0, 1], "poly": [[0, 1]]},
    ]


def test_onedim_lines(capsysbinary):
    code, out = run(capsysbinary, "onedim", "--ell", "3", "--len", "2")
    assert code == 0
    lines = out.decode("utf-8").splitlines()
    assert lines == ["0,1", "0,2", "1,0", "1,2", "2,0", "2,1"]


def test_verify_single_suite(capsysbinary):
    code, out = run(capsysbinary, "verify", "--suite", "counts", "--ell", "3", "--depth", "4")
    assert code == 0
    doc = json.loads(out.decode("utf-8"))
    assert doc["suite"] == "counts" and doc["failed"] == 0


def test_verify_all(capsysbinary):
    code, out = run(capsysbinary, "verify", "--suite", "all", "--ell", "2", "--depth", "4")
    assert code == 0
    docs = json.loads(out.decode("utf-8"))
    assert [d["suite"] for d in docs] == [
        "axioms", "iso", "casesplit", "trivial", "serre", "counts",
    ]
    assert all(d["failed"] == 0 for d in docs)


def test_verify_failure_exit_code(monkeypatch, capsysbinary):
    from klr_crystals import Report
    from klr_crystals import cli as climod

    def broken(ell, hw, depth):
        rep = Report("counts", {"ell": ell})
        rep.record("forced", False, "injected")
        return rep

    monkeypatch.setitem(climod.SUITES, "counts", broken)
    code, out = run(capsysbinary, "verify", "--suite", "counts", "--ell", "3", "--depth", "4")
    assert code == 1
    assert json.loads(out.decode("utf-8"))["failed"] == 1


def test_usage_errors_exit_2(capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main(["graph", "--ell", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense", "--ell", "3", "--depth", "4"])
    assert exc.value.code == 2
    # domain errors are usage errors too
    assert main(["graph", "--ell", "1", "--hw", "0", "--depth", "2"]) == 2


def test_bad_residues_are_normalized(capsysbinary):
    code, out = run(capsysbinary, "shuffle", "--ell", "3", "--left", "4", "--right", "0,1")
    assert code == 0
    doc = json.loads(out.decode("utf-8"))
    assert doc["terms"][0]["seq"] == [0, 1, 1]
