"""End-to-end checks of the command line tool: exit taxonomy and round trips."""

import json
import os
import subprocess

CLI = os.environ["IJCOMP_CLI"]

K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
STAR3 = "4 3\n0 1\n0 2\n0 3\n"


def run(args, stdin=""):
    proc = subprocess.run([CLI] + args, input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_recognize_member():
    code, out, _ = run(["recognize", "--i", "3", "--j", "2"], K4)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "member"
    assert doc["witness"]["n"] == 4


def test_recognize_non_member_exit_1():
    code, out, _ = run(["recognize", "--i", "2", "--j", "2"], STAR3)
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "non-member"
    assert doc["obstruction"] == "NecessaryConditionFailed(K1,j+1-free)"


def test_parse_error_exit_2():
    code, _, err = run(["recognize", "--i", "2", "--j", "2"], "2 1\n0 0\n")
    assert code == 2
    assert "parse error" in err


def test_usage_error_exit_2():
    code, _, _ = run(["recognize"], K4)
    assert code == 2
    code, _, _ = run(["no-such-command"])
    assert code == 2


def test_size_guard_exit_2():
    code, _, err = run(["sts", "--n", "21"])
    assert code == 2
    assert "size guard" in err


def test_compete_round_trip():
    digraph = json.dumps({"n": 3, "arcs": [[0, 2], [1, 2]]})
    code, out, _ = run(["compete"], digraph)
    assert code == 0
    assert json.loads(out) == {"n": 3, "edges": [[0, 1]]}


def test_cover_answers():
    code, out, _ = run(["cover", "--i", "2", "--j", "2"], "4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert code == 0
    assert json.loads(out)["cliques"] == [[0, 1], [0, 3], [1, 2], [2, 3]]
    code, out, _ = run(["cover", "--i", "2", "--j", "2"], STAR3)
    assert code == 1
    assert json.loads(out) == {"exists": False}


def test_cover_repair_reports_representatives():
    code, out, _ = run(["cover", "--i", "3", "--j", "2", "--repair"], K4)
    assert code == 0
    doc = json.loads(out)
    reps = doc["representatives"]
    assert len(reps) == len(doc["cliques"])
    assert len(set(reps)) == len(reps)
    for clique, rep in zip(doc["cliques"], reps):
        assert rep not in clique


def test_witness_from_cover_files(tmp_path):
    cover = tmp_path / "cover.json"
    cover.write_text(json.dumps({"cliques": [[0, 1], [1, 2]]}))
    sdr = tmp_path / "sdr.json"
    sdr.write_text(json.dumps({"representatives": [2, 0]}))
    code, out, _ = run(
        ["witness", "--i", "2", "--j", "2", "--cover", str(cover), "--sdr", str(sdr)],
        "3 2\n0 1\n1 2\n",
    )
    assert code == 0
    assert json.loads(out)["arcs"] == [[0, 2], [1, 0], [1, 2], [2, 0]]


def test_chordal_and_triangle():
    code, out, _ = run(["chordal"], "4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert code == 1
    assert json.loads(out)["hole"] == [0, 1, 2, 3]
    code, out, _ = run(["triangle"], "4 3\n0 3\n1 3\n2 3\n")
    assert code == 0
    assert json.loads(out)["induces_triangle"] is True


def test_good_subdigraph_not_found_exit_1():
    code, out, _ = run(["good-subdigraph"], "4 3\n0 3\n1 3\n2 3\n")
    assert code == 1
    assert json.loads(out)["found"] is False


def test_sts_and_bibd_pipeline():
    code, fano_json, _ = run(["sts", "--n", "7"])
    assert code == 0
    code, digraph_json, _ = run(["bibd-digraph"], fano_json)
    assert code == 0
    assert json.loads(digraph_json)["n"] == 14
    code, verdict, _ = run(["bibd-verify"], fano_json)
    assert code == 0
    assert json.loads(verdict)["valid"] is True
    broken = json.loads(fano_json)
    broken["blocks"] = broken["blocks"][:-1]
    broken["b"] -= 1
    code, verdict, _ = run(["bibd-verify"], json.dumps(broken))
    assert code == 1
    assert json.loads(verdict)["violation"] == "replication"
    code, out, _ = run(["sts", "--n", "5"])
    assert code == 1
    assert json.loads(out) == {"exists": False}


def test_containment():
    code, out, _ = run(["containment", "--a", "1,7", "--b", "1,2"])
    assert code == 0
    assert json.loads(out)["relation"] == "Equal"
    code, out, _ = run(["containment", "--a", "4,2", "--b", "3,3"])
    assert code == 1
    assert json.loads(out)["relation"] == "Unknown"
    code, _, _ = run(["containment", "--a", "4", "--b", "3,3"])
    assert code == 2


def test_export_dot():
    code, out, _ = run(["export-dot"], json.dumps({"n": 2, "arcs": [[0, 1]]}))
    assert code == 0
    assert "0 -> 1;" in out
    code, out, _ = run(["export-dot"], "2 1\n0 1\n")
    assert code == 0
    assert "0 -- 1;" in out
    code, out, _ = run(["export-dot", "--directed"], "2 1\n0 1\n")
    assert code == 0
    assert "0 -> 1;" in out


def test_emitted_documents_reparse():
    code, witness, _ = run(["witness", "--i", "3", "--j", "2"], K4)
    assert code == 0
    code, out, _ = run(["compete"], witness)
    assert code == 0
    edges = [tuple(e) for e in json.loads(out)["edges"]]
    assert edges == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
