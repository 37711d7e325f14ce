import json

import pytest

from lincomp.cli import main

from conftest import N1_FILE

T1_FILE = '{"field": {"q": 2}, "rows": [[1, 0, 1], [0, 1, 0]]}'
T_SOLVABLE_FILE = '{"field": {"q": 2}, "rows": [[1, 1, 0], [0, 1, 1]]}'
T_SUM_FILE = '{"field": {"q": 2}, "rows": [[1, 1, 1]]}'
T_NP_FILE = '{"field": {"q": 2}, "rows": [[1, 0, 1, 1], [0, 1, 0, 1]]}'


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("n1.json", N1_FILE), ("t1.json", T1_FILE),
                       ("t_solvable.json", T_SOLVABLE_FILE),
                       ("t_sum.json", T_SUM_FILE), ("t_np.json", T_NP_FILE)]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def _run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, json.loads(out) if out.strip() else None


def test_validate(files, capsys):
    rc, report = _run(capsys, ["validate", "--network", files["n1.json"]])
    assert rc == 0
    assert report["command"] == "validate"
    assert report["result"] == {"nodes": 4, "sources": 3, "edges": 4,
                                "receiver": "rho"}
    assert files["n1.json"] in report["inputs"]
    assert len(report["inputs"][files["n1.json"]]) == 64  # sha256 hex


def test_validate_bad_file(files, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["validate", "--network", str(bad)]) == 1
    assert main(["validate", "--network", str(tmp_path / "missing.json")]) == 1


def test_mincut(files, capsys):
    rc, report = _run(capsys, ["mincut", "--network", files["n1.json"],
                               "--target", files["t1.json"]])
    assert rc == 0
    assert report["result"]["value"] == {"num": 1, "den": 1}
    assert report["result"]["witness"] == [2, 3]
    assert report["result"]["separated"] == [0, 1, 2]


def test_groebner_test_unsolvable(files, capsys, tmp_path):
    basis_file = tmp_path / "basis.txt"
    rc, report = _run(capsys, ["groebner-test", "--network", files["n1.json"],
                               "--target", files["t1.json"],
                               "--dump-basis", str(basis_file)])
    assert rc == 2
    assert report["result"]["verdict"] == "unsolvable"
    assert report["result"]["basis_size"] == 1
    assert basis_file.read_text().strip() == "1"


def test_groebner_test_solvable(files, capsys):
    rc, report = _run(capsys, ["groebner-test", "--network", files["n1.json"],
                               "--target", files["t_solvable.json"],
                               "--order", "lex"])
    assert rc == 0
    assert report["result"]["verdict"] == "solvable"


def test_classify(files, capsys):
    rc, report = _run(capsys, ["classify", "--target", files["t1.json"]])
    assert rc == 0
    assert report["result"]["class"] == "has-zero"
    assert report["result"]["P"] == [[1], [0]]


def test_synthesize_sum_and_verify(files, capsys, tmp_path):
    code_file = tmp_path / "code.json"
    rc, report = _run(capsys, ["synthesize", "--network", files["n1.json"],
                               "--target", files["t_sum.json"],
                               "--code-out", str(code_file)])
    assert rc == 0
    assert report["result"]["status"] == "solved"
    assert report["result"]["method"] == "sum-tree"
    assert code_file.exists()

    rc, report = _run(capsys, ["verify", "--network", files["n1.json"],
                               "--target", files["t_sum.json"],
                               "--code", str(code_file)])
    assert rc == 0
    assert report["result"] == {"is_solution": True, "exhaustive_check": True}

    # the same code is not a solution for T1
    rc, report = _run(capsys, ["verify", "--network", files["n1.json"],
                               "--target", files["t1.json"],
                               "--code", str(code_file)])
    assert rc == 2
    assert report["result"]["is_solution"] is False


def test_synthesize_unsolvable(files, capsys):
    rc, report = _run(capsys, ["synthesize", "--network", files["n1.json"],
                               "--target", files["t1.json"]])
    assert rc == 2
    assert report["result"]["status"] == "unsolvable"


def test_synthesize_cut_violation(files, capsys, tmp_path):
    net = {"field": {"q": 2}, "nodes": ["s1", "s2", "v", "rho"],
           "sources": ["s1", "s2"], "receiver": "rho",
           "edges": [["s1", "v"], ["s2", "v"], ["v", "rho"]]}
    netf = tmp_path / "bottleneck.json"
    netf.write_text(json.dumps(net))
    tgt = tmp_path / "ident.json"
    tgt.write_text('{"field": {"q": 2}, "rows": [[1, 0], [0, 1]]}')
    rc, report = _run(capsys, ["synthesize", "--network", str(netf),
                               "--target", str(tgt)])
    assert rc == 4
    assert report["result"]["status"] == "cut-violation"
    assert report["result"]["witness"] == [2]


def test_synthesize_seed_recorded(files, capsys):
    rc, report = _run(capsys, ["synthesize", "--network", files["n1.json"],
                               "--target", files["t_sum.json"], "--seed", "9"])
    assert rc == 0
    assert report["seed"] == 9


def test_counterexample_command(files, capsys, tmp_path):
    outdir = tmp_path / "bundle"
    rc, report = _run(capsys, ["counterexample", "--target", files["t_np.json"],
                               "--out-dir", str(outdir)])
    assert rc == 0
    assert (outdir / "network.json").exists()
    assert (outdir / "target.json").exists()
    assert (outdir / "report.json").exists()
    assert report["result"]["mincut"] == {"num": 1, "den": 1}
    assert report["result"]["verdict"] == "unsolvable"
    # emitted artifacts replay to the same verdicts
    from lincomp.cuts import mincut_ratio
    from lincomp.mvpoly import Verdict, solvable
    from lincomp.netmodel import parse_network
    from lincomp.code import parse_target
    net = parse_network((outdir / "network.json").read_text())
    t = parse_target((outdir / "target.json").read_text())
    assert mincut_ratio(net, t).value == 1
    assert solvable(net, t)[0] == Verdict.UNSOLVABLE


def test_simulate_command(files, capsys, tmp_path):
    code_file = tmp_path / "code.json"
    _run(capsys, ["synthesize", "--network", files["n1.json"],
                  "--target", files["t_sum.json"],
                  "--code-out", str(code_file)])
    rc, report = _run(capsys, ["simulate", "--network", files["n1.json"],
                               "--code", str(code_file),
                               "--messages", "[1, 1, 1]"])
    assert rc == 0
    assert report["result"]["output"] == [[1]]  # 1 + 1 + 1 over F_2


def test_report_written_to_file(files, capsys, tmp_path):
    out = tmp_path / "report.json"
    rc = main(["validate", "--network", files["n1.json"], "--out", str(out)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    report = json.loads(out.read_text())
    assert report["command"] == "validate"
