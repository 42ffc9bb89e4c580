import pytest

from cyclehom.cli import main
from cyclehom.formats import format_graph, parse_coloring, parse_graph, parse_metadata
from cyclehom.graph import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_c5(files, capsys):
    g = files("c5.graph", format_graph(cycle_graph(5)))
    code, out, _ = run(capsys, "solve", g, "--k", "5")
    assert code == 0 and out.startswith("SAT\n")
    col = files("c5.col", out)
    assert run(capsys, "verify", g, col, "--k", "5")[0] == 0


def test_solve_k3_unsat(files, capsys):
    g = files("k3.graph", format_graph(complete_graph(3)))
    assert run(capsys, "solve", g, "--k", "5") == (1, "UNSAT\n", "")


def test_p9_algo_rejects(files, capsys):
    g = files("p9.graph", format_graph(path_graph(9)))
    code, out, err = run(capsys, "solve", g, "--k", "5", "--algo", "p9")
    assert code == 2 and "NotP9Free" in err


def test_auto_falls_back(files, capsys):
    g = files("p9.graph", format_graph(path_graph(9)))
    code, out, err = run(capsys, "solve", g, "--k", "5")
    assert code == 0 and "falling back" in err


@pytest.mark.parametrize("k,algo", [(6, "auto"), (12, "localized"), (7, "oracle"), (9, "p9")])
def test_algorithms(files, capsys, k, algo):
    g = files("c8.graph", format_graph(cycle_graph(8)))
    code, out, _ = run(capsys, "solve", g, "--k", str(k), "--algo", algo)
    assert code == 0
    assert len(parse_coloring(out)) == 8


def test_algo_k_mismatch(files, capsys):
    g = files("c8.graph", format_graph(cycle_graph(8)))
    assert run(capsys, "solve", g, "--k", "7", "--algo", "localized")[0] == 2


def test_lists_respected(files, capsys):
    g = files("c5.graph", format_graph(cycle_graph(5)))
    lists = files("c5.lists", "0: 3\n")
    code, out, _ = run(capsys, "solve", g, "--k", "5", "--lists", lists)
    assert code == 0 and parse_coloring(out)[0] == 3


@pytest.mark.parametrize("coloring,code", [
    ("v 0 1\nv 1 2\nv 2 3\nv 3 4\nv 4 5\n", 0),
    ("v 0 1\nv 1 1\nv 2 1\nv 3 1\nv 4 1\n", 1),
    ("v 0 1\nv 1 2\n", 1),
])
def test_verify(files, capsys, coloring, code):
    g = files("c5.graph", format_graph(cycle_graph(5)))
    assert run(capsys, "verify", g, files("f.col", coloring), "--k", "5")[0] == code


def test_verify_wrong_list(files, capsys):
    g = files("c5.graph", format_graph(cycle_graph(5)))
    col = files("f.col", "v 0 1\nv 1 2\nv 2 3\nv 3 4\nv 4 5\n")
    lists = files("l", "0: 2 5\n")
    assert run(capsys, "verify", g, col, "--k", "5", "--lists", lists)[0] == 1


def test_parse_error_exit_2(files, capsys):
    g = files("bad.graph", "2 1\n0 7\n")
    assert run(capsys, "solve", g, "--k", "5")[0] == 2


def test_generate_chain(capsys):
    code, out, _ = run(capsys, "generate", "chain", "d=2", "k=5")
    assert code == 0 and parse_graph(out).n == 8


def test_generate_subdivide_identity(files, capsys):
    text = format_graph(petersen_graph())
    code, out, _ = run(capsys, "generate", "subdivide", f"graph={files('p.graph', text)}", "m=1")
    assert parse_graph(out) == petersen_graph()


def test_generate_nae(files, tmp_path, capsys):
    f = files("f.cnf", "p cnf 3 1\n1 2 3 0\n")
    prefix = str(tmp_path / "nae")
    assert run(capsys, "generate", "nae", f"formula={f}", "s=2", "--out", prefix)[0] == 0
    meta = parse_metadata(open(prefix + ".meta").read())
    assert meta["vertices"] == "121"
    assert parse_graph(open(prefix + ".graph").read()).n == 121


@pytest.mark.parametrize("gadget,params,source", [
    ("monotone-list", ["s=3", "g=4"], ("f.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n")),
    ("nonrainbow", ["s=2"], ("h.txt", "3 1\n0 1 2\nfix 0 1\nfix 1 2\n")),
    ("degree-reduce", ["k=5"], ("g.graph", format_graph(star_graph(4)))),
])
def test_generate_then_solve(files, tmp_path, capsys, gadget, params, source):
    path = files(*source)
    key = {"monotone-list": "formula", "nonrainbow": "hypergraph", "degree-reduce": "graph"}[gadget]
    prefix = str(tmp_path / "inst")
    assert run(capsys, "generate", gadget, f"{key}={path}", *params, "--out", prefix)[0] == 0
    meta = parse_metadata(open(prefix + ".meta").read())
    argv = ["solve", prefix + ".graph", "--k", meta["k"], "--algo", "oracle"]
    if gadget != "degree-reduce":
        argv += ["--lists", prefix + ".lists"]
    assert run(capsys, *argv)[0] == 0


def test_generate_lists_need_out(files, capsys):
    f = files("f.cnf", "p cnf 2 1\n1 2 0\n")
    assert run(capsys, "generate", "monotone-list", f"formula={f}")[0] == 2


def test_generate_unknown_param(capsys):
    assert run(capsys, "generate", "chain", "k=5")[0] == 2


def test_check_reports(files, capsys):
    code, out, _ = run(capsys, "check", files("p.graph", format_graph(petersen_graph())), "--pt", "9")
    assert "trianglefree=yes" in out and "p9free=yes" in out and "girth=5" in out
    code, out, _ = run(capsys, "check", files("c9.graph", format_graph(cycle_graph(9))))
    assert "girth=9" in out


def test_check_classify(files, capsys):
    f = files("k14.graph", format_graph(star_graph(4)))
    code, out, _ = run(capsys, "check", f, "--classify", "extension", "--k", "5", "--gamma", "2")
    assert "verdict=NPCompleteKnown" in out and "gamma2=yes" in out


def _all_outputs(files, tmp_path, capsys, jobs):
    g = files("r.graph", format_graph(petersen_graph()))
    outs = [run(capsys, "solve", g, "--k", "9", "--jobs", jobs)[1]]
    prefix = str(tmp_path / "rnd")
    run(capsys, "generate", "random", "n=12", "k=5", "--seed", "7", "--out", prefix)
    outs.append(open(prefix + ".graph").read() + open(prefix + ".lists").read())
    outs.append(run(capsys, "solve", prefix + ".graph", "--k", "5", "--lists", prefix + ".lists",
                    "--jobs", jobs)[1])
    outs.append(run(capsys, "check", g, "--pt", "5", "--classify", "list", "--k", "6")[1])
    return outs


def test_determinism(files, tmp_path, capsys):
    first = _all_outputs(files, tmp_path, capsys, "1")
    assert _all_outputs(files, tmp_path, capsys, "1") == first
    assert _all_outputs(files, tmp_path, capsys, "2") == first
