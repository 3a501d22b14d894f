import json
import subprocess


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def test_analyze_json(cli):
    out = run(cli, "analyze", "--fixture", "fig1", "--json")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    classes = {n["label"]: n["middleman_class"] for n in report["nodes"]}
    assert classes == {"1": "none", "2": "weak", "3": "none", "4": "none",
                       "5": "weak", "6": "strong", "7": "none"}
    nu = {n["label"]: n["nu"] for n in report["nodes"]}
    assert (nu["2"], nu["5"], nu["6"]) == (0.1, 0.2, 0.5)


def test_analyze_table_is_deterministic(cli):
    first = run(cli, "analyze", "--fixture", "star6")
    second = run(cli, "analyze", "--fixture", "star6")
    assert first.returncode == 0 and first.stdout == second.stdout
    centre = [line for line in first.stdout.splitlines() if line.startswith("6(**)")]
    assert centre and "1.000" in centre[0]


def test_analyze_file_inputs(cli, tmp_path):
    edges = tmp_path / "g.csv"
    edges.write_text("# path\na,b\nb,c\n")
    out = run(cli, "analyze", str(edges), "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["graph"]["B_prime"] == 1
    matrix = tmp_path / "m.txt"
    matrix.write_text("0 1 0\n0 0 1\n0 0 0\n")
    out = run(cli, "analyze", "--format", "matrix", str(matrix), "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["nodes"][1]["middleman_class"] == "strong"


def test_input_errors_exit_2(cli, tmp_path):
    assert run(cli, "analyze", str(tmp_path / "missing.csv")).returncode == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\nc\n")
    out = run(cli, "analyze", str(bad))
    assert out.returncode == 2 and "line 2" in out.stderr
    assert run(cli, "analyze", "--fixture", "nope").returncode == 2
    assert run(cli, "contest", "--fixture", "fig1", "99").returncode == 2
    assert run(cli, "centrality", "--fixture", "fig4", "nonsense").returncode == 2
    assert run(cli, "fixtures", "--bogus").returncode == 2


def test_contest(cli):
    out = run(cli, "contest", "--fixture", "fig1", "3", "--minimal")
    assert out.returncode == 0
    assert out.stdout.startswith("3: contested; minimal:") and "{2}" in out.stdout
    out = run(cli, "contest", "--fixture", "fig1", "6")
    assert "uncontested" in out.stdout and "middleman" in out.stdout
    out = run(cli, "contest", "--fixture", "fig2", "4", "--minimal", "--json")
    assert ["2", "3"] in json.loads(out.stdout)["min_contesting_sets"]


def test_contest_guard_exit_3(cli, tmp_path):
    lines = ["src,hub"]
    for k in range(30):
        lines += [f"hub,t{k}", f"src,r{k}", f"r{k},t{k}"]
    path = tmp_path / "wide.csv"
    path.write_text("\n".join(lines) + "\n")
    assert run(cli, "contest", str(path), "hub").returncode == 0
    out = run(cli, "contest", str(path), "hub", "--minimal")
    assert out.returncode == 3 and "exceeds" in out.stderr


def test_centrality(cli):
    out = run(cli, "centrality", "--fixture", "fig4", "betweenness", "--raw", "--json")
    scores = {r["label"]: r["score"] for r in json.loads(out.stdout)["scores"]}
    assert scores["7"] == 6.0 and scores["4"] == 4.0
    out = run(cli, "centrality", "--fixture", "fig4", "--undirected", "betweenness", "--raw", "--json")
    scores = {r["label"]: r["score"] for r in json.loads(out.stdout)["scores"]}
    assert scores["7"] == 25.0
    out = run(cli, "centrality", "--fixture", "fig4", "--undirected", "bonacich", "--beta", "0.5")
    assert out.returncode == 3 and "0.3068" in out.stderr


def test_export_dot(cli, tmp_path):
    out = run(cli, "export-dot", "--fixture", "fig1")
    assert out.returncode == 0 and '"6" [class="strong"]' in out.stdout
    assert "class=" not in run(cli, "export-dot", "--fixture", "fig2").stdout
    empty = tmp_path / "empty.csv"
    empty.write_text("# nothing\n")
    assert run(cli, "export-dot", str(empty)).stdout == "digraph middlemen {\n}\n"


def test_fixtures_listing(cli):
    out = run(cli, "fixtures")
    assert out.returncode == 0 and len(out.stdout.splitlines()) == 5
    listing = json.loads(run(cli, "fixtures", "--json").stdout)
    assert [f["name"] for f in listing] == ["fig1", "fig2", "fig4", "star6", "cycle6"]
