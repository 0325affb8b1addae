import json

from steincalc.cli import main
from steincalc.knots import TREFOIL, demo_family
from steincalc.plumbing import positive_star_reduction, star_graph_left, star_graph_right


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPlumbCommands:
    def test_invariants(self, capsys, tmp_path):
        graph = tmp_path / "graph.json"
        graph.write_text(json.dumps(star_graph_right(2, (2, 3)).to_dict()))
        code, out, _ = run(capsys, ["plumb", "invariants", str(graph)])
        assert code == 0
        data = json.loads(out)
        assert data["negative_definite"] is True
        assert data["boundary_homology"] == {"rank": 4, "torsion": [5]}
        assert data["determinant"] == 5

    def test_moves(self, capsys, tmp_path):
        graph = tmp_path / "g.json"
        script = tmp_path / "s.json"
        graph.write_text(json.dumps(star_graph_left(1, (3,)).to_dict()))
        script.write_text(positive_star_reduction(1, (3,)).to_json())
        code, out, _ = run(capsys, ["plumb", "moves", str(graph), str(script)])
        assert code == 0
        data = json.loads(out)
        assert data["moves_applied"] == 3
        assert data["before"]["boundary_homology"] == data["after"]["boundary_homology"]

    def test_invalid_move_script_errors(self, capsys, tmp_path):
        graph = tmp_path / "g.json"
        script = tmp_path / "s.json"
        graph.write_text(json.dumps(star_graph_left(1, (3,)).to_dict()))
        script.write_text(json.dumps([{"op": "blow_down", "vertex": 1}]))
        code, _, err = run(capsys, ["plumb", "moves", str(graph), str(script)])
        assert code == 2
        assert "move 0" in err


class TestSeifertCommands:
    def test_from_star(self, capsys, tmp_path):
        graph = tmp_path / "g.json"
        graph.write_text(json.dumps(star_graph_right(1, (2, 3)).to_dict()))
        code, out, _ = run(capsys, ["seifert", "from-star", str(graph)])
        assert code == 0
        data = json.loads(out)
        assert data["euler_number"] == "-5/6"
        assert data["singularity_link"] is True

    def test_from_star_with_center(self, capsys, tmp_path):
        graph = tmp_path / "g.json"
        graph.write_text(json.dumps(star_graph_right(0, (2, 2)).to_dict()))
        code, _, err = run(capsys, ["seifert", "from-star", str(graph)])
        assert code == 2  # ambiguous all-(-2) path
        code, out, _ = run(capsys, ["seifert", "from-star", str(graph), "--center", "0"])
        assert code == 0
        assert json.loads(out)["euler_number"] == "-1"

    def test_open_book(self, capsys):
        code, out, _ = run(capsys, ["seifert", "open-book", "--genus", "2", "--powers", "2,3"])
        assert code == 0
        data = json.loads(out)
        assert data["euler_number"] == "-5/6"
        assert data["homology"] == {"rank": 4, "torsion": [5]}


class TestMcgCommands:
    def test_action_full_relator(self, capsys, tmp_path):
        word = tmp_path / "w.txt"
        word.write_text("(c1 c2 c3^2 c2 c1)^2")
        code, out, _ = run(capsys, ["mcg", "action", "--word", str(word), "--surface", "1,0"])
        assert code == 0
        data = json.loads(out)
        assert data["letter_count"] == 12
        assert data["is_identity"] is True

    def test_action_with_curve_file(self, capsys, tmp_path):
        word = tmp_path / "w.txt"
        word.write_text("x")
        curves = tmp_path / "c.json"
        curves.write_text(json.dumps({"x": [1, 0]}))
        code, out, _ = run(
            capsys,
            ["mcg", "action", "--word", str(word), "--surface", "1,0", "--curves", str(curves)],
        )
        assert code == 0
        assert json.loads(out)["action"] == [[1, 1], [0, 1]]


class TestLfCommands:
    def test_chi_hyperelliptic(self, capsys):
        code, out, _ = run(capsys, ["lf", "chi", "--catalog", "hyperelliptic", "--param", "3"])
        assert code == 0
        data = json.loads(out)
        assert data["singular_fibers"] == 28
        assert data["chi_from_fibration"] == data["chi_from_blowups"] == 20

    def test_chi_korkmaz(self, capsys):
        code, out, _ = run(capsys, ["lf", "chi", "--catalog", "korkmaz", "--param", "2"])
        assert code == 0
        data = json.loads(out)
        assert data["fiber_genus"] == 5
        assert data["chi_from_fibration"] == data["chi_from_blowups"] == 4


class TestKnotsCommands:
    def test_alexander(self, capsys, tmp_path):
        matrix = tmp_path / "V.json"
        matrix.write_text(json.dumps(TREFOIL.to_dict()))
        code, out, _ = run(capsys, ["knots", "alexander", str(matrix)])
        assert code == 0
        data = json.loads(out)
        assert data["alexander"] == "t - 1 + t^-1"
        assert data["fibered_certificate"]["passes"] is True


class TestReportCommands:
    def test_figure1_json(self, capsys):
        code, out, _ = run(capsys, ["report", "figure1", "--genus", "2", "--powers", "2,2"])
        assert code == 0
        assert json.loads(out)["overall"] == "pass"

    def test_thm44_to_file(self, capsys, tmp_path):
        out_path = tmp_path / "r.json"
        code, _, _ = run(
            capsys,
            ["report", "thm44", "--g", "2", "--k", "2", "--r", "1", "--out", str(out_path)],
        )
        assert code == 0
        assert json.loads(out_path.read_text())["overall"] == "pass"

    def test_thm53_markdown(self, capsys):
        code, out, _ = run(
            capsys,
            ["report", "thm53", "--m", "1", "--n", "3", "--k", "2", "--format", "md"],
        )
        assert code == 0
        assert "Overall: PASS" in out

    def test_cor55(self, capsys):
        code, out, _ = run(capsys, ["report", "cor55", "--h", "7"])
        assert code == 0
        assert json.loads(out)["overall"] == "pass"

    def test_family_file(self, capsys, tmp_path):
        fam = tmp_path / "family.json"
        fam.write_text(json.dumps([V.to_dict() for V in demo_family(2)]))
        code, _, _ = run(
            capsys,
            ["report", "thm44", "--g", "2", "--k", "2", "--r", "1", "--family", str(fam)],
        )
        assert code == 0

    def test_failing_verdict_exits_nonzero(self, capsys, tmp_path):
        fam = tmp_path / "family.json"
        member = demo_family(2)[0].to_dict()
        duplicate = dict(member, name="again")
        fam.write_text(json.dumps([member, duplicate]))
        code, out, _ = run(
            capsys,
            ["report", "thm44", "--g", "2", "--k", "2", "--r", "1", "--family", str(fam)],
        )
        assert code == 1
        assert json.loads(out)["overall"] == "FAIL"

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run(
            capsys,
            ["report", "thm44", "--g", "2", "--k", "2", "--r", "1", "--family", "/nope.json"],
        )
        assert code == 2
        assert "error" in err
