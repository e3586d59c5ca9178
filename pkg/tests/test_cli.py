import json

import pytest

from braidgate.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestCatalogCommand:
    def test_full_listing(self, capsys):
        code, report = run_json(capsys, "catalog")
        assert code == 0
        assert report["count"] == 38
        assert report["classes"] == 12

    def test_class_filter(self, capsys):
        code, report = run_json(capsys, "catalog", "--class", "3")
        assert code == 0
        assert report["count"] == 8
        assert all(row["id"].startswith("C3.") for row in report["rows"])

    def test_hietarinta_listing(self, capsys):
        code, report = run_json(capsys, "catalog", "--hietarinta")
        assert code == 0
        assert report["count"] == 11

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "catalog", "--class", "2", "--csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2  # header + one row


class TestVerifyCommand:
    def test_class1_passes(self, capsys):
        code, report = run_json(
            capsys, "verify", "--class", "C1.0", "--params", "h1=1,h4=2,h5=3,h8=4"
        )
        assert code == 0
        assert report["checks"]["ybe"]["pass"]

    def test_all_ones_fails(self, capsys):
        code, report = run_json(capsys, "verify", "--xtype", "1,1,1,1,1,1,1,1")
        assert code == 1
        assert not report["checks"]["ybe"]["pass"]

    def test_enhancements_flag(self, capsys):
        code, report = run_json(
            capsys, "verify", "--class", "C6.0",
            "--params", "h1=1,h8=2,h2=1", "--enhancements",
        )
        assert code == 0
        recipes = report["checks"]["enhancements"]
        assert len(recipes) == 5
        assert all(v["pass"] for v in recipes.values())

    def test_malformed_spec_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--class", "C1.0", "--params", "h1")
        assert code == 2
        code, _, err = run(capsys, "verify")
        assert code == 2
        code, _, err = run(capsys, "verify", "--class", "C77.0", "--params", "h1=1")
        assert code == 2


class TestOperatorSpecs:
    def test_complex_literal_forms(self, capsys):
        code1, rep1 = run_json(
            capsys, "invariants", "--class", "C12.0", "--params", "h1=2+0i,h2=1"
        )
        code2, rep2 = run_json(
            capsys, "invariants", "--class", "C12.0", "--params", "h1=[2,0],h2=[1,0]"
        )
        assert code1 == code2 == 0
        assert rep1["invariants"] == rep2["invariants"]

    def test_matrix_spec(self, capsys):
        rows = json.dumps([[[1, 0], [0, 0], [0, 0], [0, 0]],
                           [[0, 0], [1, 0], [0, 0], [0, 0]],
                           [[0, 0], [0, 0], [1, 0], [0, 0]],
                           [[0, 0], [0, 0], [0, 0], [1, 0]]])
        code, report = run_json(capsys, "invariants", "--matrix", rows)
        assert code == 0
        assert report["invariants"]["I1"] == [4.0, 0.0]

    def test_two_specs_rejected(self, capsys):
        code, _, _ = run(capsys, "invariants", "--class", "C1.0",
                         "--xtype", "1,0,0,0,0,0,0,1", "--params", "h1=1")
        assert code == 2


class TestLinkpolyCommand:
    def test_class1_value(self, capsys):
        code, report = run_json(
            capsys, "linkpoly", "--recipe", "C1.I",
            "--params", "h1=1,h4=2,h5=2", "--word", "s1^2",
        )
        assert code == 0
        assert report["value"] == [10.0, 0.0]
        assert report["writhe"] == 2
        assert report["strands"] == 2

    def test_class7_three_strand_closed_form(self, capsys):
        # h1=1, h3=2: lam ratio -1/3, so L(s1^2 s2^2) = 2 (10/9)^2 = 200/81
        code, report = run_json(
            capsys, "linkpoly", "--recipe", "C7.I",
            "--params", "h1=1,h2=1,h3=2", "--word", "s1^2 s2^2",
        )
        assert code == 0
        assert abs(report["value"][0] - 200 / 81) < 1e-9
        assert abs(report["value"][1]) < 1e-9
        assert report["strands"] == 3

    def test_class3_vanishes(self, capsys):
        code, report = run_json(
            capsys, "linkpoly", "--recipe", "C3.Z",
            "--params", "h1=1,h7=2,h8=3", "--word", "s1^5",
        )
        assert code == 0
        assert abs(report["value"][0]) < 1e-9 and abs(report["value"][1]) < 1e-9

    def test_unknown_recipe(self, capsys):
        code, _, _ = run(capsys, "linkpoly", "--recipe", "C1.X", "--word", "s1^2")
        assert code == 2

    def test_missing_recipe_params(self, capsys):
        code, _, _ = run(capsys, "linkpoly", "--recipe", "C1.I",
                         "--params", "h1=1", "--word", "s1^2")
        assert code == 2


class TestEpowerCommand:
    BELL = ("0.7071067811865476,0.7071067811865476,0.7071067811865476,"
            "0.7071067811865476,-0.7071067811865476,0.7071067811865476,"
            "-0.7071067811865476,0.7071067811865476")

    def test_bell(self, capsys):
        code, report = run_json(capsys, "epower", "--xtype", self.BELL)
        assert code == 0
        assert abs(report["closed"] - 1 / 9) < 1e-10
        assert abs(report["quadrature"] - 1 / 9) < 1e-10
        assert report["difference"] < 1e-10

    def test_swap(self, capsys):
        code, report = run_json(capsys, "epower", "--xtype", "1,0,0,1,1,0,0,1")
        assert code == 0
        assert report["closed"] < 1e-14

    def test_hietarinta_h13(self, capsys):
        code, report = run_json(
            capsys, "epower", "--hietarinta", "H1,3", "--params", "k=1,p=1,q=0"
        )
        assert code == 0
        assert abs(report["quadrature"] - 1 / 9) < 1e-9

    def test_closed_only_rejects_non_xtype(self, capsys):
        code, _, _ = run(
            capsys, "epower", "--hietarinta", "H2,3",
            "--params", "k=1,p=1,q=2,s=0", "--closed-only",
        )
        assert code == 2


class TestClassifyCommand:
    @pytest.mark.parametrize(
        "entry,family",
        [("C1.0", "H3,1"), ("C2.0", "H1,4"), ("C12.0", "H1,1")],
    )
    def test_families(self, capsys, entry, family):
        code, report = run_json(capsys, "classify", "--class", entry)
        assert code == 0
        assert report["family"] == family

    def test_unknown_is_flagged(self, capsys):
        code, _, _ = run(capsys, "classify", "--class", "C99.0")
        assert code == 2  # unknown id is a spec error


class TestOrbitCommand:
    def test_generic_rank(self, capsys):
        code, report = run_json(capsys, "orbit", "--xtype", "1,2,3,4,5,6,7,8")
        assert code == 0
        assert report["rank"] == 6
        assert report["generators"]["Z1"]["preserves_xtype"]
        assert not report["generators"]["X1"]["preserves_xtype"]


class TestDeterminism:
    def test_identical_json_reruns(self, capsys):
        argv = ["enhance", "--class", "C11.0", "--params", "h7=1,h8=2",
                "--starts", "30", "--seed", "7", "--json"]
        code1 = main(argv)
        out1 = capsys.readouterr().out
        code2 = main(argv)
        out2 = capsys.readouterr().out
        assert code1 == code2 == 0
        assert out1 == out2

    def test_env_tolerance(self, capsys, monkeypatch):
        monkeypatch.setenv("BRAIDGATE_TOL", "1e-2")
        code, report = run_json(capsys, "verify", "--xtype", "1,0,0,1,1,0,0,1")
        assert code == 0
        assert report["tolerance"] == 1e-2


class TestReportAll(object):
    def test_writes_golden_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "report-all", "--outdir", str(tmp_path), "--seed", "3")
        assert code == 0
        blob = json.loads((tmp_path / "catalog_report.json").read_text())
        assert len(blob["entries"]) == 38
        assert all(v["ybe_pass"] for v in blob["entries"].values())
