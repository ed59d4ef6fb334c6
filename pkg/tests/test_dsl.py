"""Script language: lexer, parser, evaluator, report, corpus."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indivisibles import dsl

from conftest import SCRIPTS_DIR

CORPUS = sorted(
    p for p in SCRIPTS_DIR.glob("*.igeo") if p.stem not in ("designed_failure", "parse_error")
)


class TestParse:
    def test_smallest_program(self):
        ast = dsl.parse("let s = sphere(r=1);")
        assert len(ast.statements) == 1
        stmt = ast.statements[0]
        assert isinstance(stmt, dsl.LetBinding)
        assert stmt.name == "s"
        assert stmt.expr == dsl.Call("sphere", (("r", 1.0),))

    def test_assertion_with_arithmetic(self):
        ast = dsl.parse("assert_close(volume(s), (2/3)*volume(c), tol=1e-12);")
        stmt = ast.statements[0]
        assert isinstance(stmt, dsl.Assertion)
        assert stmt.tolerance == 1e-12
        assert isinstance(stmt.right, dsl.BinOp) and stmt.right.op == "*"

    def test_error_position_missing_number(self):
        with pytest.raises(dsl.ParseError) as err:
            dsl.parse("let s = sphere(r=);")
        assert err.value.line == 1
        assert err.value.column == 18
        assert "number" in err.value.expected
        assert err.value.found == ")"

    @pytest.mark.parametrize(
        "source",
        [
            "let = sphere(r=1);",
            "let s sphere(r=1);",
            "assert_close(volume(s) 1, tol=1);",
            "assert_close(1, 1, tol=);",
            "let s = sphere(r=1)",
            "sphere(r=1);",
            "let s = sphere(r=1); let t = ?;",
            "assert_close(1, 1, tol=-1);",
        ],
    )
    def test_error_positions_point_into_source(self, source):
        with pytest.raises(dsl.ParseError) as err:
            dsl.parse(source)
        lines = source.split("\n")
        assert 1 <= err.value.line <= len(lines)
        assert 1 <= err.value.column <= len(lines[err.value.line - 1]) + 1

    def test_comments_are_skipped(self):
        ast = dsl.parse("# heading\nlet s = sphere(r=1); # trailing\n")
        assert len(ast.statements) == 1

    def test_token_positions_one_based(self):
        toks = dsl.tokenize("let s = 1;")
        assert toks[0].line == 1 and toks[0].column == 1
        assert all(t.lexeme for t in toks)

    @given(st.text(alphabet=st.sampled_from("lets=();,.#\n 0123456789+-*/abxyzpi_"), max_size=80))
    @settings(max_examples=400, deadline=None)
    def test_parser_never_crashes(self, source):
        # arbitrary input either parses or fails with an in-source position
        try:
            dsl.parse(source)
        except dsl.ParseError as err:
            lines = source.split("\n")
            assert 1 <= err.line <= len(lines)
            assert 1 <= err.column <= len(lines[err.line - 1]) + 1


class TestEvaluate:
    def test_sphere_vs_cylinder(self):
        report = dsl.run_script(
            "let s=sphere(r=1); let c=cylinder(r=1,h=2); "
            "assert_close(volume(s),(2/3)*volume(c),tol=1e-12);"
        )
        assert report.overall_pass
        rec = report.records[0]
        assert rec.left_value == pytest.approx(4.1887902047863905, rel=1e-12)
        assert rec.right_value == pytest.approx(4.1887902047863905, rel=1e-12)

    def test_designed_failure_reports_difference(self):
        report = dsl.run_script("assert_close(area(disk(r=1)), 4, tol=1e-6);")
        assert not report.overall_pass
        rec = report.records[0]
        assert not rec.passed
        assert rec.difference == pytest.approx(abs(math.pi - 4.0), rel=1e-12)

    def test_shear_script(self):
        report = dsl.run_script(
            "let t = shear(triangle((0,0),(4,0),(1,3)), base_y=0, shift=3); "
            "assert_close(area(t), 6, tol=1e-12);"
        )
        assert report.overall_pass

    def test_execution_continues_past_failures(self):
        report = dsl.run_script(
            "assert_close(1, 2, tol=1e-9);\n"
            "assert_close(3, 3, tol=1e-9);\n"
        )
        assert [r.passed for r in report.records] == [False, True]
        assert not report.overall_pass

    def test_unbound_name(self):
        with pytest.raises(dsl.ScriptNameError) as err:
            dsl.run_script("assert_close(volume(q), 1, tol=1.0);")
        assert err.value.span.line == 1

    def test_volume_of_region_is_type_error(self):
        with pytest.raises(dsl.ScriptTypeError):
            dsl.run_script("let d = disk(r=1); assert_close(volume(d), 1, tol=1.0);")

    def test_area_of_solid_is_type_error(self):
        with pytest.raises(dsl.ScriptTypeError):
            dsl.run_script("let s = sphere(r=1); assert_close(area(s), 1, tol=1.0);")

    def test_geometry_error_carries_span(self):
        with pytest.raises(dsl.ScriptGeometryError) as err:
            dsl.run_script("let p = profile((-0.5,0),(1,0),(1,1));")
        assert err.value.span.line == 1
        assert err.value.span.column >= 9

    def test_unknown_constructor(self):
        with pytest.raises(dsl.ScriptNameError):
            dsl.run_script("let s = dodecahedron(r=1);")

    def test_empty_source(self):
        report = dsl.run_script("")
        assert report.overall_pass
        assert report.records == ()

    def test_bindings_visible_to_later_statements(self):
        report = dsl.run_script(
            "let d = disk(r=2);\n"
            "let c = cylinder(d, h=1);\n"
            "assert_close(volume(c), 4*pi, tol=1e-12);\n"
        )
        assert report.overall_pass

    def test_profile_constructor_and_revolve(self):
        report = dsl.run_script(
            "let p = profile((1,0), (2,0), (2,1), (1,1));\n"
            "assert_close(centroid_rho(p), 1.5, tol=1e-12);\n"
            "assert_close(volume(revolve(p)), 3*pi, tol=1e-12);\n"
        )
        assert report.overall_pass

    def test_evaluation_deterministic(self):
        src = (SCRIPTS_DIR / "guldin.igeo").read_text()
        first = dsl.run_script(src)
        second = dsl.run_script(src)
        assert first == second


class TestRoundTrip:
    @pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
    def test_corpus_round_trips(self, path):
        ast = dsl.parse(path.read_text())
        printed = dsl.format_script(ast)
        assert dsl.parse(printed) == ast

    def test_negative_numbers_round_trip(self):
        src = "let t = triangle((-1,-2),(3,0),(0,4)); assert_close(area(t), 11, tol=1e-9);"
        ast = dsl.parse(src)
        assert dsl.parse(dsl.format_script(ast)) == ast

    def test_nested_arithmetic_round_trips(self):
        src = "assert_close(1 + 2*3 - 4/5, -(2 - 3), tol=0.5);"
        ast = dsl.parse(src)
        assert dsl.parse(dsl.format_script(ast)) == ast


class TestCorpus:
    @pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
    def test_script_passes(self, path):
        report = dsl.run_script(path.read_text())
        assert report.records, f"{path.name} asserts nothing"
        assert report.overall_pass

    def test_corpus_has_twelve_scripts(self):
        assert len(CORPUS) == 12

    def test_designed_failure_fails(self):
        report = dsl.run_script((SCRIPTS_DIR / "designed_failure.igeo").read_text())
        assert not report.overall_pass

    def test_parse_error_fixture_raises(self):
        with pytest.raises(dsl.ParseError) as err:
            dsl.parse((SCRIPTS_DIR / "parse_error.igeo").read_text())
        assert err.value.line == 2
        assert err.value.column == 18
