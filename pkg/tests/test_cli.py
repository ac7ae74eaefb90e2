import json

import pytest

from conftest import P, SYSTEMS, WXYZ, XY
from triset import (
    NonIntegerCoefficientError,
    SystemSyntaxError,
    UndeclaredVariableError,
    index_tuple,
    options_for,
    parse_poly,
    parse_system,
    render_report_json,
    render_report_table,
    render_system,
    run_benchmark,
    run_system,
)
from triset.cli import main


def test_parse_quadrics_system():
    order, polys = parse_system((SYSTEMS / "quadrics3.sys").read_text())
    assert order.names == ("w", "x", "y", "z")
    assert polys[0] == P(WXYZ, "x^2 + y^2 + z^2 - w^2")
    assert len(polys) == 3


def test_parse_minimal_system():
    order, polys = parse_system("vars: x\nx - 1\n")
    assert order.names == ("x",)
    assert [str(p) for p in polys] == ["x - 1"]


def test_parse_undeclared_variable():
    with pytest.raises(UndeclaredVariableError) as err:
        parse_system("vars: x\nx + q\n")
    assert err.value.name == "q"
    assert err.value.line == 2


def test_parse_syntax_and_coefficient_errors():
    with pytest.raises(SystemSyntaxError):
        parse_system("vars: x\nx + + \n")
    with pytest.raises(SystemSyntaxError):
        parse_system("x - 1\n")
    with pytest.raises(NonIntegerCoefficientError):
        parse_system("vars: x\nx/2\n")
    with pytest.raises(NonIntegerCoefficientError):
        parse_system("vars: x\n1.5*x\n")
    with pytest.raises(SystemSyntaxError):
        parse_system("vars: x\nx ^ -2\n")
    with pytest.raises(SystemSyntaxError):
        parse_system("vars: x y\nx y\n")  # juxtaposition is not multiplication


def test_render_parse_fixpoint_on_corpus():
    for path in sorted(SYSTEMS.glob("*.sys")):
        order, polys = parse_system(path.read_text())
        text = render_system(order, polys)
        order2, polys2 = parse_system(text)
        assert order2.names == order.names
        assert polys2 == polys
        assert render_system(order2, polys2) == text


def _strip_millis(payload):
    for entry in payload:
        entry.pop("millis", None)
    return payload


def test_reports_deterministic_modulo_wall_time():
    path = str(SYSTEMS / "circle_line.sys")
    r1, e1 = run_benchmark([path], algorithms=("charset", "rittwu"))
    r2, e2 = run_benchmark([path], algorithms=("charset", "rittwu"))
    assert not e1 and not e2
    a = _strip_millis(json.loads(render_report_json(r1)))
    b = _strip_millis(json.loads(render_report_json(r2)))
    assert a == b


def test_benchmark_runs_each_algorithm_per_system():
    path = str(SYSTEMS / "quadrics3.sys")
    reports, errors = run_benchmark([path], algorithms=("charset",))
    assert not errors
    assert len(reports) == 1
    assert reports[0].status == "ok"
    rows = [(r["degrees"], r["nops"], r["lm"], r["maxDigits"]) for r in reports[0].output]
    assert rows[0] == ([8, 12, 0, 0], 23, "x^12", 2)


def test_benchmark_empty_corpus():
    reports, errors = run_benchmark([])
    assert reports == [] and errors == []


def test_benchmark_collects_parse_errors_and_continues():
    import tempfile, os

    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.sys")
        with open(bad, "w") as fh:
            fh.write("vars: x\nx + q\n")
        good = str(SYSTEMS / "sym2.sys")
        reports, errors = run_benchmark([bad, good])
        assert len(errors) == 1 and errors[0]["system"] == "bad"
        assert len(reports) == 1 and reports[0].system == "sym2"


def test_bound_zero_report_equals_plain_flow_report():
    order, polys = parse_system((SYSTEMS / "circle_line.sys").read_text())
    bounded = run_system("circle_line", order, polys, "charset", options_for("charset", cond="bound=0"))
    plain = run_system("circle_line", order, polys, "rittwu", options_for("rittwu"))
    a, b = bounded.to_dict(), plain.to_dict()
    for d in (a, b):
        d.pop("millis")
        d.pop("algorithm")
        d.pop("options")
    assert a == b


def test_index_tuples_match_remeasured_outputs():
    order, polys = parse_system((SYSTEMS / "quadrics3.sys").read_text())
    report = run_system("quadrics3", order, polys, "charset")
    for rec in report.output:
        back = parse_poly(order, rec["poly"])
        again = index_tuple(back)
        assert again["degrees"] == rec["degrees"]
        assert again["nops"] == rec["nops"]
        assert again["lm"] == rec["lm"]
        assert again["maxDigits"] == rec["maxDigits"]


def test_contradictory_report_shape():
    order, polys = parse_system((SYSTEMS / "units.sys").read_text())
    report = run_system("units", order, polys, "charset")
    assert report.status == "contradictory"
    assert len(report.output) == 1
    assert report.output[0]["lm"] == "1"


def test_table_rendering_contains_index_rows():
    order, polys = parse_system((SYSTEMS / "quadrics3.sys").read_text())
    report = run_system("quadrics3", order, polys, "charset")
    table = render_report_table([report])
    assert "x^12" in table and "w^2x^3y" in table
    assert "status: ok" in table


def test_cli_exit_codes(tmp_path, capsys):
    ok = main([str(SYSTEMS / "circle_line.sys"), "--format", "json"])
    assert ok == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["system"] == "circle_line"

    contradictory = main([str(SYSTEMS / "units.sys")])
    capsys.readouterr()
    assert contradictory == 1

    bad = tmp_path / "bad.sys"
    bad.write_text("vars: x\nx + q\n")
    assert main([str(bad)]) == 2
    capsys.readouterr()


def test_cli_figures_written(tmp_path, capsys):
    out = tmp_path / "figs"
    code = main(
        [
            str(SYSTEMS / "circle_line.sys"),
            "--alg",
            "charset",
            "--alg",
            "rittwu",
            "--figures",
            str(out),
            "--format",
            "json",
        ]
    )
    capsys.readouterr()
    assert code == 0
    assert (out / "circle_line.png").exists()


def test_cli_trace_flag(capsys):
    code = main([str(SYSTEMS / "sym2.sys"), "--trace", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert "trace" in payload[0]
