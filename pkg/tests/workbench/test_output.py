import io
import json

import pytest

from graphcx.chainspace import enumerate_basis
from graphcx.homology import HomologyRow
from graphcx.workbench.output import (
    as_atomic,
    format_classes,
    format_report,
    format_table,
    read_input,
    tmp_fname,
    write_output,
)

REPORT = {
    "schema": 1,
    "seed": 0,
    "samples": 20,
    "loops": [3],
    "passed": False,
    "entries": [
        {"identity": "jacobi", "inputs": ["a", "b", "c"], "residual_terms": 0, "passed": True},
        {"identity": "bv", "inputs": ["a"], "residual_terms": 2, "passed": False},
    ],
}


def test_tmp_fname():
    name = tmp_fname("report")
    assert name.startswith("report.")
    assert name.endswith(".tmp")
    assert name != tmp_fname("report")


def test_as_atomic(memfs):
    with as_atomic(memfs, "/out/result.txt", create_parents=True) as tmp_path:
        assert tmp_path.startswith("/out/")
        memfs.pipe_file(tmp_path, b"data")
    assert memfs.cat_file("/out/result.txt") == b"data"
    assert memfs.ls("/out", detail=False) == ["/out/result.txt"]


def test_as_atomic_cleans_up(memfs):
    with pytest.raises(RuntimeError):  # noqa: PT012
        with as_atomic(memfs, "/out/result.txt", create_parents=True) as tmp_path:
            memfs.pipe_file(tmp_path, b"partial")
            raise RuntimeError
    assert not memfs.exists("/out/result.txt")
    assert memfs.ls("/out", detail=False) == []


def test_write_output_to_stream():
    stream = io.StringIO()
    write_output("text\n", stream=stream)
    assert stream.getvalue() == "text\n"


def test_write_output_to_url(memfs):
    write_output("text\n", "memory://reports/out.txt")
    assert memfs.cat_file("/reports/out.txt") == b"text\n"
    assert read_input("memory://reports/out.txt") == "text\n"


def test_format_classes(loop3):
    _, trivalent = loop3
    text = format_classes(trivalent, "text")
    lines = text.splitlines()
    assert len(lines) == 2
    assert all(line.endswith("bridges=0") for line in lines)

    csv = format_classes(trivalent, "csv").splitlines()
    assert csv[0] == "loop_degree,vertices,code,aut_order,bridges"
    assert all(row.startswith("3,4,") for row in csv[1:])

    rows = json.loads(format_classes(trivalent, "json"))
    assert [row["code"] for row in rows] == [cls.compact_code for cls in trivalent]
    assert {row["aut_order"] for row in rows} == {cls.aut_order for cls in trivalent}


def test_format_classes_theta():
    (theta,) = enumerate_basis(2, 2)
    assert format_classes([theta], "text") == f"{theta.compact_code}\taut=12\tbridges=0\n"


@pytest.mark.parametrize(
    "fmt,expected",
    [
        ("text", "loop_degree vertices dim_basis betti\n3 4 2 1\n"),
        ("csv", "loop_degree,vertices,dim_basis,betti\n3,4,2,1\n"),
        (
            "json",
            '[\n  {\n    "loop_degree": 3,\n    "vertices": 4,\n'
            '    "dim_basis": 2,\n    "betti": 1\n  }\n]\n',
        ),
    ],
)
def test_format_table(fmt, expected):
    assert format_table(HomologyRow._fields, [HomologyRow(3, 4, 2, 1)], fmt) == expected


def test_format_report():
    assert json.loads(format_report(REPORT)) == REPORT
    assert format_report(REPORT, "text") == (
        "PASS jacobi [a | b | c] residual=0\nFAIL bv [a] residual=2\n"
    )
    assert format_report(REPORT, "csv").splitlines() == [
        "identity,inputs,residual_terms,passed",
        "jacobi,a | b | c,0,True",
        "bv,a,2,False",
    ]
