"""Formatting of command results and atomic writes through fsspec."""

import csv
import io
import json
import logging
import posixpath
import sys
from collections.abc import Iterable, Iterator, Sequence
from contextlib import contextmanager, suppress
from secrets import token_urlsafe
from typing import TYPE_CHECKING, Any, Optional, TextIO

from fsspec.core import url_to_fs

from graphcx.graphcore import GraphClass

if TYPE_CHECKING:
    from fsspec import AbstractFileSystem

logger = logging.getLogger(__name__)

CLASS_FIELDS = ("loop_degree", "vertices", "code", "aut_order", "bridges")


def tmp_fname(prefix: str = "") -> str:
    """Temporary name for a partial write"""
    return f"{prefix}.{token_urlsafe(16)}.tmp"


@contextmanager
def as_atomic(
    fs: "AbstractFileSystem", path: str, create_parents: bool = False
) -> Iterator[str]:
    parent = fs._parent(path)
    if create_parents:
        fs.makedirs(parent, exist_ok=True)

    tmp_path = posixpath.join(parent, tmp_fname())
    try:
        yield tmp_path
    except BaseException:
        with suppress(FileNotFoundError):
            fs.rm_file(tmp_path)
        raise
    else:
        fs.mv(tmp_path, path)


def write_output(
    text: str, url: Optional[str] = None, stream: Optional[TextIO] = None
) -> None:
    if url is None:
        (stream or sys.stdout).write(text)
        return
    fs, path = url_to_fs(url)
    with as_atomic(fs, path, create_parents=True) as tmp_path:
        fs.pipe_file(tmp_path, text.encode())
    logger.info("wrote %d bytes to %s", len(text), url)


def read_input(url: str) -> str:
    fs, path = url_to_fs(url)
    return fs.cat_file(path).decode()


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def class_row(graph_class: GraphClass) -> tuple:
    return (
        graph_class.loop_degree,
        graph_class.vertex_count,
        graph_class.compact_code,
        graph_class.aut_order,
        int(graph_class.has_bridge),
    )


def format_classes(classes: Iterable[GraphClass], fmt: str) -> str:
    rows = [class_row(cls) for cls in classes]
    if fmt == "csv":
        return _csv(CLASS_FIELDS, rows)
    if fmt == "json":
        return _json([dict(zip(CLASS_FIELDS, row)) for row in rows])
    return "".join(f"{code}\taut={aut}\tbridges={b}\n" for _, _, code, aut, b in rows)


def format_table(header: Sequence[str], rows: Iterable[Sequence[Any]], fmt: str) -> str:
    rows = [tuple(row) for row in rows]
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return _json([dict(zip(header, row)) for row in rows])
    lines = [" ".join(header)]
    lines.extend(" ".join(str(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def format_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return _json(report)
    header = ("identity", "inputs", "residual_terms", "passed")
    rows = [
        (e["identity"], " | ".join(e["inputs"]), e["residual_terms"], e["passed"])
        for e in report["entries"]
    ]
    if fmt == "csv":
        return _csv(header, rows)
    lines = [
        f"{'PASS' if passed else 'FAIL'} {name} [{inputs}] residual={terms}"
        for name, inputs, terms, passed in rows
    ]
    return "\n".join(lines) + "\n"
