"""Text formats for magmas, groups, pair maps and coset data.

All formats are line based::

    name: Z6          # optional
    n: 6
    table:
    0 1 2 3 4 5
    ...

Rows may be separated by spaces or commas; blank lines and ``#`` comments
are ignored. Unknown fields are rejected. Canonical output uses single
spaces and newline-terminated rows, in the field order shown by the
``format_*`` functions.
"""
from __future__ import annotations

import re
from pathlib import Path

from .algebra import Group, Magma, SubgroupDescriptor, group_from_magma, normalized
from .errors import ParseError, PentagonError
from .pentagon import PairMap

__all__ = [
    "parse_fields", "parse_magma", "parse_group", "parse_pairmap",
    "parse_coset_datum", "parse_table_file", "format_magma", "format_group",
    "format_pairmap", "format_coset_datum", "format_elements", "read_text",
]

_SEP = re.compile(r"[,\s]+")
_FIELD = re.compile(r"^([A-Za-z_]+)\s*:\s*(.*)$")

TABLE_KEYS = {"table", "dot", "star"}


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _ints(text, lineno):
    parts = [p for p in _SEP.split(text.strip()) if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer entry in {text.strip()!r}", lineno) from None


def parse_fields(text: str, allowed: set[str]) -> tuple[dict, dict]:
    """Split ``text`` into field values and the line number of each field.

    Table fields hold a list of ``(lineno, row)`` pairs; the table size is
    taken from ``n``, which must precede them.
    """
    lines = [(i + 1, raw.split("#", 1)[0].strip()) for i, raw in enumerate(text.splitlines())]
    lines = [(i, s) for i, s in lines if s]
    values, where = {}, {}
    pos = 0
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        m = _FIELD.match(line)
        if not m:
            raise ParseError(f"expected 'field: value', got {line!r}", lineno)
        key, rest = m.group(1), m.group(2).strip()
        if key not in allowed:
            raise ParseError(f"unknown field {key!r}", lineno)
        if key in values:
            raise ParseError(f"duplicate field {key!r}", lineno)
        where[key] = lineno
        if key in TABLE_KEYS:
            if "n" not in values:
                raise ParseError(f"field 'n' must precede {key!r}", lineno)
            if rest:
                raise ParseError(f"rows of {key!r} start on the next line", lineno)
            n = values["n"]
            rows = lines[pos:pos + n]
            if len(rows) < n or any(_FIELD.match(r) for _, r in rows):
                raise ParseError(f"{key!r} needs {n} rows", lineno)
            values[key] = [(i, _ints(r, i)) for i, r in rows]
            pos += n
        elif key == "n":
            vals = _ints(rest, lineno)
            if len(vals) != 1 or vals[0] < 1:
                raise ParseError("'n' must be a positive integer", lineno)
            values[key] = vals[0]
        elif key in ("K", "R"):
            values[key] = _ints(rest, lineno)
        else:
            values[key] = rest
    return values, where


def _table(values, key):
    n = values["n"]
    rows = values[key]
    for r, (lineno, row) in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"{key} row {r} has {len(row)} entries, expected {n}", lineno)
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise ParseError(
                    f"{key} entry {v} at row {r}, column {c} is outside [0, {n})", lineno)
    return [row for _, row in rows]


def _require(values, keys, kind):
    for k in keys:
        if k not in values:
            raise ParseError(f"{kind} file is missing field {k!r}")


def parse_magma(text: str) -> Magma:
    values, _ = parse_fields(text, {"name", "n", "table"})
    _require(values, ("n", "table"), "table")
    return Magma(_table(values, "table"), values.get("name") or None)


def parse_group(text: str) -> Group:
    m = parse_magma(text)
    try:
        return group_from_magma(m)
    except PentagonError as exc:
        raise ParseError(f"table is not a group: {exc}") from exc


def parse_pairmap(text: str) -> tuple[PairMap, str | None]:
    """Return the map and the optional ``group`` reference it carries."""
    values, _ = parse_fields(text, {"name", "group", "n", "dot", "star"})
    _require(values, ("n", "dot", "star"), "pairmap")
    s = PairMap(_table(values, "dot"), _table(values, "star"),
                values.get("name") or None)
    return s, values.get("group") or None


def parse_coset_datum(text: str) -> tuple[tuple[int, ...], tuple[int, ...], str | None]:
    values, _ = parse_fields(text, {"group", "K", "R"})
    _require(values, ("K", "R"), "coset")
    return tuple(sorted(values["K"])), tuple(sorted(values["R"])), values.get("group") or None


def parse_table_file(path, kind: str | None = None):
    """Parse ``path`` into a :class:`Magma`, :class:`Group` or :class:`PairMap`.

    Files with ``dot``/``star`` are pair maps; ``table`` files become a Group
    when the group axioms hold (or ``kind="group"`` demands it), else a Magma.
    """
    text = read_text(path)
    if re.search(r"^\s*(dot|star)\s*:", text, re.MULTILINE) or kind == "pairmap":
        return parse_pairmap(text)[0]
    m = parse_magma(text)
    if kind == "magma":
        return m
    try:
        return group_from_magma(m)
    except PentagonError as exc:
        if kind == "group":
            raise ParseError(f"table is not a group: {exc}") from exc
        return m


def _rows(table) -> str:
    return "".join(" ".join(map(str, row)) + "\n" for row in table.tolist())


def format_magma(m: Magma) -> str:
    head = f"name: {m.name}\n" if m.name else ""
    return f"{head}n: {m.n}\ntable:\n{_rows(m.table)}"


def format_group(g: Group) -> str:
    """Canonical group text, relabelled so the identity is element 0."""
    return format_magma(normalized(g).magma)


def format_pairmap(s: PairMap, group_ref: str | None = None) -> str:
    head = f"name: {s.name}\n" if s.name else ""
    if group_ref:
        head += f"group: {group_ref}\n"
    return f"{head}n: {s.n}\ndot:\n{_rows(s.dot)}star:\n{_rows(s.star)}"


def format_elements(elems) -> str:
    return " ".join(map(str, elems))


def format_coset_datum(K, R, group_ref: str | None = None) -> str:
    if isinstance(K, SubgroupDescriptor):
        K = K.elements
    head = f"group: {group_ref}\n" if group_ref else ""
    return f"{head}K: {format_elements(K)}\nR: {format_elements(R)}\n"

