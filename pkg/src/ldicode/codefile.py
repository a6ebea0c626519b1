"""Plain-text code files.

::

    # comment
    q 2
    n 4
    k 4
    c 1              (optional)
    d 3              (optional)
    entries unbounded  (optional: keep integers as written)
    0 1 0 0 | 1 0 1 0
    ...

A ``|`` between the halves is allowed and ignored.  Without ``entries
unbounded`` every entry is reduced into ``[0, q)`` on reading.
"""

from __future__ import annotations

from .errors import DimensionMismatch, HeaderMismatch, NonPrimeModulus, ParseError
from .modular import PrimeModulus
from .pauli import CodeSpec

_HEADER_KEYS = ("q", "n", "k", "c", "d")


def parse_code_file(text: str) -> CodeSpec:
    header: dict[str, int] = {}
    unbounded = False
    rows: list[list[int]] = []
    row_lines: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        key = words[0]
        if key in _HEADER_KEYS:
            if rows:
                raise ParseError(f"header key {key!r} after matrix rows", lineno, raw.find(key) + 1)
            if key in header:
                raise ParseError(f"duplicate header key {key!r}", lineno, raw.find(key) + 1)
            if len(words) != 2:
                raise ParseError(f"header {key!r} takes exactly one integer", lineno)
            header[key] = _int(words[1], lineno, raw)
            continue
        if key == "entries":
            if words[1:] != ["unbounded"]:
                raise ParseError("expected 'entries unbounded'", lineno, 1)
            unbounded = True
            continue
        row = []
        for w in words:
            if w == "|":
                continue
            row.append(_int(w, lineno, raw))
        rows.append(row)
        row_lines.append(lineno)

    for key in ("q", "n", "k"):
        if key not in header:
            raise ParseError(f"missing header line '{key} <int>'")
    q, n, k = header["q"], header["n"], header["k"]
    try:
        q = PrimeModulus(q)
    except NonPrimeModulus as exc:
        raise NonPrimeModulus(f"header q: {exc}") from None
    if n < 1 or k < 1:
        raise ParseError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if len(rows) != k:
        raise HeaderMismatch(f"header says k={k} but the body has {len(rows)} rows")
    for row, lineno in zip(rows, row_lines):
        if len(row) != 2 * n:
            raise HeaderMismatch(f"row has {len(row)} entries, expected 2n={2 * n}", lineno)
    try:
        return CodeSpec(q, rows, unbounded=unbounded, c=header.get("c"), d=header.get("d"))
    except DimensionMismatch as exc:
        raise HeaderMismatch(str(exc)) from None


def _int(word: str, lineno: int, raw: str) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"expected an integer, got {word!r}", lineno, raw.find(word) + 1) from None


def format_code_file(code: CodeSpec, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines += [f"q {int(code.q)}", f"n {code.n}", f"k {code.k}"]
    if code.c is not None:
        lines.append(f"c {code.c}")
    if code.d is not None:
        lines.append(f"d {code.d}")
    if code.unbounded:
        lines.append("entries unbounded")
    n = code.n
    width = max(len(str(int(v))) for v in code.generators.flat)
    for row in code.generators.tolist():
        cells = [str(v).rjust(width) for v in row]
        lines.append(" ".join(cells[:n]) + " | " + " ".join(cells[n:]))
    return "\n".join(lines) + "\n"


def read_code_file(path) -> CodeSpec:
    with open(path) as fh:
        return parse_code_file(fh.read())


def write_code_file(path, code: CodeSpec, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_code_file(code, comment))
