"""Plain-text Cayley table files.

Format: the first line is the order ``n``; the next ``n`` lines hold ``n``
space-separated 0-based indices each; an optional last line ``names:`` is
followed by ``n`` whitespace-separated names. Lines starting with ``#`` are
comments. Newlines are LF.
"""
from __future__ import annotations

from .core import FiniteSemigroup
from .errors import ParseError


def _content_lines(text: str):
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, line


def _int_token(token: str, line: int, col: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, col) from None


def _tokens(line: str):
    """``(token, 1-based column)`` pairs."""
    col, out = 0, []
    for tok in line.split():
        col = line.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def parse_cayley(text: str) -> FiniteSemigroup:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1, 1)
    first_no, first = lines[0]
    toks = _tokens(first)
    if len(toks) != 1:
        raise ParseError("first line must hold only the order", first_no, toks[1][1] if toks[1:] else 1)
    n = _int_token(toks[0][0], first_no, toks[0][1])
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", first_no, toks[0][1])
    if len(lines) < n + 1:
        last = lines[-1][0]
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", last + 1, 1)
    table = []
    for line_no, line in lines[1:n + 1]:
        toks = _tokens(line)
        if toks and toks[0][0].startswith("names:"):
            raise ParseError(f"expected {n} table rows, found {len(table)}", line_no, 1)
        if len(toks) != n:
            col = toks[n][1] if len(toks) > n else len(line) + 1
            raise ParseError(f"row has {len(toks)} entries, expected {n}", line_no, col)
        row = []
        for tok, col in toks:
            v = _int_token(tok, line_no, col)
            if not 0 <= v < n:
                raise ParseError(f"entry {v} outside [0, {n})", line_no, col)
            row.append(v)
        table.append(row)
    names = None
    rest = lines[n + 1:]
    if rest:
        line_no, line = rest[0]
        stripped = line.lstrip()
        if not stripped.startswith("names:"):
            raise ParseError("unexpected content after the table", line_no, len(line) - len(stripped) + 1)
        offset = len(line) - len(stripped) + len("names:")
        toks = [(t, c + offset) for t, c in _tokens(line[offset:])]
        for extra_no, extra in rest[1:]:
            toks.extend(_tokens(extra))
        names = [t for t, _ in toks]
        if len(names) != n:
            raise ParseError(f"expected {n} names, got {len(names)}", line_no, 1)
        if len(set(names)) != n:
            dup = next(t for t, _ in toks if names.count(t) > 1)
            col = next(c for t, c in toks if t == dup)
            raise ParseError(f"duplicate name {dup!r}", line_no, col)
    return FiniteSemigroup(table, names)


def render_cayley(S: FiniteSemigroup) -> str:
    out = [str(S.order)]
    out.extend(" ".join(str(v) for v in row) for row in S.table.tolist())
    if S.names:
        for nm in S.names:
            if not nm or any(c.isspace() for c in nm):
                raise ValueError(f"name {nm!r} cannot be written to a Cayley file")
        out.append("names: " + " ".join(S.names))
    return "\n".join(out) + "\n"
