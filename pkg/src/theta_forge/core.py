"""Finite semigroups as Cayley tables.

Elements are the dense indices ``0..n-1``.  ``table[i][j]`` is the product
``i*j`` with ``i`` the LEFT factor; every other module relies on this.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence


class SemigroupError(ValueError):
    pass


class BadShape(SemigroupError):
    pass


class IndexOutOfRange(SemigroupError):
    pass


class NotAssociative(SemigroupError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        i, j, k = triple
        super().__init__(f"not associative at (i, j, k) = ({i}, {j}, {k}): (ij)k != i(jk)")


class ParseError(SemigroupError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class FiniteSemigroup:
    """An associativity-validated Cayley table; build it with :func:`from_table`."""

    n: int
    table: tuple[tuple[int, ...], ...] = field(repr=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __len__(self) -> int:
        return self.n

    @property
    def elements(self) -> range:
        return range(self.n)

    def column(self, a: int) -> tuple[int, ...]:
        return tuple(row[a] for row in self.table)

    def compact(self) -> str:
        return to_compact(self)

    def __str__(self) -> str:
        return to_compact(self)


def _shape_check(n: int, entries: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if n < 1:
        raise BadShape(f"element count must be >= 1, got {n}")
    if len(entries) != n:
        raise BadShape(f"expected {n} rows, got {len(entries)}")
    rows = []
    for i, row in enumerate(entries):
        if len(row) != n:
            raise BadShape(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise BadShape(f"entry ({i}, {j}) is not an integer: {v!r}")
            if not 0 <= v < n:
                raise IndexOutOfRange(f"entry ({i}, {j}) = {v} is outside 0..{n - 1}")
        rows.append(tuple(row))
    return tuple(rows)


def associativity_witness(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """First triple (in lexicographic order) with ``(ij)k != i(jk)``, else None."""
    n = len(table)
    for i in range(n):
        ti = table[i]
        for j in range(n):
            tij = table[ti[j]]
            tj = table[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def from_table(n: int, entries: Sequence[Sequence[int]]) -> FiniteSemigroup:
    table = _shape_check(n, entries)
    witness = associativity_witness(table)
    if witness is not None:
        raise NotAssociative(witness)
    return FiniteSemigroup(n, table)


def _trusted(table: Sequence[Sequence[int]]) -> FiniteSemigroup:
    # for tables already known to be associative (enumeration output)
    return FiniteSemigroup(len(table), tuple(tuple(r) for r in table))


def product_set(S: FiniteSemigroup) -> tuple[int, ...]:
    """S^2 as a sorted tuple: every value that appears in the table."""
    return tuple(sorted({v for row in S.table for v in row}))


def is_homomorphism(f: Sequence[int], S: FiniteSemigroup, T: FiniteSemigroup) -> bool:
    return all(f[S.table[a][b]] == T.table[f[a]][f[b]] for a in range(S.n) for b in range(S.n))


def relabel(S: FiniteSemigroup, perm: Sequence[int]) -> FiniteSemigroup:
    """Transport S along the bijection ``i -> perm[i]``."""
    n = S.n
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new[perm[i]][perm[j]] = perm[S.table[i][j]]
    return _trusted(new)


# --- small catalog -------------------------------------------------------

def trivial() -> FiniteSemigroup:
    return _trusted([[0]])


def left_zero(n: int) -> FiniteSemigroup:
    return _trusted([[i] * n for i in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    return _trusted([list(range(n)) for _ in range(n)])


def null_semigroup(n: int) -> FiniteSemigroup:
    """All products equal 0."""
    return _trusted([[0] * n for _ in range(n)])


def cyclic_group(n: int) -> FiniteSemigroup:
    return _trusted([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """S x T with the pair (s, t) at index ``s * T.n + t``."""
    m = T.n
    rows = []
    for s1, t1 in product(range(S.n), range(m)):
        rows.append([S.table[s1][s2] * m + T.table[t1][t2] for s2, t2 in product(range(S.n), range(m))])
    return _trusted(rows)


# --- text formats --------------------------------------------------------

def serialize(S: FiniteSemigroup) -> str:
    lines = [str(S.n)]
    lines.extend(" ".join(map(str, row)) for row in S.table)
    return "\n".join(lines)


def to_compact(S: FiniteSemigroup) -> str:
    """One-line form ``n:d0d1...`` (n <= 10) or ``n:e0,e1,...`` beyond that."""
    flat = [v for row in S.table for v in row]
    if S.n <= 10:
        return f"{S.n}:" + "".join(map(str, flat))
    return f"{S.n}:" + ",".join(map(str, flat))


def _parse_int(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a base-10 integer, got {token!r}", line, column)
    return int(token)


def parse_compact(text: str, line: int = 1) -> FiniteSemigroup:
    text = text.strip()
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError("compact form needs 'n:'", line, 1)
    n = _parse_int(head.strip(), line, 1)
    col0 = len(head) + 2
    if "," in body:
        values = [_parse_int(tok.strip(), line, col0) for tok in body.split(",")]
    else:
        if n > 10:
            raise ParseError("digit-string compact form only allowed for n <= 10", line, col0)
        values = [_parse_int(ch, line, col0 + k) for k, ch in enumerate(body)]
    if len(values) != n * n:
        raise ParseError(f"expected {n * n} entries, got {len(values)}", line, col0)
    return from_table(n, [values[i * n:(i + 1) * n] for i in range(n)])


def parse(text: str) -> FiniteSemigroup:
    """Parse the multi-line table format (or a compact line); '#' lines are comments."""
    lines = [(no, raw) for no, raw in enumerate(text.splitlines(), start=1)
             if raw.strip() and not raw.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input", 1)
    first_no, first = lines[0]
    if ":" in first:
        if len(lines) > 1:
            raise ParseError("trailing content after compact table", lines[1][0])
        return parse_compact(first, first_no)
    n = _parse_int(first.strip(), first_no, 1)
    if n < 1:
        raise ParseError("element count must be >= 1", first_no, 1)
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else first_no + 1)
        raise ParseError(f"expected {n} table rows, got {len(body)}", where)
    rows = []
    for no, raw in body:
        row = []
        col = 1
        for tok in raw.split():
            col = raw.index(tok, col - 1) + 1
            row.append(_parse_int(tok, no, col))
            col += len(tok)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", no)
        rows.append(row)
    return from_table(n, rows)


def element_set(values: Iterable[int], n: int) -> tuple[int, ...]:
    out = tuple(sorted(set(values)))
    if out and (out[0] < 0 or out[-1] >= n):
        raise IndexOutOfRange(f"element set {out} not inside 0..{n - 1}")
    return out
