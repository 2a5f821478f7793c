"""Exhaustive generation of finite semigroups by cell-by-cell backtracking."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .core import FiniteSemigroup, _trusted

MAX_ORDER = 6


@dataclass(frozen=True)
class EnumSpec:
    order: int
    mode: str = "labeled"
    budget: int | None = None
    shard: tuple[int, int] | None = None

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        if self.mode not in ("labeled", "up_to_iso"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.shard is not None:
            index, count = self.shard
            if count < 1 or not 0 <= index < count:
                raise ValueError(f"bad shard {index}/{count}")


def _tables(n: int, shard: tuple[int, int] | None) -> Iterator[list[int]]:
    """Flat associative tables in lexicographic order.

    After each placement only the triples newly determined by that cell are
    checked; a contradiction prunes the branch.
    """
    size = n * n
    t = [-1] * size
    cells = range(n)

    def ok(x: int, y: int, z: int) -> bool:
        xy = t[x * n + y]
        if xy < 0:
            return True
        left = t[xy * n + z]
        if left < 0:
            return True
        yz = t[y * n + z]
        if yz < 0:
            return True
        right = t[x * n + yz]
        return right < 0 or left == right

    def consistent(i: int, j: int) -> bool:
        for z in cells:
            if not ok(i, j, z):
                return False
        for x in cells:
            if not ok(x, i, j):
                return False
        for c in range(size):
            v = t[c]
            if v == i and not ok(c // n, c % n, j):
                return False
            if v == j and not ok(i, c // n, c % n):
                return False
        return True

    def row0_code() -> int:
        code = 0
        for v in t[:n]:
            code = code * n + v
        return code

    def fill(c: int) -> Iterator[list[int]]:
        if c == size:
            yield list(t)
            return
        i, j = divmod(c, n)
        for v in cells:
            t[c] = v
            if consistent(i, j):
                if shard is not None and c == n - 1 and row0_code() % shard[1] != shard[0]:
                    continue
                yield from fill(c + 1)
        t[c] = -1

    yield from fill(0)


def _relabeled(flat: list[int] | tuple[int, ...], perm: tuple[int, ...], n: int) -> list[int]:
    out = [0] * (n * n)
    for i in range(n):
        pi = perm[i] * n
        base = i * n
        for j in range(n):
            out[pi + perm[j]] = perm[flat[base + j]]
    return out


def _canonical_flat(flat: list[int], n: int) -> list[int]:
    return min(_relabeled(flat, perm, n) for perm in permutations(range(n)))


def _is_canonical(flat: list[int], n: int) -> bool:
    for perm in permutations(range(n)):
        if _relabeled(flat, perm, n) < flat:
            return False
    return True


def canonical_form(S: FiniteSemigroup) -> FiniteSemigroup:
    """Lexicographically least table among all relabelings of S."""
    n = S.n
    if n > MAX_ORDER:
        raise ValueError(f"canonical_form supports order <= {MAX_ORDER}")
    flat = _canonical_flat([v for row in S.table for v in row], n)
    return _trusted([flat[i * n:(i + 1) * n] for i in range(n)])


def all_semigroups(spec: EnumSpec | int, mode: str | None = None) -> Iterator[FiniteSemigroup]:
    if isinstance(spec, int):
        spec = EnumSpec(spec, mode or "labeled")
    n = spec.order
    emitted = 0
    for flat in _tables(n, spec.shard):
        # each iso class has exactly one lex-least table, so no seen-set is needed
        if spec.mode == "up_to_iso" and not _is_canonical(flat, n):
            continue
        yield _trusted([flat[i * n:(i + 1) * n] for i in range(n)])
        emitted += 1
        if spec.budget is not None and emitted >= spec.budget:
            return


def semigroups_up_to(max_order: int, mode: str = "labeled") -> Iterator[FiniteSemigroup]:
    for n in range(1, max_order + 1):
        yield from all_semigroups(EnumSpec(n, mode))


def count(order: int, mode: str = "labeled") -> int:
    return sum(1 for _ in all_semigroups(EnumSpec(order, mode)))
