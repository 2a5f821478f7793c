"""Congruences, quotients and the right regular representation.

``theta`` identifies a and b when every left multiple agrees (equal table
columns); ``theta_star`` only asks this for left factors drawn from S^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .core import FiniteSemigroup, SemigroupError, _trusted, is_homomorphism, product_set


class MalformedPartition(SemigroupError):
    pass


class NotWellDefined(SemigroupError):
    pass


@dataclass(frozen=True)
class Congruence:
    """Partition of ``0..n-1`` given by class ids.

    Ids are numbered by least member, so two equal partitions always have
    equal ``class_of`` vectors.
    """

    class_of: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def k(self) -> int:
        return max(self.class_of) + 1

    def classes(self) -> list[tuple[int, ...]]:
        blocks: list[list[int]] = [[] for _ in range(self.k)]
        for x, c in enumerate(self.class_of):
            blocks[c].append(x)
        return [tuple(b) for b in blocks]

    def same(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def refines(self, other: "Congruence") -> bool:
        """True when every class of self sits inside a class of other."""
        image: dict[int, int] = {}
        for c, d in zip(self.class_of, other.class_of):
            if image.setdefault(c, d) != d:
                return False
        return True

    def is_identity(self) -> bool:
        return self.k == self.n

    def is_universal(self) -> bool:
        return self.k == 1

    def serialize(self) -> str:
        return " ".join(map(str, self.class_of))

    def label(self) -> str:
        """Classes joined by '|', e.g. ``0|12``."""
        sep = "" if self.n <= 10 else ","
        return "|".join(sep.join(map(str, block)) for block in self.classes())


def normalize(keys: Sequence[Hashable]) -> Congruence:
    """Congruence-shaped partition from arbitrary per-element keys."""
    ids: dict[Hashable, int] = {}
    return Congruence(tuple(ids.setdefault(key, len(ids)) for key in keys))


def from_blocks(blocks: Iterable[Iterable[int]], n: int) -> Congruence:
    keys: list[int | None] = [None] * n
    for b, block in enumerate(blocks):
        for x in block:
            if not 0 <= x < n:
                raise MalformedPartition(f"element {x} outside 0..{n - 1}")
            if keys[x] is not None:
                raise MalformedPartition(f"element {x} appears in two blocks")
            keys[x] = b
    missing = [x for x, key in enumerate(keys) if key is None]
    if missing:
        raise MalformedPartition(f"elements {missing} not covered")
    return normalize(keys)


def parse_congruence(text: str) -> Congruence:
    return normalize([int(tok) for tok in text.split()])


def _as_congruence(S: FiniteSemigroup, partition) -> Congruence:
    if isinstance(partition, Congruence):
        if partition.n != S.n:
            raise MalformedPartition(f"partition has {partition.n} elements, semigroup {S.n}")
        return partition
    return from_blocks(partition, S.n)


def compatibility_witness(S: FiniteSemigroup, c: Congruence) -> tuple[int, int, int] | None:
    """(a, b, x) with a ~ b but xa !~ xb or ax !~ bx, else None."""
    t = S.table
    cls = c.class_of
    for a in range(S.n):
        for b in range(a + 1, S.n):
            if cls[a] != cls[b]:
                continue
            for x in range(S.n):
                if cls[t[x][a]] != cls[t[x][b]] or cls[t[a][x]] != cls[t[b][x]]:
                    return (a, b, x)
    return None


def is_congruence(S: FiniteSemigroup, partition) -> bool:
    return compatibility_witness(S, _as_congruence(S, partition)) is None


def theta(S: FiniteSemigroup) -> Congruence:
    return normalize([S.column(a) for a in range(S.n)])


def theta_star(S: FiniteSemigroup) -> Congruence:
    rows = product_set(S)
    t = S.table
    return normalize([tuple(t[s][a] for s in rows) for a in range(S.n)])


def identity_congruence(n: int) -> Congruence:
    return Congruence(tuple(range(n)))


def universal_congruence(n: int) -> Congruence:
    return Congruence((0,) * n)


def generated(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs`` (union-find closure)."""
    n = S.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = list(pairs)
    t = S.table
    while pending:
        a, b = pending.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for x in range(n):
            pending.append((t[x][a], t[x][b]))
            pending.append((t[a][x], t[b][x]))
    return normalize([find(x) for x in range(n)])


@dataclass(frozen=True)
class Quotient:
    factor: FiniteSemigroup
    projection: tuple[int, ...]


def quotient(S: FiniteSemigroup, c: Congruence) -> Quotient:
    """S/c, re-checking well-definedness of the class product on every pair."""
    c = _as_congruence(S, c)
    k = c.k
    cls = c.class_of
    rows: list[list[int | None]] = [[None] * k for _ in range(k)]
    for a in range(S.n):
        row = S.table[a]
        for b in range(S.n):
            value = cls[row[b]]
            have = rows[cls[a]][cls[b]]
            if have is None:
                rows[cls[a]][cls[b]] = value
            elif have != value:
                raise NotWellDefined(
                    f"class product [{a}][{b}] is not well defined: {have} vs {value}")
    return Quotient(_trusted(rows), cls)


def pullback(q: Quotient, c: Congruence) -> Congruence:
    """Lift a congruence on ``q.factor`` back to the original semigroup."""
    return normalize([c.class_of[p] for p in q.projection])


def induced(fine: Congruence, coarse: Congruence) -> Congruence:
    """coarse/fine: the congruence on S/fine whose classes are coarse-classes."""
    if not fine.refines(coarse):
        raise MalformedPartition("first congruence does not refine the second")
    keys = [0] * fine.k
    for x, c in enumerate(fine.class_of):
        keys[c] = coarse.class_of[x]
    return normalize(keys)


@dataclass(frozen=True)
class RightRegularRepresentation:
    image: FiniteSemigroup
    map: tuple[int, ...]
    translations: tuple[tuple[int, ...], ...]


def right_translation(S: FiniteSemigroup, a: int) -> tuple[int, ...]:
    """rho_a as an image vector: x -> x*a."""
    return S.column(a)


def rrr(S: FiniteSemigroup) -> RightRegularRepresentation:
    """The semigroup of inner right translations under 'apply left, then right'."""
    index: dict[tuple[int, ...], int] = {}
    mapping = []
    for a in range(S.n):
        mapping.append(index.setdefault(right_translation(S, a), len(index)))
    translations = list(index)
    k = len(translations)
    rows = []
    for f in translations:
        row = []
        for g in translations:
            composite = tuple(g[f[x]] for x in range(S.n))
            if composite not in index:
                raise NotWellDefined("inner right translations are not closed under composition")
            row.append(index[composite])
        rows.append(row)
    image = _trusted(rows)
    # rho_a then rho_b must be rho_{ab}
    assert is_homomorphism(mapping, S, image)
    q = quotient(S, theta(S))
    # class ids and translation ids both follow first occurrence, so the
    # canonical isomorphism S/theta -> image is the identity vector
    assert tuple(mapping) == q.projection and q.factor == image
    return RightRegularRepresentation(image, tuple(mapping), tuple(translations))
