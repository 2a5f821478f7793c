"""The sandwich semigroup on S x Lambda with ``(s, l) o (t, m) = (s P(l) t, m)``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .congruence import quotient, theta, theta_star
from .core import (
    FiniteSemigroup,
    IndexOutOfRange,
    NotAssociative,
    SemigroupError,
    from_table,
    parse_compact,
    to_compact,
)

DEFAULT_P_BUDGET = 10_000


class InternalAssociativityFailure(RuntimeError):
    """The sandwich product came out non-associative: a bug, never bad input."""


@dataclass(frozen=True)
class SandwichSpec:
    base: FiniteSemigroup
    lambda_size: int
    p: tuple[int, ...]

    def __post_init__(self):
        if self.lambda_size < 1:
            raise SemigroupError("lambda_size must be >= 1")
        if len(self.p) != self.lambda_size:
            raise SemigroupError(f"p has {len(self.p)} entries, lambda_size is {self.lambda_size}")
        for lam, s in enumerate(self.p):
            if not 0 <= s < self.base.n:
                raise IndexOutOfRange(f"P({lam}) = {s} is outside 0..{self.base.n - 1}")

    def serialize(self) -> str:
        return f"{to_compact(self.base)} | {self.lambda_size} | {' '.join(map(str, self.p))}"


def parse_spec(text: str) -> SandwichSpec:
    base, m, p = (part.strip() for part in text.split("|"))
    return SandwichSpec(parse_compact(base), int(m), tuple(int(v) for v in p.split()))


@dataclass(frozen=True)
class SandwichSemigroup:
    spec: SandwichSpec
    as_semigroup: FiniteSemigroup

    @property
    def m(self) -> int:
        return self.spec.lambda_size

    def index(self, s: int, lam: int) -> int:
        return s * self.m + lam

    def pair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.m)

    @property
    def carrier(self) -> list[tuple[int, int]]:
        return [self.pair(x) for x in range(self.as_semigroup.n)]


def sandwich_table(spec: SandwichSpec) -> list[list[int]]:
    t = spec.base.table
    m = spec.lambda_size
    rows = []
    for s, lam in product(range(spec.base.n), range(m)):
        sp = t[s][spec.p[lam]]
        rows.append([t[sp][u] * m + mu for u, mu in product(range(spec.base.n), range(m))])
    return rows


def p_construct(spec: SandwichSpec) -> SandwichSemigroup:
    rows = sandwich_table(spec)
    try:
        S = from_table(len(rows), rows)
    except NotAssociative as exc:
        raise InternalAssociativityFailure(f"{spec.serialize()}: {exc}") from exc
    return SandwichSemigroup(spec, S)


def theta_representatives(S: FiniteSemigroup) -> tuple[int, ...]:
    """Least member of each theta-class, in class-id order."""
    return tuple(block[0] for block in theta(S).classes())


def theta_respecting_pmaps(S: FiniteSemigroup) -> Iterator[SandwichSpec]:
    """Every P: S/theta -> S with P([s]) in [s], Lambda indexed by theta-class id."""
    blocks = theta(S).classes()
    for choice in product(*blocks):
        yield SandwichSpec(S, len(blocks), tuple(choice))


def canonical_theta_spec(S: FiniteSemigroup) -> SandwichSpec:
    blocks = theta(S).classes()
    return SandwichSpec(S, len(blocks), tuple(b[0] for b in blocks))


def rep_independence_check(S: FiniteSemigroup) -> bool:
    tables = {tuple(map(tuple, sandwich_table(spec))) for spec in theta_respecting_pmaps(S)}
    return len(tables) == 1


def p_prime(S: FiniteSemigroup) -> tuple[int, ...]:
    """theta-class id -> theta*-class id; well defined because theta refines theta*."""
    th, ts = theta(S), theta_star(S)
    out: list[int | None] = [None] * th.k
    for x in range(S.n):
        c, d = th.class_of[x], ts.class_of[x]
        if out[c] is None:
            out[c] = d
        elif out[c] != d:
            raise RuntimeError("theta does not refine theta*")
    return tuple(out)


def p_prime_spec(S: FiniteSemigroup) -> SandwichSpec:
    """Spec of (S/theta*, S/theta, o_P')."""
    base = quotient(S, theta_star(S)).factor
    pp = p_prime(S)
    return SandwichSpec(base, len(pp), pp)


def sandwich_maps(n: int, m: int, budget: int = DEFAULT_P_BUDGET,
                  rng: random.Random | None = None) -> Iterator[tuple[int, ...]]:
    """All maps {0..m-1} -> {0..n-1} when n**m <= budget, else ``budget`` distinct samples."""
    total = n ** m
    if total <= budget:
        yield from product(range(n), repeat=m)
        return
    rng = rng or random.Random(0)
    for code in sorted(rng.sample(range(total), budget)):
        digits = []
        for _ in range(m):
            code, d = divmod(code, n)
            digits.append(d)
        yield tuple(reversed(digits))
