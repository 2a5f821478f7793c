"""Predicates for the semigroup classes used throughout the package."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .congruence import generated, quotient
from .core import FiniteSemigroup, direct_product, left_zero, right_zero


def idempotents(S: FiniteSemigroup) -> tuple[int, ...]:
    return tuple(a for a in range(S.n) if S.table[a][a] == a)


def is_left_zero(S: FiniteSemigroup) -> bool:
    return all(S.table[a][b] == a for a in range(S.n) for b in range(S.n))


def is_right_zero(S: FiniteSemigroup) -> bool:
    return all(S.table[a][b] == b for a in range(S.n) for b in range(S.n))


def identity_element(S: FiniteSemigroup) -> int | None:
    t = S.table
    for e in range(S.n):
        if all(t[e][a] == a and t[a][e] == a for a in range(S.n)):
            return e
    return None


def is_group(S: FiniteSemigroup) -> bool:
    e = identity_element(S)
    if e is None:
        return False
    t = S.table
    return all(any(t[a][b] == e and t[b][a] == e for b in range(S.n)) for a in range(S.n))


def is_left_cancellative(S: FiniteSemigroup) -> bool:
    # ab = ac => b = c, i.e. every row is injective
    return all(len(set(row)) == S.n for row in S.table)


def is_right_cancellative(S: FiniteSemigroup) -> bool:
    return all(len(set(S.column(a))) == S.n for a in range(S.n))


def _left_multiples(S: FiniteSemigroup, a: int) -> set[int]:
    return {S.table[x][a] for x in range(S.n)}


def _right_multiples(S: FiniteSemigroup, a: int) -> set[int]:
    return set(S.table[a])


def is_left_simple(S: FiniteSemigroup) -> bool:
    return all(len(_left_multiples(S, a)) == S.n for a in range(S.n))


def is_right_simple(S: FiniteSemigroup) -> bool:
    return all(len(_right_multiples(S, a)) == S.n for a in range(S.n))


def principal_ideal(S: FiniteSemigroup, a: int) -> set[int]:
    """{a} u Sa u aS u SaS."""
    t = S.table
    left = _left_multiples(S, a)
    ideal = {a} | left | _right_multiples(S, a)
    ideal |= {t[x][y] for x in left for y in range(S.n)}
    return ideal


def is_simple(S: FiniteSemigroup) -> bool:
    return all(len(principal_ideal(S, a)) == S.n for a in range(S.n))


def principal_left_ideal(S: FiniteSemigroup, a: int) -> frozenset[int]:
    return frozenset({a} | _left_multiples(S, a))


def minimal_left_ideals(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    """Minimal left ideals, all of which are principal."""
    ideals = {principal_left_ideal(S, a) for a in range(S.n)}
    minimal = [L for L in ideals if not any(M < L for M in ideals)]
    return sorted(tuple(sorted(L)) for L in minimal)


def middle_units(S: FiniteSemigroup) -> tuple[int, ...]:
    """Elements u with c*u*d == c*d for all c, d."""
    t = S.table
    n = S.n
    out = []
    for u in range(n):
        if all(t[t[c][u]][d] == t[c][d] for c in range(n) for d in range(n)):
            out.append(u)
    return tuple(out)


def is_m_inversive(S: FiniteSemigroup) -> bool:
    units = set(middle_units(S))
    if not units:
        return False
    t = S.table
    return all(
        any(t[a][x] in units for x in range(S.n)) and any(t[y][a] in units for y in range(S.n))
        for a in range(S.n)
    )


def is_left_equalizer_simple(S: FiniteSemigroup) -> bool:
    """Two columns either agree in every row or in none."""
    cols = [S.column(a) for a in range(S.n)]
    for a in range(S.n):
        for b in range(a + 1, S.n):
            agree = sum(x == y for x, y in zip(cols[a], cols[b]))
            if 0 < agree < S.n:
                return False
    return True


# --- left / right groups ---------------------------------------------------

def _group_decomposition(S: FiniteSemigroup, side: str) -> tuple[FiniteSemigroup, FiniteSemigroup, tuple[int, ...]] | None:
    """Split S as G x Z with G a group and Z left ('left') or right ('right') zero.

    In any such product the projection kernels are forced: the Z-kernel is
    the congruence generated by (ab, a) (resp. (ab, b)) and the G-kernel is
    the one generated by identifying all idempotents.  So computing both and
    testing that s -> (g(s), z(s)) is a bijection decides the question, and
    the returned map is an explicit isomorphism onto G x Z.
    """
    t = S.table
    es = idempotents(S)
    if not es:
        return None
    if side == "left":
        zero_kernel = generated(S, ((t[a][b], a) for a in range(S.n) for b in range(S.n)))
    else:
        zero_kernel = generated(S, ((t[a][b], b) for a in range(S.n) for b in range(S.n)))
    group_kernel = generated(S, ((es[0], e) for e in es[1:]))
    G = quotient(S, group_kernel).factor
    Z = quotient(S, zero_kernel).factor
    if not is_group(G):
        return None
    if G.n * Z.n != S.n:
        return None
    pairs = {(group_kernel.class_of[s], zero_kernel.class_of[s]) for s in range(S.n)}
    if len(pairs) != S.n:
        return None
    iso = tuple(group_kernel.class_of[s] * Z.n + zero_kernel.class_of[s] for s in range(S.n))
    return G, Z, iso


def left_group_decomposition(S: FiniteSemigroup):
    return _group_decomposition(S, "left")


def right_group_decomposition(S: FiniteSemigroup):
    return _group_decomposition(S, "right")


def is_left_group(S: FiniteSemigroup) -> bool:
    return _group_decomposition(S, "left") is not None


def is_right_group(S: FiniteSemigroup) -> bool:
    return _group_decomposition(S, "right") is not None


def is_left_group_fast(S: FiniteSemigroup) -> bool:
    return is_left_simple(S) and is_right_cancellative(S)


def is_right_group_fast(S: FiniteSemigroup) -> bool:
    return is_right_simple(S) and is_left_cancellative(S)


def groups_of_order(g: int) -> list[FiniteSemigroup]:
    """One group per isomorphism class, filtered from the enumeration."""
    from .enumeration import EnumSpec, all_semigroups

    return [G for G in all_semigroups(EnumSpec(g, "up_to_iso")) if is_group(G)]


def is_left_group_by_search(S: FiniteSemigroup) -> bool:
    """Brute force: try every G x L with |G||L| = n, G over all groups of order |G|."""
    return _by_search(S, left_zero)


def is_right_group_by_search(S: FiniteSemigroup) -> bool:
    return _by_search(S, right_zero)


def _by_search(S: FiniteSemigroup, zero) -> bool:
    from .morphism import find_isomorphism

    for g in range(1, S.n + 1):
        if S.n % g:
            continue
        for G in groups_of_order(g):
            if find_isomorphism(S, direct_product(G, zero(S.n // g))) is not None:
                return True
    return False


# --- report ------------------------------------------------------------------

FLAGS = (
    "left_zero", "right_zero", "group", "left_cancellative", "right_cancellative",
    "left_simple", "right_simple", "simple", "left_group", "right_group",
    "m_inversive", "left_equalizer_simple", "has_idempotent",
)


@dataclass(frozen=True)
class PropertyReport:
    left_zero: bool
    right_zero: bool
    group: bool
    left_cancellative: bool
    right_cancellative: bool
    left_simple: bool
    right_simple: bool
    simple: bool
    left_group: bool
    right_group: bool
    m_inversive: bool
    left_equalizer_simple: bool
    has_idempotent: bool
    idempotents: tuple[int, ...]
    minimal_left_ideals: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["idempotents"] = list(self.idempotents)
        d["minimal_left_ideals"] = [list(L) for L in self.minimal_left_ideals]
        return d


def classify(S: FiniteSemigroup) -> PropertyReport:
    es = idempotents(S)
    return PropertyReport(
        left_zero=is_left_zero(S),
        right_zero=is_right_zero(S),
        group=is_group(S),
        left_cancellative=is_left_cancellative(S),
        right_cancellative=is_right_cancellative(S),
        left_simple=is_left_simple(S),
        right_simple=is_right_simple(S),
        simple=is_simple(S),
        left_group=is_left_group(S),
        right_group=is_right_group(S),
        m_inversive=is_m_inversive(S),
        left_equalizer_simple=is_left_equalizer_simple(S),
        has_idempotent=bool(es),
        idempotents=es,
        minimal_left_ideals=tuple(minimal_left_ideals(S)),
    )


_IMPLICATIONS = (
    ("group", "left_group"), ("group", "right_group"), ("group", "m_inversive"),
    ("left_zero", "left_equalizer_simple"), ("left_zero", "left_group"),
    ("right_zero", "right_group"), ("left_cancellative", "left_equalizer_simple"),
    ("left_group", "left_simple"), ("right_group", "right_simple"),
    ("left_simple", "simple"), ("right_simple", "simple"),
)


def consistency_violations(report: PropertyReport) -> list[str]:
    out = [f"{a} without {b}" for a, b in _IMPLICATIONS
           if getattr(report, a) and not getattr(report, b)]
    if report.has_idempotent != bool(report.idempotents):
        out.append("has_idempotent disagrees with idempotent list")
    return out


def fast_path_discrepancies(S: FiniteSemigroup) -> list[str]:
    """Where the decomposition checkers and the simple/cancellative shortcuts disagree."""
    out = []
    if is_left_group(S) != is_left_group_fast(S):
        out.append("left_group")
    if is_right_group(S) != is_right_group_fast(S):
        out.append("right_group")
    return out

