"""Homomorphism checks, isomorphism search, and the two explicit maps.

The first explicit map sends the kernel class of ``(a, [b])`` in the sandwich
semigroup over ``S/theta`` to ``([a]_theta*, [b]_theta)``; the second sends
``(a, [b])`` to ``(tau(a), [b])``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .congruence import normalize, quotient, theta, theta_star
from .construction import (
    SandwichSpec,
    canonical_theta_spec,
    p_construct,
    p_prime_spec,
)
from .core import FiniteSemigroup, SemigroupError, is_homomorphism

X = TypeVar("X")
Y = TypeVar("Y")


class SizeMismatch(SemigroupError):
    pass


@dataclass(frozen=True)
class MorphismWitness:
    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple[int, ...]
    is_homomorphism: bool
    is_injective: bool
    is_surjective: bool

    @property
    def is_isomorphism(self) -> bool:
        return self.is_homomorphism and self.is_injective and self.is_surjective


def check_morphism(f: Sequence[int], S: FiniteSemigroup, T: FiniteSemigroup) -> MorphismWitness:
    if len(f) != S.n:
        raise SizeMismatch(f"map has {len(f)} entries, source has {S.n} elements")
    if any(not 0 <= v < T.n for v in f):
        raise SizeMismatch("map leaves the target carrier")
    images = set(f)
    return MorphismWitness(
        S, T, tuple(f),
        is_homomorphism=is_homomorphism(f, S, T),
        is_injective=len(images) == S.n,
        is_surjective=len(images) == T.n,
    )


def _fingerprints(S: FiniteSemigroup) -> list[tuple]:
    """Isomorphism-invariant data per element."""
    t = S.table
    n = S.n
    idem = [t[a][a] == a for a in range(n)]
    out = []
    for a in range(n):
        row, col = t[a], S.column(a)
        # index and period of the monogenic subsemigroup
        seen: dict[int, int] = {}
        x, k = a, 1
        while x not in seen:
            seen[x] = k
            x, k = t[x][a], k + 1
        out.append((
            idem[a],
            len(set(row)),
            len(set(col)),
            sum(1 for x in range(n) if t[x][a] == x),
            sum(1 for x in range(n) if t[a][x] == x),
            sum(idem[v] for v in row),
            sum(idem[v] for v in col),
            seen[x],
            k - seen[x],
        ))
    return out


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup) -> MorphismWitness | None:
    """Backtracking over element images, pruned by fingerprints and partial homomorphism."""
    n = S.n
    if n != T.n:
        return None
    fs, ft = _fingerprints(S), _fingerprints(T)
    if sorted(fs) != sorted(ft):
        return None
    candidates = [[b for b in range(n) if ft[b] == fs[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: len(candidates[a]))
    f = [-1] * n
    used = [False] * n
    s, t = S.table, T.table

    def consistent(a: int) -> bool:
        fa = f[a]
        for b in range(n):
            fb = f[b]
            if fb < 0:
                continue
            ab, ba = s[a][b], s[b][a]
            if f[ab] >= 0 and f[ab] != t[fa][fb]:
                return False
            if f[ba] >= 0 and f[ba] != t[fb][fa]:
                return False
        # products landing on a only became checkable now
        for x in range(n):
            for y in range(n):
                if s[x][y] == a and f[x] >= 0 and f[y] >= 0 and t[f[x]][f[y]] != fa:
                    return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        a = order[depth]
        for b in candidates[a]:
            if used[b]:
                continue
            f[a], used[b] = b, True
            if consistent(a) and search(depth + 1):
                return True
            f[a], used[b] = -1, False
        return False

    if not search(0):
        return None
    witness = check_morphism(f, S, T)
    assert witness.is_isomorphism
    return witness


def are_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> bool:
    return find_isomorphism(S, T) is not None


# --- explicit isomorphism onto (S/theta*, S/theta, o_P') ----------------

@dataclass
class IsoReport:
    source: FiniteSemigroup
    spec: SandwichSpec
    sandwich_order: int
    kernel_classes: int
    target_order: int
    well_defined: bool
    injective: bool
    surjective: bool
    homomorphism: bool
    orders_match: bool
    phi: tuple[int, ...] = ()
    details: list[str] = field(default_factory=list)

    @property
    def verdicts(self) -> dict[str, bool]:
        return {
            "well_defined": self.well_defined,
            "injective": self.injective,
            "surjective": self.surjective,
            "homomorphism": self.homomorphism,
            "orders_match": self.orders_match,
        }

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def theorem1_verify(S: FiniteSemigroup, spec: SandwichSpec | None = None) -> IsoReport:
    """Verify the explicit map from the right regular representation of
    ``T = (S, S/theta, o_P)`` onto ``U = (S/theta*, S/theta, o_P')``.

    ``spec`` must be theta-respecting; defaults to least representatives.
    """
    spec = spec or canonical_theta_spec(S)
    T = p_construct(spec)
    m = T.m
    kernel = theta(T.as_semigroup)
    Q = quotient(T.as_semigroup, kernel)
    U = p_construct(p_prime_spec(S))
    star = theta_star(S).class_of
    details: list[str] = []

    def phi_elem(x: int) -> int:
        a, lam = T.pair(x)
        return U.index(star[a], lam)

    phi: list[int | None] = [None] * kernel.k
    well_defined = True
    for x in range(T.as_semigroup.n):
        c = kernel.class_of[x]
        v = phi_elem(x)
        if phi[c] is None:
            phi[c] = v
        elif phi[c] != v:
            well_defined = False
            details.append(f"kernel class {c} maps to both {phi[c]} and {v}")
    phi_map = tuple(v for v in phi)  # type: ignore[misc]
    w = check_morphism(phi_map, Q.factor, U.as_semigroup)
    if not w.is_injective:
        details.append("phi is not injective")
    if not w.is_surjective:
        details.append("phi is not surjective")
    if not w.is_homomorphism:
        details.append("phi is not a homomorphism")
    return IsoReport(
        source=S,
        spec=spec,
        sandwich_order=T.as_semigroup.n,
        kernel_classes=kernel.k,
        target_order=U.as_semigroup.n,
        well_defined=well_defined,
        injective=w.is_injective,
        surjective=w.is_surjective,
        homomorphism=w.is_homomorphism,
        orders_match=Q.factor.n == U.as_semigroup.n,
        phi=phi_map,
        details=details,
    )


def theorem1_kernel_characterization(S: FiniteSemigroup, spec: SandwichSpec | None = None) -> bool:
    """Kernel of the right regular representation of the sandwich semigroup
    equals: same Lambda-coordinate and theta*-related first coordinates."""
    spec = spec or canonical_theta_spec(S)
    T = p_construct(spec)
    star = theta_star(S).class_of
    predicted = normalize([(star[a], lam) for a, lam in T.carrier])
    return theta(T.as_semigroup) == predicted


# --- embedding (a, [b]) -> (tau(a), [b]) on a test window --------------

class TauNotHomomorphicOnWindow(SemigroupError):
    pass


class TauNotInjectiveOnWindow(SemigroupError):
    pass


@dataclass
class EmbeddingReport:
    pairs_checked: int = 0
    tau_checks: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def theorem2_embed(
    source_mul: Callable[[X, X], X],
    target_mul: Callable[[Y, Y], Y],
    tau: Callable[[X], Y],
    p: Callable[[Hashable], X],
    theta_class: Callable[[X], Hashable],
    equal: Callable[[Y, Y], bool],
    pairs: Iterable[tuple[tuple[X, Hashable], tuple[X, Hashable]]],
    tau_sample: Sequence[X] = (),
) -> EmbeddingReport:
    """Check the embedding on sampled pairs of sandwich elements.

    ``equal`` decides equality of target carrier elements (window equality
    for infinite carriers).  Raises if tau itself fails on ``tau_sample``.
    """
    report = EmbeddingReport()
    for a in tau_sample:
        for b in tau_sample:
            report.tau_checks += 1
            if not equal(tau(source_mul(a, b)), target_mul(tau(a), tau(b))):
                raise TauNotHomomorphicOnWindow(f"tau({a}*{b}) != tau({a})tau({b})")
            if a != b and equal(tau(a), tau(b)):
                raise TauNotInjectiveOnWindow(f"tau({a}) == tau({b})")

    def p2(label: Hashable) -> Y:
        return tau(p(label))

    def src(u, v):
        (a, lb), (c, ld) = u, v
        return (source_mul(source_mul(a, p(lb)), c), ld)

    def tgt(u, v):
        (f, lb), (g, ld) = u, v
        return (target_mul(target_mul(f, p2(lb)), g), ld)

    def big_phi(u):
        a, lb = u
        return (tau(a), lb)

    for u, v in pairs:
        report.pairs_checked += 1
        tag = f"({u[0]},[{u[1]}]),({v[0]},[{v[1]}])"
        for w in (u, v):
            if theta_class(p(w[1])) != w[1]:
                report.failures.append(("p_not_theta_respecting", tag))
        lhs = big_phi(src(u, v))
        rhs = tgt(big_phi(u), big_phi(v))
        if lhs[1] != rhs[1] or not equal(lhs[0], rhs[0]):
            report.failures.append(("Phi_homomorphism", tag))
        if lhs[1] != v[1]:
            report.failures.append(("Phi_second_coordinate", tag))
        fu, fv = big_phi(u), big_phi(v)
        if u != v and fu[1] == fv[1] and equal(fu[0], fv[0]):
            report.failures.append(("Phi_injective", tag))
    return report
