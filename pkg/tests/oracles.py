"""Brute-force reference implementations, written straight from the definitions.

Nothing here imports the algorithms under test; only the table container.
"""
from itertools import combinations, permutations, product


def mul(S, a, b):
    return S.table[a][b]


def naive_associative(n, flat):
    t = [flat[i * n:(i + 1) * n] for i in range(n)]
    return all(t[t[i][j]][k] == t[i][t[j][k]] for i in range(n) for j in range(n) for k in range(n))


def naive_labeled_tables(n):
    return [flat for flat in product(range(n), repeat=n * n) if naive_associative(n, flat)]


def theta_pairs(S):
    E = range(S.n)
    return {(a, b) for a in E for b in E if all(mul(S, x, a) == mul(S, x, b) for x in E)}


def theta_star_pairs(S):
    # (a, b) in theta* iff (xa, xb) in theta for every x
    E = range(S.n)
    th = theta_pairs(S)
    return {(a, b) for a in E for b in E if all((mul(S, x, a), mul(S, x, b)) in th for x in E)}


def pairs_of(c):
    return {(a, b) for a in range(c.n) for b in range(c.n) if c.class_of[a] == c.class_of[b]}


def is_congruence_pairs(S, rel):
    E = range(S.n)
    return all((mul(S, x, a), mul(S, x, b)) in rel and (mul(S, a, x), mul(S, b, x)) in rel
               for (a, b) in rel for x in E)


def is_hom(f, S, T):
    return all(f[mul(S, a, b)] == mul(T, f[a], f[b]) for a in range(S.n) for b in range(S.n))


def brute_isomorphic(S, T):
    if S.n != T.n:
        return False
    return any(is_hom(p, S, T) for p in permutations(range(S.n)))


def is_middle_unit(S, u):
    E = range(S.n)
    return all(mul(S, mul(S, c, u), d) == mul(S, c, d) for c in E for d in E)


def m_inversive(S):
    E = range(S.n)
    return all(any(is_middle_unit(S, mul(S, a, x)) for x in E) and any(is_middle_unit(S, mul(S, y, a)) for y in E)
               for a in E)


def left_equalizer_simple(S):
    E = range(S.n)
    for a, b in product(E, E):
        if any(mul(S, x0, a) == mul(S, x0, b) for x0 in E):
            if not all(mul(S, x, a) == mul(S, x, b) for x in E):
                return False
    return True


def subsets(n):
    for r in range(1, n + 1):
        yield from (frozenset(c) for c in combinations(range(n), r))


def left_ideals(S):
    return [A for A in subsets(S.n) if all(mul(S, s, a) in A for s in range(S.n) for a in A)]


def right_ideals(S):
    return [A for A in subsets(S.n) if all(mul(S, a, s) in A for s in range(S.n) for a in A)]


def two_sided_ideals(S):
    return [A for A in left_ideals(S) if A in set(right_ideals(S))]


def minimal_left_ideals(S):
    ideals = left_ideals(S)
    return sorted(tuple(sorted(L)) for L in ideals if not any(M < L for M in ideals))


def is_simple(S):
    return two_sided_ideals(S) == [frozenset(range(S.n))]


def is_left_simple(S):
    return left_ideals(S) == [frozenset(range(S.n))]


def is_right_simple(S):
    return right_ideals(S) == [frozenset(range(S.n))]


def left_cancellative(S):
    E = range(S.n)
    return all(b == c for a in E for b in E for c in E if mul(S, a, b) == mul(S, a, c))
