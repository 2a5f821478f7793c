"""Window-scale model of the embedding on infinite carriers.

Source: ``(N+, +)``, cancellative (so theta is the identity) and without
idempotents.  Target: injective maps ``N -> N`` with co-infinite image under
composition ``f*g = f o g`` (apply g first).  With this product the carrier
is left simple and idempotent-free, the mirror image of the Baer-Levi
semigroup.  Infinite claims are checked on the points ``0..W-1``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .morphism import EmbeddingReport, theorem2_embed

SCAN_LIMIT = 1 << 20


class CertificateExhausted(RuntimeError):
    pass


class ComputableInjection:
    """Injective ``N -> N`` with a witnessed infinite complement of its image.

    ``preimage(y)`` returns the unique x with ``rule(x) == y`` or None;
    ``certificate(k)`` is the k-th point of an infinite sequence outside the
    image and ``certificate_index`` inverts it (None off the sequence).
    """

    def __init__(self, rule: Callable[[int], int], preimage: Callable[[int], Optional[int]],
                 certificate: Callable[[int], int], certificate_index: Callable[[int], Optional[int]],
                 name: str = "f"):
        self.rule = rule
        self.preimage = preimage
        self.certificate = certificate
        self.certificate_index = certificate_index
        self.name = name
        self.memo: dict[int, int] = {}
        self._complement: list[int] = []
        self._scanned = 0

    def __call__(self, x: int) -> int:
        try:
            return self.memo[x]
        except KeyError:
            y = self.memo[x] = self.rule(x)
            return y

    def __repr__(self) -> str:
        return f"<{self.name}>"

    def in_image(self, y: int) -> bool:
        return self.preimage(y) is not None

    def complement_point(self, k: int) -> int:
        """k-th natural (0-based) outside the image, by lazy scan."""
        while len(self._complement) <= k:
            if self._scanned > SCAN_LIMIT:
                raise CertificateExhausted(f"{self.name}: complement scan passed {SCAN_LIMIT}")
            if not self.in_image(self._scanned):
                self._complement.append(self._scanned)
            self._scanned += 1
        return self._complement[k]

    def complement_rank(self, y: int) -> int:
        """Position of y (not in the image) among the non-image points."""
        while self._scanned <= y:
            self.complement_point(len(self._complement))
        lo, hi = 0, len(self._complement)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._complement[mid] < y:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def window(self, w: int) -> tuple[int, ...]:
        return tuple(self(x) for x in range(w))

    def check_window(self, w: int) -> list[str]:
        """Injectivity on 0..w-1 and certificate/image disjointness."""
        problems = []
        values = self.window(w)
        if len(set(values)) != w:
            problems.append(f"{self.name} not injective on 0..{w - 1}")
        image = set(values)
        for k in range(w):
            c = self.certificate(k)
            if c in image or self.in_image(c):
                problems.append(f"{self.name}: certificate point {c} lies in the image")
                break
            if self.certificate_index(c) != k:
                problems.append(f"{self.name}: certificate index does not invert at {k}")
                break
        for x, y in enumerate(values):
            if self.preimage(y) != x:
                problems.append(f"{self.name}: preimage wrong at {x}")
                break
        return problems


def window_equal(f: ComputableInjection, g: ComputableInjection, w: int) -> bool:
    return all(f(x) == g(x) for x in range(w))


def scaling(c: int, name: str | None = None) -> ComputableInjection:
    """x -> c*x for c >= 2; certificate: the numbers congruent to 1 mod c."""
    if c < 2:
        raise ValueError("scale factor must be >= 2 to leave an infinite complement")
    return ComputableInjection(
        rule=lambda x: c * x,
        preimage=lambda y: y // c if y % c == 0 else None,
        certificate=lambda k: c * k + 1,
        certificate_index=lambda y: (y - 1) // c if y % c == 1 else None,
        name=name or f"x->{c}x",
    )


def tau_doubling(n: int) -> ComputableInjection:
    """tau(n) = (x -> 2**n * x)."""
    if n < 1:
        raise ValueError("tau is defined on positive naturals")
    f = scaling(1 << n, name=f"tau({n})")
    # odd numbers are outside every image of a power of two
    f.certificate = lambda k: 2 * k + 1
    f.certificate_index = lambda y: (y - 1) // 2 if y % 2 == 1 else None
    return f


def dual_baer_levi_product(f: ComputableInjection, g: ComputableInjection) -> ComputableInjection:
    """f * g = f o g; the complement certificate comes from f."""

    def pre(y: int) -> Optional[int]:
        t = f.preimage(y)
        return None if t is None else g.preimage(t)

    return ComputableInjection(
        rule=lambda x: f(g(x)),
        preimage=pre,
        certificate=f.certificate,
        certificate_index=f.certificate_index,
        name=f"({f.name}*{g.name})",
    )


def left_divide(a: ComputableInjection, b: ComputableInjection) -> ComputableInjection:
    """x with ``x o a == b``.

    On im(a) the value is forced; the k-th point outside im(a) goes to the
    even-indexed certificate point 2k of b, and the odd-indexed points are
    kept back as x's own certificate.
    """

    def rule(y: int) -> int:
        t = a.preimage(y)
        if t is not None:
            return b(t)
        return b.certificate(2 * a.complement_rank(y))

    def pre(z: int) -> Optional[int]:
        t = b.preimage(z)
        if t is not None:
            return a(t)
        j = b.certificate_index(z)
        if j is None or j % 2:
            return None
        return a.complement_point(j // 2)

    def cert_index(z: int) -> Optional[int]:
        j = b.certificate_index(z)
        if j is None or j % 2 == 0:
            return None
        return (j - 1) // 2

    return ComputableInjection(
        rule=rule,
        preimage=pre,
        certificate=lambda k: b.certificate(2 * k + 1),
        certificate_index=cert_index,
        name=f"({b.name}/{a.name})",
    )


@dataclass(frozen=True)
class NatPlus:
    """(N+, +) with the certificates the embedding needs."""

    def mul(self, m: int, n: int) -> int:
        return m + n

    def theta_class(self, n: int) -> int:
        # cancellative, so theta is the identity relation
        return n

    def representative(self, label: int) -> int:
        return label

    def is_idempotent(self, n: int) -> bool:
        return n + n == n


def nat_plus_carrier() -> NatPlus:
    return NatPlus()


@dataclass
class Theorem2Result:
    window: int
    samples: int
    seed: int
    embedding: EmbeddingReport
    witnesses: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.embedding.ok


def simplicity_witness(A: tuple[ComputableInjection, int], B: tuple[ComputableInjection, int],
                       lam: int, v: ComputableInjection, window: int):
    """U, V with U*A*V == B in the target sandwich semigroup (on the window).

    Two solves: first w with ``w o (f o P''(m) o v) == g``, then u with
    ``u o P''(lam) == w``; then ``U = (u, lam)`` and ``V = (v, [n])``.
    """
    (f, m), (g, n) = A, B
    h = dual_baer_levi_product(dual_baer_levi_product(f, tau_doubling(m)), v)
    w = left_divide(h, g)
    u = left_divide(tau_doubling(lam), w)
    U, V = (u, lam), (v, n)
    first = dual_baer_levi_product(dual_baer_levi_product(u, tau_doubling(lam)), f)
    left = dual_baer_levi_product(dual_baer_levi_product(first, tau_doubling(m)), v)
    ok = window_equal(left, g, window) and not u.check_window(window) and not w.check_window(window)
    return U, V, ok


def theorem2_demo(window: int = 1024, samples: int = 50, seed: int = 0,
                  witnesses: int = 10, max_label: int = 16) -> Theorem2Result:
    if window < 64:
        raise ValueError(f"window must be >= 64, got {window}")
    rng = random.Random(seed)
    source = nat_plus_carrier()
    result = Theorem2Result(window, samples, seed, EmbeddingReport())
    if samples == 0:
        return result

    taus: dict[int, ComputableInjection] = {}

    def tau(n: int) -> ComputableInjection:
        if n not in taus:
            taus[n] = tau_doubling(n)
        return taus[n]

    def equal(f, g):
        return window_equal(f, g, window)

    def draw():
        return (rng.randint(1, max_label), rng.randint(1, max_label))

    pairs = [(draw(), draw()) for _ in range(samples)]
    tau_sample = sorted({a for u, v in pairs for a in (u[0], v[0])})[:16]
    for a in tau_sample:
        for problem in tau(a).check_window(window):
            result.failures.append(("tau_window_injective", problem))
        if source.is_idempotent(a):
            result.failures.append(("source_idempotent", str(a)))
        sq = dual_baer_levi_product(tau(a), tau(a))
        if equal(sq, tau(a)):
            result.failures.append(("target_idempotent", tau(a).name))
    result.embedding = theorem2_embed(
        source_mul=source.mul,
        target_mul=dual_baer_levi_product,
        tau=tau,
        p=source.representative,
        theta_class=source.theta_class,
        equal=equal,
        pairs=pairs,
        tau_sample=tau_sample,
    )
    result.failures.extend(result.embedding.failures)
    for _ in range(min(witnesses, samples)):
        (a, m), (b, n) = draw(), draw()
        lam = rng.randint(1, max_label)
        A, B = (tau(a), m), (tau(b), n)
        _, _, ok = simplicity_witness(A, B, lam, tau(1), window)
        result.witnesses += 1
        if not ok:
            result.failures.append(("simplicity_witness", f"A=(tau({a}),[{m}]) B=(tau({b}),[{n}])"))
    return result
