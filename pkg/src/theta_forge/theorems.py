"""Exhaustive verification harness.

Every claim is a per-instance checker ``check(S, ctx) -> (count, failures[, counters])``
run over all labeled semigroups up to a given order.  Failures carry the
instance in compact form so they can be replayed with :func:`replay`.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable

from . import classify as cl
from .congruence import quotient, theta, theta_star
from .construction import (
    DEFAULT_P_BUDGET,
    SandwichSpec,
    canonical_theta_spec,
    p_construct,
    p_prime_spec,
    rep_independence_check,
    sandwich_maps,
    theta_respecting_pmaps,
)
from .core import FiniteSemigroup, parse_compact, to_compact
from .enumeration import semigroups_up_to
from .morphism import find_isomorphism, theorem1_kernel_characterization, theorem1_verify

DEFAULT_SEED = 0
READINGS = ("abstract_group", "permutation_group")


class UnknownClaim(KeyError):
    pass


@dataclass(frozen=True, order=True)
class Failure:
    instance: str
    direction: str
    detail: str

    def to_dict(self) -> dict:
        return {"instance": self.instance, "direction": self.direction, "detail": self.detail}


@dataclass
class VerificationReport:
    claim: str
    max_order: int
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)
    reading: str | None = None
    seed: int | None = None
    elapsed_ms: float | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "id": self.claim,
            "max_order": self.max_order,
            "instances": self.instances,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }
        if self.reading is not None:
            d["reading"] = self.reading
        if self.seed is not None:
            d["seed"] = self.seed
        if self.extra:
            d["extra"] = self.extra
        return d


@dataclass(frozen=True)
class Context:
    reading: str = "abstract_group"
    seed: int = DEFAULT_SEED
    lambda_sizes: tuple[int, ...] = (1, 2, 3)
    p_budget: int = DEFAULT_P_BUDGET
    all_p_up_to: int = 3


# (constructions or instances checked, failures[, auxiliary counters])
Checked = tuple


def _biconditional(instance: str, left: bool, right: bool, names: tuple[str, str]) -> list[Failure]:
    if left and not right:
        return [Failure(instance, f"{names[0]} => {names[1]}", f"{names[0]} holds, {names[1]} fails")]
    if right and not left:
        return [Failure(instance, f"{names[1]} => {names[0]}", f"{names[1]} holds, {names[0]} fails")]
    return []


def _rng(ctx: Context, *key) -> random.Random:
    # keyed by instance so sampling is independent of order and sharding
    return random.Random(":".join(map(str, (ctx.seed,) + key)))


# --- per-instance checkers -----------------------------------------------------

def quotient_is_group(S: FiniteSemigroup, reading: str) -> bool:
    factor = quotient(S, theta(S)).factor
    if not cl.is_group(factor):
        return False
    if reading == "permutation_group":
        return all(len(set(S.column(a))) == S.n for a in range(S.n))
    return True


def check_lemma1(S: FiniteSemigroup, ctx: Context) -> Checked:
    if ctx.reading not in READINGS:
        raise ValueError(f"unknown reading {ctx.reading!r}")
    inst = to_compact(S)
    return 1, _biconditional(inst, cl.is_left_group(S), quotient_is_group(S, ctx.reading),
                             ("left_group(S)", f"{ctx.reading}(S/theta)"))


def check_lemma2(S: FiniteSemigroup, ctx: Context) -> Checked:
    factor = quotient(S, theta(S)).factor
    return 1, _biconditional(to_compact(S), cl.is_m_inversive(S), cl.is_right_group(factor),
                             ("m_inversive(S)", "right_group(S/theta)"))


def check_lemma3(S: FiniteSemigroup, ctx: Context) -> Checked:
    factor = quotient(S, theta(S)).factor
    return 1, _biconditional(to_compact(S), cl.is_left_equalizer_simple(S), cl.is_left_cancellative(factor),
                             ("left_equalizer_simple(S)", "left_cancellative(S/theta)"))


_HEREDITARY = (
    ("lemma4", cl.is_left_cancellative, "left_cancellative"),
    ("lemma5", cl.is_right_simple, "right_simple"),
    ("corollary1", cl.is_right_group, "right_group"),
)


def check_hereditary(S: FiniteSemigroup, ctx: Context) -> Checked:
    inst = to_compact(S)
    holds = [(name, pred, label) for name, pred, label in _HEREDITARY if pred(S)]
    if not holds:
        return 0, []
    count, failures = 0, []
    for m in ctx.lambda_sizes:
        for p in sandwich_maps(S.n, m, ctx.p_budget, _rng(ctx, inst, m)):
            spec = SandwichSpec(S, m, p)
            T = p_construct(spec).as_semigroup
            count += 1
            for name, pred, label in holds:
                if not pred(T):
                    failures.append(Failure(inst, name, f"{label} lost in {spec.serialize()}"))
    return count, failures


def check_theorem1(S: FiniteSemigroup, ctx: Context) -> Checked:
    inst = to_compact(S)
    specs = list(theta_respecting_pmaps(S)) if S.n <= ctx.all_p_up_to else [canonical_theta_spec(S)]
    failures = []
    for spec in specs:
        report = theorem1_verify(S, spec)
        for verdict, ok in report.verdicts.items():
            if not ok:
                failures.append(Failure(inst, f"phi_{verdict}",
                                        f"{spec.serialize()}: {'; '.join(report.details)}"))
        if not theorem1_kernel_characterization(S, spec):
            failures.append(Failure(inst, "kernel_characterization", spec.serialize()))
        if S.n <= ctx.all_p_up_to:
            T = p_construct(spec).as_semigroup
            Q = quotient(T, theta(T)).factor
            U = p_construct(p_prime_spec(S)).as_semigroup
            if find_isomorphism(Q, U) is None:
                failures.append(Failure(inst, "isomorphism_search", spec.serialize()))
    return len(specs), failures


def check_rep_independence(S: FiniteSemigroup, ctx: Context) -> Checked:
    if rep_independence_check(S):
        return 1, []
    return 1, [Failure(to_compact(S), "rep_independence", "sandwich tables differ across theta-respecting P")]


_COROLLARIES = (
    ("corollary2", cl.is_left_group, "left_group", cl.is_m_inversive, "m_inversive"),
    ("corollary3", cl.is_m_inversive, "m_inversive", cl.is_m_inversive, "m_inversive"),
    ("corollary4", cl.is_left_equalizer_simple, "left_equalizer_simple",
     cl.is_left_equalizer_simple, "left_equalizer_simple"),
)


def check_corollaries234(S: FiniteSemigroup, ctx: Context) -> Checked:
    inst = to_compact(S)
    holds = [c for c in _COROLLARIES if c[1](S)]
    if not holds:
        return 0, []
    specs = list(theta_respecting_pmaps(S)) if S.n <= ctx.all_p_up_to else [canonical_theta_spec(S)]
    count, failures = 0, []
    aux: Counter = Counter()
    for spec in specs:
        T = p_construct(spec).as_semigroup
        count += 1
        for name, _, hyp, concl, label in holds:
            if not concl(T):
                failures.append(Failure(inst, name, f"{hyp}(S) but not {label} for {spec.serialize()}"))
            if name == "corollary4":
                # the closing line of the published argument names M-inversivity; track it on the side
                aux["corollary4_constructions"] += 1
                aux["corollary4_constructions_m_inversive"] += cl.is_m_inversive(T)
    return count, failures, aux


def check_cp_exercise_dual(S: FiniteSemigroup, ctx: Context) -> Checked:
    if not cl.is_left_simple(S):
        return 0, []
    inst = to_compact(S)
    count, failures = 0, []
    for m in ctx.lambda_sizes:
        for p in sandwich_maps(S.n, m, ctx.p_budget, _rng(ctx, inst, m)):
            spec = SandwichSpec(S, m, p)
            T = p_construct(spec).as_semigroup
            count += 1
            if not cl.is_simple(T):
                failures.append(Failure(inst, "simple", spec.serialize()))
            if not cl.minimal_left_ideals(T):
                failures.append(Failure(inst, "minimal_left_ideal", spec.serialize()))
    return count, failures


CHECKERS: dict[str, Callable[[FiniteSemigroup, Context], Checked]] = {
    "lemma1": check_lemma1,
    "lemma2": check_lemma2,
    "lemma3": check_lemma3,
    "hereditary": check_hereditary,
    "theorem1": check_theorem1,
    "rep_independence": check_rep_independence,
    "corollaries234": check_corollaries234,
    "cp_exercise_dual": check_cp_exercise_dual,
}


# --- driver -------------------------------------------------------------------

def _run_chunk(claim: str, ctx: Context, chunk: list[FiniteSemigroup]) -> Checked:
    checker = CHECKERS[claim]
    total, failures, aux = 0, [], Counter()
    for S in chunk:
        c, f, *rest = checker(S, ctx)
        total += c
        failures.extend(f)
        if rest:
            aux.update(rest[0])
    return total, failures, aux


def _chunks(items: Iterable[FiniteSemigroup], size: int):
    chunk: list[FiniteSemigroup] = []
    for S in items:
        chunk.append(S)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def run_claim(claim: str, max_order: int, ctx: Context | None = None, jobs: int = 1,
              instances: Iterable[FiniteSemigroup] | None = None) -> VerificationReport:
    if claim not in CHECKERS:
        raise UnknownClaim(claim)
    ctx = ctx or Context()
    start = time.perf_counter()
    source = instances if instances is not None else semigroups_up_to(max_order)
    total, failures, aux = 0, [], Counter()
    work = partial(_run_chunk, claim, ctx)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, _chunks(source, 256)))
    else:
        results = [work(chunk) for chunk in _chunks(source, 256)]
    for c, f, a in results:
        total += c
        failures.extend(f)
        aux.update(a)
    report = VerificationReport(
        claim=claim,
        max_order=max_order,
        instances=total,
        failures=sorted(failures),
        reading=ctx.reading if claim == "lemma1" else None,
        seed=ctx.seed if claim in ("hereditary", "cp_exercise_dual") else None,
        elapsed_ms=(time.perf_counter() - start) * 1000,
        extra=dict(sorted(aux.items())),
    )
    return report


def verify_lemma1(max_order: int, reading: str = "abstract_group", jobs: int = 1) -> VerificationReport:
    return run_claim("lemma1", max_order, Context(reading=reading), jobs)


def verify_lemma2(max_order: int, jobs: int = 1) -> VerificationReport:
    return run_claim("lemma2", max_order, jobs=jobs)


def verify_lemma3(max_order: int, jobs: int = 1) -> VerificationReport:
    return run_claim("lemma3", max_order, jobs=jobs)


def verify_hereditary(max_order: int, lambda_sizes: Iterable[int] = (1, 2, 3),
                      p_budget: int = DEFAULT_P_BUDGET, seed: int = DEFAULT_SEED,
                      jobs: int = 1) -> VerificationReport:
    sizes = tuple(lambda_sizes)
    if not sizes:
        raise ValueError("lambda_sizes must be nonempty")
    ctx = Context(lambda_sizes=sizes, p_budget=p_budget, seed=seed)
    return run_claim("hereditary", max_order, ctx, jobs)


def verify_theorem1(max_order: int, jobs: int = 1) -> VerificationReport:
    return run_claim("theorem1", max_order, jobs=jobs)


def verify_rep_independence(max_order: int, jobs: int = 1) -> VerificationReport:
    return run_claim("rep_independence", max_order, jobs=jobs)


def verify_corollaries234(max_order: int, jobs: int = 1) -> VerificationReport:
    return run_claim("corollaries234", max_order, jobs=jobs)


def verify_cp_exercise_dual(max_order: int, lambda_sizes: Iterable[int] = (1, 2, 3),
                            p_budget: int = DEFAULT_P_BUDGET, seed: int = DEFAULT_SEED,
                            jobs: int = 1) -> VerificationReport:
    ctx = Context(lambda_sizes=tuple(lambda_sizes), p_budget=p_budget, seed=seed)
    return run_claim("cp_exercise_dual", max_order, ctx, jobs)


def replay(claim: str, failure: Failure, ctx: Context | None = None) -> list[Failure]:
    """Re-run one claim on a recorded instance; a sound failure re-fails."""
    if claim not in CHECKERS:
        raise UnknownClaim(claim)
    S = parse_compact(failure.instance)
    return CHECKERS[claim](S, ctx or Context())[1]


# --- counterexample search ------------------------------------------------------

def _theta_ne_theta_star(S: FiniteSemigroup) -> bool:
    return theta(S) != theta_star(S)


def _lemma1_abstract_failure(S: FiniteSemigroup) -> bool:
    return bool(check_lemma1(S, Context(reading="abstract_group"))[1])


def _cor4_not_m_inversive(S: FiniteSemigroup) -> bool:
    # the last sentence of the Corollary 4 argument names M-inversivity instead
    if not cl.is_left_equalizer_simple(S):
        return False
    return not cl.is_m_inversive(p_construct(canonical_theta_spec(S)).as_semigroup)


SEARCHES: dict[str, Callable[[FiniteSemigroup], bool]] = {
    "theta_ne_theta_star": _theta_ne_theta_star,
    "lemma1_abstract_reading_failure": _lemma1_abstract_failure,
    "corollary4_construction_not_m_inversive": _cor4_not_m_inversive,
}


def counterexample_search(claim: str, max_order: int, mode: str = "labeled") -> list[FiniteSemigroup]:
    if claim not in SEARCHES:
        raise UnknownClaim(claim)
    pred = SEARCHES[claim]
    return [S for S in semigroups_up_to(max_order, mode) if pred(S)]
