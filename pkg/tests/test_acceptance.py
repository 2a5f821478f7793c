"""Exit criteria.  Each test prints one PASS/FAIL line (visible even without -s)."""
import time

import pytest

from theta_forge.cli import main
from theta_forge.enumeration import count
from theta_forge.symbolic import theorem2_demo
from theta_forge.theorems import Context, run_claim

from . import oracles

MAX_ORDER = 4


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] {'PASS' if ok else 'FAIL'}  {title}  {detail}")
        assert ok, f"criterion {number}: {title} {detail}"
    return emit


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def test_01_enumeration_counts(report):
    counts = [count(n) for n in (1, 2, 3)]
    naive = [len(oracles.naive_labeled_tables(n)) for n in (1, 2, 3)]
    c4, seconds = timed(count, 4)
    ok = counts == naive == [1, 8, 113] and c4 == 3492 and seconds <= 60
    report(1, "labeled counts 1, 8, 113, 3492", ok, f"counts={counts + [c4]} naive={naive} order4={seconds:.2f}s")


def test_02_lemma3(report):
    r, seconds = timed(run_claim, "lemma3", MAX_ORDER)
    report(2, "Lemma 3 biconditional, order <= 4", r.passed and seconds <= 300,
           f"instances={r.instances} failures={len(r.failures)} {seconds:.2f}s")


def test_03_lemma2(report):
    r = run_claim("lemma2", MAX_ORDER)
    report(3, "Lemma 2 biconditional, order <= 4", r.passed, f"instances={r.instances} failures={len(r.failures)}")


def test_04_lemma1_both_readings(report):
    perm = run_claim("lemma1", MAX_ORDER, Context(reading="permutation_group"))
    abstract2 = run_claim("lemma1", 2, Context(reading="abstract_group"))
    null_semigroups = {"2:0000", "2:1111"}
    reproduced = {f.instance for f in abstract2.failures} == null_semigroups and all(
        f.direction == "abstract_group(S/theta) => left_group(S)" for f in abstract2.failures)
    report(4, "Lemma 1: permutation reading clean, abstract reading reproduces N2",
           perm.passed and reproduced,
           f"permutation failures={len(perm.failures)} abstract@2={sorted(f.instance for f in abstract2.failures)}")


def test_05_hereditary(report):
    r = run_claim("hereditary", MAX_ORDER, Context(lambda_sizes=(1, 2, 3), p_budget=10_000))
    report(5, "Lemmas 4-5 and Corollary 1, order <= 4, |Lambda| <= 3", r.passed and r.instances > 0,
           f"constructions={r.instances} failures={len(r.failures)}")


def test_06_theorem1(report):
    r, seconds = timed(run_claim, "theorem1", MAX_ORDER, Context(all_p_up_to=3))
    report(6, "Theorem 1 explicit map + kernel characterization, order <= 4", r.passed and seconds <= 600,
           f"checks={r.instances} failures={len(r.failures)} {seconds:.2f}s")


def test_07_rep_independence(report):
    r = run_claim("rep_independence", MAX_ORDER)
    report(7, "sandwich product independent of theta-respecting P, order <= 4", r.passed,
           f"instances={r.instances} failures={len(r.failures)}")


def test_08_corollaries(report):
    r = run_claim("corollaries234", MAX_ORDER)
    report(8, "Corollaries 2-4 (Corollary 4 by its statement), order <= 4", r.passed and r.instances > 0,
           f"constructions={r.instances} failures={len(r.failures)}")


def test_09_cp_exercise_dual(report):
    r = run_claim("cp_exercise_dual", MAX_ORDER, Context(lambda_sizes=(1, 2, 3)))
    report(9, "left simple base -> simple sandwich with a minimal left ideal", r.passed and r.instances > 0,
           f"constructions={r.instances} failures={len(r.failures)}")


def test_10_theorem2_window(report):
    r, seconds = timed(theorem2_demo, window=1024, samples=50, seed=0)
    ok = r.ok and r.witnesses == 10 and r.embedding.pairs_checked == 50 and seconds <= 10
    report(10, "Theorem 2 window demo (W=1024, 50 pairs, seed 0)", ok,
           f"failures={len(r.failures)} witnesses={r.witnesses} {seconds:.2f}s")


def test_11_determinism(report, tmp_path):
    claims = "lemma1,lemma2,lemma3,hereditary,theorem1,rep_independence,corollaries234,cp_exercise_dual,theorem2"
    blobs = []
    for run, jobs in enumerate(("1", "1", "2")):
        path = tmp_path / f"run{run}.json"
        main(["verify", "--claims", claims, "--max-order", str(MAX_ORDER), "--seed", "0",
              "--jobs", jobs, "--json", str(path)])
        blobs.append(path.read_bytes())
    report(11, "byte-identical JSON envelopes across runs and --jobs", blobs[0] == blobs[1] == blobs[2],
           f"sizes={[len(b) for b in blobs]}")
