import random

import pytest
from hypothesis import given, settings, strategies as st

from theta_forge.symbolic import (
    ComputableInjection,
    dual_baer_levi_product,
    left_divide,
    nat_plus_carrier,
    scaling,
    simplicity_witness,
    tau_doubling,
    theorem2_demo,
    window_equal,
)

W = 1024


def test_nat_plus():
    N = nat_plus_carrier()
    assert N.mul(3, 4) == 7
    assert N.theta_class(5) == 5
    assert not any(N.is_idempotent(n) for n in range(1, 101))


def test_tau_values():
    assert tau_doubling(1)(5) == 10
    assert tau_doubling(2)(1) != tau_doubling(3)(1)
    with pytest.raises(ValueError):
        tau_doubling(0)


def test_tau_is_a_homomorphism_on_the_window():
    for m in range(1, 17):
        for n in range(1, 17):
            assert window_equal(tau_doubling(m + n), dual_baer_levi_product(tau_doubling(m), tau_doubling(n)), W)


def test_tau_certificates_hold():
    for n in (1, 4, 9):
        assert tau_doubling(n).check_window(W) == []


def test_product_is_composition():
    d = scaling(2)
    assert dual_baer_levi_product(d, d).window(5) == (0, 4, 8, 12, 16)
    assert dual_baer_levi_product(d, scaling(3)).window(4) == (0, 6, 12, 18)
    assert dual_baer_levi_product(d, scaling(3)).check_window(W) == []


def test_product_is_associative_on_window():
    f, g, h = scaling(2), scaling(3), left_divide(scaling(2), scaling(5))
    lhs = dual_baer_levi_product(dual_baer_levi_product(f, g), h)
    rhs = dual_baer_levi_product(f, dual_baer_levi_product(g, h))
    assert window_equal(lhs, rhs, W)


def test_left_divide_double_into_quadruple():
    a, b = scaling(2), scaling(4)
    x = left_divide(a, b)
    assert all(x(2 * t) == 4 * t for t in range(512))
    assert window_equal(dual_baer_levi_product(x, a), b, 512)
    assert x.check_window(512) == []


def test_left_divide_by_itself_fixes_the_image():
    a = scaling(3)
    x = left_divide(a, a)
    assert all(x(y) == y for y in range(0, W, 3))
    assert window_equal(dual_baer_levi_product(x, a), a, W)
    assert x.check_window(W) == []


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 9), st.integers(2, 9), st.integers(1, 3))
def test_left_divide_property(c1, c2, depth):
    a = scaling(c1)
    for k in range(depth):
        a = dual_baer_levi_product(a, tau_doubling(k + 1))
    b = scaling(c2)
    x = left_divide(a, b)
    assert window_equal(dual_baer_levi_product(x, a), b, 256)
    assert x.check_window(256) == []


def test_no_sampled_element_is_idempotent():
    rng = random.Random(0)
    for _ in range(20):
        f = dual_baer_levi_product(scaling(rng.randint(2, 9)), tau_doubling(rng.randint(1, 6)))
        assert not window_equal(dual_baer_levi_product(f, f), f, 64)


def test_certificate_violation_is_detected():
    # identity map with a bogus certificate pointing into the image
    bogus = ComputableInjection(lambda x: x, lambda y: y, lambda k: k, lambda y: y, name="id")
    assert bogus.check_window(64)


def test_simplicity_witness_example():
    A, B = (tau_doubling(2), 1), (tau_doubling(3), 2)
    U, V, ok = simplicity_witness(A, B, lam=1, v=tau_doubling(1), window=W)
    assert ok
    assert V[1] == 2


def test_demo_passes():
    r = theorem2_demo(window=1024, samples=50, seed=0)
    assert r.ok, r.failures
    assert r.witnesses == 10
    assert r.embedding.pairs_checked == 50


def test_demo_edge_cases():
    r = theorem2_demo(window=64, samples=0)
    assert r.ok and r.embedding.pairs_checked == 0
    with pytest.raises(ValueError):
        theorem2_demo(window=1)
