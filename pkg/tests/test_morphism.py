import pytest

from theta_forge.congruence import quotient, theta
from theta_forge.construction import SandwichSpec, p_construct, theta_respecting_pmaps
from theta_forge.core import cyclic_group, direct_product, right_zero, trivial
from theta_forge.morphism import (
    SizeMismatch,
    TauNotHomomorphicOnWindow,
    TauNotInjectiveOnWindow,
    check_morphism,
    find_isomorphism,
    theorem1_kernel_characterization,
    theorem1_verify,
    theorem2_embed,
)

from . import oracles


def test_check_morphism_examples(named):
    w = check_morphism((0, 1), named["Z2"], named["Z2"])
    assert w.is_homomorphism and w.is_injective and w.is_surjective
    w = check_morphism((0, 0), named["L2"], trivial())
    assert w.is_homomorphism and not w.is_injective and w.is_surjective
    q = quotient(named["S3x"], theta(named["S3x"]))
    w = check_morphism(q.projection, named["S3x"], q.factor)
    assert w.is_homomorphism and w.is_surjective
    with pytest.raises(SizeMismatch):
        check_morphism((0,), named["Z2"], named["Z2"])


def test_find_isomorphism_examples(named):
    assert find_isomorphism(named["Z2"], named["Z2"]) is not None
    assert find_isomorphism(named["L2"], named["R2"]) is None
    T = p_construct(SandwichSpec(named["Z2"], 2, (0, 0))).as_semigroup
    assert find_isomorphism(T, direct_product(cyclic_group(2), right_zero(2))) is not None


def test_find_isomorphism_matches_permutation_scan(small):
    for S in small:
        for T in small:
            if S.n != T.n:
                continue
            found = find_isomorphism(S, T)
            assert (found is not None) == oracles.brute_isomorphic(S, T)
            if found is not None:
                assert oracles.is_hom(found.map, S, T)


def test_theorem1_s3x(named):
    r = theorem1_verify(named["S3x"])
    assert r.sandwich_order == 6
    assert r.kernel_classes == 2
    assert r.target_order == 2
    assert r.ok, r.details
    assert find_isomorphism(
        quotient(p_construct(r.spec).as_semigroup, theta(p_construct(r.spec).as_semigroup)).factor,
        right_zero(2)) is not None


def test_theorem1_z2_is_identity_on_pairs(named):
    r = theorem1_verify(named["Z2"])
    assert r.ok
    assert r.phi == (0, 1, 2, 3)


def test_theorem1_n2(named):
    r = theorem1_verify(named["N2"])
    assert r.ok and r.kernel_classes == 1 and r.target_order == 1


def test_theorem1_every_p_order3(small):
    for S in small:
        for spec in theta_respecting_pmaps(S):
            assert theorem1_verify(S, spec).ok
            assert theorem1_kernel_characterization(S, spec)


def test_kernel_characterization_examples(named):
    assert theorem1_kernel_characterization(named["S3x"])
    assert theorem1_kernel_characterization(named["Z2"])


def _additive(pairs, tau=lambda a: 2 * a, **kw):
    return theorem2_embed(
        source_mul=lambda a, b: a + b,
        target_mul=lambda f, g: f + g,
        tau=tau,
        p=lambda label: label,
        theta_class=lambda a: a,
        equal=lambda x, y: x == y,
        pairs=pairs,
        **kw,
    )


def test_theorem2_embed_on_integers():
    pairs = [((a, b), (c, d)) for a in range(1, 4) for b in range(1, 3) for c in range(1, 3) for d in range(1, 3)]
    report = _additive(pairs, tau_sample=[1, 2, 3])
    assert report.ok
    assert report.pairs_checked == len(pairs)


def test_theorem2_embed_rejects_bad_tau():
    with pytest.raises(TauNotHomomorphicOnWindow):
        _additive([], tau=lambda a: a + 1, tau_sample=[1, 2])
    with pytest.raises(TauNotInjectiveOnWindow):
        theorem2_embed(lambda a, b: a + b, lambda f, g: 0, lambda a: 0, lambda x: x, lambda x: x,
                       lambda x, y: x == y, [], tau_sample=[1, 2])
