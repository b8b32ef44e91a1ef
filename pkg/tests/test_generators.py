import random

import pytest
from hypothesis import given, strategies as st

from submcp import InvalidArgumentError, brute_force_opt, verify_properties
from submcp.generators import (FUNCTION_KINDS, MATROID_KINDS, common_mc_instance, generate,
                               has_common_basis, random_common_mc)
from submcp.matroid import check_axioms


@given(st.integers(0, 10**6), st.sampled_from(FUNCTION_KINDS), st.sampled_from(MATROID_KINDS))
def test_random_family_valid_and_reproducible(seed, fkind, mkind):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    params = {"n": n, "k": rng.randint(1, n), "function": fkind, "matroid": mkind}
    inst = generate("random", params, seed)
    inst.validate()
    assert inst.dumps() == generate("random", params, seed).dumps()
    assert check_axioms(inst.matroid) is None
    rep = verify_properties(inst.function)
    assert rep.submodular
    if inst.function.symmetric:
        assert rep.symmetric
    if inst.function.monotone:
        assert rep.monotone


@given(st.integers(0, 10**6), st.integers(2, 9), st.integers(1, 2))
def test_tree_family(seed, n, matroids):
    inst = generate("tree", {"n": n, "k": min(3, n), "matroid": "mixed", "matroids": matroids},
                    seed)
    inst.validate()
    assert len(inst.function.graph.edges) == n - 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_tightness_shape(k):
    inst = generate("tightness", {"k": k})
    inst.validate()
    assert inst.n == 2 * k
    f = inst.function
    assert f({0, k}) == min(1, k - 1) and f(set(range(2 * k))) == k - 1


def test_common_mc_with_common_basis_has_zero_optimum():
    P1 = [[0, 1], [2, 3]]
    P2 = [[0, 2], [1, 3]]
    P3 = [[0, 2], [1, 3]]
    assert has_common_basis(P1, P2, P3)  # {0, 3} meets every class once
    inst = common_mc_instance(P1, P2, P3)
    inst.validate()
    P, v = brute_force_opt(inst.function, inst.matroid, inst.matroid2, common=True)
    assert v == 0
    assert inst.matroid.is_independent(P.witness) and inst.matroid2.is_independent(P.witness)


def test_common_mc_without_common_basis_is_positive():
    # the three perfect matchings of K4 share no transversal
    P1, P2, P3 = [[0, 3], [1, 2]], [[0, 1], [2, 3]], [[0, 2], [1, 3]]
    assert not has_common_basis(P1, P2, P3)
    inst = common_mc_instance(P1, P2, P3)
    _, v = brute_force_opt(inst.function, inst.matroid, inst.matroid2, common=True)
    assert v > 0


def test_common_mc_input_checks():
    with pytest.raises(InvalidArgumentError):
        common_mc_instance([[0, 1]], [[0, 1]], [[0], [1]])
    with pytest.raises(InvalidArgumentError):
        common_mc_instance([[0], [2]], [[0], [1]], [[0], [1]])


@given(st.integers(0, 10**6))
def test_random_common_mc_reproducible(seed):
    a = random_common_mc(seed, m=5, r=2)
    assert a.dumps() == random_common_mc(seed, m=5, r=2).dumps()
    assert a.mode == "common" and a.n == 5 + 2 + 1


def test_unknown_family():
    with pytest.raises(InvalidArgumentError):
        generate("nope")
    with pytest.raises(InvalidArgumentError):
        generate("random", {"n": 3, "k": 4})
