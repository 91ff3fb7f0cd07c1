import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilpjordan.errors import NotClassTwo, NotPrime, PrimeDoesNotDivideOrder
from nilpjordan.group_core import centralizer, is_normal, kernel
from nilpjordan.structure import (
    commutator_map,
    derived_subgroup,
    describe_series,
    is_class_at_most_two,
    is_nilpotent_via_sylow,
    lower_central_series,
    nilpotency_class,
    sylow_subgroup,
    sylow_subgroups,
    upper_central_series,
)
from nilpjordan.witnesses import cyclic, dihedral, direct_product, heisenberg_monomial
from oracles import brute


def test_upper_series_examples(small):
    assert upper_central_series(small["C6"]).orders == [1, 6]
    s3 = upper_central_series(small["S3"])
    assert s3.orders == [1] and not s3.terminated
    h3 = upper_central_series(small["H3"])
    assert h3.orders == [1, 3, 27] and h3.terminated


def test_h3_center_is_scalar(small):
    H3 = small["H3"]
    Z = upper_central_series(H3).chain[1]
    for i in Z.elements:
        g = H3.element(i)
        assert all(g.rows[r][c] == (g.rows[0][0] if r == c else 0) for r in range(3) for c in range(3))


def test_lower_series_examples(small):
    s3 = lower_central_series(small["S3"])
    assert s3.orders == [6, 3] and not s3.terminated
    assert lower_central_series(small["H3"]).orders == [27, 3, 1]
    assert lower_central_series(small["V4"]).orders == [4, 1]


def test_class_examples(small):
    assert nilpotency_class(direct_product(cyclic(4), cyclic(2))) == 1
    assert nilpotency_class(small["D4"]) == 2
    assert nilpotency_class(small["S3"]) is None
    assert nilpotency_class(cyclic(1)) == 0
    assert nilpotency_class(dihedral(8)) == 3


def test_class_two_examples(small):
    assert is_class_at_most_two(small["H3"])
    assert not is_class_at_most_two(small["S3"])
    assert is_class_at_most_two(small["V4"])
    assert not is_class_at_most_two(dihedral(8))


def test_series_against_oracle(corpus):
    for G in corpus:
        if G.order > 64:
            continue
        B = brute(G)
        assert [len(x) for x in B.lower_series()] == lower_central_series(G).orders, G.name
        assert [len(x) for x in B.upper_series()] == upper_central_series(G).orders, G.name
        assert B.nilpotency_class() == nilpotency_class(G), G.name


def test_series_invariants(corpus):
    for G in corpus:
        up = upper_central_series(G)
        low = lower_central_series(G)
        assert up.chain[0].order == 1 and low.chain[0].order == G.order
        for a, b in zip(up.chain, up.chain[1:]):
            assert a <= b and is_normal(G, b)
        for a, b in zip(low.chain, low.chain[1:]):
            assert b <= a and is_normal(G, b)
        if up.terminated:
            assert low.terminated and up.length == low.length == nilpotency_class(G)
        assert describe_series(up)["orders"] == up.orders


def test_commutator_map_examples(small):
    H3 = small["H3"]
    y = H3.gens[1]
    f = commutator_map(H3, y)
    assert f.codomain.order == 3
    K = kernel(f)
    assert K.order == 9 and K == centralizer(H3, [y])

    D4 = small["D4"]
    r = next(i for i in range(8) if D4.element_orders[i] == 4)
    assert kernel(commutator_map(D4, r)).order == 4


def test_commutator_map_abelian_is_trivial(small):
    f = commutator_map(small["C6"], 1)
    assert kernel(f).order == 6


def test_commutator_map_refuses_class_three():
    with pytest.raises(NotClassTwo):
        commutator_map(dihedral(8), 1)


@given(st.data())
def test_commutator_map_kernel_is_centralizer(small, data):
    G = data.draw(st.sampled_from([small["H3"], small["Q8"], small["D4"]]))
    g = data.draw(st.integers(0, G.order - 1))
    assert kernel(commutator_map(G, g)) == centralizer(G, [g])


def test_derived_subgroup_against_oracle(small):
    for G in small.values():
        assert set(derived_subgroup(G).elements) == brute(G).commutator_subgroup()


def test_sylow_examples(small):
    assert sylow_subgroup(cyclic(12), 2).order == 4
    assert not is_nilpotent_via_sylow(small["S3"])
    assert is_nilpotent_via_sylow(direct_product(heisenberg_monomial(3), cyclic(2)))
    counts = {p: P.order for p, P in sylow_subgroups(small["S4"]).items()}
    assert counts == {2: 8, 3: 3}


def test_sylow_errors(small):
    with pytest.raises(NotPrime):
        sylow_subgroup(small["S4"], 4)
    with pytest.raises(PrimeDoesNotDivideOrder):
        sylow_subgroup(small["S4"], 5)


def test_sylow_agrees_with_series(corpus):
    for G in corpus:
        assert is_nilpotent_via_sylow(G) == (nilpotency_class(G) is not None), G.name
