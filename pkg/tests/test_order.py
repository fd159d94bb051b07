import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from proxkit.corpus import NON_DISTRIBUTIVE, all_posets, named_lattice
from proxkit.errors import CycleError, NoBounds, NotALattice, NotDistributive
from proxkit.order import (ElementSet, bits_of, boolean, chain, close_order, filter_generated,
                           ideal_generated, is_filter, is_prime_filter, join_irreducibles,
                           lattice_from_pairs, lattice_from_poset, mask_of, proper_filters)


def test_bitmap_helpers_roundtrip():
    assert list(bits_of(0b1011)) == [0, 1, 3]
    assert mask_of([3, 0, 1]) == 0b1011
    s = ElementSet.of(4, [0, 2])
    assert list(s) == [0, 2] and len(s) == 2 and 2 in s and 1 not in s
    assert s.complement() == ElementSet.of(4, [1, 3])
    assert s <= ElementSet.full(4) and not ElementSet.full(4) <= s


def test_close_order_examples():
    P = close_order([(0, 1)], 2)
    assert P.le(0, 1) and not P.le(1, 0)
    A = close_order([], 3)
    assert A.covers == [] and all(A.le(i, i) for i in range(3))
    with pytest.raises(CycleError) as err:
        close_order([(0, 1), (1, 0)], 2)
    assert err.value.pair == (0, 1)


def test_close_order_takes_transitive_closure():
    P = close_order([(0, 1), (1, 2), (2, 3)], 4)
    assert P.le(0, 3)
    assert P.covers == [(0, 1), (1, 2), (2, 3)]


def test_close_order_rejects_bad_index():
    with pytest.raises(IndexError):
        close_order([(0, 5)], 2)


def test_b2_meets_and_joins():
    L = boolean(2)
    a, b = L.index("a"), L.index("b")
    assert L.meet[a][b] == L.bottom and L.join[a][b] == L.top


def test_chain_is_min_max():
    L = chain(3)
    for i, j in itertools.product(range(3), repeat=2):
        assert L.meet[i][j] == min(i, j) and L.join[i][j] == max(i, j)


@pytest.mark.parametrize("name, witness", [("M3", ("x", "y", "z")), ("N5", ("c", "a", "b"))])
def test_non_distributive_rejected_with_triple(name, witness):
    labels, pairs = NON_DISTRIBUTIVE[name]
    with pytest.raises(NotDistributive) as err:
        lattice_from_pairs(pairs, labels)
    assert tuple(labels[i] for i in err.value.triple) == witness
    a, b, c = err.value.triple
    P = close_order(pairs, len(labels))
    # the reported triple really breaks distributivity
    lhs = oracles.glb(P, a, oracles.lub(P, b, c))
    assert lhs != oracles.lub(P, oracles.glb(P, a, b), oracles.glb(P, a, c))


def test_missing_bounds_and_joins():
    with pytest.raises(NoBounds):
        lattice_from_pairs([], ["x", "y"])
    # two maximal elements above a bottom, no top
    with pytest.raises(NoBounds):
        lattice_from_pairs([(0, 1), (0, 2)], ["0", "x", "y"])
    # bowtie: x, y below both u and v, so x ∨ y does not exist
    pairs = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NotALattice):
        lattice_from_pairs(pairs, ["0", "x", "y", "u", "v", "1"])


def test_meet_join_match_oracle(corpus):
    for L in corpus.values():
        for a, b in itertools.product(range(L.size), repeat=2):
            assert L.meet[a][b] == oracles.glb(L, a, b)
            assert L.join[a][b] == oracles.lub(L, a, b)


@pytest.mark.parametrize("name, expected", [("B2", {"a", "b"}), ("C3", {"m", "1"}), ("C1", set())])
def test_join_irreducibles_examples(name, expected):
    L = named_lattice(name)
    assert set(join_irreducibles(L).labels(L.names)) == expected


def test_filter_generation_examples():
    L = boolean(2)
    a, b = L.index("a"), L.index("b")
    assert set(filter_generated(L, [a]).labels(L.names)) == {"a", "1"}
    assert filter_generated(L, [a, b]) == ElementSet.full(4)
    assert set(filter_generated(L, []).labels(L.names)) == {"1"}
    assert set(ideal_generated(L, []).labels(L.names)) == {"0"}
    assert set(ideal_generated(L, [a, b]).labels(L.names)) == {"0", "a", "b", "1"}


def test_filters_match_oracle(corpus):
    for L in corpus.values():
        if L.size > 8:
            continue
        ours = [F.bits for F in proper_filters(L)]
        ref = sorted(mask_of(F) for F in oracles.proper_filters(L))
        assert ours == ref
        primes = {mask_of(F) for F in oracles.prime_filters(L)}
        assert {m for m in range(1 << L.size) if is_prime_filter(L, m)} == primes


@given(st.sets(st.integers(0, 7)))
def test_generated_filter_is_least(S):
    L = boolean(3)
    F = filter_generated(L, S)
    assert is_filter(L, F.bits)
    assert set(S) <= set(F)
    for G in oracles.subsets(8):
        if set(S) <= G and oracles.is_filter(L, G):
            assert set(F) <= G


def test_all_posets_counts():
    assert [len(all_posets(n)) for n in range(4)] == [1, 1, 3, 19]


def test_every_poset_upset_lattice_is_distributive():
    from proxkit.priestley import upset_lattice
    for n in range(4):
        for P in all_posets(n):
            L = upset_lattice(P)
            assert lattice_from_poset(L.poset).size == L.size
