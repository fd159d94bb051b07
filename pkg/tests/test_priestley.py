import pytest

import oracles
from proxkit.corpus import named_lattice, small_poset
from proxkit.order import chain, mask_of
from proxkit.priestley import birkhoff_check, eta, prime_filters, priestley_space, upset_lattice, upsets


def _labels(L, F):
    return set(F.labels(L.names))


def test_prime_filter_examples():
    assert [_labels(named_lattice("C2"), F) for F in prime_filters(named_lattice("C2"))] == [{"1"}]
    assert [_labels(named_lattice("C3"), F) for F in prime_filters(named_lattice("C3"))] == [{"1"}, {"m", "1"}]
    B2 = named_lattice("B2")
    assert [_labels(B2, F) for F in prime_filters(B2)] == [{"a", "1"}, {"b", "1"}]


def test_prime_filters_match_oracle(corpus):
    for L in corpus.values():
        assert sorted(F.bits for F in prime_filters(L)) == sorted(mask_of(F) for F in oracles.prime_filters(L))


def test_eta_examples(corpus):
    B2 = named_lattice("B2")
    X = priestley_space(B2)
    assert [X.points[i] for i in eta(X, B2.index("a"))] == [X.points[0]]
    for L in corpus.values():
        X = priestley_space(L)
        assert not eta(X, L.bottom)
        assert len(eta(X, L.top)) == X.size


def test_dual_order_is_inclusion(corpus):
    for L in corpus.values():
        X = priestley_space(L)
        for i, p in enumerate(X.points):
            for j, q in enumerate(X.points):
                assert X.order.le(i, j) == (p <= q)


@pytest.mark.parametrize("poset, size", [("P2anti", 4), ("P2chain", 3), ("P1", 2), ("P0", 1)])
def test_upset_lattice_sizes(poset, size):
    assert upset_lattice(small_poset(poset)).size == size


def test_upsets_of_two_chain():
    P = small_poset("P2chain")
    assert upsets(P) == [0, 0b10, 0b11]


def test_birkhoff_on_corpus(corpus):
    for L in corpus.values():
        rep = birkhoff_check(L)
        assert rep.upset_lattice.size == L.size
        assert sorted(rep.eta_index) == list(range(L.size))


def test_birkhoff_degenerate():
    rep = birkhoff_check(chain(1))
    assert rep.space.size == 0 and rep.upsets == [0]
