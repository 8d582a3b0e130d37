import pytest

from strongsb import PolyRing
from strongsb.engine import Stats
from strongsb.pairs import (
    G_PAIR,
    S_PAIR,
    PairQueue,
    Strategy,
    chain_criterion_g,
    chain_criterion_s,
    gpoly,
    gpoly_easy_skip,
    make_pair,
    make_pairs,
    product_criterion,
    queue_pop,
    spoly,
)

R = PolyRing(["x", "y", "z"], "degrevlex")


def P(*texts):
    return [R.parse(t) for t in texts]


@pytest.mark.parametrize("f,g,expected", [("2*x", "3*x", "0"), ("3*x", "2*y", "0"), ("x^2+1", "x*y+2", "-2*x+y")])
def test_spoly(f, g, expected):
    assert str(spoly(*P(f, g))) == expected


@pytest.mark.parametrize("f,g,expected", [("2*x", "3*x", "x"), ("3*x", "2*y", "x*y"), ("8*x", "6*x", "2*x")])
def test_gpoly(f, g, expected):
    assert str(gpoly(*P(f, g))) == expected


def test_zero_inputs_rejected():
    with pytest.raises(ValueError):
        spoly(R.zero(), R.one())
    with pytest.raises(ValueError):
        gpoly(R.one(), R.zero())


@pytest.mark.parametrize("f,g,expected", [("2*x", "6*y", True), ("4*x", "6*y", False), ("5*x", "5*x^2", True)])
def test_gpoly_easy(f, g, expected):
    assert gpoly_easy_skip(*P(f, g)) is expected


@pytest.mark.parametrize("f,g,expected", [("3*x", "2*y", True), ("3*x", "6*y", False), ("3*x", "2*x", False)])
def test_product_criterion(f, g, expected):
    assert product_criterion(*P(f, g)) is expected


def test_chain_criteria():
    assert chain_criterion_s(*P("x", "2*x*y", "3*x*z"))
    assert not chain_criterion_s(*P("4*x", "2*x*y", "3*x*z"))
    assert chain_criterion_g(*P("2*x", "4*x*y", "6*x*z"))
    assert not chain_criterion_g(*P("4*x", "4*x*y", "6*x*z"))
    assert not chain_criterion_g(*P("2*y^2", "4*x*y", "6*x*z"))


def _kinds(pairs):
    return sorted(p.kind for p in pairs)


def test_make_pairs_strategies():
    G = P("2*x", "3*x")
    assert _kinds(make_pairs(G, 1, Strategy.FILTERED)) == [G_PAIR]
    G = P("2*x", "6*y")
    assert _kinds(make_pairs(G, 1, Strategy.FILTERED)) == [S_PAIR]
    st = Stats()
    G = P("3*x", "2*y")
    assert _kinds(make_pairs(G, 1, Strategy.ALL, st)) == [G_PAIR]
    assert st.product_hits == 1 and st.g_pairs == 1 and st.s_pairs == 0
    st = Stats()
    assert _kinds(make_pairs(P("2*x", "6*y*x"), 1, Strategy.ALL, st)) == [S_PAIR]
    assert st.gpoly_easy_hits == 1


def test_make_pairs_skips_dead_slots_and_orders_indices():
    G = [R.parse("x"), None, R.parse("y^2")]
    pairs = make_pairs(G, 2, Strategy.ALL, criteria=False)
    assert [(p.i, p.j, p.kind) for p in pairs] == [(0, 2, S_PAIR)]
    assert R.exponents(pairs[0].lcm) == (1, 2, 0) and pairs[0].degree == 3


def test_queue_order():
    G = P("x^2", "x*y", "y", "2*x", "3*y")
    q = PairQueue()
    q.push(make_pair(G, 0, 1, S_PAIR))  # lcm x^2 y, degree 3
    q.push(make_pair(G, 3, 2, G_PAIR))  # lcm xy, degree 2
    q.push(make_pair(G, 2, 3, S_PAIR))
    q.push(make_pair(G, 1, 4, S_PAIR))  # lcm xy, degree 2
    first = queue_pop(q)
    assert (first.i, first.j, first.kind) == (1, 4, S_PAIR)
    assert not first.alive
    second = q.pop()
    assert (second.i, second.j, second.kind) == (2, 3, S_PAIR)
    assert q.pop().kind == G_PAIR
    assert q.pop().degree == 3
    with pytest.raises(IndexError):
        q.pop()


def test_singleton_queue():
    q = PairQueue()
    p = make_pair(P("x", "y"), 0, 1, S_PAIR)
    q.push(p)
    assert len(q) == 1 and q.pop() is p and not q
