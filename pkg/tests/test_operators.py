from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egyfrac.operators import (
    CollisionError,
    OperatorInstance,
    OperatorKind,
    RewriteParams,
    apply_to_repr,
    classify_operator,
    inequality_chain,
    inequality_chain_check,
    is_parity_preserving,
    merge_instance,
    merge_pair,
    odd_preserving_check,
    parity_signature,
    parse_instance,
    place_distinct,
    rewrite_match,
    rewrite_pair,
    rewrite_sum_holds,
    split_basic,
    split_even,
    split_odd3,
    split_product,
)
from egyfrac.rational_core import DomainError, EgyptianRepr

from oracles import rewrite_scan, unit_sum


def sides_equal(inst):
    return unit_sum(inst.consumed) == unit_sum(inst.produced)


# -- splitters -----------------------------------------------------------------


@pytest.mark.parametrize("n, produced", [(3, (4, 12)), (2, (3, 6)), (10, (11, 110))])
def test_split_basic_examples(n, produced):
    assert unit_sum(produced) == Fraction(1, n)
    inst = split_basic(n)
    assert inst.consumed == (n,) and inst.produced == produced
    assert inst.rule == "basic_split" and inst.param("n") == n


@pytest.mark.parametrize("n", [1, 0, -4, 2.0, True])
def test_split_basic_rejects(n):
    with pytest.raises(DomainError):
        split_basic(n)


def test_split_product_sum_form_reproduces_720():
    inst = split_product([2, 3, 4, 5, 6])
    assert inst.consumed == (720,)
    assert inst.produced == (7200, 4800, 3600, 2880, 2400)
    assert unit_sum(inst.produced) == Fraction(1, 720)


def test_split_product_z_form_is_a_different_identity():
    inst = split_product([2, 3, 4, 5, 6], form="z")
    # z = 360 + 240 + 180 + 144 + 120
    assert inst.produced == (2088, 3132, 4176, 5220, 6264)
    assert sides_equal(inst) and inst.rule == "product_split_z"


@pytest.mark.parametrize("form", ["sum", "z"])
def test_split_product_two_factors(form):
    # (ab) = (a(a+b), b(a+b)) at a=2, b=3
    inst = split_product([2, 3], form=form)
    assert inst.consumed == (6,)
    assert set(inst.produced) == {10, 15}


def test_split_product_three_factor_rule():
    a, b, c = 2, 3, 5
    w = a * b + b * c + c * a
    assert split_product([a, b, c], form="z").produced == (a * w, b * w, c * w)


@pytest.mark.parametrize("n", range(2, 201))
@pytest.mark.parametrize("form", ["sum", "z"])
def test_split_product_one_n_is_basic(n, form):
    assert set(split_product([1, n], form=form).produced) == set(split_basic(n).produced)


@pytest.mark.parametrize("xs", [[5], [], [0, 3], [1, 1], [2, -1]])
def test_split_product_rejects(xs):
    with pytest.raises(DomainError):
        split_product(xs)


def test_split_product_rejects_unknown_form():
    with pytest.raises(DomainError):
        split_product([2, 3], form="other")


@settings(max_examples=300)
@given(st.lists(st.integers(2, 9), min_size=2, max_size=5), st.sampled_from(["sum", "z"]))
def test_split_product_exact(xs, form):
    assert sides_equal(split_product(xs, form=form))


def test_split_even_examples():
    # n = 2: 2(n+1) = 6, 2n(n+1) = 12; 1/6 + 1/24 is only 5/24
    assert unit_sum((6, 24)) != Fraction(1, 4)
    assert unit_sum((6, 12)) == Fraction(1, 4)
    assert split_even(4).produced == (6, 12)
    assert unit_sum((8, 24)) == Fraction(1, 6)
    assert split_even(6).produced == (8, 24)


@pytest.mark.parametrize("bad", [3, 2, 0, 7])
def test_split_even_rejects(bad):
    with pytest.raises(DomainError):
        split_even(bad)


@pytest.mark.parametrize("n", range(2, 201))
def test_split_even_is_basic_doubled(n):
    assert split_even(2 * n).produced == tuple(2 * t for t in split_basic(n).produced)


@pytest.mark.parametrize("n, produced", [(3, (5, 9, 45)), (5, (9, 15, 45)), (7, (11, 21, 231))])
def test_split_odd3_examples(n, produced):
    assert unit_sum(produced) == Fraction(1, n)
    assert split_odd3(n).produced == produced


def test_split_odd3_even_k_displayed_formula():
    for k in (2, 4, 10):
        n = 2 * k + 1
        expected = (3 * k + 3, 6 * k + 3, 6 * k * k + 9 * k + 3)
        assert split_odd3(n).produced == expected
    # the alternative third term a(b+1)n fails at k = 2
    assert unit_sum((9, 15, 135)) != Fraction(1, 5)


@pytest.mark.parametrize("n", range(3, 1000, 2))
def test_split_odd3_all_odd_and_distinct(n):
    p = split_odd3(n).produced
    assert len(set(p)) == 3 and all(t % 2 for t in p)


@pytest.mark.parametrize("bad", [4, 1, 2, 100])
def test_split_odd3_rejects(bad):
    with pytest.raises(DomainError):
        split_odd3(bad)


def test_splitters_exact_over_sweep():
    for n in range(2, 501):
        assert sides_equal(split_basic(n))
        assert sides_equal(split_even(2 * n))
        if n % 2 and n >= 3:
            assert sides_equal(split_odd3(n))


# -- rewriter --------------------------------------------------------------------


@pytest.mark.parametrize(
    "q, d, consumed, produced",
    [(2, 1, (6, 10), (5, 15)), (3, 2, (15, 39), (13, 65)), (3, 4, (21, 51), (17, 119))],
)
def test_rewrite_pair_examples(q, d, consumed, produced):
    assert unit_sum(consumed) == unit_sum(produced)
    inst = rewrite_pair(q, d)
    assert inst.consumed == consumed and inst.produced == produced
    back = rewrite_pair(q, d, "backward")
    assert back.consumed == produced and back.produced == consumed


def test_rewrite_params():
    p = RewriteParams(5, 4)
    assert (p.r, p.s) == (9, 41)
    assert p.terms() == {"q": 5, "r": 9, "s": 41, "qr": 45, "qs": 205, "rs": 369}


@pytest.mark.parametrize("q, d", [(1, 1), (2, 0), (0, 3)])
def test_rewrite_rejects(q, d):
    with pytest.raises(DomainError):
        rewrite_pair(q, d)


def test_rewrite_rejects_direction():
    with pytest.raises(DomainError):
        rewrite_pair(2, 1, "sideways")


def test_rewrite_sweep_exact_and_ordered():
    for q in range(2, 51):
        for d in range(1, 51):
            inst = rewrite_pair(q, d)
            assert sides_equal(inst) and rewrite_sum_holds(q, d)
            chain = inequality_chain(q, d)
            assert list(chain) == sorted(set(chain))
            assert inequality_chain_check(q, d)


@pytest.mark.parametrize(
    "q, d, chain",
    [(2, 1, (2, 3, 5, 6, 10, 15)), (5, 2, (5, 7, 33, 35, 165, 231)), (3, 4, (3, 7, 17, 21, 51, 119))],
)
def test_inequality_chain_examples(q, d, chain):
    assert inequality_chain(q, d) == chain
    assert inequality_chain_check(q, d)


@pytest.mark.parametrize("x, y, q, d, direction", [(6, 10, 2, 1, "forward"), (5, 15, 2, 1, "backward"), (10, 6, 2, 1, "forward")])
def test_rewrite_match_examples(x, y, q, d, direction):
    p, found = rewrite_match(x, y)
    assert (p.q, p.d, found) == (q, d, direction)


def test_rewrite_match_empty():
    assert rewrite_scan(7, 11, 11) == []
    assert rewrite_match(7, 11) is None


@pytest.mark.parametrize("q", range(2, 21))
def test_rewrite_match_round_trip(q):
    for d in range(1, 21):
        inst = rewrite_pair(q, d)
        p, direction = rewrite_match(*inst.consumed)
        assert direction == "forward"
        # smallest-q tie-break: any earlier hit must describe the same pair
        assert set(rewrite_pair(p.q, p.d).consumed) == set(inst.consumed)
        assert p.q <= q


@settings(max_examples=300)
@given(st.integers(2, 400), st.integers(2, 400))
def test_rewrite_match_agrees_with_scan(x, y):
    if x == y:
        return
    hits = rewrite_scan(x, y, max(x, y))
    found = rewrite_match(x, y)
    if not hits:
        assert found is None
    else:
        p, direction = found
        assert (p.q, p.d, direction) in hits


def test_rewrite_match_rejects_equal():
    with pytest.raises(DomainError):
        rewrite_match(6, 6)


# -- mergers --------------------------------------------------------------------


@pytest.mark.parametrize("x, y, n", [(4, 12, 3), (10, 15, 6), (3, 5, None), (12, 4, 3)])
def test_merge_pair_examples(x, y, n):
    assert merge_pair(x, y) == n
    if n is not None:
        assert unit_sum((x, y)) == Fraction(1, n)


def test_merge_inverts_basic_split():
    for n in range(2, 501):
        assert merge_pair(*split_basic(n).produced) == n


def test_merge_instance():
    inst = merge_instance(4, 12)
    assert inst.consumed == (4, 12) and inst.produced == (3,)
    assert inst.kind is OperatorKind.MERGER
    assert merge_instance(3, 5) is None


# -- instances ------------------------------------------------------------------


def test_instance_text_round_trip():
    inst = rewrite_pair(2, 1)
    assert str(inst) == "rewrite(q=2,d=1): [6,10] -> [5,15]"
    assert parse_instance(str(inst)) == inst
    assert OperatorInstance.from_dict(inst.to_dict()) == inst


def test_instance_rejects_unequal_sides():
    with pytest.raises(DomainError):
        OperatorInstance("rewrite", (), (6, 10), (5, 16))
    bogus = OperatorInstance("rewrite", (), (6, 10), (5, 16), verify=False)
    assert bogus.produced == (5, 16)


def test_instance_kinds():
    assert split_basic(3).kind is OperatorKind.SPLITTER
    assert rewrite_pair(2, 1).kind is OperatorKind.REWRITER
    assert split_basic(3).reverse().kind is OperatorKind.MERGER


@pytest.mark.parametrize("text", ["rewrite(q=2): [6] -> ", "basic_split(n=3): [3] -> [4,13]", "x"])
def test_parse_instance_rejects(text):
    with pytest.raises(DomainError):
        parse_instance(text)


# -- applying to representations --------------------------------------------------


def test_apply_basic_split_strict():
    x = EgyptianRepr((2, 3, 6))
    y = apply_to_repr(x, split_basic(3))
    assert y == EgyptianRepr((2, 4, 6, 12))
    assert unit_sum(y) == 1
    assert set(x) & set(y) == {2, 6}


def test_apply_strict_collision():
    with pytest.raises(CollisionError):
        apply_to_repr(EgyptianRepr((2, 3, 6)), split_basic(2))


def test_apply_rewrite_backward():
    y = apply_to_repr(EgyptianRepr((5, 15)), rewrite_pair(2, 1, "backward"))
    assert y == EgyptianRepr((6, 10))


def test_apply_resplit_repairs_collision():
    x = EgyptianRepr((2, 3, 6))
    y = apply_to_repr(x, split_basic(2), policy="resplit")
    assert unit_sum(y) == 1
    assert 2 not in y and len(set(y)) == len(y)


def test_apply_rejects_missing_terms():
    with pytest.raises(DomainError):
        apply_to_repr(EgyptianRepr((2, 3, 6)), split_basic(4))


def test_apply_rejects_unknown_policy():
    with pytest.raises(DomainError):
        apply_to_repr(EgyptianRepr((2, 3, 6)), split_basic(3), policy="loose")


@settings(max_examples=200)
@given(st.sets(st.integers(2, 40), min_size=1, max_size=6), st.data())
def test_apply_resplit_always_valid(ds, data):
    x = EgyptianRepr(tuple(ds))
    n = data.draw(st.sampled_from(sorted(ds)))
    rule = data.draw(st.sampled_from(["basic", "even", "odd3"]))
    if rule == "even" and (n % 2 or n < 4):
        rule = "basic"
    if rule == "odd3" and (n % 2 == 0 or n < 3):
        rule = "basic"
    inst = {"basic": split_basic, "even": split_even, "odd3": split_odd3}[rule](n)
    y = apply_to_repr(x, inst, policy="resplit")
    assert unit_sum(y) == unit_sum(x)
    assert len(set(y)) == len(y) and min(y) >= 2


def test_place_distinct():
    taken = {3, 4}
    added = place_distinct(3, taken)
    # 3 -> (4, 12), 4 -> (5, 20)
    assert sorted(added) == [5, 12, 20]
    assert unit_sum(added) == Fraction(1, 3)


# -- classification and parity ------------------------------------------------------


@pytest.mark.parametrize(
    "x, x2, kind",
    [((3,), (4, 12), OperatorKind.SPLITTER), ((6, 10), (5, 15), OperatorKind.REWRITER), ((4, 12), (3,), OperatorKind.MERGER)],
)
def test_classify_operator(x, x2, kind):
    assert classify_operator(x, x2) is kind


def test_classify_operator_rejects_unequal_sums():
    with pytest.raises(DomainError):
        classify_operator((3,), (4, 13))


@pytest.mark.parametrize(
    "terms, symbols",
    [((5, 13, 15, 39, 65), "o o o o o"), ((6, 10, 5, 15), "e e o o"), ((2,), "e")],
)
def test_parity_signature(terms, symbols):
    assert str(parity_signature(terms)) == symbols


@pytest.mark.parametrize(
    "inst, expected",
    [(split_even(4), True), (split_basic(3), False), (rewrite_pair(3, 2), True), (split_odd3(7), True)],
)
def test_is_parity_preserving(inst, expected):
    assert is_parity_preserving(inst) is expected


@pytest.mark.parametrize("q, d, expected", [(3, 2, True), (2, 1, False), (5, 4, True), (3, 1, False), (4, 2, False)])
def test_odd_preserving_check(q, d, expected):
    assert odd_preserving_check(q, d) is expected


def test_odd_preserving_biconditional_sweep():
    for q in range(2, 50):
        for d in range(1, 49):
            inst = rewrite_pair(q, d)
            all_odd = is_parity_preserving(inst) and inst.produced[0] % 2 == 1
            assert all_odd == odd_preserving_check(q, d)
