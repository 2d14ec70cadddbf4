import pytest

from hopfseq import (
    cyclic,
    direct_product,
    from_factorization,
    load_matched_pair,
    dump_matched_pair,
    reconstruction_matches_ambient,
    symmetric,
    trivial_pair,
    verify_compatibility,
)
from hopfseq.groups import GroupError
from hopfseq.matched import MatchedPair, drinfeld_pair
from hopfseq.perm import compose, inverse, parse_cycles


def test_trivial_pair_valid():
    mp = trivial_pair(cyclic(3), cyclic(4))
    assert verify_compatibility(mp).valid


def test_direct_product_gives_trivial_actions():
    E = direct_product(cyclic(2), cyclic(3))
    G = E.subgroup([E.generators[0]])
    Gamma = E.subgroup([E.generators[1]])
    mp = from_factorization(E, G, Gamma)
    assert all(mp.rtri(s, x) == x for s in Gamma.elements for x in G.elements)
    assert all(mp.ltri(s, x) == s for s in Gamma.elements for x in G.elements)


def test_a5_factorization_pair(a5, a5_matched_pair):
    report = verify_compatibility(a5_matched_pair)
    assert report.valid
    assert a5_matched_pair.G.order == 5 and a5_matched_pair.Gamma.order == 12


def test_drinfeld_pair_is_adjoint_and_trivial():
    G = symmetric(3)
    mp = drinfeld_pair(G)
    assert verify_compatibility(mp).valid
    for s in G.elements:
        for x in G.elements:
            assert mp.rtri(s, x) == x
            assert mp.ltri(s, x) == compose(compose(inverse(x), s), x)


def test_corrupted_table_reports_violation():
    G = symmetric(3)
    mp = drinfeld_pair(G)
    bad_right = dict(mp.right_action)
    s = G.elements[1]
    x = G.elements[2]
    bad_right[(s, x)] = compose(bad_right[(s, x)], G.elements[1])
    bad = MatchedPair(G=G, Gamma=G, left_action=mp.left_action, right_action=bad_right)
    report = verify_compatibility(bad)
    assert not report.valid
    kinds = {v[0] for v in report.violations}
    assert kinds & {"right-compat", "left-compat", "not-bijective-right", "unit-right"}


def test_round_trip_reconstruction(a5, a5_matched_pair):
    assert reconstruction_matches_ambient(a5_matched_pair, a5)


def test_round_trip_reconstruction_s4():
    s4 = symmetric(4)
    s3 = s4.subgroup([parse_cycles("(1 2)", 4), parse_cycles("(1 2 3)", 4)])
    z4 = s4.subgroup([parse_cycles("(1 2 3 4)", 4)])
    mp = from_factorization(s4, s3, z4)
    assert verify_compatibility(mp).valid
    assert reconstruction_matches_ambient(mp, s4)


def test_from_factorization_rejects_bad_input():
    s4 = symmetric(4)
    a4 = s4.subgroup([parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)])
    v4 = s4.subgroup([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    with pytest.raises(GroupError):
        from_factorization(s4, a4, v4)  # intersection is not trivial


def test_matched_pair_dump_round_trip(a5_matched_pair):
    text = dump_matched_pair(a5_matched_pair)
    back = load_matched_pair(text)
    assert back.G == a5_matched_pair.G
    assert back.Gamma == a5_matched_pair.Gamma
    assert back.left_action == a5_matched_pair.left_action
    assert back.right_action == a5_matched_pair.right_action
    assert dump_matched_pair(back) == text
