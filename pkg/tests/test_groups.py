from itertools import permutations

import pytest

from hopfseq import (
    CapExceeded,
    abelianization_order,
    class_metrics,
    composition_series_group,
    cyclic,
    dihedral,
    direct_product,
    elements,
    exact_factorizations,
    iso_label,
    klein_four,
    named_group,
    normal_subgroups,
    quaternion8,
    subgroup_classes,
    symmetric,
)
from hopfseq.groups import (
    abelian_invariants,
    all_composition_factor_multisets,
    commutator_subgroup,
    is_simple,
    quotient_group,
)
from hopfseq.perm import parse_cycles, perm_order

# Numeric content of the two subgroup tables: (iso, |T|, |T^|, [N:T]).
A6_TABLE_ROWS = sorted([
    ("1", 1, 1, 360), ("Z2", 2, 2, 4),
    ("Z2xZ2", 4, 4, 6), ("Z2xZ2", 4, 4, 6), ("Z4", 4, 4, 2), ("D4", 8, 4, 1),
    ("Z3", 3, 3, 6), ("Z3", 3, 3, 6), ("Z3xZ3", 9, 9, 4),
    ("S3", 6, 2, 1), ("S3", 6, 2, 1),
    ("A4", 12, 3, 2), ("A4", 12, 3, 2), ("S4", 24, 2, 1), ("S4", 24, 2, 1),
    ("(Z3xZ3):Z2", 18, 2, 2), ("(Z3xZ3):Z4", 36, 4, 1),
    ("Z5", 5, 5, 2), ("D5", 10, 2, 1),
    ("A5", 60, 1, 1), ("A5", 60, 1, 1), ("A6", 360, 1, 1),
])

A5_TABLE_ROWS = sorted([
    ("1", 1, 1, 60), ("Z2", 2, 2, 2), ("Z2xZ2", 4, 4, 3), ("Z3", 3, 3, 2),
    ("S3", 6, 2, 1), ("A4", 12, 3, 1), ("Z5", 5, 5, 2), ("D5", 10, 2, 1),
    ("A5", 60, 1, 1),
])


def test_closure_small():
    G = elements([parse_cycles("(1 2)", 2)], 2)
    assert G.order == 2


def test_closure_a5_against_parity_oracle():
    # independent oracle: even permutations of 5 points, enumerated outright
    def sign(p):
        inv = sum(1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j])
        return (-1) ** inv

    evens = {p for p in permutations(range(5)) if sign(p) == 1}
    G = elements([parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)], 5)
    assert G.order == 60
    assert set(G.elements) == evens


def test_closure_a6_order(a6):
    assert a6.order == 360


def test_closure_cap():
    with pytest.raises(CapExceeded):
        elements([parse_cycles("(1 2)", 8), parse_cycles("(1 2 3 4 5 6 7 8)", 8)], 8,
                 cap=1000)


def test_subgroup_classes_a6_match_table(a6_rows):
    assert len(a6_rows) == 22
    assert sorted(r.numeric_key() for r in a6_rows) == A6_TABLE_ROWS


def test_subgroup_classes_a6_specific_rows(a6_rows):
    z3 = [r for r in a6_rows if r.iso_label == "Z3"]
    assert all((r.order, r.char_group_order, r.normalizer_index) == (3, 3, 6) for r in z3)
    d4 = [r for r in a6_rows if r.iso_label == "D4"]
    assert [(r.char_group_order, r.normalizer_index) for r in d4] == [(4, 1)]
    a5s = [r for r in a6_rows if r.iso_label == "A5"]
    assert [(r.char_group_order, r.normalizer_index) for r in a5s] == [(1, 1), (1, 1)]


def test_subgroup_classes_a5_match_table(a5_rows):
    assert len(a5_rows) == 9
    assert sorted(r.numeric_key() for r in a5_rows) == A5_TABLE_ROWS
    a4_row = next(r for r in a5_rows if r.iso_label == "A4")
    assert a4_row.normalizer_index == 1


def test_subgroup_classes_z2():
    rows = subgroup_classes(cyclic(2))
    assert [(r.iso_label, r.order) for r in rows] == [("1", 1), ("Z2", 2)]


def test_subgroup_classes_row_invariants(a6, a6_rows):
    for r in a6_rows:
        assert a6.order % r.order == 0
        assert r.order % r.char_group_order == 0
        assert a6.order % (r.normalizer_index * r.order) == 0


def test_class_metrics_examples(a6, a6_rows):
    d4 = next(r for r in a6_rows if r.iso_label == "D4").representative
    assert class_metrics(a6, d4)[:2] == (1, 4)
    a5sub = next(r for r in a6_rows if r.iso_label == "A5").representative
    assert class_metrics(a6, a5sub)[:2] == (1, 1)
    v4 = klein_four()
    assert class_metrics(v4, v4) == (1, 4, 4)


def test_char_group_order_two_routes():
    # commutator closure against the full pairwise commutator set
    for G in [symmetric(3), symmetric(4), dihedral(4), quaternion8(), dihedral(6)]:
        derived = commutator_subgroup(G)
        assert G.order % derived.order == 0
        comms = set()
        from hopfseq.perm import compose, inverse

        for a in G.elements:
            for b in G.elements:
                comms.add(compose(compose(a, b), compose(inverse(a), inverse(b))))
        assert comms <= derived.element_set()
    assert abelianization_order(symmetric(3)) == 2
    assert abelianization_order(quaternion8()) == 4
    assert abelianization_order(dihedral(4)) == 4


def test_abelian_invariants():
    assert abelian_invariants(cyclic(6)) == (6,)
    assert abelian_invariants(klein_four()) == (2, 2)
    assert abelian_invariants(direct_product(cyclic(2), cyclic(4))) == (2, 4)
    assert abelian_invariants(direct_product(cyclic(3), cyclic(3))) == (3, 3)
    assert abelian_invariants(cyclic(12)) == (12,)


def test_iso_labels():
    assert iso_label(quaternion8()) == "Q8"
    assert iso_label(dihedral(4)) == "D4"
    assert iso_label(symmetric(3)) == "S3"
    assert iso_label(cyclic(1)) == "1"
    f20 = elements([parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 3 5 4)", 5)], 5)
    assert iso_label(f20) == "order-20 unidentified"


def test_composition_series_group(a6, s6):
    assert composition_series_group(s6) == ["A6", "Z2"]
    assert composition_series_group(cyclic(4)) == ["Z2", "Z2"]
    assert composition_series_group(a6) == ["A6"]
    assert composition_series_group(symmetric(4)) == ["Z2", "Z2", "Z2", "Z3"]


def test_composition_series_chain_independent():
    # classical Jordan-Hoelder at small orders: every maximal chain agrees
    for G in [symmetric(4), dihedral(6), quaternion8(), cyclic(12),
              direct_product(cyclic(2), cyclic(4)), symmetric(3),
              klein_four(), dihedral(5)]:
        assert len(all_composition_factor_multisets(G)) == 1


def test_normal_subgroups_and_simplicity(a6, s6):
    assert [N.order for N in normal_subgroups(symmetric(4))] == [1, 4, 12, 24]
    assert [N.order for N in normal_subgroups(s6)] == [1, 360, 720]
    assert is_simple(a6)
    assert not is_simple(s6)


def test_quotient_group():
    s4 = symmetric(4)
    v4 = s4.subgroup([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    Q, _ = quotient_group(s4, v4)
    assert Q.order == 6 and iso_label(Q) == "S3"


def test_exact_factorizations_a6_empty(a6):
    assert exact_factorizations(a6, proper_only=True) == []


def test_exact_factorizations_s6(s6):
    facts = exact_factorizations(s6)
    labels = sorted(f.labels() for f in facts)
    assert ("A6", "Z2") in labels
    assert ("S5", "Z6") in labels
    for f in facts:
        assert f.verify()


def test_exact_factorizations_a5(a5):
    facts = exact_factorizations(a5)
    assert [f.labels() for f in facts] == [("A4", "Z5")]
    assert facts[0].verify()


def test_exact_factorization_chain_pieces():
    assert ("S4", "Z5") in [f.labels() for f in exact_factorizations(symmetric(5))]
    assert ("S3", "Z4") in [f.labels() for f in exact_factorizations(symmetric(4))]
    assert [f.labels() for f in exact_factorizations(symmetric(3))] == [("Z3", "Z2")]
    assert [f.labels() for f in exact_factorizations(cyclic(6))] == [("Z3", "Z2")]


def test_exact_factorization_bijection_property(a5):
    from hopfseq.perm import compose

    for f in exact_factorizations(a5, proper_only=False):
        seen = {compose(a, b) for a in f.left.elements for b in f.right.elements}
        assert len(seen) == a5.order


def test_named_group():
    assert named_group("a6").order == 360
    assert named_group("z2xz4").order == 8
    assert named_group("v4").order == 4
    assert named_group("q8").order == 8
    with pytest.raises(Exception):
        named_group("nosuch")


def test_subgroup_cap():
    with pytest.raises(CapExceeded):
        subgroup_classes(symmetric(6), cap=100)


def test_order_histograms_fingerprint_types():
    g18 = elements([parse_cycles(s, 6) for s in ("(1 2 3)", "(4 5 6)", "(1 2)(4 5)")], 6)
    assert iso_label(g18) == "(Z3xZ3):Z2"
    g36 = elements([parse_cycles(s, 6) for s in
                    ("(1 2 3)", "(4 5 6)", "(2 3)(5 6)", "(1 4)(2 5 3 6)")], 6)
    assert g36.order == 36
    assert iso_label(g36) == "(Z3xZ3):Z4"
    assert perm_order(parse_cycles("(1 4)(2 5 3 6)", 6)) == 4
