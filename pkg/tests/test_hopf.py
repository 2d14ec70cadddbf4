import random

import pytest

from hopfseq import (
    bicrossed_product,
    cyclic,
    drinfeld_double,
    dual_group_algebra,
    dual_hopf,
    group_algebra,
    klein_four,
    quaternion8,
    solve_antipode,
    symmetric,
    trivial_pair,
    trivial_paired_cocycles,
    verify_hopf_axioms,
)
from hopfseq.cyclotomic import get_field
from hopfseq.groups import alternating, dihedral
from hopfseq.hopf import (
    HopfAlgebra,
    HopfError,
    antipode_invertible,
    antipode_is_antihomomorphism,
)
from hopfseq.perm import inverse


def test_group_algebra_z2_antipode_identity():
    H = group_algebra(cyclic(2))
    assert H.dim == 2
    assert verify_hopf_axioms(H).ok
    # all elements are involutions, so S is the identity matrix
    assert H.antipode == ({0: H.field.one}, {1: H.field.one})


def test_group_algebra_s3():
    H = group_algebra(symmetric(3))
    assert H.dim == 6
    assert all(c.is_one() for c in H.counit)
    assert verify_hopf_axioms(H).ok


def test_group_algebra_a6_sampled():
    # full axiom check at dim 360 is out of reach; sample associativity and
    # check the group-like structure rows exactly
    G = alternating(6)
    H = group_algebra(G)
    assert H.dim == 360
    rng = random.Random(11)
    one = H.field.one
    for _ in range(300):
        i, j, k = (rng.randrange(360) for _ in range(3))
        ij = H.mul_vec(H.basis_vec(i), H.basis_vec(j))
        lhs = H.mul_vec(ij, H.basis_vec(k))
        rhs = H.mul_vec(H.basis_vec(i), H.mul_vec(H.basis_vec(j), H.basis_vec(k)))
        assert lhs == rhs
    for i in (0, 17, 359):
        assert H.comult[i] == ((i, i, one),)
        assert H.counit[i].is_one()
    inv_index = {g: n for n, g in enumerate(G.elements)}
    for j in (0, 41, 200):
        assert H.antipode[j] == {inv_index[inverse(G.elements[j])]: one}


def test_dual_group_algebra_z2():
    H = dual_group_algebra(cyclic(2))
    assert H.dim == 2
    assert H.unit == {0: H.field.one, 1: H.field.one}
    assert verify_hopf_axioms(H).ok


def test_dual_group_algebra_s3_commutative():
    H = dual_group_algebra(symmetric(3))
    assert verify_hopf_axioms(H).ok
    for i in range(6):
        for j in range(6):
            assert H.mult[i][j] == H.mult[j][i]


def test_dual_of_group_algebra_matches_dual_construction():
    H1 = dual_hopf(group_algebra(symmetric(3)))
    H2 = dual_group_algebra(symmetric(3))
    assert H1.structure_equal(H2)


def test_double_dual_is_identity():
    H = group_algebra(symmetric(3))
    assert dual_hopf(dual_hopf(H)).structure_equal(H)


def test_dual_of_double_passes_axioms(double_s3):
    D = dual_hopf(double_s3)
    assert D.dim == 36
    assert verify_hopf_axioms(D).ok


@pytest.mark.parametrize("make", [
    lambda: cyclic(2), lambda: cyclic(3), lambda: cyclic(6),
    lambda: klein_four(), lambda: symmetric(3), lambda: dihedral(4),
    lambda: quaternion8(),
])
def test_axioms_group_and_dual(make):
    G = make()
    assert verify_hopf_axioms(group_algebra(G)).ok
    assert verify_hopf_axioms(dual_group_algebra(G)).ok


def test_bicrossed_trivial_is_tensor_product():
    G, Gamma = cyclic(2), symmetric(3)
    H = bicrossed_product(trivial_pair(G, Gamma))
    assert H.dim == 12
    assert verify_hopf_axioms(H).ok
    # entry-by-entry: mult is (dual on Gamma) tensor (group algebra on G)
    kGamma = dual_group_algebra(Gamma)
    kG = group_algebra(G)
    n = G.order
    for gi in range(Gamma.order):
        for xi in range(n):
            for hj in range(Gamma.order):
                for yj in range(n):
                    cell = H.mult[gi * n + xi][hj * n + yj]
                    dual_cell = kGamma.mult[gi][hj]
                    grp_cell = kG.mult[xi][yj]
                    if not dual_cell:
                        assert cell == ()
                    else:
                        k = dual_cell[0][0] * n + grp_cell[0][0]
                        assert cell == ((k, H.field.one),)


def test_bicrossed_a5_pair(bicrossed60):
    assert bicrossed60.dim == 60
    assert verify_hopf_axioms(bicrossed60).ok


def test_bicrossed_dimension_multiplicative(a5_matched_pair):
    H = bicrossed_product(a5_matched_pair)
    assert H.dim == a5_matched_pair.G.order * a5_matched_pair.Gamma.order


def test_drinfeld_double_z2():
    H = drinfeld_double(cyclic(2))
    assert H.dim == 4
    assert verify_hopf_axioms(H).ok
    for i in range(4):
        for j in range(4):
            assert H.mult[i][j] == H.mult[j][i]
    for i in range(4):
        terms = {(j, k) for j, k, _ in H.comult[i]}
        assert terms == {(k, j) for j, k in terms}


def test_drinfeld_double_s3(double_s3):
    assert double_s3.dim == 36
    assert verify_hopf_axioms(double_s3).ok
    assert antipode_is_antihomomorphism(double_s3)
    assert antipode_invertible(double_s3)


def test_drinfeld_double_dim_cap():
    with pytest.raises(HopfError):
        drinfeld_double(alternating(5), dim_cap=1000)


def test_solve_antipode_recovers_group_inverse():
    G = symmetric(3)
    H = group_algebra(G)
    cols = solve_antipode(H.field, H.basis_labels, H.mult, H.unit, H.comult, H.counit)
    assert cols is not None
    assert tuple(cols) == H.antipode
    Hd = dual_group_algebra(G)
    cols = solve_antipode(Hd.field, Hd.basis_labels, Hd.mult, Hd.unit, Hd.comult, Hd.counit)
    assert tuple(cols) == Hd.antipode


def test_solve_antipode_none_for_non_hopf_bialgebra():
    # the bialgebra of the two-element monoid {1, x}, x^2 = x: no antipode
    field = get_field(1)
    one = field.one
    mult = (
        (((0, one),), ((1, one),)),
        (((1, one),), ((1, one),)),
    )
    unit = {0: one}
    comult = (((0, 0, one),), ((1, 1, one),))
    counit = (one, one)
    cols = solve_antipode(field, ("1", "x"), mult, unit, comult, counit)
    assert cols is None


def test_verify_names_broken_associativity():
    H = group_algebra(symmetric(3))
    mult = [list(row) for row in H.mult]
    mult[1][2] = ((3, H.field.one),) if mult[1][2][0][0] != 3 else ((4, H.field.one),)
    broken = HopfAlgebra(H.field, H.basis_labels, tuple(tuple(r) for r in mult),
                         H.unit, H.comult, H.counit, H.antipode)
    report = verify_hopf_axioms(broken)
    assert not report.ok
    assert any(v[0] == "associativity" for v in report.violations)


def test_verify_names_broken_comult():
    H = group_algebra(symmetric(3))
    comult = list(H.comult)
    comult[2] = ((2, 3, H.field.one),)
    broken = HopfAlgebra(H.field, H.basis_labels, H.mult, H.unit,
                         tuple(comult), H.counit, H.antipode)
    report = verify_hopf_axioms(broken)
    assert not report.ok
    kinds = {v[0] for v in report.violations}
    assert kinds & {"counit-left", "counit-right", "coassociativity", "comult-multiplicative"}


def test_incompatible_cocycles_rejected():
    # a tau table violating its normalization is refused outright
    G, Gamma = cyclic(2), cyclic(2)
    pc = trivial_paired_cocycles(G, Gamma, 2)
    tau = dict(pc.tau)
    x = G.elements[1]
    s = Gamma.elements[1]
    tau[(x, s, Gamma.identity())] = 1
    from hopfseq.cocycles import PairedCocycles

    bad = PairedCocycles(conductor=2, sigma=pc.sigma, tau=tau)
    with pytest.raises(HopfError):
        bicrossed_product(trivial_pair(G, Gamma), bad, conductor=2)


def test_nontrivial_cocycle_bicrossed_via_verifier():
    # sigma_g(x, y) = chi(g)^carry(x, y) with chi the nontrivial character of
    # Gamma = Z2 and carry the order-2 wraparound cocycle on G = Z2; the
    # comultiplication forces g -> sigma_g(x, y) to be a character, and the
    # verifier accepts the twisted product (it is not the split one)
    G, Gamma = cyclic(2), cyclic(2)
    mp = trivial_pair(G, Gamma)
    x = G.elements[1]
    eGamma = Gamma.identity()
    sigma = {}
    for g in Gamma.elements:
        for a in G.elements:
            for b in G.elements:
                carry = 1 if (a == x and b == x) else 0
                sigma[(g, a, b)] = carry if g != eGamma else 0
    pc = trivial_paired_cocycles(G, Gamma, 2)
    from hopfseq.cocycles import PairedCocycles

    pc = PairedCocycles(conductor=2, sigma=sigma, tau=pc.tau)
    H = bicrossed_product(mp, pc, conductor=2)
    assert verify_hopf_axioms(H).ok
    assert H.dim == 4
    split = bicrossed_product(mp, conductor=2)
    assert not H.structure_equal(split)
