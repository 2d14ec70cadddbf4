"""Exact sequences of Hopf algebras and composition series.

Implements Hopf morphisms, coinvariant subspaces, normality under the
adjoint actions, categorical kernels/cokernels, verification of the
three exactness conditions, duality of sequences, and the recursive
composition series with Jordan-Hoelder comparison.

The normal-subalgebra search is catalog based: spans of group algebras
of normal subgroups, dual function algebras of quotients, the canonical
copy of k^Gamma inside a bicrossed product, and the group-like copy of
kG when the actions allow it.  Candidates are always re-verified before
use; no completeness is claimed outside these shapes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycField
from .groups import (
    PermGroup,
    from_elements,
    is_simple,
    iso_label,
    normal_subgroups,
    quotient_group,
)
from .hopf import (
    BicrossedOrigin,
    HopfAlgebra,
    HopfError,
    Vec,
    bicrossed_product,
    dual_group_algebra,
    dual_hopf,
    group_algebra,
)
from .linalg import (
    CoordSpan,
    Echelon,
    echelon_span,
    nullspace_of_map,
    rank_of_columns,
    subspace_equal,
    vec_sub_scaled,
)
from .matched import MatchedPair, verify_compatibility
from .perm import Perm, compose


class ExactnessError(ValueError):
    pass


class UnsupportedAlgebra(ValueError):
    """Raised when an algebra lies outside the composition-series catalog."""


# ---------------------------------------------------------------------------
# morphisms


class HopfMorphism:
    """A linear map source -> target given by columns in target coordinates."""

    __slots__ = ("source", "target", "cols")

    def __init__(self, source: HopfAlgebra, target: HopfAlgebra, cols):
        if source.field.conductor != target.field.conductor:
            raise HopfError("morphism between different scalar fields")
        self.source = source
        self.target = target
        self.cols = tuple({k: v for k, v in col.items() if not v.is_zero()}
                          for col in cols)

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in v.items():
            for k, c in self.cols[i].items():
                cur = out.get(k)
                s = a * c if cur is None else cur + a * c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def rank(self) -> int:
        return rank_of_columns(list(self.cols), self.source.field)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def verify(self) -> list[tuple]:
        """Violations of the bialgebra-map conditions (empty list = valid)."""
        src, tgt = self.source, self.target
        bad: list[tuple] = []
        if self.apply(src.unit) != tgt.unit:
            bad.append(("unit",))
        for i in range(src.dim):
            for j in range(src.dim):
                lhs = self.apply(src.mul_vec(src.basis_vec(i), src.basis_vec(j)))
                rhs = tgt.mul_vec(self.cols[i], self.cols[j])
                if lhs != rhs:
                    bad.append(("multiplicative", i, j))
        for i in range(src.dim):
            if src.counit_vec(src.basis_vec(i)) != tgt.counit_vec(self.cols[i]):
                bad.append(("counit", i))
            lhs = tgt.comult_vec(self.cols[i])
            rhs: dict = {}
            for j, k, c in src.comult[i]:
                for a, ca in self.cols[j].items():
                    for b, cb in self.cols[k].items():
                        key = (a, b)
                        val = c * ca * cb
                        cur = rhs.get(key)
                        s = val if cur is None else cur + val
                        if s.is_zero():
                            rhs.pop(key, None)
                        else:
                            rhs[key] = s
            if lhs != rhs:
                bad.append(("comultiplicative", i))
        return bad

    def transpose(self) -> "HopfMorphism":
        """The dual morphism target* -> source*."""
        dual_src = dual_hopf(self.target)
        dual_tgt = dual_hopf(self.source)
        cols = []
        for j in range(self.target.dim):
            col = {}
            for i in range(self.source.dim):
                c = self.cols[i].get(j)
                if c is not None and not c.is_zero():
                    col[i] = c
            cols.append(col)
        return HopfMorphism(dual_src, dual_tgt, cols)


def identity_morphism(H: HopfAlgebra) -> HopfMorphism:
    return HopfMorphism(H, H, [H.basis_vec(i) for i in range(H.dim)])


def counit_morphism(H: HopfAlgebra) -> HopfMorphism:
    """H -> k (the trivial Hopf algebra over the same field)."""
    k = trivial_hopf(H.field)
    return HopfMorphism(H, k, [{0: H.counit[i]} for i in range(H.dim)])


def unit_morphism(H: HopfAlgebra) -> HopfMorphism:
    k = trivial_hopf(H.field)
    return HopfMorphism(k, H, [dict(H.unit)])


def trivial_hopf(field: CycField) -> HopfAlgebra:
    one = field.one
    return HopfAlgebra(field, ["1"], (( ((0, one),), ),), {0: one},
                       (((0, 0, one),),), (one,), ({0: one},))


# ---------------------------------------------------------------------------
# coinvariants, normality, kernels


def coinvariants(pi: HopfMorphism, side: str = "left") -> list[Vec]:
    """Echelon basis of the (left or right) coinvariants of a Hopf map.

    Left:  (pi (x) id) Delta(h) = 1'' (x) h;  right symmetric.
    """
    H, Hpp = pi.source, pi.target
    one_pp = Hpp.unit
    images = []
    for i in range(H.dim):
        t: dict = {}
        for j, k, c in H.comult[i]:
            if side == "left":
                proj, keep = pi.cols[j], k
                for a, ca in proj.items():
                    key = (a, keep)
                    t[key] = t.get(key, H.field.zero) + c * ca
            else:
                proj, keep = pi.cols[k], j
                for a, ca in proj.items():
                    key = (keep, a)
                    t[key] = t.get(key, H.field.zero) + c * ca
        if side == "left":
            for a, ca in one_pp.items():
                key = (a, i)
                t[key] = t.get(key, H.field.zero) - ca
        else:
            for a, ca in one_pp.items():
                key = (i, a)
                t[key] = t.get(key, H.field.zero) - ca
        images.append({k: v for k, v in t.items() if not v.is_zero()})
    kernel = nullspace_of_map(images, H.field)
    return echelon_span(kernel, H.field).basis()


@dataclass
class HopfSubalgebra:
    """A subspace of an ambient Hopf algebra, kept as an echelon basis."""

    ambient: HopfAlgebra
    basis: list            # list[Vec], reduced echelon rows
    note: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient.field)
        for v in self.basis:
            ech.add(v)
        return ech

    def verify(self) -> list[tuple]:
        """Closure violations: mult, unit, comult (into K (x) K), antipode."""
        H = self.ambient
        field = H.field
        bad: list[tuple] = []
        ech = self.echelon()
        if not ech.contains(H.unit):
            bad.append(("unit",))
        for a_i, a in enumerate(self.basis):
            for b_i, b in enumerate(self.basis):
                if not ech.contains(H.mul_vec(a, b)):
                    bad.append(("mult", a_i, b_i))
        tens = Echelon(field)
        for a in self.basis:
            for b in self.basis:
                tens.add({(i, j): ca * cb for i, ca in a.items() for j, cb in b.items()})
        for a_i, a in enumerate(self.basis):
            if not tens.contains(H.comult_vec(a)):
                bad.append(("comult", a_i))
            if not ech.contains(H.antipode_vec(a)):
                bad.append(("antipode", a_i))
        return bad


def span_subalgebra(H: HopfAlgebra, vectors, note: str = "") -> HopfSubalgebra:
    ech = echelon_span(vectors, H.field)
    return HopfSubalgebra(ambient=H, basis=ech.basis(), note=note)


def is_normal_subalgebra(K: HopfSubalgebra) -> tuple[bool, tuple | None]:
    """Stability of K under both adjoint actions, checked exhaustively.

        h . a = h_(1) a S(h_(2))        a . h = S(h_(1)) a h_(2)

    Returns (True, None) or (False, witness (side, h index, K basis index)).
    """
    H = K.ambient
    ech = K.echelon()
    for i in range(H.dim):
        hi_terms = H.comult[i]
        for a_i, a in enumerate(K.basis):
            left: Vec = {}
            right: Vec = {}
            for j, k, c in hi_terms:
                for m, d in H.mul_vec(H.mul_vec(H.basis_vec(j), a), H.antipode[k]).items():
                    cur = left.get(m)
                    s = c * d if cur is None else cur + c * d
                    if s.is_zero():
                        left.pop(m, None)
                    else:
                        left[m] = s
                for m, d in H.mul_vec(H.mul_vec(H.antipode[j], a), H.basis_vec(k)).items():
                    cur = right.get(m)
                    s = c * d if cur is None else cur + c * d
                    if s.is_zero():
                        right.pop(m, None)
                    else:
                        right[m] = s
            if not ech.contains(left):
                return False, ("left", i, a_i)
            if not ech.contains(right):
                return False, ("right", i, a_i)
    return True, None


def hopf_kernel(f: HopfMorphism) -> HopfSubalgebra:
    """Categorical kernel Hker(f) = {h : h_(1) (x) f(h_(2)) (x) h_(3) = h_(1) (x) 1 (x) h_(2)}."""
    H, H2 = f.source, f.target
    field = H.field
    images = []
    for i in range(H.dim):
        t: dict = {}
        for j, k, c in H.comult[i]:
            for a, b, d in H.comult[j]:
                cd = c * d
                for m, cm in f.cols[b].items():
                    key = (a, m, k)
                    t[key] = t.get(key, field.zero) + cd * cm
            for m, cm in H2.unit.items():
                key = (j, m, k)
                t[key] = t.get(key, field.zero) - c * cm
        images.append({k: v for k, v in t.items() if not v.is_zero()})
    kernel = nullspace_of_map(images, field)
    K = span_subalgebra(H, kernel, note="Hker")
    bad = K.verify()
    if bad:
        raise ExactnessError(f"internal: Hopf kernel fails subalgebra closure: {bad[:3]}")
    return K


def augmentation_basis(H: HopfAlgebra) -> list[Vec]:
    """Basis of the augmentation ideal H+ = ker(counit)."""
    images = [{0: H.counit[i]} for i in range(H.dim)]
    return nullspace_of_map(images, H.field)


def two_sided_ideal(H: HopfAlgebra, gens) -> Echelon:
    """Echelon span of H . gens . H."""
    ech = Echelon(H.field)
    for g in gens:
        for i in range(H.dim):
            left = H.mul_vec(H.basis_vec(i), g)
            if not left:
                continue
            for j in range(H.dim):
                ech.add(H.mul_vec(left, H.basis_vec(j)))
    return ech


def hopf_cokernel(f: HopfMorphism) -> tuple[HopfAlgebra, HopfMorphism]:
    """Hcoker(f) = H2 / H2 f(H1+) H2 with the projection morphism.

    The complement basis comes from pivoting the echelon form of the ideal;
    the ideal is checked to be a Hopf ideal (coideal, counit zero, antipode
    stable) before the quotient is assembled.
    """
    H2 = f.target
    field = H2.field
    gens = [f.apply(v) for v in augmentation_basis(f.source)]
    ideal = two_sided_ideal(H2, gens)
    pivots = set(ideal.rows)
    complement = [i for i in range(H2.dim) if i not in pivots]
    qdim = len(complement)
    pos = {m: a for a, m in enumerate(complement)}

    def project(v: Vec) -> Vec:
        red = ideal.reduce(v)
        return {pos[m]: c for m, c in red.items()}

    # Hopf ideal checks
    for b in ideal.basis():
        if not H2.counit_vec(b).is_zero():
            raise ExactnessError("ideal is not contained in the augmentation ideal")
        if ideal.reduce(H2.antipode_vec(b)):
            raise ExactnessError("ideal is not antipode stable")
        t = H2.comult_vec(b)
        folded: dict = {}
        for (i, j), c in t.items():
            for a, ca in project(H2.basis_vec(i)).items():
                for bb, cb in project(H2.basis_vec(j)).items():
                    key = (a, bb)
                    folded[key] = folded.get(key, field.zero) + c * ca * cb
        if any(not v.is_zero() for v in folded.values()):
            raise ExactnessError("ideal is not a coideal")

    qproj = [project(H2.basis_vec(i)) for i in range(H2.dim)]
    lift = [H2.basis_vec(complement[a]) for a in range(qdim)]
    mult = tuple(tuple(tuple(sorted(project(H2.mul_vec(lift[a], lift[b])).items()))
                       for b in range(qdim)) for a in range(qdim))
    unit = project(H2.unit)
    comult = []
    for a in range(qdim):
        t = H2.comult_vec(lift[a])
        folded: dict = {}
        for (i, j), c in t.items():
            for x, cx in qproj[i].items():
                for y, cy in qproj[j].items():
                    key = (x, y)
                    cur = folded.get(key)
                    s = c * cx * cy if cur is None else cur + c * cx * cy
                    if s.is_zero():
                        folded.pop(key, None)
                    else:
                        folded[key] = s
        comult.append(tuple((x, y, c) for (x, y), c in sorted(folded.items())))
    counit = tuple(H2.counit[complement[a]] for a in range(qdim))
    antipode = tuple(project(H2.antipode_vec(lift[a])) for a in range(qdim))
    labels = [f"[{H2.basis_labels[m]}]" for m in complement]
    Q = HopfAlgebra(field, labels, mult, unit, comult, counit, antipode)
    proj = HopfMorphism(H2, Q, qproj)
    return Q, proj


# ---------------------------------------------------------------------------
# exact sequences


@dataclass
class ExactSequenceH:
    h_prime: HopfAlgebra
    i: HopfMorphism
    h: HopfAlgebra
    pi: HopfMorphism
    h_doubleprime: HopfAlgebra
    status: dict = field(default_factory=dict)


def verify_exact_sequence(seq: ExactSequenceH) -> dict:
    """Check the three exactness conditions plus dimension multiplicativity.

    (a) i injective and pi surjective,
    (b) ker pi = H i(H')+,
    (c) i(H') = left coinvariants of pi.
    """
    H, Hp, Hpp = seq.h, seq.h_prime, seq.h_doubleprime
    status: dict = {}
    if seq.i.verify() or seq.pi.verify():
        raise ExactnessError("maps are not Hopf algebra morphisms")
    status["injective"] = seq.i.is_injective()
    status["surjective"] = seq.pi.is_surjective()

    ker_pi = nullspace_of_map(list(seq.pi.cols), H.field)
    gens = [seq.i.apply(v) for v in augmentation_basis(Hp)]
    ideal = two_sided_ideal(H, gens)
    status["kernel_is_ideal"] = subspace_equal(ker_pi, ideal.basis(), H.field)

    coin = coinvariants(seq.pi, side="left")
    status["coinvariants_match"] = subspace_equal(list(seq.i.cols), coin, H.field)

    status["dim_multiplicative"] = (H.dim == Hp.dim * Hpp.dim)
    status["exact"] = all(status.values())
    # dimension witnesses for the report
    status["witness"] = {
        "rank_i": seq.i.rank(), "rank_pi": seq.pi.rank(),
        "dim_ker_pi": len(ker_pi), "dim_ideal": ideal.rank,
        "dim_coinvariants": len(coin),
        "dims": (Hp.dim, H.dim, Hpp.dim),
    }
    seq.status = status
    return status


def dualize_sequence(seq: ExactSequenceH) -> ExactSequenceH:
    """k -> (H'')* -> H* -> (H')* -> k with transposed maps."""
    pi_t = seq.pi.transpose()    # (H'')* -> H*
    i_t = seq.i.transpose()      # H* -> (H')*
    return ExactSequenceH(
        h_prime=pi_t.source, i=pi_t, h=pi_t.target, pi=i_t, h_doubleprime=i_t.target)


def make_abelian_sequence(H: HopfAlgebra) -> ExactSequenceH:
    """The canonical k -> k^Gamma -> H -> kG -> k around a bicrossed product."""
    if not isinstance(H.origin, BicrossedOrigin):
        raise HopfError("algebra is not a tagged bicrossed product")
    mp = H.origin.pair
    N = H.field.conductor
    Hp = dual_group_algebra(mp.Gamma, conductor=N)
    Hpp = group_algebra(mp.G, conductor=N)
    gsize = mp.G.order
    gamma_index = {g: a for a, g in enumerate(mp.Gamma.elements)}
    g_index = {x: a for a, x in enumerate(mp.G.elements)}
    eG, eGamma = mp.G.identity(), mp.Gamma.identity()
    i_cols = [{gamma_index[g] * gsize + g_index[eG]: H.field.one}
              for g in mp.Gamma.elements]
    pi_cols = []
    for g in mp.Gamma.elements:
        for x in mp.G.elements:
            pi_cols.append({g_index[x]: H.field.one} if g == eGamma else {})
    return ExactSequenceH(h_prime=Hp, i=HopfMorphism(Hp, H, i_cols),
                          h=H, pi=HopfMorphism(H, Hpp, pi_cols), h_doubleprime=Hpp)


def make_group_quotient_sequence(G: PermGroup, Ngrp: PermGroup,
                                 conductor: int = 1) -> ExactSequenceH:
    """k -> kN -> kG -> k(G/N) -> k for a normal subgroup N of G."""
    Q, coset_of = quotient_group(G, Ngrp)
    HN = group_algebra(Ngrp, conductor=conductor)
    HG = group_algebra(G, conductor=conductor)
    HQ = group_algebra(Q, conductor=conductor)
    g_index = {g: i for i, g in enumerate(G.elements)}
    # coset index -> quotient group element: translate through a transversal
    reps = {}
    for g in G.elements:
        reps.setdefault(coset_of[g], g)
    q_elem_of_coset = {}
    k = Q.degree
    for c, rep in reps.items():
        q_elem_of_coset[c] = tuple(coset_of[compose(rep, reps[i])] for i in range(k))
    q_index = {q: i for i, q in enumerate(Q.elements)}
    i_cols = [{g_index[n]: HG.field.one} for n in Ngrp.elements]
    pi_cols = [{q_index[q_elem_of_coset[coset_of[g]]]: HG.field.one} for g in G.elements]
    return ExactSequenceH(h_prime=HN, i=HopfMorphism(HN, HG, i_cols),
                          h=HG, pi=HopfMorphism(HG, HQ, pi_cols), h_doubleprime=HQ)


# ---------------------------------------------------------------------------
# identification of group-like / function-algebra shapes


def identify_group_form(H: HopfAlgebra) -> PermGroup | None:
    """Detect a group algebra on the nose: group-like basis, unit products."""
    data = _group_form_with_perms(H)
    return None if data is None else data[0]


def identify_dual_form(H: HopfAlgebra) -> PermGroup | None:
    """Detect a dual group algebra: orthogonal idempotents, comult group law."""
    data = _dual_form_with_perms(H)
    return None if data is None else data[0]


# ---------------------------------------------------------------------------
# composition series


@dataclass(frozen=True)
class FactorDesc:
    """A composition factor: kQ or k^Q for a simple group Q, or a raw algebra."""

    kind: str          # "group" | "dual" | "raw"
    label: str
    dim: int

    def pretty(self) -> str:
        if self.kind == "group":
            return f"k[{self.label}]"
        if self.kind == "dual":
            return f"k^[{self.label}]"
        return f"raw(dim {self.dim})"


@dataclass
class HopfCompSeries:
    factors: list[FactorDesc]
    provenance: list[str] = field(default_factory=list)
    total_dim: int = 0

    def multiset(self) -> tuple:
        return tuple(sorted((f.kind, f.label, f.dim) for f in self.factors))


def jh_compare(s1: HopfCompSeries, s2: HopfCompSeries) -> bool:
    """Factor multisets agree up to permutation."""
    return s1.multiset() == s2.multiset()


def standalone_subalgebra(K: HopfSubalgebra) -> HopfAlgebra:
    """Structure constants of K in its own echelon basis."""
    H = K.ambient
    field = H.field
    basis = K.basis
    k = len(basis)
    ech = Echelon(field)
    combos: dict = {}
    for a, v in enumerate(basis):
        red = dict(v)
        pivot = min(red)
        ech.rows[pivot] = red  # rows are already reduced echelon
        combos[pivot] = a

    def coords(v: Vec) -> Vec:
        out: Vec = {}
        v = dict(v)
        for key in sorted(v):
            if key in v and key in ech.rows:
                c = v[key]
                v = vec_sub_scaled(v, ech.rows[key], c)
                if not c.is_zero():
                    out[combos[key]] = c
        if v:
            raise ExactnessError("vector does not lie in the subalgebra")
        return out

    tens = CoordSpan(field)
    for a in range(k):
        for b in range(k):
            w = {(i, j): ca * cb for i, ca in basis[a].items() for j, cb in basis[b].items()}
            tens.add((a, b), w)

    def tensor_coords(t: dict) -> dict:
        out = tens.coords(t)
        if out is None:
            raise ExactnessError("comultiplication does not close in K (x) K")
        return out

    mult = tuple(tuple(tuple(sorted(coords(H.mul_vec(basis[a], basis[b])).items()))
                       for b in range(k)) for a in range(k))
    unit = coords(H.unit)
    comult = tuple(tuple((a, b, c) for (a, b), c in sorted(tensor_coords(H.comult_vec(basis[i])).items()))
                   for i in range(k))
    counit = tuple(H.counit_vec(basis[i]) for i in range(k))
    antipode = tuple(coords(H.antipode_vec(basis[i])) for i in range(k))
    labels = [f"b{a}" for a in range(k)]
    return HopfAlgebra(field, labels, mult, unit, comult, counit, antipode)


# ---------------------------------------------------------------------------
# normal-subalgebra catalog


@dataclass
class NormalCandidate:
    sub: HopfSubalgebra
    note: str
    quotient_factory: object = None   # () -> (HopfAlgebra, proj cols) or None

    def canonical(self) -> tuple:
        return tuple(tuple(sorted(v.items())) for v in self.sub.basis)


def _group_index_map(H: HopfAlgebra, perms: list) -> dict:
    return {p: i for i, p in enumerate(perms)}


def _quotient_hom(G: PermGroup, N: PermGroup):
    """(Q, elem map g -> element of Q) for the coset action quotient."""
    Q, coset_of = quotient_group(G, N)
    reps: dict[int, Perm] = {}
    for g in G.elements:
        reps.setdefault(coset_of[g], g)
    k = Q.degree
    hom = {}
    for g in G.elements:
        hom[g] = tuple(coset_of[compose(g, reps[i])] for i in range(k))
    return Q, hom


def _candidates_group_form(H: HopfAlgebra, Gq: PermGroup, perms: list) -> list[NormalCandidate]:
    out = []
    one = H.field.one
    idx = _group_index_map(H, perms)
    for N in normal_subgroups(Gq):
        if N.order in (1, Gq.order):
            continue
        vectors = [{idx[n]: one} for n in N.elements]

        def factory(Ngrp=N):
            Q, hom = _quotient_hom(Gq, Ngrp)
            template = group_algebra(Q, conductor=H.field.conductor)
            q_index = {q: i for i, q in enumerate(Q.elements)}
            cols = [{q_index[hom[perms[i]]]: one} for i in range(H.dim)]
            return template, cols

        out.append(NormalCandidate(
            sub=span_subalgebra(H, vectors, note=f"k[{iso_label(N)}]"),
            note=f"group algebra of normal subgroup {iso_label(N)}",
            quotient_factory=factory))
    return out


def _candidates_dual_form(H: HopfAlgebra, Gq: PermGroup, perms: list) -> list[NormalCandidate]:
    out = []
    one = H.field.one
    idx = _group_index_map(H, perms)
    for N in normal_subgroups(Gq):
        if N.order in (1, Gq.order):
            continue
        nset = N.element_set()
        # coset indicator functions span k^(Gamma/N)
        cosets: dict[Perm, list[int]] = {}
        for p in perms:
            key = min(compose(p, n) for n in nset)
            cosets.setdefault(key, []).append(idx[p])
        vectors = [{i: one for i in block} for block in cosets.values()]

        def factory(Ngrp=N):
            template = dual_group_algebra(Ngrp, conductor=H.field.conductor)
            n_index = {n: i for i, n in enumerate(Ngrp.elements)}
            cols = []
            for p in perms:
                cols.append({n_index[p]: one} if p in n_index else {})
            return template, cols

        out.append(NormalCandidate(
            sub=span_subalgebra(H, vectors, note=f"k^[{iso_label(Gq)}/{iso_label(N)}]"),
            note=f"functions on quotient by {iso_label(N)}",
            quotient_factory=factory))
    return out


def _restricted_pair(mp: MatchedPair, Ngrp: PermGroup) -> MatchedPair | None:
    """Restrict the Gamma side of a matched pair to a normal subgroup N."""
    nset = Ngrp.element_set()
    for s in Ngrp.elements:
        for x in mp.G.elements:
            if mp.ltri(s, x) not in nset:
                return None
    left = {(s, x): mp.rtri(s, x) for s in Ngrp.elements for x in mp.G.elements}
    right = {(s, x): mp.ltri(s, x) for s in Ngrp.elements for x in mp.G.elements}
    sub = MatchedPair(G=mp.G, Gamma=Ngrp, left_action=left, right_action=right)
    if not verify_compatibility(sub).valid:
        return None
    return sub


def _induced_pair(mp: MatchedPair, Mgrp: PermGroup) -> tuple[MatchedPair, dict] | None:
    """Quotient the G side by a normal, |>-stable M when <| is trivial."""
    for s in mp.Gamma.elements:
        for x in mp.G.elements:
            if mp.ltri(s, x) != s:
                return None
    mset = Mgrp.element_set()
    for s in mp.Gamma.elements:
        for m in Mgrp.elements:
            if mp.rtri(s, m) not in mset:
                return None
    Q, hom = _quotient_hom(mp.G, Mgrp)
    left: dict = {}
    for s in mp.Gamma.elements:
        seen: dict = {}
        for x in mp.G.elements:
            key = (s, hom[x])
            val = hom[mp.rtri(s, x)]
            if seen.setdefault(key, val) != val:
                return None
        left.update(seen)
    right = {(s, q): s for s in mp.Gamma.elements for q in Q.elements}
    ind = MatchedPair(G=Q, Gamma=mp.Gamma, left_action=left, right_action=right)
    if not verify_compatibility(ind).valid:
        return None
    return ind, hom


def _candidates_bicrossed(H: HopfAlgebra) -> list[NormalCandidate]:
    origin = H.origin
    if not isinstance(origin, BicrossedOrigin):
        return []
    if not (all(v % origin.cocycles.conductor == 0 for v in origin.cocycles.sigma.values())
            and all(v % origin.cocycles.conductor == 0 for v in origin.cocycles.tau.values())):
        return []  # templates below assume trivial cocycles
    mp = origin.pair
    G, Gamma = mp.G, mp.Gamma
    one = H.field.one
    gsize = G.order
    gamma_pos = {g: i for i, g in enumerate(Gamma.elements)}
    g_pos = {x: i for i, x in enumerate(G.elements)}
    eG = G.identity()
    out: list[NormalCandidate] = []

    for N in normal_subgroups(Gamma):
        if N.order == Gamma.order:
            continue
        nset = N.element_set()
        cosets: dict[Perm, list[Perm]] = {}
        for g in Gamma.elements:
            key = min(compose(g, n) for n in nset)
            cosets.setdefault(key, []).append(g)
        vectors = [{gamma_pos[g] * gsize + g_pos[eG]: one for g in block}
                   for block in cosets.values()]
        if len(vectors) == 1:
            continue

        def factory(Ngrp=N, nset=nset):
            if Ngrp.order == 1:
                template = group_algebra(G, conductor=H.field.conductor)
                eGamma = Gamma.identity()
                cols = []
                for g in Gamma.elements:
                    for x in G.elements:
                        cols.append({g_pos[x]: one} if g == eGamma else {})
                return template, cols
            sub = _restricted_pair(mp, Ngrp)
            if sub is None:
                return None
            template = bicrossed_product(sub, conductor=H.field.conductor)
            n_pos = {g: i for i, g in enumerate(Ngrp.elements)}
            cols = []
            for g in Gamma.elements:
                for x in G.elements:
                    if g in nset:
                        cols.append({n_pos[g] * gsize + g_pos[x]: one})
                    else:
                        cols.append({})
            return template, cols

        out.append(NormalCandidate(
            sub=span_subalgebra(H, vectors, note=f"i(k^[{iso_label(Gamma)}/{iso_label(N)}])"),
            note="canonical function-algebra part",
            quotient_factory=factory))

    for M in normal_subgroups(G):
        if M.order == 1:
            continue
        vectors = []
        for x in M.elements:
            vectors.append({gamma_pos[g] * gsize + g_pos[x]: one for g in Gamma.elements})
        if len(vectors) == H.dim:
            continue

        def factory(Mgrp=M):
            ind = _induced_pair(mp, Mgrp)
            if ind is None:
                return None
            pair, hom = ind
            template = bicrossed_product(pair, conductor=H.field.conductor)
            q_pos = {q: i for i, q in enumerate(pair.G.elements)}
            qsize = pair.G.order
            cols = []
            for g in Gamma.elements:
                for x in G.elements:
                    cols.append({gamma_pos[g] * qsize + q_pos[hom[x]]: one})
            return template, cols

        out.append(NormalCandidate(
            sub=span_subalgebra(H, vectors, note=f"1#k[{iso_label(M)}]"),
            note="group-like part over a normal subgroup",
            quotient_factory=factory))
    return out


def normal_subalgebra_candidates(H: HopfAlgebra, extra=()) -> list[NormalCandidate]:
    """Verified proper normal Hopf subalgebras from the catalog.

    Every candidate passes the subalgebra-closure check and the adjoint
    stability check before being returned; ones that fail are dropped.
    """
    raw: list[NormalCandidate] = []
    Gq_data = _group_form_with_perms(H)
    if Gq_data is not None:
        raw += _candidates_group_form(H, *Gq_data)
    Dq_data = _dual_form_with_perms(H)
    if Dq_data is not None:
        raw += _candidates_dual_form(H, *Dq_data)
    raw += _candidates_bicrossed(H)
    for vecs in extra:
        raw.append(NormalCandidate(sub=span_subalgebra(H, vecs, note="user"),
                                   note="user supplied"))
    out: list[NormalCandidate] = []
    seen = set()
    for cand in raw:
        if not 1 < cand.sub.dim < H.dim:
            continue
        key = cand.canonical()
        if key in seen:
            continue
        seen.add(key)
        if cand.sub.verify():
            continue
        normal, _ = is_normal_subalgebra(cand.sub)
        if normal:
            out.append(cand)
    out.sort(key=lambda c: (c.sub.dim, c.canonical()))
    return out


def _group_form_with_perms(H: HopfAlgebra):
    one = H.field.one
    n = H.dim
    if len(H.unit) != 1:
        return None
    table = []
    for i in range(n):
        if H.comult[i] != ((i, i, one),) or H.counit[i] != one:
            return None
        row = []
        for j in range(n):
            cell = H.mult[i][j]
            if len(cell) != 1 or cell[0][1] != one:
                return None
            row.append(cell[0][0])
        table.append(tuple(row))
    if any(sorted(p) != list(range(n)) for p in table):
        return None
    try:
        return from_elements(n, table), table
    except Exception:
        return None


def _dual_form_with_perms(H: HopfAlgebra):
    one = H.field.one
    n = H.dim
    if len(H.unit) != n or any(not c.is_one() for c in H.unit.values()):
        return None
    if sum(1 for c in H.counit if c.is_one()) != 1:
        return None
    if any(not (c.is_one() or c.is_zero()) for c in H.counit):
        return None
    for i in range(n):
        for j in range(n):
            cell = H.mult[i][j]
            if i == j:
                if cell != ((i, one),):
                    return None
            elif cell != ():
                return None
    law = {}
    for i in range(n):
        for j, k, c in H.comult[i]:
            if not c.is_one() or (j, k) in law:
                return None
            law[(j, k)] = i
    if len(law) != n * n:
        return None
    table = [tuple(law[(i, j)] for j in range(n)) for i in range(n)]
    if any(sorted(p) != list(range(n)) for p in table):
        return None
    try:
        return from_elements(n, table), table
    except Exception:
        return None


# ---------------------------------------------------------------------------
# composition series


def _split_along(H: HopfAlgebra, cand: NormalCandidate):
    """(standalone subalgebra, quotient, projection) for a verified candidate.

    Prefers the candidate's quotient template (verified: Hopf map, onto,
    kernel equal to the generated ideal); falls back to the generic
    pivot-basis cokernel.
    """
    sub_alg = standalone_subalgebra(cand.sub)
    inclusion = HopfMorphism(sub_alg, H, list(cand.sub.basis))
    if inclusion.verify():
        raise ExactnessError("internal: subalgebra inclusion is not a Hopf map")
    if cand.quotient_factory is not None:
        made = cand.quotient_factory()
        if made is not None:
            template, cols = made
            proj = HopfMorphism(H, template, cols)
            if not proj.verify() and proj.is_surjective():
                ker = nullspace_of_map(list(proj.cols), H.field)
                gens = [inclusion.apply(v) for v in augmentation_basis(sub_alg)]
                ideal = two_sided_ideal(H, gens)
                if subspace_equal(ker, ideal.basis(), H.field):
                    return sub_alg, template, proj
    Q, proj = hopf_cokernel(inclusion)
    return sub_alg, Q, proj


def _terminal_factor(H: HopfAlgebra) -> FactorDesc:
    data = _group_form_with_perms(H)
    if data is not None:
        Gq = data[0]
        if is_simple(Gq):
            return FactorDesc(kind="group", label=iso_label(Gq), dim=H.dim)
        raise ExactnessError(
            f"internal: group algebra of non-simple {iso_label(Gq)} reported no normal subalgebras")
    data = _dual_form_with_perms(H)
    if data is not None:
        Gq = data[0]
        if is_simple(Gq):
            return FactorDesc(kind="dual", label=iso_label(Gq), dim=H.dim)
        raise ExactnessError(
            f"internal: dual of non-simple {iso_label(Gq)} reported no normal subalgebras")
    raise UnsupportedAlgebra(
        f"dim-{H.dim} algebra is outside the catalog: no normal subalgebra found "
        "and no simplicity certificate applies")


def composition_series_hopf(H, chooser=None) -> HopfCompSeries:
    """Recursive composition series over the catalog.

    Accepts a HopfAlgebra or one of the symbolic refs (GroupAlgebraRef,
    DualGroupAlgebraRef, BicrossedRef) for algebras too large to expand.
    The chooser, when given, reorders the candidate list at each step.
    """
    if isinstance(H, GroupAlgebraRef):
        return symbolic_series(H)
    if isinstance(H, (DualGroupAlgebraRef, BicrossedRef)):
        return symbolic_series(H)
    if H.dim == 1:
        return HopfCompSeries(factors=[], provenance=[], total_dim=1)
    cands = normal_subalgebra_candidates(H)
    if not cands:
        return HopfCompSeries(factors=[_terminal_factor(H)],
                              provenance=["terminal"], total_dim=H.dim)
    order = chooser(cands) if chooser is not None else cands
    last_err: Exception | None = None
    for cand in order:
        try:
            sub_alg, Q, _proj = _split_along(H, cand)
            left = composition_series_hopf(sub_alg, chooser)
            right = composition_series_hopf(Q, chooser)
        except UnsupportedAlgebra as err:
            last_err = err
            continue
        prov = [f"split at {cand.sub.note or 'candidate'} (dim {cand.sub.dim})"]
        return HopfCompSeries(factors=left.factors + right.factors,
                              provenance=prov + left.provenance + right.provenance,
                              total_dim=H.dim)
    raise last_err if last_err is not None else UnsupportedAlgebra("no workable chain")


_EXPLORE_MEMO: dict = {}


def _structure_key(H: HopfAlgebra) -> tuple:
    return (H.field.conductor, H.dim, H.mult, tuple(sorted(H.unit.items())),
            H.comult, H.counit,
            tuple(tuple(sorted(col.items())) for col in H.antipode))


def all_hopf_series_multisets(H: HopfAlgebra) -> set[tuple]:
    """Factor multisets over every catalog chain (Jordan-Hoelder check)."""
    if H.dim == 1:
        return {()}
    key = _structure_key(H)
    hit = _EXPLORE_MEMO.get(key)
    if hit is not None:
        return hit
    cands = normal_subalgebra_candidates(H)
    out: set[tuple] = set()
    if not cands:
        fac = _terminal_factor(H)
        out.add(((fac.kind, fac.label, fac.dim),))
    for cand in cands:
        try:
            sub_alg, Q, _proj = _split_along(H, cand)
            for ls in all_hopf_series_multisets(sub_alg):
                for rs in all_hopf_series_multisets(Q):
                    out.add(tuple(sorted(ls + rs)))
        except UnsupportedAlgebra:
            continue
    if not out:
        raise UnsupportedAlgebra(f"no catalog chain for dim-{H.dim} algebra")
    _EXPLORE_MEMO[key] = out
    return out


# ---------------------------------------------------------------------------
# symbolic refs: composition factors without expanding structure constants


@dataclass(frozen=True)
class GroupAlgebraRef:
    group: PermGroup


@dataclass(frozen=True)
class DualGroupAlgebraRef:
    group: PermGroup


@dataclass(frozen=True)
class BicrossedRef:
    pair: MatchedPair


def symbolic_series(ref) -> HopfCompSeries:
    """Composition factors of kG / k^Gamma / a bicrossed product, by label.

    Rests on the factor description of abelian extensions: group-algebra
    factors from G and dual factors from Gamma.
    """
    from .groups import composition_series_group

    if isinstance(ref, GroupAlgebraRef):
        G = ref.group
        factors = [FactorDesc("group", lab, _label_dim(G, lab))
                   for lab in composition_series_group(G)]
        return HopfCompSeries(factors=factors, provenance=["symbolic kG"],
                              total_dim=G.order)
    if isinstance(ref, DualGroupAlgebraRef):
        G = ref.group
        factors = [FactorDesc("dual", lab, _label_dim(G, lab))
                   for lab in composition_series_group(G)]
        return HopfCompSeries(factors=factors, provenance=["symbolic k^G"],
                              total_dim=G.order)
    if isinstance(ref, BicrossedRef):
        mp = ref.pair
        dual_part = symbolic_series(DualGroupAlgebraRef(mp.Gamma))
        group_part = symbolic_series(GroupAlgebraRef(mp.G))
        return HopfCompSeries(factors=dual_part.factors + group_part.factors,
                              provenance=["symbolic bicrossed"],
                              total_dim=mp.G.order * mp.Gamma.order)
    raise UnsupportedAlgebra(f"unknown symbolic ref {ref!r}")


def _label_dim(G: PermGroup, label: str) -> int:
    if label.startswith("Z") and label[1:].isdigit():
        return int(label[1:])
    if label == "A5":
        return 60
    if label == "A6":
        return 360
    if label.startswith("order-"):
        return int(label.split("-")[1].split()[0])
    n = 1
    for part in label.split("x"):
        if part.startswith("Z") and part[1:].isdigit():
            n *= int(part[1:])
    if n == 1:
        raise UnsupportedAlgebra(f"cannot size composition factor {label!r}")
    return n
