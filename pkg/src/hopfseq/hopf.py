"""Finite-dimensional Hopf algebras as exact structure-constant tensors.

A HopfAlgebra stores, over a fixed cyclotomic field:

    mult[i][j]  = ((k, c), ...)        e_i e_j = sum c e_k
    unit        = sparse vector        1 = sum u_i e_i
    comult[i]   = ((j, k, c), ...)     Delta(e_i) = sum c e_j (x) e_k
    counit[i]   = scalar
    antipode[j] = sparse vector        S(e_j)

Constructions: group algebra kG, its dual k^G, bicrossed products
k^Gamma #(sigma,tau) kG over a matched pair, the Drinfeld double D(G),
and duals.  Axioms are verified exhaustively over basis tuples with
zero tolerance; the antipode is obtained by solving the defining linear
system when no verified closed form applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cocycles import PairedCocycles, trivial_paired_cocycles
from .cyclotomic import CycField, CycScalar, get_field
from .groups import PermGroup
from .matched import MatchedPair, drinfeld_pair
from .perm import Perm, compose, cycle_string, inverse

HOPF_DIM_CAP = 4_096
SOLVE_DIM_CAP = 12           # general antipode solve; closed forms above this
MAX_REPORT = 1_000

Vec = dict  # dict[int, CycScalar]


class HopfError(ValueError):
    pass


@dataclass(frozen=True)
class GroupAlgebraOrigin:
    group: PermGroup


@dataclass(frozen=True)
class DualGroupAlgebraOrigin:
    group: PermGroup


@dataclass(frozen=True)
class BicrossedOrigin:
    pair: MatchedPair
    cocycles: PairedCocycles


@dataclass(frozen=True)
class DualOrigin:
    inner: object


class HopfAlgebra:
    __slots__ = ("field", "dim", "basis_labels", "mult", "unit", "comult",
                 "counit", "antipode", "origin")

    def __init__(self, field: CycField, basis_labels, mult, unit, comult,
                 counit, antipode, origin=None):
        self.field = field
        self.dim = len(basis_labels)
        self.basis_labels = tuple(basis_labels)
        self.mult = tuple(tuple(tuple(cell) for cell in row) for row in mult)
        self.unit = {k: v for k, v in unit.items() if not v.is_zero()}
        self.comult = tuple(tuple(terms) for terms in comult)
        self.counit = tuple(counit)
        self.antipode = None if antipode is None else tuple(antipode)
        self.origin = origin

    def __repr__(self) -> str:
        return f"HopfAlgebra(dim {self.dim}, conductor {self.field.conductor})"

    # -- sparse vector helpers ------------------------------------------------

    def vec_add_term(self, acc: Vec, k: int, c: CycScalar) -> None:
        if k in acc:
            s = acc[k] + c
            if s.is_zero():
                del acc[k]
            else:
                acc[k] = s
        elif not c.is_zero():
            acc[k] = c

    def mul_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        mult = self.mult
        for i, a in u.items():
            row = mult[i]
            for j, b in v.items():
                ab = a * b
                if ab.is_zero():
                    continue
                for k, c in row[j]:
                    self.vec_add_term(out, k, ab * c)
        return out

    def comult_vec(self, u: Vec) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, k, c in self.comult[i]:
                key = (j, k)
                val = a * c
                if key in out:
                    s = out[key] + val
                    if s.is_zero():
                        del out[key]
                    else:
                        out[key] = s
                elif not val.is_zero():
                    out[key] = val
        return out

    def counit_vec(self, u: Vec) -> CycScalar:
        total = self.field.zero
        for i, a in u.items():
            total = total + a * self.counit[i]
        return total

    def antipode_vec(self, u: Vec) -> Vec:
        out: Vec = {}
        for j, a in u.items():
            for i, c in self.antipode[j].items():
                self.vec_add_term(out, i, a * c)
        return out

    def basis_vec(self, i: int) -> Vec:
        return {i: self.field.one}

    def structure_equal(self, other: "HopfAlgebra") -> bool:
        """Exact equality of all structure tensors (labels ignored)."""
        if (self.dim, self.field.conductor) != (other.dim, other.field.conductor):
            return False
        if self.counit != other.counit or self.unit != other.unit:
            return False
        if self.antipode != other.antipode:
            return False
        for i in range(self.dim):
            if self.comult[i] != other.comult[i]:
                return False
            for j in range(self.dim):
                if self.mult[i][j] != other.mult[i][j]:
                    return False
        return True


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class AxiomReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, *item) -> bool:
        """Record a violation; returns False once the report is full."""
        if len(self.violations) < MAX_REPORT:
            self.violations.append(item)
        return len(self.violations) < MAX_REPORT


def _tensor_mul(H: HopfAlgebra, t1: dict, t2: dict) -> dict:
    """Product in H (x) H of sparse tensors keyed by (i, j)."""
    out: dict = {}
    mult = H.mult
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            c = c1 * c2
            if c.is_zero():
                continue
            for m1, d1 in mult[a1][a2]:
                cd = c * d1
                for m2, d2 in mult[b1][b2]:
                    key = (m1, m2)
                    val = cd * d2
                    if key in out:
                        s = out[key] + val
                        if s.is_zero():
                            del out[key]
                        else:
                            out[key] = s
                    elif not val.is_zero():
                        out[key] = val
    return out


def verify_hopf_axioms(H: HopfAlgebra, include_antipode: bool = True) -> AxiomReport:
    """Exhaustively check all Hopf axioms over basis tuples, exactly."""
    report = AxiomReport([])
    field = H.field
    dim = H.dim
    one = field.one

    # unit element
    for i in range(dim):
        ei = H.basis_vec(i)
        if H.mul_vec(H.unit, ei) != ei and not report.add("unit-left", i):
            return report
        if H.mul_vec(ei, H.unit) != ei and not report.add("unit-right", i):
            return report

    # associativity
    for i in range(dim):
        for j in range(dim):
            ij = H.mul_vec(H.basis_vec(i), H.basis_vec(j))
            for k in range(dim):
                lhs = H.mul_vec(ij, H.basis_vec(k))
                rhs = H.mul_vec(H.basis_vec(i), H.mul_vec(H.basis_vec(j), H.basis_vec(k)))
                if lhs != rhs and not report.add("associativity", (i, j, k)):
                    return report

    # counit axioms
    for i in range(dim):
        left: Vec = {}
        right: Vec = {}
        for j, k, c in H.comult[i]:
            H.vec_add_term(left, k, c * H.counit[j])
            H.vec_add_term(right, j, c * H.counit[k])
        if left != H.basis_vec(i) and not report.add("counit-left", i):
            return report
        if right != H.basis_vec(i) and not report.add("counit-right", i):
            return report

    # coassociativity
    for i in range(dim):
        lhs: dict = {}
        rhs: dict = {}
        for j, k, c in H.comult[i]:
            for a, b, d in H.comult[j]:
                key = (a, b, k)
                lhs[key] = lhs.get(key, field.zero) + c * d
            for a, b, d in H.comult[k]:
                key = (j, a, b)
                rhs[key] = rhs.get(key, field.zero) + c * d
        lhs = {k: v for k, v in lhs.items() if not v.is_zero()}
        rhs = {k: v for k, v in rhs.items() if not v.is_zero()}
        if lhs != rhs and not report.add("coassociativity", i):
            return report

    # comultiplication is an algebra map
    unit_tensor = {(i, j): a * b for i, a in H.unit.items() for j, b in H.unit.items()}
    if H.comult_vec(H.unit) != unit_tensor:
        report.add("comult-unit")
    delta = [H.comult_vec(H.basis_vec(i)) for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            lhs = H.comult_vec(H.mul_vec(H.basis_vec(i), H.basis_vec(j)))
            rhs = _tensor_mul(H, delta[i], delta[j])
            if lhs != rhs and not report.add("comult-multiplicative", (i, j)):
                return report

    # counit is an algebra map
    if not H.counit_vec(H.unit).is_one():
        report.add("counit-unit")
    for i in range(dim):
        for j in range(dim):
            lhs = H.counit_vec(H.mul_vec(H.basis_vec(i), H.basis_vec(j)))
            if lhs != H.counit[i] * H.counit[j] and not report.add("counit-multiplicative", (i, j)):
                return report

    if not include_antipode:
        return report

    # antipode convolution identities
    for i in range(dim):
        left: Vec = {}
        right: Vec = {}
        for j, k, c in H.comult[i]:
            for m, d in _scaled_items(H.mul_vec(H.antipode[j], H.basis_vec(k)), c):
                H.vec_add_term(left, m, d)
            for m, d in _scaled_items(H.mul_vec(H.basis_vec(j), H.antipode[k]), c):
                H.vec_add_term(right, m, d)
        target = {m: H.counit[i] * u for m, u in H.unit.items()}
        target = {m: v for m, v in target.items() if not v.is_zero()}
        if left != target and not report.add("antipode-left", i):
            return report
        if right != target and not report.add("antipode-right", i):
            return report
    return report


def _scaled_items(vec: Vec, c: CycScalar):
    for k, v in vec.items():
        yield k, c * v


def antipode_is_antihomomorphism(H: HopfAlgebra) -> bool:
    for i in range(H.dim):
        si = H.antipode[i]
        for j in range(H.dim):
            lhs = H.antipode_vec(H.mul_vec(H.basis_vec(i), H.basis_vec(j)))
            rhs = H.mul_vec(H.antipode[j], si)
            if lhs != rhs:
                return False
    return True


def antipode_invertible(H: HopfAlgebra) -> bool:
    from .linalg import rank_of_columns

    return rank_of_columns(list(H.antipode), H.field) == H.dim


# ---------------------------------------------------------------------------
# antipode solving


def _check_antipode(field, dim, mult_vec, comult, counit, unit, cols) -> bool:
    zero = field.zero
    target_base = {m: u for m, u in unit.items()}
    for i in range(dim):
        left: Vec = {}
        right: Vec = {}
        for j, k, c in comult[i]:
            for m, d in mult_vec(cols[j], {k: field.one}).items():
                cd = c * d
                if m in left:
                    left[m] = left[m] + cd
                else:
                    left[m] = cd
            for m, d in mult_vec({j: field.one}, cols[k]).items():
                cd = c * d
                if m in right:
                    right[m] = right[m] + cd
                else:
                    right[m] = cd
        eps = counit[i]
        target = {m: eps * u for m, u in target_base.items() if not (eps * u).is_zero()}
        left = {m: v for m, v in left.items() if not v.is_zero()}
        right = {m: v for m, v in right.items() if not v.is_zero()}
        if left != target or right != target:
            return False
    return True


def solve_antipode(field: CycField, basis_labels, mult, unit, comult, counit,
                   candidate=None, solve_cap: int = SOLVE_DIM_CAP):
    """Antipode of a verified bialgebra: the solution of m(S (x) id)Delta = u eps.

    A caller-supplied candidate matrix is accepted after both convolution
    identities verify exhaustively (a two-sided convolution inverse of the
    identity is unique, so a verified candidate *is* the solution).  With no
    candidate the sparse linear system is solved outright; returns None when
    the system is inconsistent, i.e. the bialgebra is not a Hopf algebra.
    """
    dim = len(basis_labels)
    probe = HopfAlgebra(field, basis_labels, mult, unit, comult, counit,
                        antipode=None)

    if candidate is not None:
        if _check_antipode(field, dim, probe.mul_vec, comult, counit, unit, candidate):
            return candidate

    if dim > solve_cap:
        raise HopfError(
            f"no verified closed-form antipode and dim {dim} exceeds the "
            f"general-solve cap {solve_cap}")

    # unknowns S[i, j]; equation rows indexed by (a, m)
    rows: dict = {}
    rhs: dict = {}
    for a in range(dim):
        for j, k, c in comult[a]:
            for i in range(dim):
                for m, d in mult[i][k]:
                    key = (a, m)
                    row = rows.setdefault(key, {})
                    coeff = c * d
                    if (i, j) in row:
                        row[(i, j)] = row[(i, j)] + coeff
                    else:
                        row[(i, j)] = coeff
        for m, u in unit.items():
            rhs[(a, m)] = counit[a] * u

    keys = sorted(set(rows) | set(rhs))
    system = []
    for key in keys:
        row = {v: c for v, c in rows.get(key, {}).items() if not c.is_zero()}
        system.append((row, rhs.get(key, field.zero)))

    from .linalg import solve_sparse_system

    sol = solve_sparse_system(system, field)
    if sol is None:
        return None
    cols = [dict() for _ in range(dim)]
    for (i, j), c in sol.items():
        if not c.is_zero():
            cols[j][i] = c
    if not _check_antipode(field, dim, probe.mul_vec, comult, counit, unit, cols):
        return None
    return cols


# ---------------------------------------------------------------------------
# constructions


def group_algebra(G: PermGroup, conductor: int = 1) -> HopfAlgebra:
    """kG: basis the group elements, every basis vector group-like."""
    field = get_field(conductor)
    one = field.one
    elems = G.elements
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    mult = tuple(tuple(((index[compose(elems[i], elems[j])], one),)
                       for j in range(n)) for i in range(n))
    unit = {index[G.identity()]: one}
    comult = tuple(((i, i, one),) for i in range(n))
    counit = tuple(one for _ in range(n))
    antipode = tuple({index[inverse(elems[j])]: one} for j in range(n))
    return HopfAlgebra(field, [cycle_string(g) for g in elems], mult, unit,
                       comult, counit, antipode, origin=GroupAlgebraOrigin(G))


def dual_group_algebra(G: PermGroup, conductor: int = 1) -> HopfAlgebra:
    """k^G: orthogonal idempotents e_g, Delta(e_g) = sum_{st=g} e_s (x) e_t."""
    field = get_field(conductor)
    one = field.one
    elems = G.elements
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    mult = tuple(tuple(((i, one),) if i == j else ()
                       for j in range(n)) for i in range(n))
    unit = {i: one for i in range(n)}
    comult = []
    for i, g in enumerate(elems):
        terms = []
        for s in elems:
            t = compose(inverse(s), g)
            terms.append((index[s], index[t], one))
        comult.append(tuple(terms))
    counit = tuple(one if elems[i] == G.identity() else field.zero for i in range(n))
    antipode = tuple({index[inverse(elems[j])]: one} for j in range(n))
    return HopfAlgebra(field, [f"e[{cycle_string(g)}]" for g in elems], mult, unit,
                       comult, tuple(counit), antipode,
                       origin=DualGroupAlgebraOrigin(G))


def bicrossed_product(mp: MatchedPair, cocycles: PairedCocycles | None = None,
                      conductor: int | None = None,
                      dim_cap: int = HOPF_DIM_CAP) -> HopfAlgebra:
    """k^Gamma #(sigma,tau) kG on basis e_g # x.

        (e_g # x)(e_h # y) = delta_{g <| x, h} sigma_g(x, y) e_g # xy
        Delta(e_g # x)     = sum_{st=g} tau_x(s, t) e_s # (t |> x) (x) e_t # x

    The pair (sigma, tau) is accepted exactly when the result passes full
    axiom verification; failures raise with the first failing instance.
    """
    G, Gamma = mp.G, mp.Gamma
    dim = G.order * Gamma.order
    if dim > dim_cap:
        raise HopfError(f"dimension {dim} exceeds cap {dim_cap}")
    if cocycles is None:
        cocycles = trivial_paired_cocycles(G, Gamma, conductor or 1)
    if not cocycles.normalized(G, Gamma):
        raise HopfError("cocycle pair is not normalized")
    N = conductor or cocycles.conductor
    field = get_field(N)
    one = field.one

    basis = [(g, x) for g in Gamma.elements for x in G.elements]
    index = {b: i for i, b in enumerate(basis)}
    labels = [f"e[{cycle_string(g)}]#{cycle_string(x)}" for g, x in basis]

    trivial_sigma = all(v % cocycles.conductor == 0 for v in cocycles.sigma.values())
    trivial_tau = all(v % cocycles.conductor == 0 for v in cocycles.tau.values())

    mult_rows = []
    for g, x in basis:
        gx = mp.ltri(g, x)
        row = []
        for h, y in basis:
            if gx != h:
                row.append(())
            else:
                coeff = one if trivial_sigma else field.zeta(cocycles.sigma_at(g, x, y))
                row.append(((index[(g, compose(x, y))], coeff),))
        mult_rows.append(tuple(row))
    mult = tuple(mult_rows)

    eG, eGamma = G.identity(), Gamma.identity()
    unit = {index[(g, eG)]: one for g in Gamma.elements}
    comult = []
    for g, x in basis:
        terms = []
        for s in Gamma.elements:
            t = compose(inverse(s), g)
            coeff = one if trivial_tau else field.zeta(cocycles.tau_at(x, s, t))
            terms.append((index[(s, mp.rtri(t, x))], index[(t, x)], coeff))
        comult.append(tuple(terms))
    comult = tuple(comult)
    counit = tuple(one if g == eGamma else field.zero for g, x in basis)

    probe = HopfAlgebra(field, labels, mult, unit, comult, counit, antipode=None,
                        origin=BicrossedOrigin(mp, cocycles))
    pre = verify_hopf_axioms(probe, include_antipode=False)
    if not pre.ok:
        raise HopfError(f"bialgebra axioms fail: {pre.violations[0]}")

    candidate = None
    if trivial_sigma and trivial_tau:
        cols = []
        for g, x in basis:
            gx = mp.ltri(g, x)
            target = (inverse(gx), inverse(mp.rtri(g, x)))
            cols.append({index[target]: one})
        candidate = cols
    antipode = solve_antipode(field, labels, mult, unit, comult, counit,
                              candidate=candidate)
    if antipode is None:
        raise HopfError("bialgebra admits no antipode (sigma, tau incompatible)")
    H = HopfAlgebra(field, labels, mult, unit, comult, counit, tuple(antipode),
                    origin=BicrossedOrigin(mp, cocycles))
    post = verify_hopf_axioms(H)
    if not post.ok:
        raise HopfError(f"hopf axioms fail: {post.violations[0]}")
    return H


def drinfeld_double(G: PermGroup, dim_cap: int = HOPF_DIM_CAP) -> HopfAlgebra:
    """D(G): the bicrossed product over (G, G), adjoint <| and trivial |>."""
    if G.order ** 2 > dim_cap:
        raise HopfError(f"dim {G.order ** 2} exceeds cap {dim_cap}")
    return bicrossed_product(drinfeld_pair(G))


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis: all tensors transposed."""
    field = H.field
    dim = H.dim
    mult_d: list[list[list]] = [[[] for _ in range(dim)] for _ in range(dim)]
    for k in range(dim):
        for i, j, c in H.comult[k]:
            mult_d[i][j].append((k, c))
    mult = tuple(tuple(tuple(cell) for cell in row) for row in mult_d)
    unit = {i: c for i, c in enumerate(H.counit) if not c.is_zero()}
    comult_d: list[list] = [[] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k, c in H.mult[i][j]:
                comult_d[k].append((i, j, c))
    comult = tuple(tuple(terms) for terms in comult_d)
    counit = tuple(H.unit.get(i, field.zero) for i in range(dim))
    antipode = []
    for j in range(dim):
        col = {}
        for i in range(dim):
            c = H.antipode[i].get(j)
            if c is not None and not c.is_zero():
                col[i] = c
        antipode.append(col)
    labels = [f"{lab}^" for lab in H.basis_labels]
    return HopfAlgebra(field, labels, mult, unit, comult, counit, tuple(antipode),
                       origin=DualOrigin(H.origin))
