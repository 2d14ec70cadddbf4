"""Finite permutation group engine.

Covers element closure, conjugacy classes of subgroups, normalizers,
abelianization orders, composition series, normal subgroups and exact
factorizations.  Everything is exhaustive and exact; sizes are capped
(default 10,000 elements for closures, 1,000 for subgroup lattices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .perm import (
    Perm,
    compose,
    conjugate,
    identity,
    inverse,
    is_perm,
    perm_order,
)

ORDER_CAP = 10_000
SUBGROUP_CAP = 1_000


class CapExceeded(RuntimeError):
    """A closure or lattice computation grew past its configured cap."""


class GroupError(ValueError):
    pass


def closure(generators: list[Perm], degree: int, cap: int = ORDER_CAP) -> tuple[Perm, ...]:
    """Close a generator list under products; returns sorted element tuple."""
    e = identity(degree)
    elems = {e}
    frontier = [e]
    gens = [g for g in generators if g != e]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
                    if len(elems) > cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
        frontier = new
    return tuple(sorted(elems))


def small_generating_set(elems: tuple[Perm, ...], degree: int) -> list[Perm]:
    gens: list[Perm] = []
    have = {identity(degree)}
    for x in elems:
        if x not in have:
            gens.append(x)
            have = set(closure(gens, degree, cap=len(elems)))
            if len(have) == len(elems):
                break
    return gens


class PermGroup:
    """A finite permutation group with cached, lexicographically sorted elements."""

    __slots__ = ("degree", "generators", "elements", "order", "name", "_hash", "_eset")

    def __init__(self, degree: int, generators: list[Perm], name: str = "",
                 cap: int = ORDER_CAP, _elements: tuple[Perm, ...] | None = None):
        for g in generators:
            if not is_perm(g, degree):
                raise GroupError(f"generator {g} is not a permutation of degree {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = _elements if _elements is not None else closure(list(generators), degree, cap)
        self.order = len(self.elements)
        self.name = name
        self._hash = hash((degree, self.elements))
        self._eset: frozenset | None = None

    def element_set(self) -> frozenset:
        if self._eset is None:
            self._eset = frozenset(self.elements)
        return self._eset

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup)
                and self.degree == other.degree and self.elements == other.elements)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        label = self.name or f"deg {self.degree}"
        return f"PermGroup({label}, order {self.order})"

    def subgroup(self, generators: list[Perm], name: str = "") -> "PermGroup":
        H = PermGroup(self.degree, list(generators), name=name, cap=self.order)
        if not H.element_set() <= self.element_set():
            raise GroupError("generators do not lie in the ambient group")
        return H

    def is_subgroup(self, H: "PermGroup") -> bool:
        return H.degree == self.degree and H.element_set() <= self.element_set()

    def identity(self) -> Perm:
        return identity(self.degree)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def from_elements(degree: int, elems, name: str = "") -> PermGroup:
    """Wrap an already-closed element collection as a PermGroup."""
    elems = tuple(sorted(elems))
    gens = small_generating_set(elems, degree)
    return PermGroup(degree, gens, name=name, _elements=elems)


def elements(generators: list[Perm], degree: int, cap: int = ORDER_CAP) -> PermGroup:
    """Build a PermGroup from generators (library entry point)."""
    return PermGroup(degree, generators, cap=cap)


def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup(degree, [], name="1")


# ---------------------------------------------------------------------------
# builtin groups


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return trivial_group()
    return PermGroup(n, [tuple(range(1, n)) + (0,)], name=f"Z{n}")


def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    if n == 2:
        return PermGroup(2, [(1, 0)], name="S2")
    gens = [tuple(range(1, n)) + (0,), (1, 0) + tuple(range(2, n))]
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    cyc3 = (1, 2, 0) + tuple(range(3, n))
    if n % 2:
        big = tuple(range(1, n)) + (0,)
    else:
        big = (0,) + tuple(range(2, n)) + (1,)
    return PermGroup(n, [cyc3, big], name=f"A{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on an n-gon."""
    if n < 3:
        raise GroupError("dihedral needs n >= 3")
    rot = tuple(range(1, n)) + (0,)
    refl = tuple((n - i) % n for i in range(n))
    return PermGroup(n, [rot, refl], name=f"D{n}")


def klein_four() -> PermGroup:
    return PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)], name="Z2xZ2")


def quaternion8() -> PermGroup:
    # left-regular representation of Q8 on (1, -1, i, -i, j, -j, k, -k)
    i = (2, 3, 1, 0, 6, 7, 5, 4)
    j = (4, 5, 7, 6, 1, 0, 2, 3)
    return PermGroup(8, [i, j], name="Q8")


def direct_product(A: PermGroup, B: PermGroup, name: str = "") -> PermGroup:
    """Direct product acting on the disjoint union of the two domains."""
    d = A.degree + B.degree
    gens = [g + tuple(range(A.degree, d)) for g in A.generators]
    gens += [tuple(range(A.degree)) + tuple(x + A.degree for x in g) for g in B.generators]
    return PermGroup(d, gens, name=name or f"{A.name}x{B.name}")


def abelian_group(invariants: list[int]) -> PermGroup:
    """Direct product of cyclic groups of the given orders."""
    G = cyclic(invariants[0])
    for n in invariants[1:]:
        G = direct_product(G, cyclic(n))
    G.name = "x".join(f"Z{n}" for n in invariants)
    return G


# ---------------------------------------------------------------------------
# basic structure computations


def center(G: PermGroup) -> list[Perm]:
    gens = G.generators
    return [x for x in G.elements
            if all(compose(g, x) == compose(x, g) for g in gens)]


def commutator_subgroup(G: PermGroup) -> PermGroup:
    """Derived subgroup, by closing the full set of commutators."""
    comms = set()
    elems = G.elements
    inv = {x: inverse(x) for x in elems}
    for a in elems:
        ia = inv[a]
        for b in elems:
            comms.add(compose(compose(a, b), compose(ia, inv[b])))
    closed = closure(sorted(comms), G.degree, cap=G.order)
    return from_elements(G.degree, closed)


def abelianization_order(G: PermGroup) -> int:
    return G.order // commutator_subgroup(G).order


def class_metrics(G: PermGroup, T: PermGroup) -> tuple[int, int, int]:
    """(normalizer index [N_G(T):T], |T/[T,T]|, |Z(T)|) by exhaustive search."""
    if not G.is_subgroup(T):
        raise GroupError("T is not a subgroup of G")
    tset = T.element_set()
    nsize = sum(1 for g in G.elements
                if all(conjugate(g, t) in tset for t in T.elements))
    return nsize // T.order, abelianization_order(T), len(center(T))


def normalizer(G: PermGroup, T: PermGroup) -> PermGroup:
    tset = T.element_set()
    elems = [g for g in G.elements
             if all(conjugate(g, t) in tset for t in T.elements)]
    return from_elements(G.degree, elems)


def conjugacy_classes(G: PermGroup) -> list[list[Perm]]:
    """Element conjugacy classes, each sorted, ordered by smallest member."""
    gens = G.generators
    remaining = set(G.elements)
    classes = []
    while remaining:
        x = min(remaining)
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g in gens:
                    z = conjugate(g, y)
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        remaining -= orbit
        classes.append(sorted(orbit))
    return classes


# ---------------------------------------------------------------------------
# isomorphism-type labels
#
# Abelian groups are identified outright from their invariant factors.  The
# nonabelian types needed for the A6/A5 subgroup tables and the order <= 24
# test sets are told apart by fingerprints of reference groups; anything else
# reports "order-N unidentified" rather than guessing.


def order_histogram(G: PermGroup) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for x in G.elements:
        o = perm_order(x)
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def pow_perm(p: Perm, k: int) -> Perm:
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def abelian_invariants(G: PermGroup) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an abelian group.

    The Sylow type at each prime p is recovered from the counts of elements
    of order dividing p^i (those counts are p-powers and determine the
    partition).
    """
    if not G.is_abelian():
        raise GroupError("abelian_invariants needs an abelian group")
    if G.order == 1:
        return ()
    n = G.order
    e = G.identity()
    primary: dict[int, list[int]] = {}
    for p in _prime_factors(n):
        sums = []  # sums[i-1] = sum_j min(lambda_j, i)
        i = 1
        while True:
            cnt = sum(1 for x in G.elements if pow_perm(x, p ** i) == e)
            expo = 0
            while cnt > 1:
                cnt //= p
                expo += 1
            sums.append(expo)
            if p ** expo == _p_part(n, p):
                break
            i += 1
        parts: list[int] = []
        prev = 0
        for i, s in enumerate(sums, start=1):
            count_ge_i = s - prev  # number of parts >= i
            prev = s
            while len(parts) < count_ge_i:
                parts.append(0)
            for j in range(count_ge_i):
                parts[j] = i
        primary[p] = sorted((p ** a for a in parts if a), reverse=True)
    width = max(len(v) for v in primary.values())
    factors = []
    for i in range(width):
        d = 1
        for parts in primary.values():
            if i < len(parts):
                d *= parts[i]
        factors.append(d)
    return tuple(sorted(factors))


def _fingerprint(G: PermGroup) -> tuple:
    return (G.order, order_histogram(G), len(center(G)), abelianization_order(G))


@lru_cache(maxsize=1)
def _reference_fingerprints() -> dict[tuple, str]:
    refs: list[PermGroup] = []
    for n in range(3, 13):
        refs.append(dihedral(n))
    refs += [symmetric(n) for n in (4, 5, 6)]
    refs += [alternating(n) for n in (4, 5, 6)]
    refs.append(quaternion8())
    # the nonabelian order-18 and order-36 types from the A6 subgroup table
    e9 = [(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3)]
    refs.append(PermGroup(6, e9 + [(1, 0, 2, 4, 3, 5)], name="(Z3xZ3):Z2"))
    refs.append(PermGroup(
        6, e9 + [(0, 2, 1, 3, 5, 4), (3, 4, 5, 0, 2, 1)], name="(Z3xZ3):Z4"))
    table: dict[tuple, str] = {}
    for R in refs:
        name = "S3" if R.name == "D3" else R.name
        key = _fingerprint(R)
        if key in table and table[key] != name:
            raise AssertionError(f"reference fingerprint collision: {table[key]} vs {name}")
        table[key] = name
    return table


def iso_label(G: PermGroup) -> str:
    if G.order == 1:
        return "1"
    if G.is_abelian():
        return "x".join(f"Z{d}" for d in abelian_invariants(G))
    label = _reference_fingerprints().get(_fingerprint(G))
    return label if label is not None else f"order-{G.order} unidentified"


# ---------------------------------------------------------------------------
# subgroup lattice up to conjugacy


@dataclass
class SubgroupClassRow:
    """One conjugacy class of subgroups with its numeric invariants."""

    representative: PermGroup
    iso_label: str
    order: int
    char_group_order: int   # |T^| = |T/[T,T]|
    normalizer_index: int   # [N_G(T):T]
    conjugates: tuple[frozenset, ...] = field(repr=False, default=())

    def numeric_key(self) -> tuple[str, int, int, int]:
        return (self.iso_label, self.order, self.char_group_order, self.normalizer_index)


def _cyclic_subgroups(G: PermGroup) -> list[tuple[frozenset, Perm]]:
    """All cyclic subgroups, each with a generator, deduplicated."""
    seen: dict[frozenset, Perm] = {}
    e = G.identity()
    for x in G.elements:
        if x == e:
            continue
        powers = [e, x]
        y = compose(x, x)
        while y != e:
            powers.append(y)
            y = compose(y, x)
        key = frozenset(powers)
        if key not in seen:
            seen[key] = x
    return sorted(seen.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))


@lru_cache(maxsize=64)
def _subgroup_lattice(G: PermGroup) -> tuple[tuple[frozenset, tuple[Perm, ...], tuple[frozenset, ...]], ...]:
    """Conjugacy classes of subgroups: (representative set, gens, full orbit).

    Bottom-up: seed with the cyclic subgroups, then close under joins of
    class representatives with conjugates of cyclic subgroups.  Every
    subgroup is a join of its cyclic subgroups, so the fixpoint is complete.
    """
    if G.order > SUBGROUP_CAP:
        raise CapExceeded(f"subgroup lattice needs |G| <= {SUBGROUP_CAP}")
    e = G.identity()
    cyclics = _cyclic_subgroups(G)
    gelems = G.elements

    known: dict[frozenset, int] = {}
    classes: list[tuple[frozenset, tuple[Perm, ...], tuple[frozenset, ...]]] = []

    def register(sub: frozenset, gens: tuple[Perm, ...]) -> None:
        orbit = {sub}
        for g in gelems:
            orbit.add(frozenset(conjugate(g, x) for x in sub))
        orbit_sorted = sorted(orbit, key=sorted)
        rep = orbit_sorted[0]
        if rep == sub:
            rep_gens = gens
        else:
            rep_gens = None
            for g in gelems:
                if frozenset(conjugate(g, x) for x in sub) == rep:
                    rep_gens = tuple(conjugate(g, x) for x in gens)
                    break
            assert rep_gens is not None
        cid = len(classes)
        classes.append((rep, rep_gens, tuple(orbit_sorted)))
        for member in orbit_sorted:
            known[member] = cid

    register(frozenset([e]), ())
    for sub, gen in cyclics:
        if sub not in known:
            register(sub, (gen,))

    idx = 0
    while idx < len(classes):
        rep, rep_gens, _orbit = classes[idx]
        idx += 1
        if len(rep) == G.order:
            continue
        for sub, gen in cyclics:
            if sub <= rep:
                continue
            join = frozenset(closure(list(rep_gens) + [gen], G.degree, cap=G.order))
            if join not in known:
                register(join, tuple(rep_gens) + (gen,))
    return tuple(classes)


def subgroup_classes(G: PermGroup, cap: int = SUBGROUP_CAP) -> list[SubgroupClassRow]:
    """One row per conjugacy class of subgroups, sorted by (order, iso label)."""
    if G.order > cap:
        raise CapExceeded(f"|G| = {G.order} exceeds cap {cap}")
    rows = []
    for rep, gens, orbit in _subgroup_lattice(G):
        T = PermGroup(G.degree, list(gens), _elements=tuple(sorted(rep)))
        n_index = G.order // (len(orbit) * T.order)
        rows.append(SubgroupClassRow(
            representative=T,
            iso_label=iso_label(T),
            order=T.order,
            char_group_order=abelianization_order(T),
            normalizer_index=n_index,
            conjugates=orbit,
        ))
    rows.sort(key=lambda r: (r.order, r.iso_label))
    return rows


# ---------------------------------------------------------------------------
# normal subgroups, quotients, composition series


@lru_cache(maxsize=64)
def normal_subgroups(G: PermGroup) -> tuple[PermGroup, ...]:
    """All normal subgroups, via joins of element conjugacy classes."""
    classes = conjugacy_classes(G)
    e = G.identity()
    found: set[frozenset] = {frozenset([e])}
    frontier = [frozenset([e])]
    while frontier:
        new: list[frozenset] = []
        for base in frontier:
            for cls in classes:
                if cls[0] == e or cls[0] in base:
                    continue
                # a subgroup generated by full conjugacy classes is normal
                sub = frozenset(closure(sorted(base) + cls, G.degree, cap=G.order))
                if sub not in found:
                    found.add(sub)
                    new.append(sub)
        frontier = new
    return tuple(from_elements(G.degree, sub)
                 for sub in sorted(found, key=lambda s: (len(s), sorted(s))))


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    nset = N.element_set()
    return all(conjugate(g, x) in nset for g in G.generators for x in N.elements)


def quotient_group(G: PermGroup, N: PermGroup) -> tuple[PermGroup, dict[Perm, int]]:
    """G/N as a permutation group on the left cosets of N.

    Returns the quotient together with the map element -> coset index.
    """
    if not is_normal(G, N):
        raise GroupError("quotient by a non-normal subgroup")
    nset = N.element_set()
    cosets: list[frozenset] = []
    coset_of: dict[Perm, int] = {}
    for g in G.elements:
        if g in coset_of:
            continue
        cos = frozenset(compose(g, x) for x in nset)
        idx = len(cosets)
        cosets.append(cos)
        for y in cos:
            coset_of[y] = idx
    k = len(cosets)
    reps = [min(c) for c in cosets]
    gens = [tuple(coset_of[compose(g, reps[i])] for i in range(k)) for g in G.generators]
    return PermGroup(k, gens), coset_of


def composition_series_group(G: PermGroup) -> list[str]:
    """Multiset (sorted list) of simple-factor labels of a maximal chain."""
    if G.order == 1:
        return []
    normals = [N for N in normal_subgroups(G) if N.order < G.order]
    M = max(normals, key=lambda N: N.order)
    Q, _ = quotient_group(G, M)
    return sorted(composition_series_group(M) + [iso_label(Q)])


def all_composition_factor_multisets(G: PermGroup) -> set[tuple[str, ...]]:
    """Factor multisets over every maximal normal chain (classical JH check)."""
    if G.order == 1:
        return {()}
    normals = [N for N in normal_subgroups(G) if N.order < G.order]
    maximal = [N for N in normals
               if not any(N.order < M.order < G.order and
                          N.element_set() < M.element_set() for M in normals)]
    out: set[tuple[str, ...]] = set()
    for N in maximal:
        Q, _ = quotient_group(G, N)
        top = iso_label(Q)
        for rest in all_composition_factor_multisets(N):
            out.add(tuple(sorted(rest + (top,))))
    return out


def is_simple(G: PermGroup) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


# ---------------------------------------------------------------------------
# exact factorizations  G = A.B  with  A meet B = {e}


@dataclass
class ExactFactorizationG:
    ambient: PermGroup
    left: PermGroup
    right: PermGroup

    def verify(self) -> bool:
        """|A||B| = |G|, trivial intersection, product map bijective."""
        A, B, G = self.left, self.right, self.ambient
        if A.order * B.order != G.order:
            return False
        if len(A.element_set() & B.element_set()) != 1:
            return False
        products = {compose(a, b) for a in A.elements for b in B.elements}
        return products == set(G.elements)

    def labels(self) -> tuple[str, str]:
        return (iso_label(self.left), iso_label(self.right))


def exact_factorizations(G: PermGroup, proper_only: bool = True) -> list[ExactFactorizationG]:
    """All exact factorizations up to conjugacy of the pair and swapping.

    Every returned pair is re-verified through the unique-factorization
    bijection; the larger factor is reported on the left.
    """
    lattice = _subgroup_lattice(G)
    by_order: dict[int, list[int]] = {}
    for i, (rep, _gens, _orbit) in enumerate(lattice):
        by_order.setdefault(len(rep), []).append(i)

    results: list[ExactFactorizationG] = []
    for i, (repA, gensA, _orbitA) in enumerate(lattice):
        a = len(repA)
        if G.order % a:
            continue
        b = G.order // a
        if a < b:
            continue  # larger factor goes on the left; swap handled below
        if proper_only and b == 1:
            continue
        normA = [g for g in G.elements
                 if frozenset(conjugate(g, x) for x in repA) == repA]
        for j in by_order.get(b, []):
            _repB, _gensB, orbitB = lattice[j]
            found: set[frozenset] = set()
            for candB in orbitB:
                if len(repA & candB) != 1:
                    continue
                if any(frozenset(conjugate(n, x) for x in candB) in found for n in normA):
                    continue
                found.add(candB)
                fact = ExactFactorizationG(
                    ambient=G,
                    left=PermGroup(G.degree, list(gensA), _elements=tuple(sorted(repA))),
                    right=from_elements(G.degree, candB),
                )
                if not fact.verify():
                    raise GroupError("internal: factorization candidate failed verification")
                results.append(fact)

    # equal-order pairs may coincide after swapping plus conjugation
    deduped: list[ExactFactorizationG] = []
    for fact in results:
        dup = False
        for prev in deduped:
            if (prev.left.order, prev.right.order) != (fact.right.order, fact.left.order):
                continue
            fa, fb = fact.left.element_set(), fact.right.element_set()
            pa, pb = prev.left.element_set(), prev.right.element_set()
            if any(frozenset(conjugate(g, x) for x in fa) == pb
                   and frozenset(conjugate(g, x) for x in fb) == pa
                   for g in G.elements):
                dup = True
                break
        if not dup:
            deduped.append(fact)
    deduped.sort(key=lambda f: (-f.left.order, f.labels()))
    return deduped


# ---------------------------------------------------------------------------


def named_group(name: str) -> PermGroup:
    """Resolve CLI-style group names: a6, s5, z12, d4, q8, v4, z2xz4, ..."""
    key = name.strip().lower()
    if key in ("1", "triv", "trivial"):
        return trivial_group()
    if key == "v4":
        return klein_four()
    if key == "q8":
        return quaternion8()
    if "x" in key:
        parts = key.split("x")
        if all(p.startswith("z") and p[1:].isdigit() for p in parts):
            return abelian_group([int(p[1:]) for p in parts])
        raise GroupError(f"unknown group name: {name!r}")
    head, num = key[0], key[1:]
    if num.isdigit():
        if head == "a":
            return alternating(int(num))
        if head == "s":
            return symmetric(int(num))
        if head == "z" or head == "c":
            return cyclic(int(num))
        if head == "d":
            return dihedral(int(num))
    raise GroupError(f"unknown group name: {name!r}")
