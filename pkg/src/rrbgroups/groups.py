"""Finite groups on {0..n-1} given by Cayley tables, with homs and quotients.

Element 0 is always the identity.  Tables are numpy int arrays with
``table[i, j] == i * j``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 64


class GroupError(ValueError):
    """Structured validation failure with a short code and a witness."""

    def __init__(self, code: str, message: str, witness: tuple = ()):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.witness = witness


class FiniteGroup:
    """A finite group given by its multiplication table.

    The constructor validates the table: identity at 0, associativity,
    two-sided inverses.  Rows and columns being permutations follows, and is
    checked first because it gives the cheapest failure witnesses.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: Optional[str] = None):
        tab = np.asarray(table, dtype=np.int64)
        if tab.ndim != 2 or tab.shape[0] != tab.shape[1]:
            raise GroupError("NotClosed", f"table must be square, got shape {tab.shape}")
        n = tab.shape[0]
        if n == 0:
            raise GroupError("NotClosed", "empty table")
        if tab.min() < 0 or tab.max() >= n:
            bad = np.argwhere((tab < 0) | (tab >= n))[0]
            raise GroupError("NotClosed", f"entry at {tuple(bad)} out of range", tuple(bad))
        if not (np.array_equal(tab[0], np.arange(n)) and np.array_equal(tab[:, 0], np.arange(n))):
            raise GroupError("NoIdentityAtZero", "element 0 is not a two-sided identity")
        # table[table[i, j], k] == table[i, table[j, k]], vectorized over k.
        for i in range(n):
            for j in range(n):
                if not np.array_equal(tab[tab[i, j]], tab[i, tab[j]]):
                    k = int(np.flatnonzero(tab[tab[i, j]] != tab[i, tab[j]])[0])
                    raise GroupError(
                        "NotAssociative", f"(a*b)*c != a*(b*c) at (a,b,c)=({i},{j},{k})", (i, j, k)
                    )
        inv = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            hits = [int(j) for j in np.flatnonzero(tab[i] == 0) if tab[j, i] == 0]
            if not hits:
                raise GroupError("NoInverse", f"element {i} has no two-sided inverse", (i,))
            inv[i] = hits[0]
        self.table = tab
        self.table.setflags(write=False)
        self.order = n
        self.name = name
        self._inv = inv
        self._inv.setflags(write=False)
        self._abelian: Optional[bool] = None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inv[a])

    def conj(self, a: int, g: int) -> int:
        """g^-1 * a * g"""
        return self.mul(self.mul(self.inv(g), a), g)

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"FiniteGroup({label})"


def validate_group(table: Sequence[Sequence[int]], name: Optional[str] = None) -> FiniteGroup:
    """Validate a Cayley table, raising GroupError on the first broken axiom."""
    return FiniteGroup(table, name=name)


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"Z{n}")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], name="1")


class ProductGroup(NamedTuple):
    group: FiniteGroup
    inj1: "GroupHom"
    inj2: "GroupHom"
    proj1: "GroupHom"
    proj2: "GroupHom"


def direct_product(G: FiniteGroup, H: FiniteGroup) -> ProductGroup:
    """Direct product on pairs encoded as ``g * |H| + h``."""
    n, m = G.order, H.order
    table = np.zeros((n * m, n * m), dtype=np.int64)
    for g1 in range(n):
        for h1 in range(m):
            row = G.table[g1][:, None] * m + H.table[h1][None, :]
            table[g1 * m + h1] = row.reshape(-1)
    name = None
    if G.name and H.name:
        name = f"{G.name}x{H.name}"
    P = FiniteGroup(table, name=name)
    inj1 = GroupHom(G, P, [g * m for g in range(n)])
    inj2 = GroupHom(H, P, list(range(m)))
    proj1 = GroupHom(P, G, [x // m for x in range(n * m)])
    proj2 = GroupHom(P, H, [x % m for x in range(n * m)])
    return ProductGroup(P, inj1, inj2, proj1, proj2)


def group_from_permutations(degree: int, generators: Sequence[Sequence[int]],
                            name: Optional[str] = None,
                            max_order: int = 10_000) -> FiniteGroup:
    """Close permutation generators under composition and build the table.

    Elements are the closure's permutations sorted lexicographically, which
    puts the identity at index 0.  Product convention: ``(p*q)(x) = p(q(x))``.
    """
    perms = {tuple(range(degree))}
    for gen in generators:
        p = tuple(int(x) for x in gen)
        if sorted(p) != list(range(degree)):
            raise GroupError("NotClosed", f"generator {gen} is not a permutation of 0..{degree - 1}")
        perms.add(p)
    frontier = list(perms)
    while frontier:
        fresh = []
        for p in frontier:
            for q in list(perms):
                for r in (tuple(p[q[x]] for x in range(degree)),
                          tuple(q[p[x]] for x in range(degree))):
                    if r not in perms:
                        perms.add(r)
                        fresh.append(r)
                        if len(perms) > max_order:
                            raise GroupError("OrderTooLarge",
                                             f"closure exceeds {max_order} permutations")
        frontier = fresh
    ordered = sorted(perms)
    index = {p: i for i, p in enumerate(ordered)}
    n = len(ordered)
    table = [[index[tuple(ordered[i][ordered[j][x]] for x in range(degree))]
              for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=name)


class GroupHom:
    """A homomorphism stored as ``image[x]`` over the domain's elements."""

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup,
                 image: Sequence[int], check: bool = True):
        img = np.asarray(image, dtype=np.int64)
        if img.shape != (domain.order,):
            raise GroupError("LengthMismatch",
                             f"map has length {img.shape}, domain order {domain.order}")
        if check and not is_homomorphism(img, domain, codomain):
            raise GroupError("NotHomomorphism", "map does not respect multiplication")
        self.domain = domain
        self.codomain = codomain
        self.image = img
        self.image.setflags(write=False)

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def is_injective(self) -> bool:
        return len(set(self.image.tolist())) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.image.tolist())) == self.codomain.order

    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_injective()

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.codomain.order != self.domain.order:
            raise GroupError("LengthMismatch", "composition domains do not match")
        return GroupHom(other.domain, self.codomain, self.image[other.image], check=False)

    def inverse(self) -> "GroupHom":
        if not self.is_bijective():
            raise GroupError("NotInjective", "only bijective homs invert")
        inv = np.zeros(self.domain.order, dtype=np.int64)
        inv[self.image] = np.arange(self.domain.order)
        return GroupHom(self.codomain, self.domain, inv, check=False)

    def kernel_elements(self) -> List[int]:
        return [x for x in self.domain.elements() if self.image[x] == 0]

    def image_elements(self) -> List[int]:
        return sorted(set(self.image.tolist()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupHom)
                and np.array_equal(self.image, other.image)
                and self.domain == other.domain
                and self.codomain == other.codomain)

    def __hash__(self):
        return hash(self.image.tobytes())

    def __repr__(self):
        return f"GroupHom({list(self.image)})"


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, list(range(G.order)), check=False)


def is_homomorphism(image: Sequence[int], G: FiniteGroup, H: FiniteGroup) -> bool:
    """True iff image[x*y] == image[x]*image[y] for all pairs."""
    img = np.asarray(image, dtype=np.int64)
    if img.shape != (G.order,):
        raise GroupError("LengthMismatch", f"map has length {img.shape}, expected {G.order}")
    if img.min() < 0 or img.max() >= H.order:
        raise GroupError("LengthMismatch", "image entry out of codomain range")
    return bool(np.array_equal(img[G.table], H.table[img[:, None], img[None, :]]))


def subgroup_closure(G: FiniteGroup, generators: Iterable[int]) -> List[int]:
    """Smallest subgroup containing the generators, as a sorted element list."""
    elems = {0}
    frontier = []
    for g in generators:
        g = int(g)
        if not 0 <= g < G.order:
            raise GroupError("NotClosed", f"generator {g} out of range")
        if g not in elems:
            elems.add(g)
            frontier.append(g)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(elems):
                for c in (G.mul(a, b), G.mul(b, a), G.inv(a)):
                    if c not in elems:
                        elems.add(c)
                        fresh.append(c)
        frontier = fresh
    return sorted(elems)


def is_subgroup(G: FiniteGroup, elements: Sequence[int]) -> bool:
    elems = set(int(x) for x in elements)
    if 0 not in elems:
        return False
    return all(G.mul(a, b) in elems for a in elems for b in elems)


def is_normal(G: FiniteGroup, elements: Sequence[int]) -> bool:
    """Check g*k*g^-1 stays in the subgroup for all g, k."""
    elems = set(int(x) for x in elements)
    if not is_subgroup(G, elems):
        raise GroupError("NotSubgroup", "element set is not a subgroup")
    return all(G.conj(k, g) in elems for g in G.elements() for k in elems)


class Quotient(NamedTuple):
    group: FiniteGroup
    projection: GroupHom
    section: np.ndarray


def quotient_group(G: FiniteGroup, normal_elements: Sequence[int]) -> Quotient:
    """Quotient by a normal subgroup.

    Cosets are indexed by their minimum element, sorted ascending, so the
    identity coset lands at index 0 and the section is normalized.
    """
    N = sorted(set(int(x) for x in normal_elements))
    if not is_normal(G, N):
        raise GroupError("NotNormal", "subgroup is not normal")
    coset_min = np.full(G.order, -1, dtype=np.int64)
    for g in G.elements():
        if coset_min[g] >= 0:
            continue
        members = sorted(G.mul(g, x) for x in N)
        rep = members[0]
        for m in members:
            coset_min[m] = rep
    reps = sorted(set(coset_min.tolist()))
    rep_index = {r: i for i, r in enumerate(reps)}
    proj = np.asarray([rep_index[coset_min[g]] for g in G.elements()], dtype=np.int64)
    q = len(reps)
    table = [[int(proj[G.mul(reps[i], reps[j])]) for j in range(q)] for i in range(q)]
    Q = FiniteGroup(table, name=f"{G.name}/N" if G.name else None)
    return Quotient(Q, GroupHom(G, Q, proj), np.asarray(reps, dtype=np.int64))


def _element_order_table(G: FiniteGroup) -> List[int]:
    return [G.element_order(x) for x in G.elements()]


def _generating_sequence(G: FiniteGroup) -> List[int]:
    gens: List[int] = []
    have = {0}
    while len(have) < G.order:
        g = min(x for x in G.elements() if x not in have)
        gens.append(g)
        have = set(subgroup_closure(G, gens))
    return gens


def _saturate_partial(G: FiniteGroup, H: FiniteGroup, partial: dict) -> Optional[dict]:
    """Extend a partial map multiplicatively; None on conflict or collision."""
    known = dict(partial)
    used = set(known.values())
    if len(used) != len(known):
        return None
    frontier = list(known)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(known):
                for x, y in ((a, b), (b, a)):
                    g = G.mul(x, y)
                    img = H.mul(known[x], known[y])
                    old = known.get(g)
                    if old is None:
                        if img in used:
                            return None
                        known[g] = img
                        used.add(img)
                        fresh.append(g)
                    elif old != img:
                        return None
        frontier = fresh
    return known


def _isomorphism_search(G: FiniteGroup, H: FiniteGroup, first_only: bool) -> List[GroupHom]:
    if G.order != H.order:
        return []
    if G.order <= 8:
        # Full bijection scan; the hom check is vectorized so 7! candidates
        # stay cheap.
        found = []
        for perm in itertools.permutations(range(1, G.order)):
            img = np.asarray((0,) + perm, dtype=np.int64)
            if np.array_equal(img[G.table], H.table[img[:, None], img[None, :]]):
                found.append(GroupHom(G, H, img, check=False))
                if first_only:
                    return found
        return found

    orders_G = _element_order_table(G)
    orders_H = _element_order_table(H)
    by_order: dict = {}
    for y, o in enumerate(orders_H):
        by_order.setdefault(o, []).append(y)
    gens = _generating_sequence(G)
    results: List[GroupHom] = []

    def recurse(i: int, partial: dict):
        if results and first_only:
            return
        if i == len(gens):
            if len(partial) == G.order:
                img = np.zeros(G.order, dtype=np.int64)
                for g, y in partial.items():
                    img[g] = y
                results.append(GroupHom(G, H, img, check=False))
            return
        g = gens[i]
        for y in by_order.get(orders_G[g], []):
            ext = _saturate_partial(G, H, {**partial, g: y})
            if ext is not None:
                recurse(i + 1, ext)

    recurse(0, {0: 0})
    return results


def automorphism_group(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> List[GroupHom]:
    """All automorphisms, sorted by image array.

    Orders up to 8 use a full bijection scan; larger groups use
    generator-image backtracking with multiplicative saturation.
    """
    if G.order > max_order:
        raise GroupError("OrderTooLarge",
                         f"order {G.order} exceeds enumeration bound {max_order}")
    auts = _isomorphism_search(G, G, first_only=False)
    auts.sort(key=lambda h: tuple(h.image.tolist()))
    return auts


def find_isomorphism(G: FiniteGroup, H: FiniteGroup,
                     max_order: int = DEFAULT_MAX_ORDER) -> Optional[GroupHom]:
    """Some isomorphism G -> H, or None.  Brute force at desk scale."""
    if G.order > max_order or H.order > max_order:
        raise GroupError("OrderTooLarge", "order exceeds enumeration bound")
    found = _isomorphism_search(G, H, first_only=True)
    return found[0] if found else None


def all_isomorphisms(G: FiniteGroup, H: FiniteGroup,
                     max_order: int = DEFAULT_MAX_ORDER) -> List[GroupHom]:
    if G.order > max_order or H.order > max_order:
        raise GroupError("OrderTooLarge", "order exceeds enumeration bound")
    found = _isomorphism_search(G, H, first_only=False)
    found.sort(key=lambda h: tuple(h.image.tolist()))
    return found
