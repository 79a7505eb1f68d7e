"""Relative Rota-Baxter groups on finite groups.

A structure (H, G, phi, R): phi is an action homomorphism G -> Aut(H) stored
as one permutation of H per element of G, and R: H -> G satisfies

    R(h1) * R(h2) == R(h1 * phi_{R(h1)}(h2))   for all h1, h2.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .groups import (
    DEFAULT_MAX_ORDER,
    FiniteGroup,
    GroupError,
    GroupHom,
    Quotient,
    automorphism_group,
    direct_product,
    is_homomorphism,
    is_normal,
    is_subgroup,
    quotient_group,
    subgroup_closure,
)


class RRBError(ValueError):
    def __init__(self, code: str, message: str, witness: tuple = ()):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.witness = witness


class RRBGroup:
    """Validated quadruple (H, G, phi, R)."""

    def __init__(self, H: FiniteGroup, G: FiniteGroup,
                 phi: Sequence[Sequence[int]], R: Sequence[int],
                 name: Optional[str] = None):
        phi_arr = np.asarray(phi, dtype=np.int64)
        R_arr = np.asarray(R, dtype=np.int64)
        if phi_arr.shape != (G.order, H.order):
            raise RRBError("PhiNotAction",
                           f"phi has shape {phi_arr.shape}, expected {(G.order, H.order)}")
        if R_arr.shape != (H.order,):
            raise RRBError("RRBAxiomFails", f"R has length {R_arr.shape}, expected {H.order}")
        if R_arr.min() < 0 or R_arr.max() >= G.order:
            raise RRBError("RRBAxiomFails", "R entry out of range")
        for g in G.elements():
            row = phi_arr[g]
            if sorted(row.tolist()) != list(range(H.order)) or not is_homomorphism(row, H, H):
                raise RRBError("PhiNotAutomorphism",
                               f"phi[{g}] is not an automorphism of H", (g,))
        if not np.array_equal(phi_arr[0], np.arange(H.order)):
            raise RRBError("PhiNotAction", "phi[identity] is not the identity map", (0, 0))
        for g1 in G.elements():
            for g2 in G.elements():
                if not np.array_equal(phi_arr[G.mul(g1, g2)], phi_arr[g1][phi_arr[g2]]):
                    raise RRBError("PhiNotAction",
                                   f"phi[{g1}*{g2}] != phi[{g1}] o phi[{g2}]", (g1, g2))
        for h1 in H.elements():
            lhs_g = int(R_arr[h1])
            for h2 in H.elements():
                lhs = G.mul(lhs_g, int(R_arr[h2]))
                rhs = int(R_arr[H.mul(h1, int(phi_arr[lhs_g, h2]))])
                if lhs != rhs:
                    raise RRBError("RRBAxiomFails",
                                   f"operator axiom fails at (h1,h2)=({h1},{h2})", (h1, h2))
        if R_arr[0] != 0:
            # Forced by the axiom at (0, 0); reaching this means H or G is broken.
            raise RRBError("RRBAxiomFails", "R(identity) != identity", (0, 0))
        self.H = H
        self.G = G
        self.phi = phi_arr
        self.phi.setflags(write=False)
        self.R = R_arr
        self.R.setflags(write=False)
        self.name = name

    def act(self, g: int, h: int) -> int:
        return int(self.phi[g, h])

    def __eq__(self, other) -> bool:
        return (isinstance(other, RRBGroup)
                and self.H == other.H and self.G == other.G
                and np.array_equal(self.phi, other.phi)
                and np.array_equal(self.R, other.R))

    def __hash__(self):
        return hash((self.H, self.G, self.phi.tobytes(), self.R.tobytes()))

    def __repr__(self):
        label = self.name or f"|H|={self.H.order},|G|={self.G.order}"
        return f"RRBGroup({label})"


def validate_rrb(H: FiniteGroup, G: FiniteGroup, phi: Sequence[Sequence[int]],
                 R: Sequence[int], name: Optional[str] = None) -> RRBGroup:
    return RRBGroup(H, G, phi, R, name=name)


def trivial_rrb(H: FiniteGroup, G: FiniteGroup, R: Optional[Sequence[int]] = None,
                name: Optional[str] = None) -> RRBGroup:
    """Trivial action; R defaults to the zero map and must be a homomorphism."""
    phi = [list(range(H.order)) for _ in G.elements()]
    if R is None:
        R = [0] * H.order
    return RRBGroup(H, G, phi, R, name=name)


def one_point_rrb() -> RRBGroup:
    return trivial_rrb(FiniteGroup([[0]]), FiniteGroup([[0]]), name="1")


def is_trivial(rrb: RRBGroup) -> bool:
    """True iff the action homomorphism is trivial."""
    ident = np.arange(rrb.H.order)
    return all(np.array_equal(rrb.phi[g], ident) for g in rrb.G.elements())


def is_bijective(rrb: RRBGroup) -> bool:
    """True iff the operator R is a bijection H -> G."""
    return (rrb.H.order == rrb.G.order
            and len(set(rrb.R.tolist())) == rrb.H.order)


def descended_operation(rrb: RRBGroup) -> FiniteGroup:
    """The group H with h1 o h2 = h1 * phi_{R(h1)}(h2); R is a hom from it."""
    H = rrb.H
    table = [[H.mul(h1, rrb.act(int(rrb.R[h1]), h2)) for h2 in H.elements()]
             for h1 in H.elements()]
    try:
        desc = FiniteGroup(table, name=f"{H.name}^o" if H.name else None)
    except GroupError as exc:  # pragma: no cover - indicates an upstream bug
        raise RRBError("InternalError", f"descended operation is not a group: {exc}")
    if not is_homomorphism(rrb.R, desc, rrb.G):  # pragma: no cover
        raise RRBError("InternalError", "R is not a homomorphism from the descended group")
    return desc


def circle_op(rrb: RRBGroup, h1: int, h2: int) -> int:
    """h1 o h2 = h1 * phi_{R(h1)}(h2)."""
    return rrb.H.mul(h1, rrb.act(int(rrb.R[h1]), h2))


class RRBMorphism:
    """Pair of group homs (psi: H1->H2, eta: G1->G2) compatible with R and phi."""

    def __init__(self, domain: RRBGroup, codomain: RRBGroup,
                 psi: GroupHom, eta: GroupHom):
        if psi.domain != domain.H or psi.codomain != codomain.H:
            raise RRBError("LengthMismatch", "psi does not map H1 -> H2")
        if eta.domain != domain.G or eta.codomain != codomain.G:
            raise RRBError("LengthMismatch", "eta does not map G1 -> G2")
        for h in domain.H.elements():
            if eta(int(domain.R[h])) != int(codomain.R[psi(h)]):
                raise RRBError("EtaRNeqSPsi",
                               f"eta(R(h)) != R'(psi(h)) at h={h}", (h,))
        for g in domain.G.elements():
            for h in domain.H.elements():
                if psi(domain.act(g, h)) != codomain.act(eta(g), psi(h)):
                    raise RRBError("EquivarianceFails",
                                   f"psi(phi_g(h)) != phi'_{{eta(g)}}(psi(h)) at (g,h)=({g},{h})",
                                   (g, h))
        self.domain = domain
        self.codomain = codomain
        self.psi = psi
        self.eta = eta

    def is_bijective(self) -> bool:
        return self.psi.is_bijective() and self.eta.is_bijective()

    def compose(self, other: "RRBMorphism") -> "RRBMorphism":
        """self after other."""
        return RRBMorphism(other.domain, self.codomain,
                           self.psi.compose(other.psi), self.eta.compose(other.eta))

    def inverse(self) -> "RRBMorphism":
        return RRBMorphism(self.codomain, self.domain,
                           self.psi.inverse(), self.eta.inverse())

    def __eq__(self, other) -> bool:
        return (isinstance(other, RRBMorphism)
                and self.domain == other.domain and self.codomain == other.codomain
                and self.psi == other.psi and self.eta == other.eta)

    def __hash__(self):
        return hash((self.psi, self.eta))

    def __repr__(self):
        return f"RRBMorphism(psi={list(self.psi.image)}, eta={list(self.eta.image)})"


def validate_morphism(rrb1: RRBGroup, rrb2: RRBGroup,
                      psi: Sequence[int], eta: Sequence[int]) -> RRBMorphism:
    return RRBMorphism(rrb1, rrb2,
                       GroupHom(rrb1.H, rrb2.H, psi), GroupHom(rrb1.G, rrb2.G, eta))


def identity_morphism(rrb: RRBGroup) -> RRBMorphism:
    return validate_morphism(rrb, rrb, list(range(rrb.H.order)), list(range(rrb.G.order)))


class RRBIdeal(NamedTuple):
    K_elements: Tuple[int, ...]
    L_elements: Tuple[int, ...]


def is_subrrb(rrb: RRBGroup, K_set: Sequence[int], L_set: Sequence[int]) -> Tuple[bool, Optional[str]]:
    """Sub-structure check: phi_l(K) <= K for l in L, and R(K) <= L."""
    K = set(int(x) for x in K_set)
    L = set(int(x) for x in L_set)
    if not is_subgroup(rrb.H, K):
        raise RRBError("NotSubgroup", "K is not a subgroup of H")
    if not is_subgroup(rrb.G, L):
        raise RRBError("NotSubgroup", "L is not a subgroup of G")
    for l in L:
        for k in K:
            if rrb.act(l, k) not in K:
                return False, f"phi_{l}({k}) leaves K"
    for k in K:
        if int(rrb.R[k]) not in L:
            return False, f"R({k}) leaves L"
    return True, None


def is_ideal(rrb: RRBGroup, K_set: Sequence[int], L_set: Sequence[int]) -> Tuple[bool, Optional[str]]:
    """Sub-structure with both parts normal, K stable under all of phi, and
    phi_l(h) * h^-1 in K for every h in H, l in L."""
    ok, why = is_subrrb(rrb, K_set, L_set)
    if not ok:
        return ok, why
    K = set(int(x) for x in K_set)
    L = set(int(x) for x in L_set)
    if not is_normal(rrb.H, sorted(K)):
        return False, "K is not normal in H"
    if not is_normal(rrb.G, sorted(L)):
        return False, "L is not normal in G"
    for g in rrb.G.elements():
        for k in K:
            if rrb.act(g, k) not in K:
                return False, f"phi_{g}({k}) leaves K"
    for l in L:
        for h in rrb.H.elements():
            if rrb.H.mul(rrb.act(l, h), rrb.H.inv(h)) not in K:
                return False, f"phi_{l}({h}) * {h}^-1 not in K"
    return True, None


def morphism_kernel(m: RRBMorphism) -> RRBIdeal:
    ideal = RRBIdeal(tuple(m.psi.kernel_elements()), tuple(m.eta.kernel_elements()))
    ok, why = is_ideal(m.domain, ideal.K_elements, ideal.L_elements)
    if not ok:  # pragma: no cover - theorem
        raise RRBError("InternalError", f"morphism kernel is not an ideal: {why}")
    return ideal


def morphism_image(m: RRBMorphism) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    img = (tuple(m.psi.image_elements()), tuple(m.eta.image_elements()))
    ok, why = is_subrrb(m.codomain, img[0], img[1])
    if not ok:  # pragma: no cover - theorem
        raise RRBError("InternalError", f"morphism image is not a sub-structure: {why}")
    return img


class Restriction(NamedTuple):
    rrb: RRBGroup
    inclusion: RRBMorphism


def restrict(rrb: RRBGroup, K_set: Sequence[int], L_set: Sequence[int],
             name: Optional[str] = None) -> Restriction:
    """The sub-structure on (K, L) reindexed to its own element numbering."""
    ok, why = is_subrrb(rrb, K_set, L_set)
    if not ok:
        raise RRBError("NotSubRRB", why or "not a sub-structure")
    K = sorted(set(int(x) for x in K_set))
    L = sorted(set(int(x) for x in L_set))
    k_index = {x: i for i, x in enumerate(K)}
    l_index = {x: i for i, x in enumerate(L)}
    KH = FiniteGroup([[k_index[rrb.H.mul(a, b)] for b in K] for a in K])
    LG = FiniteGroup([[l_index[rrb.G.mul(a, b)] for b in L] for a in L])
    phi = [[k_index[rrb.act(l, k)] for k in K] for l in L]
    R = [l_index[int(rrb.R[k])] for k in K]
    sub = RRBGroup(KH, LG, phi, R, name=name)
    incl = validate_morphism(sub, rrb, K, L)
    return Restriction(sub, incl)


class RRBQuotient(NamedTuple):
    rrb: RRBGroup
    projection: RRBMorphism
    quotient_H: Quotient
    quotient_G: Quotient


def quotient_rrb(rrb: RRBGroup, ideal: RRBIdeal) -> RRBQuotient:
    """Quotient structure on (H/K, G/L) with induced action and operator."""
    ok, why = is_ideal(rrb, ideal.K_elements, ideal.L_elements)
    if not ok:
        raise RRBError("NotIdeal", why or "not an ideal")
    qH = quotient_group(rrb.H, ideal.K_elements)
    qG = quotient_group(rrb.G, ideal.L_elements)
    projH, projG = qH.projection, qG.projection
    nH, nG = qH.group.order, qG.group.order
    phi_bar = [[int(projH(rrb.act(int(qG.section[gq]), int(qH.section[hq]))))
                for hq in range(nH)] for gq in range(nG)]
    R_bar = [int(projG(int(rrb.R[int(qH.section[hq])]))) for hq in range(nH)]
    # Induced maps must not depend on coset representatives.
    for gq in range(nG):
        for g in rrb.G.elements():
            if projG(g) != gq:
                continue
            for h in rrb.H.elements():
                if phi_bar[gq][projH(h)] != projH(rrb.act(g, h)):
                    raise RRBError("WellDefinednessFailure",
                                   f"induced action ill-defined at ({g},{h})", (g, h))
    for h in rrb.H.elements():
        if R_bar[projH(h)] != projG(int(rrb.R[h])):
            raise RRBError("WellDefinednessFailure",
                           f"induced operator ill-defined at {h}", (h,))
    quot = RRBGroup(qH.group, qG.group, phi_bar, R_bar)
    proj = RRBMorphism(rrb, quot, projH, projG)
    return RRBQuotient(quot, proj, qH, qG)


def center(rrb: RRBGroup) -> RRBIdeal:
    """Central ideal: commuting, action-fixed elements whose operator value
    acts trivially, paired with the kernel of the action homomorphism."""
    H, G = rrb.H, rrb.G
    ident = np.arange(H.order)
    L = tuple(g for g in G.elements() if np.array_equal(rrb.phi[g], ident))
    K = []
    for h in H.elements():
        central = all(H.mul(h, x) == H.mul(x, h) for x in H.elements())
        fixed = all(rrb.act(g, h) == h for g in G.elements())
        acts_trivially = np.array_equal(rrb.phi[int(rrb.R[h])], ident)
        if central and fixed and acts_trivially:
            K.append(h)
    ideal = RRBIdeal(tuple(K), L)
    ok, why = is_ideal(rrb, ideal.K_elements, ideal.L_elements)
    if not ok:  # pragma: no cover - theorem
        raise RRBError("InternalError", f"center is not an ideal: {why}")
    return ideal


def direct_product_rrb(rrb1: RRBGroup, rrb2: RRBGroup,
                       name: Optional[str] = None) -> RRBGroup:
    """Componentwise action and operator on H1 x H2 and G1 x G2."""
    pH = direct_product(rrb1.H, rrb2.H)
    pG = direct_product(rrb1.G, rrb2.G)
    n2, m2 = rrb1.H.order, rrb2.H.order
    phi = np.zeros((pG.group.order, pH.group.order), dtype=np.int64)
    for g1 in rrb1.G.elements():
        for g2 in rrb2.G.elements():
            row = rrb1.phi[g1][:, None] * m2 + rrb2.phi[g2][None, :]
            phi[g1 * rrb2.G.order + g2] = row.reshape(-1)
    R = np.zeros(pH.group.order, dtype=np.int64)
    for h1 in rrb1.H.elements():
        for h2 in rrb2.H.elements():
            R[h1 * m2 + h2] = rrb1.R[h1] * rrb2.G.order + rrb2.R[h2]
    return RRBGroup(pH.group, pG.group, phi, R, name=name)


def rrb_automorphism_group(rrb: RRBGroup,
                           max_order: int = DEFAULT_MAX_ORDER) -> List[RRBMorphism]:
    """All pairs in Aut(H) x Aut(G) compatible with phi and R, sorted."""
    if rrb.H.order > max_order or rrb.G.order > max_order:
        raise RRBError("OrderTooLarge", "component order exceeds enumeration bound")
    auts_H = automorphism_group(rrb.H, max_order)
    auts_G = automorphism_group(rrb.G, max_order)
    out: List[RRBMorphism] = []
    for psi in auts_H:
        # R-compatibility only constrains psi and eta together, but
        # equivariance can reject (psi, eta) cheaply inside the constructor.
        for eta in auts_G:
            try:
                out.append(RRBMorphism(rrb, rrb, psi, eta))
            except RRBError:
                continue
    out.sort(key=lambda m: (tuple(m.psi.image.tolist()), tuple(m.eta.image.tolist())))
    return out


def enumerate_rrb_operators(H: FiniteGroup, G: FiniteGroup,
                            phi: Sequence[Sequence[int]],
                            budget: int = 10 ** 6) -> List[np.ndarray]:
    """All operators R for the given action, by pruned backtracking.

    Fixes R(0) = 0 and fills values in element order, checking every axiom
    instance whose three participating values are already assigned.  The
    budget caps axiom evaluations.
    """
    phi_arr = np.asarray(phi, dtype=np.int64)
    probe = RRBGroup(H, G, phi_arr, [0] * H.order)  # validates phi, R=0 always works
    del probe
    n = H.order
    R = np.full(n, -1, dtype=np.int64)
    R[0] = 0
    results: List[np.ndarray] = []
    spent = 0

    def check_pair(h1: int, h2: int) -> Optional[bool]:
        """True/False when decidable with current assignments, else None."""
        g1 = R[h1]
        if g1 < 0 or R[h2] < 0:
            return None
        target = H.mul(h1, int(phi_arr[g1, h2]))
        if R[target] < 0:
            return None
        return G.mul(int(g1), int(R[h2])) == int(R[target])

    def consistent() -> bool:
        # Re-scan every assigned pair: a fresh assignment can decide an axiom
        # instance in which it appears only as the right-hand-side target.
        nonlocal spent
        for h1 in range(n):
            if R[h1] < 0:
                continue
            for h2 in range(n):
                if R[h2] < 0:
                    continue
                spent += 1
                if spent > budget:
                    raise RRBError("BudgetExceeded",
                                   f"operator search exceeded budget {budget}")
                if check_pair(h1, h2) is False:
                    return False
        return True

    def recurse(h: int):
        if h == n:
            results.append(R.copy())
            return
        for g in G.elements():
            R[h] = g
            if consistent():
                recurse(h + 1)
            R[h] = -1

    if n == 1:
        results.append(R.copy())
    else:
        recurse(1)
    results.sort(key=lambda r: tuple(r.tolist()))
    return results
