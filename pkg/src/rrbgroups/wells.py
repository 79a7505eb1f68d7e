"""Automorphism lifting for abelian extensions.

Given an abelian extension E with kernel datum (K, L) and quotient datum
(A, B), automorphism pairs of quotient and kernel act on factor systems by

    tau1 -> theta1^-1 o tau1 o (psi1 x psi1),   rho -> theta1^-1 o rho o (psi1 x psi2),
    tau2 -> theta2^-1 o tau2 o (psi2 x psi2),   chi -> theta2^-1 o chi o psi1.

The obstruction map sends a compatible pair c to [fs^c] - [fs]; its kernel is
exactly the set of pairs induced by automorphisms of the total structure that
normalize the kernel.  The sign convention follows from the faithful
translation action: [E(fs)]^c = [E(fs^c)] and [E(fs)]^[t] = [E(fs + t)].
"""

from __future__ import annotations

from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from .cohomology import CohomologyClass, CochainComplex, cochain_complex
from .extensions import Extension, canonical_section, extract_actions, \
    extract_factor_system
from .groups import DEFAULT_MAX_ORDER, GroupHom
from .modules import (
    ActionQuadruple,
    FactorSystem,
    OneCochain,
    RRBModule,
    add_factor_systems,
    negate_factor_system,
    twisted_action,
)
from .rrb import RRBError, RRBMorphism, rrb_automorphism_group


class CompatiblePair(NamedTuple):
    """(psi, theta): automorphisms of the quotient and kernel data."""

    psi: RRBMorphism
    theta: RRBMorphism

    def compose(self, other: "CompatiblePair") -> "CompatiblePair":
        """self after other; matches the right action on factor systems."""
        return CompatiblePair(self.psi.compose(other.psi),
                              self.theta.compose(other.theta))

    def inverse(self) -> "CompatiblePair":
        return CompatiblePair(self.psi.inverse(), self.theta.inverse())

    def is_identity(self) -> bool:
        return (np.array_equal(self.psi.psi.image, np.arange(len(self.psi.psi.image)))
                and np.array_equal(self.psi.eta.image, np.arange(len(self.psi.eta.image)))
                and np.array_equal(self.theta.psi.image, np.arange(len(self.theta.psi.image)))
                and np.array_equal(self.theta.eta.image, np.arange(len(self.theta.eta.image))))


def identity_pair(module: RRBModule) -> CompatiblePair:
    from .rrb import identity_morphism

    return CompatiblePair(identity_morphism(module.quotient),
                          identity_morphism(module.kernel))


def pair_is_compatible(module: RRBModule, pair: CompatiblePair) -> bool:
    """The four stabilizer conditions tying (psi, theta) to (nu, mu, sigma, f)."""
    psi1, psi2 = pair.psi.psi.image, pair.psi.eta.image
    th1, th2 = pair.theta.psi.image, pair.theta.eta.image
    nu, mu, sigma, f = (module.action.nu, module.action.mu,
                        module.action.sigma, module.action.f)
    for b in module.B.elements():
        if not np.array_equal(th1[nu[b]], nu[psi2[b]][th1]):
            return False
        if not np.array_equal(th2[sigma[b]], sigma[psi2[b]][th2]):
            return False
    for a in module.A.elements():
        if not np.array_equal(th1[mu[a]], mu[psi1[a]][th1]):
            return False
    for l in module.L.elements():
        for a in module.A.elements():
            if int(th1[f[l, a]]) != int(f[th2[l], psi1[a]]):
                return False
    return True


def compatible_pairs(module: RRBModule,
                     max_order: int = DEFAULT_MAX_ORDER) -> List[CompatiblePair]:
    """All compatible pairs, sorted; checked to be closed under the group ops."""
    pairs = [CompatiblePair(psi, theta)
             for psi in rrb_automorphism_group(module.quotient, max_order)
             for theta in rrb_automorphism_group(module.kernel, max_order)
             if pair_is_compatible(module, CompatiblePair(psi, theta))]
    keys = {_pair_key(p) for p in pairs}
    for p in pairs:
        if _pair_key(p.inverse()) not in keys:  # pragma: no cover - theorem
            raise RRBError("InternalError", "compatible pairs not closed under inverse")
        for q in pairs:
            if _pair_key(p.compose(q)) not in keys:  # pragma: no cover
                raise RRBError("InternalError", "compatible pairs not closed under product")
    pairs.sort(key=_pair_key)
    return pairs


def _pair_key(pair: CompatiblePair) -> tuple:
    return (tuple(pair.psi.psi.image.tolist()), tuple(pair.psi.eta.image.tolist()),
            tuple(pair.theta.psi.image.tolist()), tuple(pair.theta.eta.image.tolist()))


def act_on_factor_system(pair: CompatiblePair, fs: FactorSystem,
                         module: RRBModule, check: bool = True) -> FactorSystem:
    """Twisted factor system fs^(psi, theta)."""
    if check and not pair_is_compatible(module, pair):
        raise RRBError("PairNotCompatible", "pair does not stabilize the action")
    psi1, psi2 = pair.psi.psi.image, pair.psi.eta.image
    th1inv = pair.theta.psi.inverse().image
    th2inv = pair.theta.eta.inverse().image
    nA, nB = module.A.order, module.B.order
    tau1 = [[int(th1inv[fs.tau1[psi1[a1], psi1[a2]]]) for a2 in range(nA)]
            for a1 in range(nA)]
    tau2 = [[int(th2inv[fs.tau2[psi2[b1], psi2[b2]]]) for b2 in range(nB)]
            for b1 in range(nB)]
    rho = [[int(th1inv[fs.rho[psi1[a], psi2[b]]]) for b in range(nB)] for a in range(nA)]
    chi = [int(th2inv[fs.chi[psi1[a]]]) for a in range(nA)]
    return FactorSystem(tau1, tau2, rho, chi)


def act_on_class(pair: CompatiblePair, cls: CohomologyClass,
                 complex_: Optional[CochainComplex] = None) -> CohomologyClass:
    """[fs]^pair = [fs^pair]; independent of the representative."""
    cx = complex_ if complex_ is not None else cls.complex
    if cx is not cls.complex:
        raise RRBError("ModuleMismatch", "class belongs to a different module")
    rep = cx.class_representative(cls)
    return cx.class_of(act_on_factor_system(pair, rep, cx.module))


def gamma_act(pair: CompatiblePair, h_class: CohomologyClass,
              ext_class: CohomologyClass) -> CohomologyClass:
    """Semidirect action: first the pair, then translation by h_class."""
    return act_on_class(pair, ext_class) + h_class


class WellsContext:
    """Cached per-extension data for the lifting computations."""

    def __init__(self, ext: Extension, max_order: int = DEFAULT_MAX_ORDER):
        if not ext.is_abelian:
            raise RRBError("NotAbelianExtension", "lifting theory needs an abelian kernel datum")
        self.ext = ext
        self.section = canonical_section(ext)
        self.module = RRBModule(ext.quotient, ext.kernel, extract_actions(ext, self.section))
        self.complex = cochain_complex(self.module)
        self.fs = extract_factor_system(ext, self.section)
        self.base_class = self.complex.class_of(self.fs)
        self.max_order = max_order

    def compatible(self) -> List[CompatiblePair]:
        if not hasattr(self, "_compatible"):
            self._compatible = compatible_pairs(self.module, self.max_order)
        return self._compatible

    def all_pairs(self) -> List[CompatiblePair]:
        if not hasattr(self, "_all_pairs"):
            self._all_pairs = [
                CompatiblePair(psi, theta)
                for psi in rrb_automorphism_group(self.module.quotient, self.max_order)
                for theta in rrb_automorphism_group(self.module.kernel, self.max_order)
            ]
        return self._all_pairs


def wells_map(ext: Extension, pair: CompatiblePair,
              context: Optional[WellsContext] = None) -> CohomologyClass:
    """Obstruction class [fs^pair] - [fs] of a compatible pair."""
    ctx = context if context is not None else WellsContext(ext)
    if not pair_is_compatible(ctx.module, pair):
        raise RRBError("PairNotCompatible", "pair does not stabilize the action")
    twisted = act_on_factor_system(pair, ctx.fs, ctx.module, check=False)
    return ctx.complex.class_of(twisted) - ctx.base_class


def aut_K_H(ext: Extension, max_order: int = DEFAULT_MAX_ORDER) -> List[RRBMorphism]:
    """Automorphisms of the total structure carrying the kernel into itself."""
    K_img = set(ext.incl.psi.image_elements())
    L_img = set(ext.incl.eta.image_elements())
    out = []
    for gamma in rrb_automorphism_group(ext.total, max_order):
        if all(int(gamma.psi(h)) in K_img for h in K_img) and \
           all(int(gamma.eta(g)) in L_img for g in L_img):
            out.append(gamma)
    return out


def restrict_and_induce(gamma: RRBMorphism, ext: Extension,
                        context: Optional[WellsContext] = None) -> CompatiblePair:
    """(induced automorphism of the quotient, restriction to the kernel)."""
    ctx = context if context is not None else WellsContext(ext)
    sec = ctx.section
    kernel, quotient = ext.kernel, ext.quotient
    theta1 = [ext.k_index(gamma.psi(ext.incl.psi(k))) for k in kernel.H.elements()]
    theta2 = [ext.l_index(gamma.eta(ext.incl.eta(l))) for l in kernel.G.elements()]
    theta = RRBMorphism(kernel, kernel,
                        GroupHom(kernel.H, kernel.H, theta1),
                        GroupHom(kernel.G, kernel.G, theta2))
    psi1 = [ext.proj.psi(gamma.psi(int(sec.s_H[a]))) for a in quotient.H.elements()]
    psi2 = [ext.proj.eta(gamma.eta(int(sec.s_G[b]))) for b in quotient.G.elements()]
    psi = RRBMorphism(quotient, quotient,
                      GroupHom(quotient.H, quotient.H, psi1),
                      GroupHom(quotient.G, quotient.G, psi2))
    pair = CompatiblePair(psi, theta)
    if not (psi.is_bijective() and theta.is_bijective()):  # pragma: no cover
        raise RRBError("InternalError", "induced pair is not bijective")
    if not pair_is_compatible(ctx.module, pair):  # pragma: no cover - theorem
        raise RRBError("InternalError", "induced pair fails the stabilizer conditions")
    return pair


def aut_AK_H(ext: Extension, context: Optional[WellsContext] = None,
             max_order: int = DEFAULT_MAX_ORDER) -> List[RRBMorphism]:
    """Automorphisms inducing the identity on both kernel and quotient."""
    ctx = context if context is not None else WellsContext(ext)
    out = []
    for gamma in aut_K_H(ext, max_order):
        pair = restrict_and_induce(gamma, ext, ctx)
        if pair.is_identity():
            out.append(gamma)
    return out


def z1_to_aut(kappa: OneCochain, ext: Extension,
              context: Optional[WellsContext] = None) -> RRBMorphism:
    """gamma with gamma(s(a) k) = s(a) kappa1(a) k, and likewise on G."""
    ctx = context if context is not None else WellsContext(ext)
    ok, witness = ctx.complex.z1_contains(kappa)
    if not ok:
        raise RRBError("NotInZ1", f"defect {witness[0]} at {witness[1]} is nonzero")
    H, G = ext.total.H, ext.total.G
    sec = ctx.section
    img_h = np.zeros(H.order, dtype=np.int64)
    for h in H.elements():
        a, k = ext.decompose_h(sec, h)
        shifted = H.mul(int(sec.s_H[a]), ext.incl.psi(int(kappa.kappa1[a])))
        img_h[h] = H.mul(shifted, ext.incl.psi(k))
    img_g = np.zeros(G.order, dtype=np.int64)
    for g in G.elements():
        b, l = ext.decompose_g(sec, g)
        shifted = G.mul(int(sec.s_G[b]), ext.incl.eta(int(kappa.kappa2[b])))
        img_g[g] = G.mul(shifted, ext.incl.eta(l))
    gamma = RRBMorphism(ext.total, ext.total,
                        GroupHom(H, H, img_h), GroupHom(G, G, img_g))
    if not gamma.is_bijective():  # pragma: no cover - theorem
        raise RRBError("InternalError", "derivation automorphism is not bijective")
    return gamma


def aut_to_z1(gamma: RRBMorphism, ext: Extension,
              context: Optional[WellsContext] = None) -> OneCochain:
    """kappa1(a) = s(a)^-1 gamma(s(a)); the inverse of z1_to_aut."""
    ctx = context if context is not None else WellsContext(ext)
    sec = ctx.section
    H, G = ext.total.H, ext.total.G
    kappa1 = [ext.k_index(H.mul(H.inv(int(sec.s_H[a])), gamma.psi(int(sec.s_H[a]))))
              for a in ext.quotient.H.elements()]
    kappa2 = [ext.l_index(G.mul(G.inv(int(sec.s_G[b])), gamma.eta(int(sec.s_G[b]))))
              for b in ext.quotient.G.elements()]
    kappa = OneCochain(kappa1, kappa2)
    ok, witness = ctx.complex.z1_contains(kappa)
    if not ok:  # pragma: no cover - theorem for gamma in Aut^{A,K}
        raise RRBError("NotInZ1", f"extracted cochain fails {witness[0]} at {witness[1]}")
    return kappa


def is_inducible(ext: Extension, pair: CompatiblePair,
                 context: Optional[WellsContext] = None
                 ) -> Tuple[bool, Optional[RRBMorphism]]:
    """Decide liftability of the pair; on success return a lifting witness.

    The witness is gamma(s(a) k) = s(psi1(a)) kappa1(a) theta1(k) where kappa
    solves the coboundary equation for fs^pair - fs, pushed through theta.
    """
    ctx = context if context is not None else WellsContext(ext)
    if not pair_is_compatible(ctx.module, pair):
        return False, None
    twisted = act_on_factor_system(pair, ctx.fs, ctx.module, check=False)
    diff = add_factor_systems(ctx.module, twisted, negate_factor_system(ctx.module, ctx.fs))
    lam = ctx.complex.solve_coboundary(diff)
    if lam is None:
        return False, None
    K, L = ctx.module.K, ctx.module.L
    th1, th2 = pair.theta.psi.image, pair.theta.eta.image
    kappa1 = [int(th1[K.inv(int(lam.kappa1[a]))]) for a in ctx.module.A.elements()]
    kappa2 = [int(th2[L.inv(int(lam.kappa2[b]))]) for b in ctx.module.B.elements()]
    H, G = ext.total.H, ext.total.G
    sec = ctx.section
    psi1, psi2 = pair.psi.psi.image, pair.psi.eta.image
    img_h = np.zeros(H.order, dtype=np.int64)
    for h in H.elements():
        a, k = ext.decompose_h(sec, h)
        val = H.mul(int(sec.s_H[psi1[a]]), ext.incl.psi(kappa1[a]))
        img_h[h] = H.mul(val, ext.incl.psi(int(th1[k])))
    img_g = np.zeros(G.order, dtype=np.int64)
    for g in G.elements():
        b, l = ext.decompose_g(sec, g)
        val = G.mul(int(sec.s_G[psi2[b]]), ext.incl.eta(kappa2[b]))
        img_g[g] = G.mul(val, ext.incl.eta(int(th2[l])))
    try:
        gamma = RRBMorphism(ext.total, ext.total,
                            GroupHom(H, H, img_h), GroupHom(G, G, img_g))
    except Exception as exc:  # pragma: no cover - sign conventions proven above
        raise RRBError("InternalError", f"witness construction failed: {exc}")
    induced = restrict_and_induce(gamma, ext, ctx)
    if _pair_key(induced) != _pair_key(pair):  # pragma: no cover
        raise RRBError("InternalError", "witness does not induce the requested pair")
    return True, gamma


def twisted_module(module: RRBModule, psi: RRBMorphism) -> RRBModule:
    """The same kernel datum with the action precomposed by psi."""
    if not (psi.domain == module.quotient and psi.codomain == module.quotient
            and psi.is_bijective()):
        raise RRBError("PsiNotAutomorphism", "psi must be an automorphism of the quotient")
    action = twisted_action(module, psi.psi.image, psi.eta.image)
    return RRBModule(module.quotient, module.kernel, action)


def inducible_by_module_criterion(ext: Extension, pair: CompatiblePair,
                                  context: Optional[WellsContext] = None) -> bool:
    """Module-theoretic decision: theta must identify the kernel module with
    its psi-twist, and the twist of the class by psi alone must match the
    twist by theta alone inside the twisted module's cohomology."""
    ctx = context if context is not None else WellsContext(ext)
    module = ctx.module
    if not (pair.psi.domain == module.quotient and pair.psi.is_bijective()):
        raise RRBError("PsiNotAutomorphism", "pair does not start with a quotient automorphism")
    twisted = twisted_module(module, pair.psi)
    # (1) theta: module -> twisted module is an isomorphism of modules.
    th1, th2 = pair.theta.psi.image, pair.theta.eta.image
    act, t_act = module.action, twisted.action
    cond1 = True
    for b in module.B.elements():
        if not np.array_equal(th1[act.nu[b]], t_act.nu[b][th1]):
            cond1 = False
        if not np.array_equal(th2[act.sigma[b]], t_act.sigma[b][th2]):
            cond1 = False
    for a in module.A.elements():
        if not np.array_equal(th1[act.mu[a]], t_act.mu[a][th1]):
            cond1 = False
    for l in module.L.elements():
        for a in module.A.elements():
            if int(th1[act.f[l, a]]) != int(t_act.f[th2[l], a]):
                cond1 = False
    if not cond1:
        return False
    # (2) psi^*[fs] == theta^*[fs] in the twisted module's cohomology.
    cx_t = cochain_complex(twisted)
    ident = identity_pair(module)
    psi_star = act_on_factor_system(CompatiblePair(pair.psi, ident.theta),
                                    ctx.fs, module, check=False)
    theta_star = act_on_factor_system(CompatiblePair(ident.psi, pair.theta.inverse()),
                                      ctx.fs, module, check=False)
    return cx_t.class_of(psi_star) == cx_t.class_of(theta_star)


class PairRecord(NamedTuple):
    pair: CompatiblePair
    in_C: bool
    omega: Optional[Tuple[int, ...]]
    inducible: bool
    witness: Optional[RRBMorphism]


class WellsReport(NamedTuple):
    pairs: List[PairRecord]
    exactness: Dict[str, bool]
    witnesses: Dict[str, str]
    omega_is_homomorphism: bool


def verify_wells_exactness(ext: Extension,
                           max_order: int = DEFAULT_MAX_ORDER) -> WellsReport:
    """Exactness audit of the lifting sequence for one extension.

    Checks: the derivation group embeds in the total automorphisms; its image
    is exactly the automorphisms inducing the identity on kernel and
    quotient; the restriction map hits exactly the obstruction kernel; the
    obstruction map satisfies the derivation law.
    """
    ctx = WellsContext(ext, max_order)
    exactness: Dict[str, bool] = {}
    witnesses: Dict[str, str] = {}

    z1_list = list(ctx.complex.z1_elements())
    eta_images = [z1_to_aut(kappa, ext, ctx) for kappa in z1_list]
    keys = [_morphism_key(g) for g in eta_images]
    injective = len(set(keys)) == len(keys)
    autAK = aut_AK_H(ext, ctx, max_order)
    lands = set(keys) <= {_morphism_key(g) for g in autAK}
    additive = True
    for k1, g1 in zip(z1_list, eta_images):
        for k2, g2 in zip(z1_list, eta_images):
            s = ctx.complex.kappa_from_coords(
                ctx.complex.kappa_to_coords(k1) + ctx.complex.kappa_to_coords(k2))
            if _morphism_key(z1_to_aut(s, ext, ctx)) != _morphism_key(g1.compose(g2)):
                additive = False
                witnesses["eta_injective"] = f"eta not multiplicative at {k1}, {k2}"
    exactness["eta_injective"] = injective and lands and additive
    if not injective:
        witnesses["eta_injective"] = "distinct derivations with equal automorphisms"

    roundtrip = all(
        aut_to_z1(z1_to_aut(kappa, ext, ctx), ext, ctx) == kappa for kappa in z1_list
    ) and all(
        _morphism_key(z1_to_aut(aut_to_z1(g, ext, ctx), ext, ctx)) == _morphism_key(g)
        for g in autAK
    )
    ker_rho = {_morphism_key(g) for g in autAK}
    im_eta = set(keys)
    exactness["ker_rho_eq_im_eta"] = (ker_rho == im_eta and roundtrip
                                      and len(autAK) == len(z1_list))
    if ker_rho != im_eta:
        witnesses["ker_rho_eq_im_eta"] = "kernel of restriction differs from derivation image"

    C = ctx.compatible()
    autK = aut_K_H(ext, max_order)
    im_rho = {_pair_key(restrict_and_induce(g, ext, ctx)) for g in autK}
    omega = {_pair_key(c): wells_map(ext, c, ctx) for c in C}
    ker_omega = {k for k, cls in omega.items() if cls.is_zero()}
    exactness["ker_omega_eq_im_rho"] = im_rho == ker_omega
    if im_rho != ker_omega:
        witnesses["ker_omega_eq_im_rho"] = (
            f"im(rho) has {len(im_rho)} pairs, ker(omega) has {len(ker_omega)}")

    derivation = True
    homomorphism = True
    for c1 in C:
        for c2 in C:
            lhs = omega[_pair_key(c1.compose(c2))]
            if lhs != act_on_class(c2, omega[_pair_key(c1)]) + omega[_pair_key(c2)]:
                derivation = False
                witnesses["omega_derivation"] = f"law fails at {_pair_key(c1)}, {_pair_key(c2)}"
            if lhs != omega[_pair_key(c1)] + omega[_pair_key(c2)]:
                homomorphism = False
    exactness["omega_derivation"] = derivation

    records = []
    c_keys = {_pair_key(c) for c in C}
    for pair in ctx.all_pairs():
        key = _pair_key(pair)
        in_c = key in c_keys
        om = omega[key].coords if in_c else None
        ok, witness = is_inducible(ext, pair, ctx)
        records.append(PairRecord(pair, in_c, om, ok, witness))
    return WellsReport(records, exactness, witnesses, homomorphism)


def _morphism_key(m: RRBMorphism) -> tuple:
    return (tuple(m.psi.image.tolist()), tuple(m.eta.image.tolist()))
