"""Independent reference implementations used to cross-check the library.

Everything here works directly on Cayley tables and action arrays with
elementwise group arithmetic: no coordinate systems, no matrices, no Smith
normal form.  The exhaustive enumerators are vectorized over candidates with
plain numpy gathers so that spaces up to ~2^20 stay cheap.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from rrbgroups import FactorSystem, OneCochain, RRBModule
from rrbgroups.extensions import Extension


def _inv_array(G) -> np.ndarray:
    return np.asarray([G.inv(x) for x in G.elements()], dtype=np.int64)


def cocycle_defects(module: RRBModule, fs: FactorSystem) -> Dict[Tuple[str, tuple], int]:
    """All condition defects (lhs - rhs as a group element), on every tuple."""
    A, B, K, L = module.A, module.B, module.K, module.L
    nu, mu, sigma, f = (module.action.nu, module.action.mu,
                        module.action.sigma, module.action.f)
    S, T = module.S, module.T
    out: Dict[Tuple[str, tuple], int] = {}
    for a1 in A.elements():
        for a2 in A.elements():
            for a3 in A.elements():
                lhs = K.mul(int(fs.tau1[a2, a3]), int(fs.tau1[a1, A.mul(a2, a3)]))
                rhs = K.mul(int(fs.tau1[A.mul(a1, a2), a3]),
                            int(mu[a3, fs.tau1[a1, a2]]))
                out[("cocycle1", (a1, a2, a3))] = K.mul(lhs, K.inv(rhs))
    for b1 in B.elements():
        for b2 in B.elements():
            for b3 in B.elements():
                lhs = L.mul(int(fs.tau2[b2, b3]), int(fs.tau2[b1, B.mul(b2, b3)]))
                rhs = L.mul(int(fs.tau2[B.mul(b1, b2), b3]),
                            int(sigma[b3, fs.tau2[b1, b2]]))
                out[("cocycle2", (b1, b2, b3))] = L.mul(lhs, L.inv(rhs))
    for a in A.elements():
        for b1 in B.elements():
            for b2 in B.elements():
                lhs = K.mul(int(fs.rho[module.beta(b2, a), b1]),
                            int(nu[b1, fs.rho[a, b2]]))
                rhs = K.mul(int(fs.rho[a, B.mul(b1, b2)]),
                            int(nu[B.mul(b1, b2), f[fs.tau2[b1, b2], a]]))
                out[("cocycle3", (a, b1, b2))] = K.mul(lhs, K.inv(rhs))
    for a1 in A.elements():
        for a2 in A.elements():
            for b in B.elements():
                lhs = K.mul(int(fs.rho[A.mul(a1, a2), b]), int(nu[b, fs.tau1[a1, a2]]))
                rhs = K.mul(K.mul(int(mu[module.beta(b, a2), fs.rho[a1, b]]),
                                  int(fs.rho[a2, b])),
                            int(fs.tau1[module.beta(b, a1), module.beta(b, a2)]))
                out[("cocycle4", (a1, a2, b))] = K.mul(lhs, K.inv(rhs))
    for a1 in A.elements():
        for a2 in A.elements():
            circ = module.circ(a1, a2)
            T1, T2 = int(T[a1]), int(T[a2])
            delta = L.mul(L.mul(int(fs.chi[a2]), L.inv(int(fs.chi[circ]))),
                          int(sigma[T2, fs.chi[a1]]))
            lhs = L.mul(int(fs.tau2[T1, T2]), delta)
            inner = K.mul(K.mul(int(fs.rho[a2, T1]),
                                int(fs.tau1[a1, module.beta(T1, a2)])),
                          int(nu[T1, f[fs.chi[a1], a2]]))
            rhs = int(S[module.action.nu_inv(int(T[circ]))[inner]])
            out[("cocycle5", (a1, a2))] = L.mul(lhs, L.inv(rhs))
    return out


def cocycle_violations(module: RRBModule, fs: FactorSystem) -> List[Tuple[str, tuple]]:
    return sorted(key for key, defect in cocycle_defects(module, fs).items() if defect)


def derivation_defects(module: RRBModule, kappa: OneCochain) -> Dict[Tuple[str, tuple], int]:
    """Defects of the four derivation conditions; all zero iff kappa is one."""
    fs = coboundary_direct(module, kappa)
    A, B = module.A, module.B
    out: Dict[Tuple[str, tuple], int] = {}
    for a1 in A.elements():
        for a2 in A.elements():
            out[("der1", (a1, a2))] = int(fs.tau1[a1, a2])
    for b1 in B.elements():
        for b2 in B.elements():
            out[("der2", (b1, b2))] = int(fs.tau2[b1, b2])
    for a in A.elements():
        for b in B.elements():
            out[("der3", (a, b))] = int(fs.rho[a, b])
    for a in A.elements():
        out[("der4", (a,))] = int(fs.chi[a])
    return out


def coboundary_direct(module: RRBModule, kappa: OneCochain) -> FactorSystem:
    """Defect quadruple of a one-cochain, evaluated elementwise."""
    A, B, K, L = module.A, module.B, module.K, module.L
    nu, mu, sigma, f = (module.action.nu, module.action.mu,
                        module.action.sigma, module.action.f)
    S, T = module.S, module.T
    k1, k2 = kappa.kappa1, kappa.kappa2
    tau1 = [[K.mul(K.mul(int(k1[a2]), int(mu[a2, k1[a1]])), K.inv(int(k1[A.mul(a1, a2)])))
             for a2 in A.elements()] for a1 in A.elements()]
    tau2 = [[L.mul(L.mul(int(k2[b2]), int(sigma[b2, k2[b1]])), L.inv(int(k2[B.mul(b1, b2)])))
             for b2 in B.elements()] for b1 in B.elements()]
    rho = [[K.mul(int(nu[b, K.mul(int(f[k2[b], a]), int(k1[a]))]),
                  K.inv(int(k1[module.beta(b, a)])))
            for b in B.elements()] for a in A.elements()]
    chi = [L.mul(int(S[module.action.nu_inv(int(T[a]))[k1[a]]]),
                 L.inv(int(k2[T[a]])))
           for a in A.elements()]
    return FactorSystem(tau1, tau2, rho, chi)


def add_fs(module: RRBModule, x: FactorSystem, y: FactorSystem) -> FactorSystem:
    K, L = module.K, module.L
    return FactorSystem(K.table[x.tau1, y.tau1], L.table[x.tau2, y.tau2],
                        K.table[x.rho, y.rho], L.table[x.chi, y.chi])


def sub_fs(module: RRBModule, x: FactorSystem, y: FactorSystem) -> FactorSystem:
    K, L = module.K, module.L
    kinv, linv = _inv_array(K), _inv_array(L)
    return FactorSystem(K.table[x.tau1, kinv[y.tau1]], L.table[x.tau2, linv[y.tau2]],
                        K.table[x.rho, kinv[y.rho]], L.table[x.chi, linv[y.chi]])


# -- exhaustive enumeration ---------------------------------------------------

def fs_positions(module: RRBModule) -> List[Tuple[str, tuple, int]]:
    """Nondegenerate cochain positions with their value-set sizes."""
    nA, nB = module.A.order, module.B.order
    nK, nL = module.K.order, module.L.order
    pos: List[Tuple[str, tuple, int]] = []
    pos += [("tau1", (a1, a2), nK) for a1 in range(1, nA) for a2 in range(1, nA)]
    pos += [("tau2", (b1, b2), nL) for b1 in range(1, nB) for b2 in range(1, nB)]
    pos += [("rho", (a, b), nK) for a in range(1, nA) for b in range(1, nB)]
    pos += [("chi", (a,), nL) for a in range(1, nA)]
    return pos


def c2_size(module: RRBModule) -> int:
    out = 1
    for *_, size in fs_positions(module):
        out *= size
    return out


def fs_key(module: RRBModule, fs: FactorSystem) -> Tuple[int, ...]:
    arrays = {"tau1": fs.tau1, "tau2": fs.tau2, "rho": fs.rho, "chi": fs.chi}
    out = []
    for kind, idx, _ in fs_positions(module):
        arr = arrays[kind]
        out.append(int(arr[idx] if len(idx) == 2 else arr[idx[0]]))
    return tuple(out)


def fs_from_key(module: RRBModule, key: Sequence[int]) -> FactorSystem:
    nA, nB = module.A.order, module.B.order
    tau1 = np.zeros((nA, nA), dtype=np.int64)
    tau2 = np.zeros((nB, nB), dtype=np.int64)
    rho = np.zeros((nA, nB), dtype=np.int64)
    chi = np.zeros(nA, dtype=np.int64)
    arrays = {"tau1": tau1, "tau2": tau2, "rho": rho, "chi": chi}
    for value, (kind, idx, _) in zip(key, fs_positions(module)):
        if len(idx) == 2:
            arrays[kind][idx] = value
        else:
            arrays[kind][idx[0]] = value
    return FactorSystem(tau1, tau2, rho, chi)


def exhaustive_z2_keys(module: RRBModule) -> set:
    """Keys of every candidate passing all five conditions, by brute filter."""
    positions = fs_positions(module)
    sizes = [size for *_, size in positions]
    grid = np.asarray(list(itertools.product(*(range(s) for s in sizes))),
                      dtype=np.int64).reshape(-1, len(sizes))
    n = grid.shape[0]
    col = {(kind, idx): j for j, (kind, idx, _) in enumerate(positions)}
    zeros = np.zeros(n, dtype=np.int64)

    def get(kind: str, idx: tuple) -> np.ndarray:
        if any(i == 0 for i in idx):
            return zeros
        return grid[:, col[(kind, idx)]]

    A, B, K, L = module.A, module.B, module.K, module.L
    Kt, Lt = K.table, L.table
    Kinv, Linv = _inv_array(K), _inv_array(L)
    nu, mu, sigma, f = (module.action.nu, module.action.mu,
                        module.action.sigma, module.action.f)
    S, T = np.asarray(module.S), np.asarray(module.T)
    ok = np.ones(n, dtype=bool)

    for a1 in A.elements():
        for a2 in A.elements():
            for a3 in A.elements():
                lhs = Kt[get("tau1", (a2, a3)), get("tau1", (a1, A.mul(a2, a3)))]
                rhs = Kt[get("tau1", (A.mul(a1, a2), a3)), mu[a3][get("tau1", (a1, a2))]]
                ok &= lhs == rhs
    for b1 in B.elements():
        for b2 in B.elements():
            for b3 in B.elements():
                lhs = Lt[get("tau2", (b2, b3)), get("tau2", (b1, B.mul(b2, b3)))]
                rhs = Lt[get("tau2", (B.mul(b1, b2), b3)), sigma[b3][get("tau2", (b1, b2))]]
                ok &= lhs == rhs
    for a in A.elements():
        for b1 in B.elements():
            for b2 in B.elements():
                lhs = Kt[get("rho", (module.beta(b2, a), b1)), nu[b1][get("rho", (a, b2))]]
                rhs = Kt[get("rho", (a, B.mul(b1, b2))),
                         nu[B.mul(b1, b2)][f[get("tau2", (b1, b2)), a]]]
                ok &= lhs == rhs
    for a1 in A.elements():
        for a2 in A.elements():
            for b in B.elements():
                lhs = Kt[get("rho", (A.mul(a1, a2), b)), nu[b][get("tau1", (a1, a2))]]
                rhs = Kt[Kt[mu[module.beta(b, a2)][get("rho", (a1, b))],
                            get("rho", (a2, b))],
                         get("tau1", (module.beta(b, a1), module.beta(b, a2)))]
                ok &= lhs == rhs
    for a1 in A.elements():
        for a2 in A.elements():
            circ = module.circ(a1, a2)
            T1, T2 = int(T[a1]), int(T[a2])
            delta = Lt[Lt[get("chi", (a2,)), Linv[get("chi", (circ,))]],
                       sigma[T2][get("chi", (a1,))]]
            lhs = Lt[get("tau2", (T1, T2)), delta]
            inner = Kt[Kt[get("rho", (a2, T1)),
                          get("tau1", (a1, module.beta(T1, a2)))],
                       nu[T1][f[get("chi", (a1,)), a2]]]
            rhs = S[module.action.nu_inv(int(T[circ]))[inner]]
            ok &= lhs == rhs
    return {tuple(int(v) for v in row) for row in grid[ok]}


def iter_one_cochains(module: RRBModule) -> Iterator[OneCochain]:
    nA, nB = module.A.order, module.B.order
    nK, nL = module.K.order, module.L.order
    for k1_tail in itertools.product(range(nK), repeat=nA - 1):
        for k2_tail in itertools.product(range(nL), repeat=nB - 1):
            yield OneCochain((0,) + k1_tail, (0,) + k2_tail)


def exhaustive_b2_keys(module: RRBModule) -> set:
    return {fs_key(module, coboundary_direct(module, kappa))
            for kappa in iter_one_cochains(module)}


def exhaustive_z1(module: RRBModule) -> List[OneCochain]:
    return [kappa for kappa in iter_one_cochains(module)
            if not any(derivation_defects(module, kappa).values())]


# -- operators and equivalences ----------------------------------------------

def naive_operators(H, G, phi) -> List[List[int]]:
    """Every map H -> G satisfying the operator axiom, unrestricted search."""
    phi = np.asarray(phi, dtype=np.int64)
    out = []
    for R in itertools.product(range(G.order), repeat=H.order):
        ok = all(G.mul(R[h1], R[h2]) == R[H.mul(h1, int(phi[R[h1], h2]))]
                 for h1 in H.elements() for h2 in H.elements())
        if ok:
            out.append(list(R))
    return sorted(out)


def find_equivalence_morphism(e1: Extension, e2: Extension) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """Brute-force search for an equivalence between two extensions.

    An equivalence restricts to the identity on the kernel and induces the
    identity on the quotient, so it is determined by shift maps
    lam: A -> K and kap: B -> L applied next to a section.  Returns the
    total-level image arrays (on H and on G) or None.
    """
    A, B = e1.quotient.H, e1.quotient.G
    K, L = e1.kernel.H, e1.kernel.G
    H1, G1 = e1.total.H, e1.total.G
    H2, G2 = e2.total.H, e2.total.G
    from rrbgroups.extensions import canonical_section

    s1 = canonical_section(e1)
    s2 = canonical_section(e2)

    def build_h(lam) -> Optional[np.ndarray]:
        img = np.zeros(H1.order, dtype=np.int64)
        for h in H1.elements():
            a, k = e1.decompose_h(s1, h)
            val = H2.mul(int(s2.s_H[a]), e2.incl.psi(int(lam[a])))
            img[h] = H2.mul(val, e2.incl.psi(k))
        good = np.array_equal(img[H1.table], H2.table[img[:, None], img[None, :]])
        return img if good and len(set(img.tolist())) == H1.order else None

    def build_g(kap) -> Optional[np.ndarray]:
        img = np.zeros(G1.order, dtype=np.int64)
        for g in G1.elements():
            b, l = e1.decompose_g(s1, g)
            val = G2.mul(int(s2.s_G[b]), e2.incl.eta(int(kap[b])))
            img[g] = G2.mul(val, e2.incl.eta(l))
        good = np.array_equal(img[G1.table], G2.table[img[:, None], img[None, :]])
        return img if good and len(set(img.tolist())) == G1.order else None

    h_cands = []
    for lam_tail in itertools.product(range(K.order), repeat=A.order - 1):
        img = build_h((0,) + lam_tail)
        if img is not None:
            h_cands.append(img)
    g_cands = []
    for kap_tail in itertools.product(range(L.order), repeat=B.order - 1):
        img = build_g((0,) + kap_tail)
        if img is not None:
            g_cands.append(img)
    for img_h in h_cands:
        for img_g in g_cands:
            ok = all(int(img_g[e1.total.R[h]]) == int(e2.total.R[img_h[h]])
                     for h in H1.elements())
            if not ok:
                continue
            ok = all(int(img_h[e1.total.act(g, h)]) == int(e2.total.act(int(img_g[g]), int(img_h[h])))
                     for g in G1.elements() for h in H1.elements())
            if ok:
                return img_h, img_g
    return None
