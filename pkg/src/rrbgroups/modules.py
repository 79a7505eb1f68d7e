"""Modules over a quotient structure and the factor systems they classify.

A module datum is a trivial-action structure (K, L, alpha, S) with abelian K
and L, acted on by (A, B, beta, T) through four maps:

    nu:    B -> Aut(K)   homomorphism
    mu:    A -> Aut(K)   anti-homomorphism
    sigma: B -> Aut(L)   anti-homomorphism
    f:     L x A -> K    additive in L, a twisted derivation in A.

Anti-homomorphism convention throughout: mu_{a1*a2} = mu_{a2} o mu_{a1}
(and the same for sigma), matching conjugation by a section from the right.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np

from .groups import FiniteGroup, is_homomorphism
from .rrb import RRBError, RRBGroup, circle_op, is_trivial


def _inverse_perm(perm: np.ndarray) -> np.ndarray:
    out = np.zeros_like(perm)
    out[perm] = np.arange(len(perm))
    return out


class ActionQuadruple:
    """The maps (nu, mu, sigma, f), stored densely over element indices."""

    def __init__(self, nu: Sequence[Sequence[int]], mu: Sequence[Sequence[int]],
                 sigma: Sequence[Sequence[int]], f: Sequence[Sequence[int]]):
        self.nu = np.asarray(nu, dtype=np.int64)
        self.mu = np.asarray(mu, dtype=np.int64)
        self.sigma = np.asarray(sigma, dtype=np.int64)
        self.f = np.asarray(f, dtype=np.int64)
        for arr in (self.nu, self.mu, self.sigma, self.f):
            arr.setflags(write=False)

    def nu_inv(self, b: int) -> np.ndarray:
        return _inverse_perm(self.nu[b])

    def __eq__(self, other) -> bool:
        return (isinstance(other, ActionQuadruple)
                and np.array_equal(self.nu, other.nu)
                and np.array_equal(self.mu, other.mu)
                and np.array_equal(self.sigma, other.sigma)
                and np.array_equal(self.f, other.f))

    def __hash__(self):
        return hash((self.nu.tobytes(), self.mu.tobytes(),
                     self.sigma.tobytes(), self.f.tobytes()))


def trivial_action(quotient: RRBGroup, kernel: RRBGroup) -> ActionQuadruple:
    A, B = quotient.H, quotient.G
    K, L = kernel.H, kernel.G
    ident_K = list(range(K.order))
    ident_L = list(range(L.order))
    return ActionQuadruple(
        [ident_K for _ in B.elements()],
        [ident_K for _ in A.elements()],
        [ident_L for _ in B.elements()],
        [[0] * A.order for _ in L.elements()],
    )


class RRBModule:
    """A validated module: quotient datum, kernel datum, action quadruple."""

    def __init__(self, quotient: RRBGroup, kernel: RRBGroup, action: ActionQuadruple):
        ok, why = validate_module(quotient, kernel, action)
        if not ok:
            raise RRBError("ModuleInvalid", why or "module conditions fail")
        self.quotient = quotient
        self.kernel = kernel
        self.action = action

    # Shorthands for the six underlying objects.
    @property
    def A(self) -> FiniteGroup:
        return self.quotient.H

    @property
    def B(self) -> FiniteGroup:
        return self.quotient.G

    @property
    def K(self) -> FiniteGroup:
        return self.kernel.H

    @property
    def L(self) -> FiniteGroup:
        return self.kernel.G

    @property
    def T(self) -> np.ndarray:
        return self.quotient.R

    @property
    def S(self) -> np.ndarray:
        return self.kernel.R

    def beta(self, b: int, a: int) -> int:
        return self.quotient.act(b, a)

    def circ(self, a1: int, a2: int) -> int:
        """a1 o a2 = a1 * beta_{T(a1)}(a2); a group operation on A."""
        return circle_op(self.quotient, a1, a2)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RRBModule)
                and self.quotient == other.quotient
                and self.kernel == other.kernel
                and self.action == other.action)

    def __hash__(self):
        return hash((self.quotient, self.kernel, self.action))


def validate_module(quotient: RRBGroup, kernel: RRBGroup,
                    action: ActionQuadruple) -> Tuple[bool, Optional[str]]:
    """Check the module conditions, returning the first counterexample."""
    A, B = quotient.H, quotient.G
    K, L = kernel.H, kernel.G
    if not (K.is_abelian and L.is_abelian):
        return False, "kernel components must be abelian"
    if not is_trivial(kernel):
        return False, "kernel action must be trivial"
    nu, mu, sigma, f = action.nu, action.mu, action.sigma, action.f
    if nu.shape != (B.order, K.order) or mu.shape != (A.order, K.order):
        return False, "nu/mu shape mismatch"
    if sigma.shape != (B.order, L.order) or f.shape != (L.order, A.order):
        return False, "sigma/f shape mismatch"

    for b in B.elements():
        row = nu[b]
        if sorted(row.tolist()) != list(range(K.order)) or not is_homomorphism(row, K, K):
            return False, f"nu[{b}] is not an automorphism of K"
    for a in A.elements():
        row = mu[a]
        if sorted(row.tolist()) != list(range(K.order)) or not is_homomorphism(row, K, K):
            return False, f"mu[{a}] is not an automorphism of K"
    for b in B.elements():
        row = sigma[b]
        if sorted(row.tolist()) != list(range(L.order)) or not is_homomorphism(row, L, L):
            return False, f"sigma[{b}] is not an automorphism of L"

    ident_K = np.arange(K.order)
    ident_L = np.arange(L.order)
    if not (np.array_equal(nu[0], ident_K) and np.array_equal(mu[0], ident_K)
            and np.array_equal(sigma[0], ident_L)):
        return False, "actions at the identity are not the identity map"
    # nu is a homomorphism, mu and sigma are anti-homomorphisms.
    for b1 in B.elements():
        for b2 in B.elements():
            if not np.array_equal(nu[B.mul(b1, b2)], nu[b1][nu[b2]]):
                return False, f"nu not a homomorphism at ({b1},{b2})"
            if not np.array_equal(sigma[B.mul(b1, b2)], sigma[b2][sigma[b1]]):
                return False, f"sigma not an anti-homomorphism at ({b1},{b2})"
    for a1 in A.elements():
        for a2 in A.elements():
            if not np.array_equal(mu[A.mul(a1, a2)], mu[a2][mu[a1]]):
                return False, f"mu not an anti-homomorphism at ({a1},{a2})"

    # f: additive in L, and f(l, a1*a2) = mu_{a2}(f(l,a1)) + f(l,a2).
    for a in A.elements():
        col = f[:, a]
        if not is_homomorphism(col, L, K):
            return False, f"f(-, {a}) is not a homomorphism L -> K"
    for l in L.elements():
        for a1 in A.elements():
            for a2 in A.elements():
                lhs = int(f[l, A.mul(a1, a2)])
                rhs = K.mul(int(mu[a2, f[l, a1]]), int(f[l, a2]))
                if lhs != rhs:
                    return False, f"f(l,-) derivation fails at (l,a1,a2)=({l},{a1},{a2})"

    # S(nu^-1_{T(a)}(mu_a(k)) + nu^-1_{T(a)}(f(S(k), a))) = sigma_{T(a)}(S(k)).
    S, T = kernel.R, quotient.R
    for a in A.elements():
        nu_inv = action.nu_inv(int(T[a]))
        for k in K.elements():
            arg = K.mul(int(nu_inv[mu[a, k]]), int(nu_inv[f[S[k], a]]))
            if int(S[arg]) != int(sigma[T[a], S[k]]):
                return False, f"operator compatibility fails at (a,k)=({a},{k})"

    # nu_b(mu_a(k)) = mu_{beta_b(a)}(nu_b(k)).
    for a in A.elements():
        for b in B.elements():
            ba = quotient.act(b, a)
            for k in K.elements():
                if int(nu[b, mu[a, k]]) != int(mu[ba, nu[b, k]]):
                    return False, f"action interchange fails at (a,b,k)=({a},{b},{k})"
    return True, None


class FactorSystem:
    """Candidate 2-cochain (tau1, tau2, rho, chi) over element indices.

    tau1: A x A -> K, tau2: B x B -> L, rho: A x B -> K, chi: A -> L.
    All four must vanish whenever an argument is the identity.
    """

    def __init__(self, tau1: Sequence[Sequence[int]], tau2: Sequence[Sequence[int]],
                 rho: Sequence[Sequence[int]], chi: Sequence[int]):
        self.tau1 = np.asarray(tau1, dtype=np.int64)
        self.tau2 = np.asarray(tau2, dtype=np.int64)
        self.rho = np.asarray(rho, dtype=np.int64)
        self.chi = np.asarray(chi, dtype=np.int64)
        if self.tau1.ndim != 2 or self.tau1.shape[0] != self.tau1.shape[1]:
            raise ValueError("tau1 must be square")
        if self.tau2.ndim != 2 or self.tau2.shape[0] != self.tau2.shape[1]:
            raise ValueError("tau2 must be square")
        nA, nB = self.tau1.shape[0], self.tau2.shape[0]
        if self.rho.shape != (nA, nB) or self.chi.shape != (nA,):
            raise ValueError("rho/chi shapes inconsistent with tau1/tau2")
        degenerate = (self.tau1[0].any() or self.tau1[:, 0].any()
                      or self.tau2[0].any() or self.tau2[:, 0].any()
                      or self.rho[0].any() or self.rho[:, 0].any() or self.chi[0])
        if degenerate:
            raise ValueError("factor system does not vanish on degenerate tuples")
        for arr in (self.tau1, self.tau2, self.rho, self.chi):
            arr.setflags(write=False)

    @property
    def shapes(self) -> Tuple[int, int]:
        return (self.tau1.shape[0], self.tau2.shape[0])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FactorSystem)
                and np.array_equal(self.tau1, other.tau1)
                and np.array_equal(self.tau2, other.tau2)
                and np.array_equal(self.rho, other.rho)
                and np.array_equal(self.chi, other.chi))

    def __hash__(self):
        return hash((self.tau1.tobytes(), self.tau2.tobytes(),
                     self.rho.tobytes(), self.chi.tobytes()))

    def __repr__(self):
        return (f"FactorSystem(tau1={self.tau1.tolist()}, tau2={self.tau2.tolist()}, "
                f"rho={self.rho.tolist()}, chi={self.chi.tolist()})")


def zero_factor_system(module: RRBModule) -> FactorSystem:
    nA, nB = module.A.order, module.B.order
    return FactorSystem(np.zeros((nA, nA), dtype=np.int64),
                        np.zeros((nB, nB), dtype=np.int64),
                        np.zeros((nA, nB), dtype=np.int64),
                        np.zeros(nA, dtype=np.int64))


def add_factor_systems(module: RRBModule, x: FactorSystem, y: FactorSystem) -> FactorSystem:
    K, L = module.K, module.L
    return FactorSystem(K.table[x.tau1, y.tau1], L.table[x.tau2, y.tau2],
                        K.table[x.rho, y.rho], L.table[x.chi, y.chi])


def negate_factor_system(module: RRBModule, x: FactorSystem) -> FactorSystem:
    kinv = np.asarray([module.K.inv(k) for k in module.K.elements()], dtype=np.int64)
    linv = np.asarray([module.L.inv(l) for l in module.L.elements()], dtype=np.int64)
    return FactorSystem(kinv[x.tau1], linv[x.tau2], kinv[x.rho], linv[x.chi])


class OneCochain:
    """A pair (kappa1: A -> K, kappa2: B -> L) vanishing at the identity."""

    def __init__(self, kappa1: Sequence[int], kappa2: Sequence[int]):
        self.kappa1 = np.asarray(kappa1, dtype=np.int64)
        self.kappa2 = np.asarray(kappa2, dtype=np.int64)
        if self.kappa1[0] or self.kappa2[0]:
            raise ValueError("one-cochain does not vanish at the identity")
        self.kappa1.setflags(write=False)
        self.kappa2.setflags(write=False)

    def __eq__(self, other) -> bool:
        return (isinstance(other, OneCochain)
                and np.array_equal(self.kappa1, other.kappa1)
                and np.array_equal(self.kappa2, other.kappa2))

    def __hash__(self):
        return hash((self.kappa1.tobytes(), self.kappa2.tobytes()))

    def __repr__(self):
        return f"OneCochain(kappa1={self.kappa1.tolist()}, kappa2={self.kappa2.tolist()})"


def twisted_action(module: RRBModule, psi1: Sequence[int], psi2: Sequence[int]) -> ActionQuadruple:
    """Precompose the action with an automorphism (psi1, psi2) of the quotient:
    (nu o psi2, mu o psi1, sigma o psi2, f(-, psi1(-)))."""
    psi1 = np.asarray(psi1, dtype=np.int64)
    psi2 = np.asarray(psi2, dtype=np.int64)
    act = module.action
    return ActionQuadruple(act.nu[psi2], act.mu[psi1], act.sigma[psi2], act.f[:, psi1])
