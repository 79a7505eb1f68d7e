"""The two-term cochain complex of a module and its cohomology.

Degree-one cochains are pairs (kappa1: A -> K, kappa2: B -> L); degree-two
cochains are quadruples (tau1, tau2, rho, chi) as in
:class:`rrbgroups.modules.FactorSystem`.  Everything vanishing on degenerate
tuples is encoded in invariant-factor coordinates, one block per
nondegenerate tuple, and the five cocycle conditions plus the coboundary map
become integer matrices between those coordinate spaces.  Kernels, images,
and quotients then come from Smith normal form.

Additive transcriptions used throughout (K, L abelian, written additively;
``o`` is the twisted product a1 o a2 = a1 * beta_{T(a1)}(a2)):

  (z1) tau1-defect:  kappa1(a2) + mu_{a2} kappa1(a1) - kappa1(a1 a2)
  (z2) tau2-defect:  kappa2(b2) + sigma_{b2} kappa2(b1) - kappa2(b1 b2)
  (z3) rho-defect:   nu_b(f(kappa2(b), a) + kappa1(a)) - kappa1(beta_b(a))
  (z4) chi-defect:   S(nu^-1_{T(a)} kappa1(a)) - kappa2(T(a))

  (c1) tau1(a2,a3) + tau1(a1, a2 a3) - tau1(a1 a2, a3) - mu_{a3} tau1(a1,a2)
  (c2) tau2(b2,b3) + tau2(b1, b2 b3) - tau2(b1 b2, b3) - sigma_{b3} tau2(b1,b2)
  (c3) rho(beta_{b2}(a), b1) + nu_{b1} rho(a, b2)
         - rho(a, b1 b2) - nu_{b1 b2} f(tau2(b1,b2), a)
  (c4) rho(a1 a2, b) + nu_b tau1(a1,a2)
         - mu_{beta_b(a2)} rho(a1,b) - rho(a2,b) - tau1(beta_b(a1), beta_b(a2))
  (c5) tau2(T(a1),T(a2)) + chi(a2) - chi(a1 o a2) + sigma_{T(a2)} chi(a1)
         - S nu^-1_{T(a1 o a2)} ( rho(a2, T(a1)) + tau1(a1, beta_{T(a1)}(a2))
                                   + nu_{T(a1)} f(chi(a1), a2) )

A one-cochain lies in the derivation group when all four defects vanish; its
defect quadruple is exactly the coboundary landing in the cocycle group.
"""

from __future__ import annotations

import functools
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .abelian import (
    AbelianPresentation,
    SubgroupPresentation,
    SubquotientPresentation,
    iter_vectors,
    reduce_vec,
)
from .groups import FiniteGroup, GroupError, is_homomorphism
from .intlinalg import identity_matrix, kernel_basis, smith_normal_form, solve_with_snf, zeros_matrix
from .modules import FactorSystem, OneCochain, RRBModule
from .rrb import RRBError, descended_operation


class CohomologyClass:
    """A coset of the coboundary group, identified by canonical coordinates."""

    def __init__(self, complex_: "CochainComplex", coords: Tuple[int, ...]):
        self.complex = complex_
        self.coords = tuple(int(c) for c in coords)

    @property
    def factors(self) -> Tuple[int, ...]:
        return self.complex.h2().factors

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _require_same(self, other: "CohomologyClass"):
        if self.complex is not other.complex:
            raise RRBError("ModuleMismatch", "classes live over different modules")

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._require_same(other)
        vec = [x + y for x, y in zip(self.coords, other.coords)]
        return CohomologyClass(self.complex, reduce_vec(vec, self.factors))

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._require_same(other)
        vec = [x - y for x, y in zip(self.coords, other.coords)]
        return CohomologyClass(self.complex, reduce_vec(vec, self.factors))

    def __eq__(self, other) -> bool:
        return (isinstance(other, CohomologyClass)
                and self.complex is other.complex and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.complex), self.coords))

    def __repr__(self):
        return f"CohomologyClass{self.coords}"


class CochainComplex:
    """Coordinates, coboundary, and cocycle conditions for one module."""

    def __init__(self, module: RRBModule):
        self.module = module
        self.Kp = AbelianPresentation(module.K)
        self.Lp = AbelianPresentation(module.L)
        A, B = module.A, module.B
        kK, kL = self.Kp.rank, self.Lp.rank

        self._c1_blocks: List[Tuple[str, tuple]] = []
        self._c1_blocks += [("kappa1", (a,)) for a in range(1, A.order)]
        self._c1_blocks += [("kappa2", (b,)) for b in range(1, B.order)]
        self._c2_blocks: List[Tuple[str, tuple]] = []
        self._c2_blocks += [("tau1", (a1, a2))
                            for a1 in range(1, A.order) for a2 in range(1, A.order)]
        self._c2_blocks += [("tau2", (b1, b2))
                            for b1 in range(1, B.order) for b2 in range(1, B.order)]
        self._c2_blocks += [("rho", (a, b))
                            for a in range(1, A.order) for b in range(1, B.order)]
        self._c2_blocks += [("chi", (a,)) for a in range(1, A.order)]

        def widths(blocks):
            offsets, moduli, pos = {}, [], 0
            for kind, idx in blocks:
                pres = self.Kp if kind in ("tau1", "rho", "kappa1") else self.Lp
                offsets[(kind, idx)] = pos
                moduli.extend(pres.factors)
                pos += pres.rank
            return offsets, tuple(moduli)

        self._c1_offset, self.c1_moduli = widths(self._c1_blocks)
        self._c2_offset, self.c2_moduli = widths(self._c2_blocks)
        self._kK, self._kL = kK, kL

        # Matrices of the structure maps in coordinates.
        act = module.action
        self._nu = [self.Kp.perm_matrix(act.nu[b]) for b in B.elements()]
        self._nu_inv = [self.Kp.perm_matrix(act.nu_inv(b)) for b in B.elements()]
        self._mu = [self.Kp.perm_matrix(act.mu[a]) for a in A.elements()]
        self._sigma = [self.Lp.perm_matrix(act.sigma[b]) for b in B.elements()]
        self._f = [self.Lp.hom_matrix(self.Kp, act.f[:, a]) for a in A.elements()]
        self._S = self.Kp.hom_matrix(self.Lp, module.S)
        self._IK = identity_matrix(kK)
        self._IL = identity_matrix(kL)

        # The twisted product must descend T to a homomorphism; the cocycle
        # conditions rely on T(a1 o a2) = T(a1) T(a2).
        descended_operation(module.quotient)
        for a1 in A.elements():
            for a2 in A.elements():
                circ = module.circ(a1, a2)
                if int(module.T[circ]) != B.mul(int(module.T[a1]), int(module.T[a2])):
                    raise RRBError("InternalError", "operator is not a twisted-product hom")

        self.coboundary_matrix = self._build_coboundary()
        self.constraint_matrix, self._con_blocks, self.constraint_moduli = \
            self._build_constraints()
        self._assert_linearization()

    # -- coordinate packing ------------------------------------------------

    @property
    def c1_dim(self) -> int:
        return len(self.c1_moduli)

    @property
    def c2_dim(self) -> int:
        return len(self.c2_moduli)

    def fs_to_coords(self, fs: FactorSystem) -> np.ndarray:
        if fs.shapes != (self.module.A.order, self.module.B.order):
            raise ValueError("factor system shape does not match the module")
        out: List[int] = []
        arrays = {"tau1": fs.tau1, "tau2": fs.tau2, "rho": fs.rho, "chi": fs.chi}
        for kind, idx in self._c2_blocks:
            pres = self.Kp if kind in ("tau1", "rho") else self.Lp
            value = arrays[kind][idx] if len(idx) == 2 else arrays[kind][idx[0]]
            out.extend(pres.vec(int(value)))
        return np.asarray(out, dtype=object)

    def fs_from_coords(self, coords: Sequence[int]) -> FactorSystem:
        coords = reduce_vec(coords, self.c2_moduli)
        A, B = self.module.A, self.module.B
        tau1 = np.zeros((A.order, A.order), dtype=np.int64)
        tau2 = np.zeros((B.order, B.order), dtype=np.int64)
        rho = np.zeros((A.order, B.order), dtype=np.int64)
        chi = np.zeros(A.order, dtype=np.int64)
        target = {"tau1": tau1, "tau2": tau2, "rho": rho, "chi": chi}
        for kind, idx in self._c2_blocks:
            pres = self.Kp if kind in ("tau1", "rho") else self.Lp
            off = self._c2_offset[(kind, idx)]
            value = pres.elem(coords[off:off + pres.rank])
            if len(idx) == 2:
                target[kind][idx] = value
            else:
                target[kind][idx[0]] = value
        return FactorSystem(tau1, tau2, rho, chi)

    def kappa_to_coords(self, kappa: OneCochain) -> np.ndarray:
        if (kappa.kappa1.shape != (self.module.A.order,)
                or kappa.kappa2.shape != (self.module.B.order,)):
            raise ValueError("one-cochain shape does not match the module")
        out: List[int] = []
        for kind, idx in self._c1_blocks:
            if kind == "kappa1":
                out.extend(self.Kp.vec(int(kappa.kappa1[idx[0]])))
            else:
                out.extend(self.Lp.vec(int(kappa.kappa2[idx[0]])))
        return np.asarray(out, dtype=object)

    def kappa_from_coords(self, coords: Sequence[int]) -> OneCochain:
        coords = reduce_vec(coords, self.c1_moduli)
        kappa1 = np.zeros(self.module.A.order, dtype=np.int64)
        kappa2 = np.zeros(self.module.B.order, dtype=np.int64)
        for kind, idx in self._c1_blocks:
            off = self._c1_offset[(kind, idx)]
            if kind == "kappa1":
                kappa1[idx[0]] = self.Kp.elem(coords[off:off + self._kK])
            else:
                kappa2[idx[0]] = self.Lp.elem(coords[off:off + self._kL])
        return OneCochain(kappa1, kappa2)

    # -- matrix assembly ---------------------------------------------------

    def _add_term(self, matrix: np.ndarray, row: int, sign: int,
                  coeff: np.ndarray, kind: str, idx: tuple, offsets: dict):
        if any(i == 0 for i in idx):
            return  # the cochain vanishes there; no coordinates exist
        off = offsets[(kind, idx)]
        h, w = coeff.shape
        matrix[row:row + h, off:off + w] += sign * coeff

    def _build_coboundary(self) -> np.ndarray:
        m = self.module
        A, B = m.A, m.B
        D = zeros_matrix(self.c2_dim, self.c1_dim)
        for kind, idx in self._c2_blocks:
            row = self._c2_offset[(kind, idx)]
            add = functools.partial(self._add_term, D, row,
                                    offsets=self._c1_offset)
            if kind == "tau1":
                a1, a2 = idx
                add(+1, self._IK, "kappa1", (a2,))
                add(+1, self._mu[a2], "kappa1", (a1,))
                add(-1, self._IK, "kappa1", (A.mul(a1, a2),))
            elif kind == "tau2":
                b1, b2 = idx
                add(+1, self._IL, "kappa2", (b2,))
                add(+1, self._sigma[b2], "kappa2", (b1,))
                add(-1, self._IL, "kappa2", (B.mul(b1, b2),))
            elif kind == "rho":
                a, b = idx
                add(+1, self._nu[b] @ self._f[a], "kappa2", (b,))
                add(+1, self._nu[b], "kappa1", (a,))
                add(-1, self._IK, "kappa1", (m.beta(b, a),))
            else:  # chi
                a = idx[0]
                Ta = int(m.T[a])
                add(+1, self._S @ self._nu_inv[Ta], "kappa1", (a,))
                add(-1, self._IL, "kappa2", (Ta,))
        return D

    def _build_constraints(self) -> Tuple[np.ndarray, list, tuple]:
        m = self.module
        A, B = m.A, m.B
        instances: List[Tuple[str, tuple, AbelianPresentation]] = []
        nd_a = range(1, A.order)
        nd_b = range(1, B.order)
        instances += [("cocycle1", (a1, a2, a3), self.Kp)
                      for a1 in nd_a for a2 in nd_a for a3 in nd_a]
        instances += [("cocycle2", (b1, b2, b3), self.Lp)
                      for b1 in nd_b for b2 in nd_b for b3 in nd_b]
        instances += [("cocycle3", (a, b1, b2), self.Kp)
                      for a in nd_a for b1 in nd_b for b2 in nd_b]
        instances += [("cocycle4", (a1, a2, b), self.Kp)
                      for a1 in nd_a for a2 in nd_a for b in nd_b]
        instances += [("cocycle5", (a1, a2), self.Lp) for a1 in nd_a for a2 in nd_a]

        total_rows = sum(p.rank for _, _, p in instances)
        C = zeros_matrix(total_rows, self.c2_dim)
        blocks = []
        moduli: List[int] = []
        row = 0
        for label, idx, pres in instances:
            add = functools.partial(self._add_term, C, row, offsets=self._c2_offset)
            if label == "cocycle1":
                a1, a2, a3 = idx
                add(+1, self._IK, "tau1", (a2, a3))
                add(+1, self._IK, "tau1", (a1, A.mul(a2, a3)))
                add(-1, self._IK, "tau1", (A.mul(a1, a2), a3))
                add(-1, self._mu[a3], "tau1", (a1, a2))
            elif label == "cocycle2":
                b1, b2, b3 = idx
                add(+1, self._IL, "tau2", (b2, b3))
                add(+1, self._IL, "tau2", (b1, B.mul(b2, b3)))
                add(-1, self._IL, "tau2", (B.mul(b1, b2), b3))
                add(-1, self._sigma[b3], "tau2", (b1, b2))
            elif label == "cocycle3":
                a, b1, b2 = idx
                add(+1, self._IK, "rho", (m.beta(b2, a), b1))
                add(+1, self._nu[b1], "rho", (a, b2))
                add(-1, self._IK, "rho", (a, B.mul(b1, b2)))
                add(-1, self._nu[B.mul(b1, b2)] @ self._f[a], "tau2", (b1, b2))
            elif label == "cocycle4":
                a1, a2, b = idx
                add(+1, self._IK, "rho", (A.mul(a1, a2), b))
                add(+1, self._nu[b], "tau1", (a1, a2))
                add(-1, self._mu[m.beta(b, a2)], "rho", (a1, b))
                add(-1, self._IK, "rho", (a2, b))
                add(-1, self._IK, "tau1", (m.beta(b, a1), m.beta(b, a2)))
            else:  # cocycle5
                a1, a2 = idx
                circ = m.circ(a1, a2)
                T1, T2 = int(m.T[a1]), int(m.T[a2])
                lift = self._S @ self._nu_inv[int(m.T[circ])]
                add(+1, self._IL, "tau2", (T1, T2))
                add(+1, self._IL, "chi", (a2,))
                add(-1, self._IL, "chi", (circ,))
                add(+1, self._sigma[T2], "chi", (a1,))
                add(-1, lift, "rho", (a2, T1))
                add(-1, lift, "tau1", (a1, m.beta(T1, a2)))
                add(-1, lift @ self._nu[T1] @ self._f[a2], "chi", (a1,))
            blocks.append((label, idx, row, pres.rank, pres.factors))
            moduli.extend(pres.factors)
            row += pres.rank
        return C, blocks, tuple(moduli)

    def _assert_linearization(self):
        # Multiplying a column by its source modulus must vanish against the
        # target moduli; anything else means a condition failed to linearize.
        for j, mod in enumerate(self.c1_moduli):
            if any(reduce_vec(self.coboundary_matrix[:, j] * mod, self.c2_moduli)):
                raise AssertionError("coboundary column breaks generator order")
        for j, mod in enumerate(self.c2_moduli):
            if any(reduce_vec(self.constraint_matrix[:, j] * mod, self.constraint_moduli)):
                raise AssertionError("constraint column breaks generator order")
        if self.c1_dim and self.c2_dim and len(self.constraint_moduli):
            comp = self.constraint_matrix @ self.coboundary_matrix
            for j in range(self.c1_dim):
                if any(reduce_vec(comp[:, j], self.constraint_moduli)):
                    raise AssertionError("coboundary image violates a cocycle condition")

    # -- membership and evaluation ------------------------------------------

    def z2_violations(self, fs: FactorSystem) -> List[Tuple[str, tuple]]:
        vec = self.constraint_matrix @ self.fs_to_coords(fs)
        vec = reduce_vec(vec, self.constraint_moduli)
        out = []
        for label, idx, row, width, _ in self._con_blocks:
            if any(vec[row:row + width]):
                out.append((label, idx))
        return out

    def z2_contains(self, fs: FactorSystem) -> Tuple[bool, Optional[Tuple[str, tuple]]]:
        bad = self.z2_violations(fs)
        return (False, bad[0]) if bad else (True, None)

    def z1_contains(self, kappa: OneCochain) -> Tuple[bool, Optional[Tuple[str, tuple]]]:
        vec = self.coboundary_matrix @ self.kappa_to_coords(kappa)
        vec = reduce_vec(vec, self.c2_moduli)
        for kind, idx in self._c2_blocks:
            off = self._c2_offset[(kind, idx)]
            width = self._kK if kind in ("tau1", "rho") else self._kL
            if any(vec[off:off + width]):
                return False, (kind, idx)
        return True, None

    def coboundary(self, kappa: OneCochain) -> FactorSystem:
        """The defect quadruple of a one-cochain; always a cocycle."""
        vec = self.coboundary_matrix @ self.kappa_to_coords(kappa)
        return self.fs_from_coords(vec)

    def solve_coboundary(self, fs: FactorSystem) -> Optional[OneCochain]:
        """A one-cochain whose coboundary is fs, or None."""
        sol = solve_with_snf(self._coboundary_snf(), self.fs_to_coords(fs))
        if sol is None:
            return None
        return self.kappa_from_coords(sol[: self.c1_dim])

    @functools.lru_cache(maxsize=None)
    def _coboundary_snf(self):
        stacked = np.concatenate(
            [self.coboundary_matrix, _diag(self.c2_moduli)], axis=1)
        return smith_normal_form(stacked)

    # -- the four groups -----------------------------------------------------

    @functools.lru_cache(maxsize=None)
    def z1(self) -> SubgroupPresentation:
        gens = _kernel_subgroup_cols(self.coboundary_matrix, self.c1_dim, self.c2_moduli)
        return SubgroupPresentation(self.c1_moduli, gens)

    @functools.lru_cache(maxsize=None)
    def z2(self) -> SubgroupPresentation:
        gens = _kernel_subgroup_cols(self.constraint_matrix, self.c2_dim,
                                     self.constraint_moduli)
        return SubgroupPresentation(self.c2_moduli, gens)

    @functools.lru_cache(maxsize=None)
    def b2(self) -> SubgroupPresentation:
        return SubgroupPresentation(self.c2_moduli, self.coboundary_matrix)

    @functools.lru_cache(maxsize=None)
    def h2(self) -> SubquotientPresentation:
        gens = _kernel_subgroup_cols(self.constraint_matrix, self.c2_dim,
                                     self.constraint_moduli)
        return SubquotientPresentation(self.c2_moduli, gens, self.coboundary_matrix)

    def class_of(self, fs: FactorSystem) -> CohomologyClass:
        coords = self.h2().class_coords(self.fs_to_coords(fs))
        if coords is None:
            member, witness = self.z2_contains(fs)
            raise RRBError("NotACocycle",
                           f"not a cocycle: condition {witness[0]} fails at {witness[1]}"
                           if not member else "lattice membership failed")
        return CohomologyClass(self, coords)

    def zero_class(self) -> CohomologyClass:
        return CohomologyClass(self, tuple(0 for _ in self.h2().factors))

    def class_representative(self, cls: CohomologyClass) -> FactorSystem:
        return self.fs_from_coords(self.h2().representative(cls.coords))

    def h2_classes(self) -> Iterator[CohomologyClass]:
        for v in iter_vectors(self.h2().factors):
            yield CohomologyClass(self, v)

    def z2_elements(self) -> Iterator[FactorSystem]:
        """All cocycles (desk scale only)."""
        for vec in self.z2().elements():
            yield self.fs_from_coords(vec)

    def z1_elements(self) -> Iterator[OneCochain]:
        for vec in self.z1().elements():
            yield self.kappa_from_coords(vec)


def _diag(moduli: Sequence[int]) -> np.ndarray:
    n = len(moduli)
    D = zeros_matrix(n, n)
    for i, m in enumerate(moduli):
        D[i, i] = int(m)
    return D


def _kernel_subgroup_cols(matrix: np.ndarray, src_dim: int,
                          dst_moduli: Sequence[int]) -> np.ndarray:
    """Generators of {x : matrix @ x == 0 modulo dst_moduli}."""
    stacked = np.concatenate([matrix, _diag(dst_moduli)], axis=1)
    ker = kernel_basis(stacked)
    return ker[:src_dim, :] if ker.shape[1] else zeros_matrix(src_dim, 0)


@functools.lru_cache(maxsize=None)
def cochain_complex(module: RRBModule) -> CochainComplex:
    return CochainComplex(module)


# -- spec-level operations ---------------------------------------------------

def delta1_sigma(chi: Sequence[int], module: RRBModule) -> np.ndarray:
    """delta(chi)(a1, a2) = chi(a2) - chi(a1 o a2) + sigma_{T(a2)}(chi(a1))."""
    descended_operation(module.quotient)  # the twisted product must be a group
    A, L = module.A, module.L
    chi = np.asarray(chi, dtype=np.int64)
    sigma = module.action.sigma
    out = np.zeros((A.order, A.order), dtype=np.int64)
    for a1 in A.elements():
        for a2 in A.elements():
            circ = module.circ(a1, a2)
            val = L.mul(int(chi[a2]), L.inv(int(chi[circ])))
            out[a1, a2] = L.mul(val, int(sigma[module.T[a2], chi[a1]]))
    return out


def z1_group(module: RRBModule) -> SubgroupPresentation:
    return cochain_complex(module).z1()


def z2_group(module: RRBModule) -> SubgroupPresentation:
    return cochain_complex(module).z2()


def b2_group(module: RRBModule) -> SubgroupPresentation:
    return cochain_complex(module).b2()


def h2_group(module: RRBModule) -> SubquotientPresentation:
    return cochain_complex(module).h2()


def coboundary_1(kappa: OneCochain, module: RRBModule) -> FactorSystem:
    return cochain_complex(module).coboundary(kappa)


def z2_contains(module: RRBModule, fs: FactorSystem) -> Tuple[bool, Optional[Tuple[str, tuple]]]:
    return cochain_complex(module).z2_contains(fs)


def classical_h2_check(A_group: FiniteGroup, K_group: FiniteGroup,
                       mu: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Second cohomology of a plain group pair through the tau1 block alone.

    ``mu`` acts on the right: mu_{a1 a2} = mu_{a2} o mu_{a1}.  Returns the
    invariant factors of cocycles-mod-coboundaries for the single condition

        tau(a2,a3) + tau(a1, a2 a3) = tau(a1 a2, a3) + mu_{a3} tau(a1,a2).
    """
    Kp = AbelianPresentation(K_group)
    A = A_group
    mu = np.asarray(mu, dtype=np.int64)
    if mu.shape != (A.order, K_group.order):
        raise GroupError("LengthMismatch", "mu has the wrong shape")
    for a in A.elements():
        if not is_homomorphism(mu[a], K_group, K_group):
            raise GroupError("NotHomomorphism", f"mu[{a}] is not an endomorphism")
    for a1 in A.elements():
        for a2 in A.elements():
            if not np.array_equal(mu[A.mul(a1, a2)], mu[a2][mu[a1]]):
                raise GroupError("NotHomomorphism", "mu is not an anti-action")
    kK = Kp.rank
    nd = range(1, A.order)
    blocks = [(a1, a2) for a1 in nd for a2 in nd]
    offset = {blk: i * kK for i, blk in enumerate(blocks)}
    dim = kK * len(blocks)
    moduli = tuple(Kp.factors) * len(blocks)
    mu_mat = [Kp.perm_matrix(mu[a]) for a in A.elements()]
    IK = identity_matrix(kK)

    rows = []
    for a1 in nd:
        for a2 in nd:
            for a3 in nd:
                block_rows = zeros_matrix(kK, dim)

                def put(sign, coeff, pair):
                    if 0 in pair:
                        return
                    off = offset[pair]
                    block_rows[:, off:off + kK] += sign * coeff

                put(+1, IK, (a2, a3))
                put(+1, IK, (a1, A.mul(a2, a3)))
                put(-1, IK, (A.mul(a1, a2), a3))
                put(-1, mu_mat[a3], (a1, a2))
                rows.append(block_rows)
    C = np.concatenate(rows, axis=0) if rows else zeros_matrix(0, dim)
    con_moduli = tuple(Kp.factors) * (len(nd) ** 3)

    # Coboundaries of kappa: A -> K.
    kdim = kK * len(list(nd))
    koffset = {a: i * kK for i, a in enumerate(nd)}
    D = zeros_matrix(dim, kdim)
    for a1 in nd:
        for a2 in nd:
            row = offset[(a1, a2)]

            def put_d(sign, coeff, a):
                if a == 0:
                    return
                D[row:row + kK, koffset[a]:koffset[a] + kK] += sign * coeff

            put_d(+1, IK, a2)
            put_d(+1, mu_mat[a2], a1)
            put_d(-1, IK, A.mul(a1, a2))
    zgens = _kernel_subgroup_cols(C, dim, con_moduli)
    return SubquotientPresentation(moduli, zgens, D).factors
