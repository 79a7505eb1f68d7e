"""Finite abelian groups in invariant-factor coordinates.

The bridge between Cayley-table groups and exact linear algebra: every
abelian group gets a coordinate isomorphism onto ``Z/d_1 + ... + Z/d_k``
(written additively), and subgroups / quotients of coordinate spaces are
presented through Smith normal form.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .groups import FiniteGroup, GroupError
from .intlinalg import (
    as_int_matrix,
    identity_matrix,
    kernel_basis,
    smith_normal_form,
    solve_with_snf,
    zeros_matrix,
)


def _moduli_diag(moduli: Sequence[int]) -> np.ndarray:
    n = len(moduli)
    D = zeros_matrix(n, n)
    for i, m in enumerate(moduli):
        D[i, i] = int(m)
    return D


def reduce_vec(vec: Sequence[int], moduli: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(v) % int(m) for v, m in zip(vec, moduli))


def space_order(moduli: Sequence[int]) -> int:
    out = 1
    for m in moduli:
        out *= int(m)
    return out


def iter_vectors(moduli: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    yield from itertools.product(*(range(int(m)) for m in moduli))


class QuotientPresentation(NamedTuple):
    """Z^n modulo the column span of a relation matrix, canonicalized.

    factors: invariant factors (each >= 2, divisibility chain).
    to_coords: k x n matrix mapping an ambient vector to class coordinates
        (reduce mod factors after applying).
    lift: n x k matrix sending a class coordinate vector to an ambient
        representative.
    """

    factors: Tuple[int, ...]
    to_coords: np.ndarray
    lift: np.ndarray

    def coords(self, vec: Sequence[int]) -> Tuple[int, ...]:
        return reduce_vec(self.to_coords @ np.asarray(vec, dtype=object), self.factors)

    @property
    def order(self) -> int:
        return space_order(self.factors)


def present_quotient(n: int, relation_cols: np.ndarray) -> QuotientPresentation:
    """Present ``Z^n / colspan(relation_cols)`` (must be finite)."""
    snf = smith_normal_form(relation_cols)
    diag = snf.diagonal + [0] * (n - len(snf.diagonal))
    keep = [i for i in range(n) if diag[i] != 1]
    if any(diag[i] == 0 for i in keep):
        raise ValueError("quotient is infinite; relation matrix has deficient rank")
    factors = tuple(int(diag[i]) for i in keep)
    to_coords = snf.U[keep, :] if keep else zeros_matrix(0, n)
    lift = snf.Uinv[:, keep] if keep else zeros_matrix(n, 0)
    return QuotientPresentation(factors, to_coords, lift)


class SubgroupPresentation:
    """A subgroup of ``prod Z/moduli`` generated by given coordinate vectors."""

    def __init__(self, moduli: Sequence[int], generator_cols: np.ndarray):
        self.ambient_moduli = tuple(int(m) for m in moduli)
        n = len(self.ambient_moduli)
        r = generator_cols.shape[1]
        self._gens = generator_cols
        stacked = np.concatenate([generator_cols, _moduli_diag(self.ambient_moduli)], axis=1)
        self._member_snf = smith_normal_form(stacked)
        # Relations among the generators: coefficient vectors c with W@c = 0
        # in the ambient group.
        ker = kernel_basis(stacked)
        rel = ker[:r, :] if ker.shape[1] else zeros_matrix(r, 0)
        self._pres = present_quotient(r, rel)
        self.factors = self._pres.factors
        self.order = self._pres.order
        # Images in ambient coordinates of the presentation's generators.
        self.embedding = generator_cols @ self._pres.lift if r else zeros_matrix(n, 0)

    def membership_coefficients(self, vec: Sequence[int]) -> Optional[np.ndarray]:
        """Generator coefficients expressing vec, or None if not a member."""
        sol = solve_with_snf(self._member_snf, np.asarray(vec, dtype=object))
        if sol is None:
            return None
        return sol[: self._gens.shape[1]]

    def contains(self, vec: Sequence[int]) -> bool:
        return self.membership_coefficients(vec) is not None

    def coords(self, vec: Sequence[int]) -> Optional[Tuple[int, ...]]:
        c = self.membership_coefficients(vec)
        if c is None:
            return None
        return self._pres.coords(c)

    def element_from_coords(self, coords: Sequence[int]) -> Tuple[int, ...]:
        vec = self.embedding @ np.asarray(coords, dtype=object)
        return reduce_vec(vec, self.ambient_moduli)

    def elements(self) -> Iterator[Tuple[int, ...]]:
        """All members as ambient coordinate vectors (desk scale only)."""
        for c in iter_vectors(self.factors):
            yield self.element_from_coords(c)


class SubquotientPresentation:
    """Quotient of one presented subgroup by a smaller one, with class map."""

    def __init__(self, moduli: Sequence[int], big_cols: np.ndarray, small_cols: np.ndarray):
        self.ambient_moduli = tuple(int(m) for m in moduli)
        n = len(self.ambient_moduli)
        diag = _moduli_diag(self.ambient_moduli)
        big_lattice = np.concatenate([big_cols, diag], axis=1)
        snf = smith_normal_form(big_lattice)
        if snf.rank != n:
            raise ValueError("numerator lattice is not full rank")
        # Basis of the numerator lattice: columns d_i * Uinv[:, i].
        basis = snf.Uinv[:, :n].copy()
        for i in range(n):
            basis[:, i] = basis[:, i] * snf.D[i, i]
        self._basis_snf = smith_normal_form(basis)
        small_lattice = np.concatenate([small_cols, diag], axis=1)
        rel_cols = []
        for j in range(small_lattice.shape[1]):
            c = solve_with_snf(self._basis_snf, small_lattice[:, j])
            if c is None:
                raise ValueError("denominator lattice not contained in numerator")
            rel_cols.append(list(c))
        rel = as_int_matrix(rel_cols, ncols=n).T if rel_cols else zeros_matrix(n, 0)
        self._pres = present_quotient(n, rel)
        self._basis = basis
        self.factors = self._pres.factors
        self.order = self._pres.order

    def class_coords(self, vec: Sequence[int]) -> Optional[Tuple[int, ...]]:
        """Class of an ambient vector; None if it is not in the numerator."""
        c = solve_with_snf(self._basis_snf, np.asarray(vec, dtype=object))
        if c is None:
            return None
        return self._pres.coords(c)

    def representative(self, coords: Sequence[int]) -> Tuple[int, ...]:
        vec = self._basis @ (self._pres.lift @ np.asarray(coords, dtype=object))
        return reduce_vec(vec, self.ambient_moduli)


class AbelianPresentation:
    """Invariant-factor coordinates for an abelian FiniteGroup.

    ``factors`` is the canonical chain d_1 | d_2 | ... (each >= 2, empty for
    the trivial group); ``vec(x)`` and ``elem(v)`` convert between element
    indices and coordinate tuples.
    """

    def __init__(self, group: FiniteGroup):
        if not group.is_abelian:
            raise GroupError("NotAbelian", "invariant factors need an abelian group")
        n = group.order
        # Greedy generating set, with a word vector per element from the
        # Cayley-graph walk.  Relations: every edge g --gen_i--> g*gen_i gives
        # word(g) + e_i - word(g*gen_i) = 0, which presents the group.
        gens: List[int] = []
        words: dict = {0: ()}
        while len(words) < n:
            gens.append(min(x for x in range(n) if x not in words))
            k = len(gens)
            words = {0: (0,) * k}
            frontier = [0]
            while frontier:
                fresh = []
                for g in frontier:
                    for i, gen in enumerate(gens):
                        h = group.mul(g, gen)
                        if h not in words:
                            w = list(words[g])
                            w[i] += 1
                            words[h] = tuple(w)
                            fresh.append(h)
                frontier = fresh
        k = len(gens)
        cols: List[List[int]] = []
        for g in range(n):
            for i, gen in enumerate(gens):
                col = [a - b for a, b in zip(words[g], words[group.mul(g, gen)])]
                col[i] += 1
                cols.append(col)
        rel = as_int_matrix(cols, ncols=k).T
        pres = present_quotient(k, rel)
        self.group = group
        self.factors = pres.factors
        self._to_vec: List[Tuple[int, ...]] = [pres.coords(words[x]) for x in range(n)]
        self._elem_of = {}
        for x, v in enumerate(self._to_vec):
            if v in self._elem_of:
                raise AssertionError("coordinate map is not injective")
            self._elem_of[v] = x
        if len(self._elem_of) != space_order(self.factors):
            raise AssertionError("coordinate map is not onto the factor product")
        k = len(self.factors)
        # Elements realizing the unit coordinate vectors.
        self.generators = [self._elem_of[tuple(1 if i == j else 0 for i in range(k))]
                           for j in range(k)]

    @property
    def rank(self) -> int:
        return len(self.factors)

    def vec(self, x: int) -> Tuple[int, ...]:
        return self._to_vec[x]

    def elem(self, vec: Sequence[int]) -> int:
        return self._elem_of[reduce_vec(vec, self.factors)]

    def perm_matrix(self, perm: Sequence[int]) -> np.ndarray:
        """Matrix of an automorphism given as an element permutation."""
        return self.hom_matrix(self, perm)

    def hom_matrix(self, codomain: "AbelianPresentation", mapping: Sequence[int]) -> np.ndarray:
        """Matrix (codomain.rank x rank) of a homomorphism given elementwise."""
        M = zeros_matrix(codomain.rank, self.rank)
        for j, g in enumerate(self.generators):
            img = codomain.vec(int(mapping[g]))
            for i in range(codomain.rank):
                M[i, j] = img[i]
        return M

    def __repr__(self):
        return f"AbelianPresentation(factors={list(self.factors)})"


def abelian_presentation(G: FiniteGroup) -> AbelianPresentation:
    """Invariant-factor decomposition with explicit coordinate isomorphism."""
    return AbelianPresentation(G)


class FinAbHom:
    """Homomorphism between presented finite abelian groups, as a matrix."""

    def __init__(self, domain: AbelianPresentation, codomain: AbelianPresentation,
                 matrix: Sequence[Sequence[int]]):
        M = as_int_matrix(matrix, ncols=domain.rank)
        if M.shape != (codomain.rank, domain.rank):
            raise ValueError(f"matrix shape {M.shape} does not match "
                             f"({codomain.rank}, {domain.rank})")
        # d_i times the i-th column must vanish in the codomain.
        for j, d in enumerate(domain.factors):
            col = reduce_vec(M[:, j] * d, codomain.factors)
            if any(col):
                raise ValueError(f"column {j} does not respect generator order {d}")
        for i in range(codomain.rank):
            for j in range(domain.rank):
                M[i, j] %= codomain.factors[i]
        self.domain = domain
        self.codomain = codomain
        self.matrix = M

    def apply_vec(self, vec: Sequence[int]) -> Tuple[int, ...]:
        return reduce_vec(self.matrix @ np.asarray(vec, dtype=object), self.codomain.factors)

    def apply_elem(self, x: int) -> int:
        return self.codomain.elem(self.apply_vec(self.domain.vec(x)))


class KernelImageCokernel(NamedTuple):
    kernel_factors: Tuple[int, ...]
    kernel_embedding: np.ndarray
    image_factors: Tuple[int, ...]
    image_embedding: np.ndarray
    cokernel_factors: Tuple[int, ...]
    cokernel_class_of: Callable[[Sequence[int]], Tuple[int, ...]]

    @property
    def kernel_order(self) -> int:
        return space_order(self.kernel_factors)

    @property
    def image_order(self) -> int:
        return space_order(self.image_factors)

    @property
    def cokernel_order(self) -> int:
        return space_order(self.cokernel_factors)


def hom_kernel_image_quotient(h: FinAbHom) -> KernelImageCokernel:
    """Kernel, image, and cokernel of a FinAbHom via Smith normal form.

    Kernel and image come as canonical factor lists plus embedding matrices
    (columns are generator images in domain / codomain coordinates); the
    cokernel comes with a class-of map on codomain coordinate vectors.
    """
    dom, cod = h.domain, h.codomain
    # Kernel: x with M@x = 0 in the codomain, i.e. M@x + diag(cod)*y = 0.
    stacked = np.concatenate([h.matrix, _moduli_diag(cod.factors)], axis=1)
    ker = kernel_basis(stacked)
    xpart = ker[: dom.rank, :] if ker.shape[1] else zeros_matrix(dom.rank, 0)
    kernel_sub = SubgroupPresentation(dom.factors, xpart)
    image_sub = SubgroupPresentation(cod.factors, h.matrix)
    coker = present_quotient(len(cod.factors), stacked)

    def class_of(vec: Sequence[int]) -> Tuple[int, ...]:
        return coker.coords(vec)

    return KernelImageCokernel(
        kernel_sub.factors, kernel_sub.embedding,
        image_sub.factors, image_sub.embedding,
        coker.factors, class_of,
    )
