"""Twisted group algebras as concrete semisimple algebras.

The algebra C^a G is realized on the basis {u_g} with u_g u_h = a(g,h) u_gh.
Construction is exact: a basis element acts on the regular representation by
a permutation with one root of unity per column, so no floating error enters
before eigendecomposition.

The block oracle works in two exact-first stages.  The center is found
symbolically: a vector sum(x_g u_g) is central iff the coefficients are
constant along twisted conjugacy classes, and a class supports a central
vector iff its conjugation phases are consistent around every loop.  The
number of simple blocks is therefore known exactly before any numerics.
Floating point enters only to split a random self-adjoint central sample
into eigenprojectors, which are then certified against the exact center
dimension and the integer identity sum(d_i^2) = |G|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cocycles import CocycleTable
from .errors import CertificationError, DomainError, SizeBoundError, ValidationError
from .groups import FiniteGroup, Subgroup

TOL_CLUSTER = 1e-9      # eigenvalue clustering
TOL_ROUND = 1e-6        # integer certification guard
TOL_PHASE_EQ = 1e-7     # complex phases considered equal
TOL_PHASE_NEQ = 1e-3    # complex phases considered distinct; in between is ambiguous
MAX_ATTEMPTS = 8
DEFAULT_NUMERIC_BOUND = 256


@dataclass(frozen=True)
class CenterClass:
    """A twisted conjugacy class; phases is None when the class supports no
    central vector (some conjugation loop has a non-trivial phase)."""

    elements: tuple[int, ...]
    phases: np.ndarray | None


@dataclass(frozen=True)
class IrrPoint:
    """A primitive central idempotent standing for one irreducible type."""

    coeffs: np.ndarray
    dim: int
    index: int

    def __eq__(self, other):
        return isinstance(other, IrrPoint) and self.index == other.index and self.dim == other.dim

    def __hash__(self):
        return hash((self.index, self.dim))


@dataclass(frozen=True)
class WedderburnData:
    """Certified block data: dims is the sorted multiset with sum of squares
    exactly the group order; residual is the worst idempotency defect."""

    dims: tuple[int, ...]
    blocks: tuple[IrrPoint, ...]
    residual: float
    seed: int


class TwistedAlgebra:
    """C^a G for a finite group G and a normalized 2-cocycle a.

    The cocycle is either a :class:`CocycleTable` (exact exponents, the
    preferred form) or a complex matrix of unit-modulus values, which is how
    obstruction cocycles produced by intertwiner gauges arrive.
    """

    def __init__(self, group: FiniteGroup, cocycle, bound: int = DEFAULT_NUMERIC_BOUND):
        if group.n > bound:
            raise SizeBoundError(f"twisted algebra bounded at order {bound}, group has {group.n}")
        self.group = group
        self.n = group.n
        if isinstance(cocycle, CocycleTable):
            if cocycle.group != group:
                raise DomainError("cocycle lives on a different group")
            self.exact = True
            self.cocycle = cocycle
            self.phases = cocycle.value_matrix()
        else:
            values = np.asarray(cocycle, dtype=np.complex128)
            if values.shape != (group.n, group.n):
                raise ValidationError("complex cocycle table has the wrong shape")
            self.exact = False
            self.cocycle = None
            self.phases = values
            self._validate_complex()

    def _validate_complex(self):
        W, mul = self.phases, self.group.table
        if np.max(np.abs(np.abs(W) - 1.0)) > TOL_PHASE_EQ:
            raise ValidationError("cocycle values must be unit modulus")
        if np.max(np.abs(W[0] - 1)) > TOL_PHASE_EQ or np.max(np.abs(W[:, 0] - 1)) > TOL_PHASE_EQ:
            raise ValidationError("cocycle is not normalized at the identity")
        left = W[:, :, None] * W[mul, :]
        right = W[None, :, :] * W[:, mul]
        if np.max(np.abs(left - right)) > TOL_PHASE_EQ:
            raise ValidationError("2-cocycle identity fails beyond tolerance")

    # -- scalar bookkeeping -------------------------------------------------

    def inv_phase(self, g: int) -> complex:
        """The scalar s with u_g^{-1} = s * u_{g^{-1}}."""
        ginv = self.group.inv(g)
        return 1.0 / self.phases[g, ginv]

    def kappa(self, h: int, g: int) -> complex:
        """The scalar with u_h u_g u_h^{-1} = kappa(h,g) * u_{h g h^{-1}}."""
        G = self.group
        hg = G.mul(h, g)
        hinv = G.inv(h)
        return self.phases[h, g] * self.phases[hg, hinv] / self.phases[h, hinv]

    def kappa_exp(self, h: int, g: int) -> int:
        """Exact exponent version of :meth:`kappa` (exact algebras only)."""
        c, m = self.cocycle.exps, self.cocycle.scale
        G = self.group
        hg = G.mul(h, g)
        hinv = G.inv(h)
        return int(c[h, g] + c[hg, hinv] - c[h, hinv]) % m

    # -- elements and representations ----------------------------------------

    def u_coeffs(self, g: int) -> np.ndarray:
        v = np.zeros(self.n, dtype=np.complex128)
        v[g] = 1.0
        return v

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.complex128)
        mul = self.group.table
        for g in range(self.n):
            if x[g] != 0:
                np.add.at(out, mul[g], x[g] * y * self.phases[g])
        return out

    def left_regular(self, x: np.ndarray) -> np.ndarray:
        """The matrix of left multiplication by sum(x_g u_g)."""
        out = np.zeros((self.n, self.n), dtype=np.complex128)
        mul = self.group.table
        cols = np.arange(self.n)
        for g in range(self.n):
            if x[g] != 0:
                out[mul[g], cols] += x[g] * self.phases[g]
        return out

    def u_matrix(self, g: int) -> np.ndarray:
        return self.left_regular(self.u_coeffs(g))

    def right_regular(self, x: np.ndarray) -> np.ndarray:
        """The matrix of right multiplication by sum(x_h u_h)."""
        out = np.zeros((self.n, self.n), dtype=np.complex128)
        mul = self.group.table
        for h in range(self.n):
            if x[h] != 0:
                out[mul[:, h], np.arange(self.n)] += x[h] * self.phases[:, h]
        return out

    # -- exact center --------------------------------------------------------

    def center_classes(self) -> list[CenterClass]:
        """Twisted conjugacy classes with propagated coefficient phases.

        A central vector must satisfy x_{hgh^-1} = kappa(h,g) x_g; phases are
        propagated over each class and every edge is re-checked, so a class
        is kept exactly when all its loops are phase-consistent.
        """
        G, n = self.group, self.n
        seen = [False] * n
        out: list[CenterClass] = []
        for g0 in range(n):
            if seen[g0]:
                continue
            if self.exact:
                cls = self._class_exact(g0)
            else:
                cls = self._class_complex(g0)
            for x in cls.elements:
                seen[x] = True
            out.append(cls)
        return out

    def _class_exact(self, g0: int) -> CenterClass:
        G = self.group
        m = self.cocycle.scale
        expo = {g0: 0}
        queue = [g0]
        consistent = True
        while queue:
            g = queue.pop()
            for h in range(self.n):
                g2 = G.conjugate(h, g)
                e2 = (expo[g] + self.kappa_exp(h, g)) % m
                if g2 in expo:
                    if expo[g2] != e2:
                        consistent = False
                else:
                    expo[g2] = e2
                    queue.append(g2)
        elems = tuple(sorted(expo))
        if not consistent:
            return CenterClass(elems, None)
        phases = np.exp(2j * np.pi * np.array([expo[g] for g in elems]) / m)
        return CenterClass(elems, phases)

    def _class_complex(self, g0: int) -> CenterClass:
        G = self.group
        val = {g0: 1.0 + 0j}
        queue = [g0]
        consistent = True
        while queue:
            g = queue.pop()
            for h in range(self.n):
                g2 = G.conjugate(h, g)
                v2 = val[g] * self.kappa(h, g)
                if g2 in val:
                    gap = abs(val[g2] - v2)
                    if gap > TOL_PHASE_NEQ:
                        consistent = False
                    elif gap > TOL_PHASE_EQ:
                        raise CertificationError(
                            f"ambiguous conjugation phase (gap {gap:.2e}) on class of {g0}"
                        )
                else:
                    val[g2] = v2
                    queue.append(g2)
        elems = tuple(sorted(val))
        if not consistent:
            return CenterClass(elems, None)
        return CenterClass(elems, np.array([val[g] for g in elems], dtype=np.complex128))

    def center_dimension(self) -> int:
        return sum(1 for c in self.center_classes() if c.phases is not None)

    def _center_basis(self) -> list[np.ndarray]:
        basis = []
        for c in self.center_classes():
            if c.phases is None:
                continue
            v = np.zeros(self.n, dtype=np.complex128)
            v[list(c.elements)] = c.phases
            basis.append(v)
        return basis

    # -- block oracle ----------------------------------------------------------

    def wedderburn(self, seed: int = 0, tol: float = TOL_CLUSTER) -> WedderburnData:
        """Simple-block dimensions and primitive central idempotents.

        A random self-adjoint central sample is eigensplit; the cluster count
        must reproduce the exact center dimension and every block trace must
        round to a square within the guard band, otherwise a fresh
        deterministic draw is made.  Failures raise, never degrade.
        """
        basis = self._center_basis()
        k = len(basis)
        rng = np.random.default_rng(seed)
        last = "no attempt"
        for _ in range(MAX_ATTEMPTS):
            # complex draws keep conjugate blocks apart after self-adjointing
            coeffs = rng.standard_normal(k) + 1j * rng.standard_normal(k)
            z = sum(c * v for c, v in zip(coeffs, basis))
            Z = self.left_regular(z)
            Z = Z + Z.conj().T
            evals, evecs = np.linalg.eigh(Z)
            clusters = _cluster(evals, tol * max(1.0, float(np.max(np.abs(evals)))))
            if len(clusters) != k:
                last = f"cluster count {len(clusters)} != center dimension {k}"
                continue
            points, dims, ok = [], [], True
            for ci, idx in enumerate(clusters):
                V = evecs[:, idx]
                P = V @ V.conj().T
                tr = float(np.trace(P).real)
                d = np.sqrt(max(tr, 0.0))
                di = int(round(d))
                if di < 1 or abs(d - di) > TOL_ROUND:
                    ok, last = False, f"block trace {tr:.12f} does not certify as a square"
                    break
                dims.append(di)
                points.append(IrrPoint(P[:, 0].copy(), di, ci))
            if not ok:
                continue
            if sum(d * d for d in dims) != self.n:
                last = "sum of squared dimensions misses the group order"
                continue
            residual = 0.0
            for p in points:
                defect = self.multiply(p.coeffs, p.coeffs) - p.coeffs
                residual = max(residual, float(np.max(np.abs(defect))))
            if residual > tol * 10:
                last = f"idempotent residual {residual:.2e} beyond tolerance"
                continue
            order = sorted(range(len(points)), key=lambda i: (dims[i], i))
            blocks = tuple(
                IrrPoint(points[i].coeffs, points[i].dim, rank) for rank, i in enumerate(order)
            )
            return WedderburnData(tuple(sorted(dims)), blocks, residual, seed)
        raise CertificationError(f"block oracle failed after {MAX_ATTEMPTS} attempts: {last}")

    # -- irreducible representation extraction ---------------------------------

    def irreducible_rep(self, point: IrrPoint, seed: int = 0) -> np.ndarray:
        """Unitary matrices rho[g] with rho[g] rho[h] = a(g,h) rho[gh].

        One copy of the simple module is cut out of the block by the
        eigenspace of a random self-adjoint right multiplication, which
        commutes with the left action.
        """
        d = point.dim
        P = self.left_regular(point.coeffs)
        U, s, _ = np.linalg.svd(P)
        rank = int(np.sum(s > 0.5))
        if rank != d * d:
            raise CertificationError(f"block projector rank {rank} != d^2 = {d * d}")
        B = U[:, :rank]
        rng = np.random.default_rng(seed)
        last = "no attempt"
        for _ in range(MAX_ATTEMPTS):
            raw = rng.standard_normal(self.n) + 1j * rng.standard_normal(self.n)
            R = self.right_regular(raw)
            M = B.conj().T @ (R + R.conj().T) @ B
            evals, evecs = np.linalg.eigh(M)
            clusters = _cluster(evals, TOL_CLUSTER * max(1.0, float(np.max(np.abs(evals)))))
            chosen = next((idx for idx in clusters if len(idx) == d), None)
            if chosen is None:
                last = "no eigencluster of the module dimension"
                continue
            Q = B @ evecs[:, chosen]
            rho = np.empty((self.n, d, d), dtype=np.complex128)
            for g in range(self.n):
                rho[g] = Q.conj().T @ self.u_matrix(g) @ Q
            if self._rep_defect(rho) > 1e-8:
                last = "extracted matrices fail the twisted product law"
                continue
            return rho
        raise CertificationError(f"irreducible extraction failed: {last}")

    def _rep_defect(self, rho: np.ndarray) -> float:
        G = self.group
        worst = 0.0
        for g in range(self.n):
            for h in range(self.n):
                diff = rho[g] @ rho[h] - self.phases[g, h] * rho[G.mul(g, h)]
                worst = max(worst, float(np.max(np.abs(diff))))
        return worst


def _cluster(sorted_vals: np.ndarray, tol: float) -> list[list[int]]:
    clusters: list[list[int]] = []
    for i, v in enumerate(sorted_vals):
        if clusters and abs(v - sorted_vals[clusters[-1][-1]]) <= tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


# -- idempotents of a subalgebra under the ambient conjugation ----------------


def central_idempotents(G_N: FiniteGroup, alpha_N: CocycleTable, seed: int = 0) -> tuple[IrrPoint, ...]:
    """Primitive central idempotents of C^a N, one per irreducible type."""
    return TwistedAlgebra(G_N, alpha_N).wedderburn(seed=seed).blocks


def conjugate_idempotent_coeffs(
    A: TwistedAlgebra, N_elems: tuple[int, ...], g: int, coeffs: np.ndarray
) -> np.ndarray:
    """Coefficients of u_g * iota * u_g^{-1} for iota supported on N."""
    pos = {h: i for i, h in enumerate(N_elems)}
    out = np.zeros(len(N_elems), dtype=np.complex128)
    for i, h in enumerate(N_elems):
        if coeffs[i] == 0:
            continue
        target = A.group.conjugate(g, h)
        if target not in pos:
            raise DomainError("conjugation leaves the subgroup; N must be normal")
        out[pos[target]] += coeffs[i] * A.kappa(g, h)
    return out


def match_idempotent(coeffs: np.ndarray, points: tuple[IrrPoint, ...], tol: float = TOL_ROUND) -> IrrPoint:
    """The unique point within tolerance; ambiguity raises, never guesses."""
    hits = [p for p in points if float(np.max(np.abs(p.coeffs - coeffs))) <= tol]
    if len(hits) != 1:
        raise CertificationError(f"idempotent match found {len(hits)} candidates within {tol}")
    return hits[0]


def conjugate_idempotent(
    A: TwistedAlgebra, N: Subgroup, g: int, point: IrrPoint, points: tuple[IrrPoint, ...]
) -> IrrPoint:
    """The idempotent of the g-twisted module, certified against the known set."""
    raw = conjugate_idempotent_coeffs(A, N.elements, g, point.coeffs)
    return match_idempotent(raw, points)


def same_orbit(
    A: TwistedAlgebra,
    N: Subgroup,
    p1: IrrPoint,
    p2: IrrPoint,
    points: tuple[IrrPoint, ...],
) -> bool:
    """Whether two idempotents are conjugate under the ambient group.

    Both the explicit conjugation orbit and the two-sided non-vanishing
    criterion iota2 * C^a G * iota1 != 0 are evaluated; they must agree.
    """
    by_conj = any(
        conjugate_idempotent(A, N, g, p1, points) == p2 for g in A.group.elements()
    )
    emb1 = _embed(A, N.elements, p1.coeffs)
    emb2 = _embed(A, N.elements, p2.coeffs)
    by_product = False
    for g in A.group.elements():
        mid = A.multiply(emb2, A.u_coeffs(g))
        val = A.multiply(mid, emb1)
        if float(np.max(np.abs(val))) > TOL_ROUND:
            by_product = True
            break
    if by_conj != by_product:
        raise CertificationError("orbit criteria disagree: conjugation vs non-vanishing product")
    return by_conj


def _embed(A: TwistedAlgebra, N_elems: tuple[int, ...], coeffs: np.ndarray) -> np.ndarray:
    out = np.zeros(A.n, dtype=np.complex128)
    out[list(N_elems)] = coeffs
    return out
