"""Decomposition of quotient gradings of twisted group algebras.

Given (G, alpha, N normal), the quotient G/N-grading of C^alpha G splits
into simply-graded summands indexed by the G/N-orbits of the primitive
central idempotents of C^alpha N.  Each orbit carries an inertia subgroup, a
transversal, an elementary character d * sum(t), and an obstruction cocycle
on the inertia group.

The obstruction is computed, not postulated: an irreducible module of the
base algebra is realized explicitly, intertwiners between the module and its
coset twists are solved for, and the degree-gamma endomorphisms built from
them are composed.  Their composition scalars form the cocycle, so the
2-cocycle identity and the class are structural, while the raw table depends
on the stated deterministic gauge.

Everything the decomposition claims is cross-checked against the independent
block oracle: the ungraded Wedderburn multiset of C^alpha G must equal the
multiset reconstructed from the summands, and the quotient grading must be
equi-dimensional with every homogeneous component of dimension |N|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cocycles import CocycleTable
from .errors import CertificationError, NormalityError, TheoremCheckError
from .gradings import Character, GradingClassDescriptor, Summand, descriptor_dims
from .groups import FiniteGroup, GroupHom, Subgroup, coset_space, quotient
from .twisted import (
    IrrPoint,
    TwistedAlgebra,
    central_idempotents,
    conjugate_idempotent_coeffs,
    match_idempotent,
)

TOL_NULL = 1e-8
TOL_GAP = 1e-4
TOL_SCALAR = 1e-7


@dataclass(frozen=True)
class MackeyOrbit:
    """One simply-graded summand of the quotient grading."""

    point_indices: tuple[int, ...]
    dim: int
    inertia: Subgroup
    transversal: tuple[int, ...]
    x: Character
    delta: int
    omega: np.ndarray
    omega_group: FiniteGroup
    omega_embed: tuple[int, ...]
    omega_blocks: tuple[int, ...]
    omega_trivial: bool
    omega_nondegenerate: bool


@dataclass(frozen=True)
class MackeyDecomposition:
    group: FiniteGroup
    cocycle: CocycleTable
    normal: Subgroup
    quotient_group: FiniteGroup
    projection: GroupHom
    points: tuple[IrrPoint, ...]
    orbits: tuple[MackeyOrbit, ...]
    descriptor: GradingClassDescriptor
    oracle_dims: tuple[int, ...]
    reconstructed_dims: tuple[int, ...]
    seed: int


def mackey_decompose(
    G: FiniteGroup, alpha: CocycleTable, N: Subgroup, seed: int = 0
) -> MackeyDecomposition:
    """Full decomposition of [C^alpha G / N] with all consistency checks."""
    if not N.is_normal():
        g, h = N.violating_conjugation()
        raise NormalityError(f"N is not normal: conjugating {h} by {g} leaves N")
    Q, proj = quotient(G, N)
    cs = coset_space(G, N)
    section = cs.representatives  # minimal-index lift Q -> G, identity first

    A_G = TwistedAlgebra(G, alpha)
    alpha_N, N_group, N_embed = alpha.restrict(N)
    A_N = TwistedAlgebra(N_group, alpha_N)
    points = central_idempotents(N_group, alpha_N, seed=seed)

    perms = _conjugation_permutations(A_G, N, points, section)
    orbit_sets = _orbits(perms, len(points))

    orbits = []
    for orbit in orbit_sets:
        rep = orbit[0]
        d = points[rep].dim
        if any(points[i].dim != d for i in orbit):
            raise TheoremCheckError("orbit members disagree on module dimension")
        stab = tuple(q for q in Q.elements() if perms[q][rep] == rep)
        inertia = Subgroup(Q, stab)
        transversal = coset_space(Q, inertia).representatives
        if len(transversal) * inertia.order != Q.n:
            raise TheoremCheckError("orbit-stabilizer bookkeeping failed")
        if len(transversal) != len(orbit):
            raise TheoremCheckError("transversal size does not match orbit size")
        delta_num = G.n * G.n * d * d
        delta_den = N.order * N.order * inertia.order
        if delta_num % delta_den:
            raise TheoremCheckError("summand dimension is not an integer")
        delta = delta_num // delta_den
        x = Character.from_dict(Q, {t: d for t in transversal})
        omega, I_group, I_embed = _obstruction(
            A_G, A_N, N_embed, points[rep], inertia, section, seed
        )
        blocks = TwistedAlgebra(I_group, omega).wedderburn(seed=seed).dims
        orbits.append(
            MackeyOrbit(
                point_indices=tuple(orbit),
                dim=d,
                inertia=inertia,
                transversal=transversal,
                x=x,
                delta=delta,
                omega=omega,
                omega_group=I_group,
                omega_embed=I_embed,
                omega_blocks=blocks,
                omega_trivial=all(f == 1 for f in blocks),
                omega_nondegenerate=len(blocks) == 1,
            )
        )

    descriptor = GradingClassDescriptor(
        Q, tuple(Summand(o.x, o.inertia, o.omega) for o in orbits)
    )
    oracle = A_G.wedderburn(seed=seed).dims
    reconstructed = _reconstructed_dims(orbits)
    dec = MackeyDecomposition(
        group=G,
        cocycle=alpha,
        normal=N,
        quotient_group=Q,
        projection=proj,
        points=points,
        orbits=tuple(orbits),
        descriptor=descriptor,
        oracle_dims=oracle,
        reconstructed_dims=reconstructed,
        seed=seed,
    )
    _check_decomposition(dec)
    return dec


def _conjugation_permutations(A_G, N, points, section):
    perms = []
    for g in section:
        row = []
        for p in points:
            raw = conjugate_idempotent_coeffs(A_G, N.elements, g, p.coeffs)
            row.append(match_idempotent(raw, points).index)
        perms.append(tuple(row))
    return perms


def _orbits(perms, count):
    seen = [False] * count
    orbits = []
    for i in range(count):
        if seen[i]:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            x = frontier.pop()
            for row in perms:
                y = row[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = True
        orbits.append(tuple(sorted(orbit)))
    return orbits


def _obstruction(A_G, A_N, N_embed, point, inertia, section, seed):
    """The obstruction cocycle on the inertia group, by endomorphism composition.

    For each inertia element a degree-homogeneous endomorphism of
    C^alpha G (x) M is assembled from a solved intertwiner; composing two of
    them is a scalar multiple of the one for the product, and those scalars
    are returned as a table over the inertia group.
    """
    G = A_G.group
    N_pos = {h: i for i, h in enumerate(N_embed)}
    I_group, I_embed = inertia.as_group()
    k = I_group.n
    d = point.dim
    rho = A_N.irreducible_rep(point, seed=seed)

    intertwiners = []
    for li in range(k):
        g = section[I_embed[li]]
        rho_g = np.empty_like(rho)
        for nl in range(A_N.n):
            n_parent = N_embed[nl]
            conj_parent = G.conjugate(g, n_parent)
            rho_g[nl] = A_G.kappa(g, n_parent) * rho[N_pos[conj_parent]]
        intertwiners.append(_solve_intertwiner(rho, rho_g, d))

    q_count = len(section)
    T = []
    for li in range(k):
        g = section[I_embed[li]]
        P_inv = intertwiners[li].conj().T
        M = np.zeros((q_count * d, q_count * d), dtype=np.complex128)
        for i, t_i in enumerate(section):
            prod = G.mul(t_i, g)
            j = _coset_index(section, N_pos, G, prod)
            t_j = section[j]
            n2 = G.mul(G.inv(t_j), prod)
            phase = A_G.phases[t_i, g] / A_G.phases[t_j, n2]
            M[j * d : (j + 1) * d, i * d : (i + 1) * d] = phase * (rho[N_pos[n2]] @ P_inv)
        T.append(M)

    omega = np.empty((k, k), dtype=np.complex128)
    for a in range(k):
        for b in range(k):
            ab = I_group.mul(a, b)
            composed = T[b] @ T[a]  # apply degree-a first, then degree-b
            target = T[ab]
            denom = float(np.vdot(target, target).real)
            lam = np.vdot(target, composed) / denom
            if np.max(np.abs(composed - lam * target)) > TOL_SCALAR * max(
                1.0, float(np.max(np.abs(composed)))
            ):
                raise CertificationError("endomorphism composition is not a scalar multiple")
            if abs(abs(lam) - 1.0) > TOL_SCALAR:
                raise CertificationError(f"obstruction scalar has modulus {abs(lam):.12f}")
            omega[a, b] = lam / abs(lam)
    return omega, I_group, I_embed


def _coset_index(section, N_pos, G, element):
    for j, t in enumerate(section):
        if G.mul(G.inv(t), element) in N_pos:
            return j
    raise CertificationError("element escaped the coset decomposition")


def _solve_intertwiner(rho, rho_g, d):
    """The unique-up-to-scalar P with rho_g(n) P = P rho(n), unit-normalized.

    Row-major vectorization: (rho_g(n) (x) I - I (x) rho(n)^T) vec(P) = 0.
    The nullspace must be exactly one-dimensional and P must be unitary
    after scaling; anything else fails certification.
    """
    eye = np.eye(d)
    rows = [np.kron(rho_g[n], eye) - np.kron(eye, rho[n].T) for n in range(rho.shape[0])]
    K = np.vstack(rows)
    _, s, Vh = np.linalg.svd(K)
    scale = max(1.0, float(s[0])) if len(s) else 1.0
    null = int(np.sum(s < TOL_NULL * scale))
    if null != 1:
        raise CertificationError(f"intertwiner nullspace has dimension {null}, expected 1")
    if len(s) > 1 and s[-2] < TOL_GAP * scale:
        raise CertificationError("intertwiner nullspace is not well separated")
    P = Vh[-1].conj().reshape(d, d)
    P = P * (np.sqrt(d) / np.linalg.norm(P))
    defect = float(np.max(np.abs(P @ P.conj().T - eye)))
    if defect > TOL_SCALAR * 10:
        raise CertificationError(f"intertwiner is not unitary (defect {defect:.2e})")
    flat = P.ravel()
    lead = next((v for v in flat if abs(v) > 1e-6), None)
    if lead is None:
        raise CertificationError("intertwiner vanished after normalization")
    P = P * (abs(lead) / lead)
    return P


def _reconstructed_dims(orbits) -> tuple[int, ...]:
    out = []
    for o in orbits:
        r = o.dim * len(o.transversal)
        out.extend(r * f for f in o.omega_blocks)
    return tuple(sorted(out))


def _check_decomposition(dec: MackeyDecomposition) -> None:
    G, N, Q = dec.group, dec.normal, dec.quotient_group
    if sum(o.delta for o in dec.orbits) != G.n:
        raise TheoremCheckError("summand dimensions do not add up to |G|")
    if sum(o.dim * o.dim * len(o.transversal) for o in dec.orbits) != N.order:
        raise TheoremCheckError("orbit dimension count does not reproduce |N|")
    dims = descriptor_dims(dec.descriptor)
    values = {dims.get(q, 0) for q in Q.elements()}
    if values != {N.order}:
        raise TheoremCheckError(f"quotient grading is not constantly |N|: {sorted(values)}")
    if dec.oracle_dims != dec.reconstructed_dims:
        raise TheoremCheckError(
            f"reconstruction mismatch: oracle {dec.oracle_dims} vs summands {dec.reconstructed_dims}"
        )


# -- verdicts ----------------------------------------------------------------


def is_simple_quotient(dec: MackeyDecomposition) -> bool:
    """Graded-simple iff one orbit; asserts |N|^2 |I| = d^2 |G| when so."""
    simple = len(dec.orbits) == 1
    if simple:
        o = dec.orbits[0]
        if dec.normal.order ** 2 * o.inertia.order != o.dim ** 2 * dec.group.n:
            raise TheoremCheckError("graded-simple dimension identity failed")
    return simple


def is_elementary_quotient(dec: MackeyDecomposition) -> bool:
    """Elementary iff every inertia group is trivial."""
    return all(o.inertia.order == 1 for o in dec.orbits)


def is_ecp_quotient(dec: MackeyDecomposition) -> bool:
    from .gradings import is_elementary_crossed_product

    return is_elementary_crossed_product(dec.descriptor)
