"""Isotropic subgroups, Lagrangians, and the bridge to bijective 1-cocycles.

A subgroup is isotropic when the cocycle class restricts trivially to it;
a Lagrangian is a normal isotropic subgroup of square-root order under a
non-degenerate class.  Quotients by Lagrangians are exactly the elementary
crossed products, which ties twisted gradings to the groups admitting
bijective 1-cocycles (set-theoretic Yang-Baxter solutions).

Every verdict is double-certified: the exact coboundary solver and the
numeric block oracle must agree, and every theorem-level equivalence is
computed on both sides and compared, raising on any disagreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cocycles import CocycleTable, bicharacter_of, is_cohomologically_trivial, is_nondegenerate
from .errors import DomainError, SizeBoundError, TheoremCheckError
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    _closure,
    _extend_hom,
    _generating_sequence,
    are_isomorphic,
    cyclic,
    direct_product,
    quotient,
    subgroups,
)
from .mackey import MackeyDecomposition, is_ecp_quotient, is_elementary_quotient, mackey_decompose
from .twisted import TwistedAlgebra


@dataclass(frozen=True)
class IsotropyReport:
    subgroup: Subgroup
    isotropic: bool
    witness: object          # OneCochain when the class is trivial, else None
    one_dim_blocks: int
    block_dims: tuple[int, ...]


@dataclass(frozen=True)
class LagrangianReport:
    subgroup: Subgroup
    isotropic: bool
    witness: object
    size_ok: bool
    normal: bool

    @property
    def is_lagrangian(self) -> bool:
        return self.isotropic and self.size_ok


def is_isotropic(G: FiniteGroup, alpha: CocycleTable, H: Subgroup, seed: int = 0) -> IsotropyReport:
    """Whether the class restricts trivially to H, with two certificates.

    The exact certificate solves the coboundary system over Z/m; the numeric
    one asks the block oracle for a one-dimensional block of the restricted
    algebra (existence of a one-dimensional module is equivalent to a
    trivial restricted class, for abelian and non-abelian H alike).  The two
    must agree.
    """
    if alpha.group != G:
        raise DomainError("cocycle lives on a different group")
    rest, H_group, _ = alpha.restrict(H)
    trivial, witness = is_cohomologically_trivial(rest)
    dims = TwistedAlgebra(H_group, rest).wedderburn(seed=seed).dims
    ones = sum(1 for d in dims if d == 1)
    oracle_verdict = ones >= 1
    if H_group.is_abelian:
        zero_form = bicharacter_of(rest).is_zero()
        if zero_form != trivial:
            raise TheoremCheckError("bicharacter and coboundary certificates disagree")
        if trivial != (ones == H_group.n):
            raise TheoremCheckError("abelian isotropy: oracle disagrees with exact solve")
    if trivial != oracle_verdict:
        raise TheoremCheckError("isotropy certificates disagree (exact vs oracle)")
    return IsotropyReport(H, trivial, witness, ones, dims)


def lagrangian_scan(
    G: FiniteGroup, alpha: CocycleTable, normal_only: bool = False, seed: int = 0
) -> list[LagrangianReport]:
    """All (normal) subgroups of order sqrt|G| with isotropy verdicts.

    Exhaustive over the subgroup lattice, so completeness is by construction.
    """
    root = math.isqrt(G.n)
    if root * root != G.n:
        raise DomainError(f"|G| = {G.n} is not a perfect square")
    if not is_nondegenerate(G, alpha, seed=seed):
        raise DomainError("lagrangian_scan expects a non-degenerate class")
    out = []
    for H in subgroups(G):
        if H.order != root:
            continue
        normal = H.is_normal()
        if normal_only and not normal:
            continue
        rep = is_isotropic(G, alpha, H, seed=seed)
        out.append(LagrangianReport(H, rep.isotropic, rep.witness, True, normal))
    return out


def crossed_product_iff_lagrangian(
    G: FiniteGroup, alpha: CocycleTable, N: Subgroup, seed: int = 0, dec: MackeyDecomposition | None = None
) -> bool:
    """ECP verdict of the quotient equals the Lagrangian verdict of N.

    Both sides are computed independently; disagreement is an implementation
    bug and raises.  Returns the shared verdict.
    """
    if dec is None:
        dec = mackey_decompose(G, alpha, N, seed=seed)
    ecp = is_ecp_quotient(dec)
    lag = N.order * N.order == G.n and is_isotropic(G, alpha, N, seed=seed).isotropic
    if ecp != lag:
        raise TheoremCheckError(
            f"biconditional violated on N of order {N.order}: ECP={ecp}, Lagrangian={lag}"
        )
    return ecp


@dataclass(frozen=True)
class MaximalElementaryReport:
    group: FiniteGroup
    elementary_normals: tuple[Subgroup, ...]
    maximal_normals: tuple[Subgroup, ...]
    lagrangian_normals: tuple[Subgroup, ...]
    quotient_groups: tuple[FiniteGroup, ...]
    unique_maximal_class: bool
    decompositions: dict


def maximal_elementary_quotients(
    A: FiniteGroup, alpha: CocycleTable, seed: int = 0, precomputed: dict | None = None
) -> MaximalElementaryReport:
    """Maximal elementary quotient classes of a non-degenerate abelian class.

    Scans every subgroup (all are normal), decides elementarity through the
    decomposition, takes inclusion-minimal kernels (which are the maximal
    classes under the quotient order), and compares the result against the
    Lagrangian characterization.  Uniqueness is isomorphism of all maximal
    quotient groups, which determines the elementary crossed product class.
    """
    if not A.is_abelian:
        raise DomainError("maximal_elementary_quotients expects an abelian group")
    if not is_nondegenerate(A, alpha, seed=seed):
        raise DomainError("expects a non-degenerate class")
    decs: dict = {}
    elementary = []
    for N in subgroups(A):
        if precomputed is not None and N.elements in precomputed:
            dec = precomputed[N.elements]
        else:
            dec = mackey_decompose(A, alpha, N, seed=seed)
        decs[N.elements] = dec
        if is_elementary_quotient(dec):
            elementary.append(N)
    elem_sets = [set(N.elements) for N in elementary]
    maximal = [
        N
        for i, N in enumerate(elementary)
        if not any(j != i and elem_sets[j] < elem_sets[i] for j in range(len(elementary)))
    ]
    lagrangians = [
        r.subgroup for r in lagrangian_scan(A, alpha, seed=seed) if r.is_lagrangian
    ]
    if {N.elements for N in maximal} != {N.elements for N in lagrangians}:
        raise TheoremCheckError("maximal elementary quotients differ from Lagrangian kernels")
    for N in maximal:
        if not is_ecp_quotient(decs[N.elements]):
            raise TheoremCheckError("a maximal elementary quotient is not a crossed product")
    quots = tuple(quotient(A, N)[0] for N in maximal)
    unique = all(
        are_isomorphic(quots[0], Q).isomorphic for Q in quots[1:]
    ) if quots else True
    return MaximalElementaryReport(
        group=A,
        elementary_normals=tuple(elementary),
        maximal_normals=tuple(maximal),
        lagrangian_normals=tuple(lagrangians),
        quotient_groups=quots,
        unique_maximal_class=unique,
        decompositions=decs,
    )


# -- nilpotent minimal-index isotropic subgroups -------------------------------


def sylow_decomposition(G: FiniteGroup) -> list[Subgroup] | None:
    """The Sylow subgroups when G is nilpotent (their internal product), else None."""
    n = G.n
    primes = _prime_factors(n)
    sylows = []
    for p in primes:
        part = 1
        m = n
        while m % p == 0:
            part *= p
            m //= p
        elems = tuple(g for g in G.elements() if _is_p_power(G.order_of(g), p))
        if len(elems) != part:
            return None
        try:
            sylows.append(Subgroup(G, elems))
        except Exception:
            return None
    total = _closure(G, set().union(*(set(s.elements) for s in sylows)) or {0})
    if len(total) != n:
        return None
    return sylows


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def minimal_isotropic(N: FiniteGroup, alpha: CocycleTable, seed: int = 0, bound: int = 32) -> Subgroup:
    """An isotropic subgroup of minimal index in a nilpotent group.

    Built per Sylow factor and multiplied together, then certified: the
    index must equal the smallest irreducible block dimension of the
    twisted algebra.
    """
    if N.n > bound:
        raise SizeBoundError(f"minimal_isotropic bounded at order {bound}")
    sylows = sylow_decomposition(N)
    if sylows is None:
        raise DomainError("group is not nilpotent (Sylow product fails)")
    chosen_gens: set[int] = set()
    for S in sylows:
        S_group, embed_map = S.as_group()
        best = None
        for K in subgroups(S_group):
            K_parent = Subgroup(N, tuple(embed_map[x] for x in K.elements))
            if is_isotropic(N, alpha, K_parent, seed=seed).isotropic:
                if best is None or K_parent.order > best.order:
                    best = K_parent
        chosen_gens |= set(best.elements)
    from .groups import generated_subgroup

    H = generated_subgroup(N, chosen_gens)
    if not is_isotropic(N, alpha, H, seed=seed).isotropic:
        raise TheoremCheckError("product of isotropic Sylow parts is not isotropic")
    min_dim = min(TwistedAlgebra(N, alpha).wedderburn(seed=seed).dims)
    if N.n // H.order != min_dim:
        raise TheoremCheckError(
            f"minimal isotropic index {N.n // H.order} != minimal block dimension {min_dim}"
        )
    return H


# -- bijective 1-cocycles -------------------------------------------------------


@dataclass(frozen=True)
class IYBWitness:
    """A verified bijective 1-cocycle from H into an abelian H-module."""

    group: FiniteGroup
    module_invariants: tuple[int, ...]
    module: FiniteGroup
    action: tuple[tuple[int, ...], ...]   # permutation of module elements per H element
    delta: tuple[int, ...]                # module element per H element

    def verify(self) -> bool:
        H, A = self.group, self.module
        if sorted(self.delta) != list(range(A.n)):
            return False
        if self.delta[0] != 0:
            return False
        for h1 in H.elements():
            act1 = self.action[h1]
            for h2 in H.elements():
                lhs = self.delta[H.mul(h1, h2)]
                rhs = A.mul(self.delta[h1], act1[self.delta[h2]])
                if lhs != rhs:
                    return False
        # the action must be by automorphisms and be a homomorphism
        for h in H.elements():
            perm = self.action[h]
            for a in A.elements():
                for b in A.elements():
                    if perm[A.mul(a, b)] != A.mul(perm[a], perm[b]):
                        return False
        for h1 in H.elements():
            for h2 in H.elements():
                p = _compose_perm(self.action[h1], self.action[h2])
                if p != self.action[H.mul(h1, h2)]:
                    return False
        return True


def _compose_perm(p, q):
    return tuple(p[x] for x in q)


@dataclass(frozen=True)
class IYBSearchResult:
    group: FiniteGroup
    witness: IYBWitness | None
    modules_tried: int
    actions_tried: int
    exhausted: bool


def _invariant_factor_sequences(n: int) -> list[tuple[int, ...]]:
    """All chains n1 | n2 | ... | nk with product n, ascending lexicographic."""
    if n == 1:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, last: int, acc: list[int]):
        if remaining == 1:
            out.append(tuple(acc))
            return
        d = max(last, 2)
        while d <= remaining:
            if (last == 1 or d % last == 0) and remaining % d == 0:
                rec(remaining // d, d, acc + [d])
            d += 1

    rec(n, 1, [])
    return sorted(set(out))


def abelian_group_from_invariants(invariants) -> FiniteGroup:
    if not invariants:
        from .groups import trivial_group

        return trivial_group()
    return direct_product(*(cyclic(k) for k in invariants))


def automorphism_group(A: FiniteGroup):
    """All automorphisms of an abelian group as permutations, plus the
    composition group (identity first)."""
    if not A.is_abelian:
        raise DomainError("automorphism enumeration implemented for abelian groups")
    gens = _generating_sequence(A) if A.n > 1 else []
    orders = A.element_orders()
    perms = set()
    if not gens:
        perms.add(tuple(range(A.n)))
    else:
        cands = [[x for x in A.elements() if orders[gens[i]] % orders[x] == 0] for i in range(len(gens))]

        def build(level, images):
            if level == len(gens):
                perm = _endomorphism_from_gen_images(A, gens, images)
                if perm is not None and len(set(perm)) == A.n:
                    perms.add(perm)
                return
            for img in cands[level]:
                build(level + 1, images + [img])

        build(0, [])
    ordered = sorted(perms)
    ident = tuple(range(A.n))
    ordered.sort(key=lambda p: (p != ident, p))
    pos = {p: i for i, p in enumerate(ordered)}
    k = len(ordered)
    table = np.empty((k, k), dtype=np.int64)
    for i, p in enumerate(ordered):
        for j, q in enumerate(ordered):
            table[i, j] = pos[_compose_perm(p, q)]
    aut_group = FiniteGroup(table, name=f"Aut({A.name or A.n})", _trusted=True)
    return aut_group, ordered


def _endomorphism_from_gen_images(A: FiniteGroup, gens, images):
    """Extend generator images multiplicatively over an abelian group."""
    known = {0: 0}
    frontier = [0]
    pairs = list(zip(gens, images))
    while frontier:
        x = frontier.pop()
        for g, img in pairs:
            xg = A.mul(x, g)
            val = A.mul(known[x], img)
            if xg in known:
                if known[xg] != val:
                    return None
            else:
                known[xg] = val
                frontier.append(xg)
    if len(known) != A.n:
        return None
    return tuple(known[x] for x in A.elements())


def iyb_witness_search(H: FiniteGroup, bound: int = 12, max_modules: int | None = None) -> IYBSearchResult:
    """Search for a bijective 1-cocycle from H into an abelian module.

    Modules are enumerated by ascending invariant factors, actions by
    generator images into the automorphism group, and cocycles by
    backtracking over generator values with the cocycle identity as
    propagation and injectivity as pruning.  A returned witness verifies
    exactly; exhaustion is a bounded certificate, not a proof of absence.
    """
    if H.n > bound:
        raise SizeBoundError(f"IYB search bounded at order {bound}")
    modules_tried = 0
    actions_tried = 0
    for invs in _invariant_factor_sequences(H.n):
        A = abelian_group_from_invariants(invs)
        modules_tried += 1
        if max_modules is not None and modules_tried > max_modules:
            break
        aut_group, aut_perms = automorphism_group(A)
        for hom in _all_homs(H, aut_group):
            actions_tried += 1
            action = tuple(aut_perms[hom.images[h]] for h in H.elements())
            delta = _bijective_cocycle(H, A, action)
            if delta is not None:
                witness = IYBWitness(H, tuple(invs), A, action, delta)
                if not witness.verify():
                    raise TheoremCheckError("IYB witness failed exact verification")
                return IYBSearchResult(H, witness, modules_tried, actions_tried, False)
    return IYBSearchResult(H, None, modules_tried, actions_tried, True)


def _all_homs(H: FiniteGroup, T: FiniteGroup):
    """Every homomorphism H -> T, by generator-image backtracking."""
    gens = _generating_sequence(H) if H.n > 1 else []
    if not gens:
        yield GroupHom(H, T, (0,) * H.n)
        return
    orders_T = T.element_orders()
    orders_H = [H.order_of(g) for g in gens]
    cands = [[t for t in T.elements() if orders_H[i] % orders_T[t] == 0] for i in range(len(gens))]

    def rec(level, pairs):
        if level == len(gens):
            mapping = _extend_hom(H, T, pairs)
            if mapping is not None and len(mapping) == H.n:
                if _hom_ok(H, T, mapping):
                    yield GroupHom(H, T, tuple(mapping[g] for g in H.elements()))
            return
        for t in cands[level]:
            trial = pairs + [(gens[level], t)]
            if _extend_hom(H, T, trial) is not None:
                yield from rec(level + 1, trial)

    yield from rec(0, [])


def _hom_ok(H, T, mapping) -> bool:
    return all(
        mapping[H.mul(a, b)] == T.mul(mapping[a], mapping[b])
        for a in H.elements()
        for b in H.elements()
    )


def _bijective_cocycle(H: FiniteGroup, A: FiniteGroup, action) -> tuple[int, ...] | None:
    """Backtracking search for a bijective delta with delta(xy) = delta(x) + x.delta(y)."""
    gens = _generating_sequence(H) if H.n > 1 else []
    if not gens:
        return (0,) if A.n == 1 else None

    def propagate(assign):
        delta = {0: 0}
        used = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g, vg in zip(gens, assign):
                xg = H.mul(x, g)
                val = A.mul(delta[x], action[x][vg])
                if xg in delta:
                    if delta[xg] != val:
                        return None
                else:
                    if val in used:
                        return None
                    delta[xg] = val
                    used.add(val)
                    frontier.append(xg)
        if len(delta) != H.n:
            return None
        return tuple(delta[h] for h in H.elements())

    def rec(level, assign):
        if level == len(gens):
            return propagate(assign)
        for a in A.elements():
            found = rec(level + 1, assign + [a])
            if found is not None:
                return found
        return None

    return rec(0, [])


def lagrangian_quotient_is_iyb(
    G: FiniteGroup, alpha: CocycleTable, N: Subgroup, seed: int = 0, bound: int = 12
) -> IYBSearchResult:
    """For a normal Lagrangian N, the quotient must admit a bijective 1-cocycle."""
    if not crossed_product_iff_lagrangian(G, alpha, N, seed=seed):
        raise DomainError("N is not a Lagrangian; the IYB consequence does not apply")
    Q, _ = quotient(G, N)
    if Q.n > bound:
        raise SizeBoundError(f"quotient order {Q.n} beyond IYB search bound {bound}")
    return iyb_witness_search(Q, bound=bound)
