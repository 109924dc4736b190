"""Finite groups as dense multiplication tables.

Every group lives on element indices ``0..n-1`` with ``0`` the identity, so
multiplication is a single table lookup.  Subgroups, quotients, coset
actions, abelian invariants and isomorphism testing are all done by direct
enumeration, which is complete and fast at the orders this package targets
(default bound 64).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import NormalityError, SizeBoundError, ValidationError

DEFAULT_ENUM_BOUND = 64


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a, b]`` is the index of the product ``a*b``.  Index 0 must be a
    two-sided identity; associativity and invertibility are checked at
    construction unless the table was produced by a trusted constructor.
    """

    __slots__ = ("table", "n", "inverse_table", "labels", "name", "_abelian")

    def __init__(self, table, labels=None, name=None, _trusted=False):
        table = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValidationError(f"multiplication table must be square, got shape {table.shape}")
        n = table.shape[0]
        if n == 0:
            raise ValidationError("group must have at least one element")
        self.table = table
        self.n = n
        if not _trusted:
            self._validate()
        inv = np.empty(n, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero(table[g] == 0)
            if len(hits) != 1 or table[hits[0], g] != 0:
                raise ValidationError(f"element {g} has no two-sided inverse")
            inv[g] = hits[0]
        self.inverse_table = inv
        if labels is not None:
            labels = [str(x) for x in labels]
            if len(labels) != n:
                raise ValidationError("label count does not match group order")
        self.labels = labels
        self.name = name
        self._abelian = None
        self.table.setflags(write=False)
        self.inverse_table.setflags(write=False)

    def _validate(self):
        table, n = self.table, self.n
        if table.min() < 0 or table.max() >= n:
            raise ValidationError("table entries out of range")
        if not (np.array_equal(table[0], np.arange(n)) and np.array_equal(table[:, 0], np.arange(n))):
            raise ValidationError("element 0 is not a two-sided identity")
        # left[a,b,c] = (a*b)*c, right[a,b,c] = a*(b*c)
        left = table[table, :]
        right = table[:, table]
        if not np.array_equal(left, right):
            a, b, c = (int(x) for x in np.argwhere(left != right)[0])
            raise ValidationError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")

    # -- basic operations --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse_table[a])

    def conjugate(self, g: int, a: int) -> int:
        """g * a * g^-1."""
        return int(self.table[self.table[g, a], self.inverse_table[g]])

    def commutator(self, a: int, b: int) -> int:
        """a * b * a^-1 * b^-1."""
        t = self.table
        return int(t[t[t[a, b], self.inverse_table[a]], self.inverse_table[b]])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 0
        for _ in range(k):
            out = int(self.table[out, a])
        return out

    def order_of(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def elements(self) -> range:
        return range(self.n)

    def element_orders(self) -> list[int]:
        return [self.order_of(g) for g in range(self.n)]

    def order_census(self) -> Counter:
        return Counter(self.element_orders())

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def product_word(self, word) -> int:
        out = 0
        for g in word:
            out = int(self.table[out, g])
        return out

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.n)})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as a sorted tuple of element indices."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(int(x) for x in set(self.elements)))
        object.__setattr__(self, "elements", elems)
        eset = set(elems)
        if 0 not in eset:
            raise ValidationError("subgroup does not contain the identity")
        t = self.group.table
        for a in elems:
            if int(self.group.inverse_table[a]) not in eset:
                raise ValidationError(f"subgroup not closed under inversion at {a}")
            for b in elems:
                if int(t[a, b]) not in eset:
                    raise ValidationError(f"subgroup not closed under product {a}*{b}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def is_normal(self) -> bool:
        G = self.group
        eset = set(self.elements)
        return all(G.conjugate(g, h) in eset for g in G.elements() for h in self.elements)

    def violating_conjugation(self):
        """A pair (g, h) with g h g^-1 outside the subgroup, else None."""
        G = self.group
        eset = set(self.elements)
        for g in G.elements():
            for h in self.elements:
                if G.conjugate(g, h) not in eset:
                    return g, h
        return None

    def as_group(self) -> tuple[FiniteGroup, list[int]]:
        """Return this subgroup as a standalone group plus the embedding.

        The second value maps new indices to parent indices; the identity
        stays at index 0 because parent index 0 sorts first.
        """
        elems = list(self.elements)
        pos = {g: i for i, g in enumerate(elems)}
        k = len(elems)
        table = np.empty((k, k), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                table[i, j] = pos[self.group.mul(a, b)]
        labels = [self.group.label(g) for g in elems]
        sub = FiniteGroup(table, labels=labels, _trusted=True)
        return sub, elems


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by the image of every source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.n:
            raise ValidationError("homomorphism image list has wrong length")
        if images[0] != 0:
            raise ValidationError("homomorphism does not fix the identity")
        for a in self.source.elements():
            for b in self.source.elements():
                if images[self.source.mul(a, b)] != self.target.mul(images[a], images[b]):
                    raise ValidationError(f"not multiplicative at ({a},{b})")

    def __call__(self, g: int) -> int:
        return self.images[g]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(g for g in self.source.elements() if self.images[g] == 0))

    def image_elements(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.n

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner."""
        return GroupHom(inner.source, self.target, tuple(self.images[x] for x in inner.images))


@dataclass(frozen=True)
class CosetSpace:
    """Left cosets of a subgroup: a partition with chosen representatives."""

    group: FiniteGroup
    subgroup: Subgroup
    blocks: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    block_of: tuple[int, ...]

    def __len__(self):
        return len(self.blocks)


# -- constructors ----------------------------------------------------------


def trivial_group() -> FiniteGroup:
    return FiniteGroup(np.zeros((1, 1), dtype=np.int64), labels=["e"], name="C1", _trusted=True)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError("cyclic order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    labels = ["e"] + [f"g{'' if k == 1 else k}" for k in range(1, n)]
    return FiniteGroup(table, labels=labels[:n], name=f"C{n}", _trusted=True)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    if not groups:
        return trivial_group()
    if len(groups) == 1:
        return groups[0]
    first, rest = groups[0], direct_product(*groups[1:])
    n1, n2 = first.n, rest.n
    a1, b1 = np.divmod(np.arange(n1 * n2)[:, None], n2)
    a2, b2 = np.divmod(np.arange(n1 * n2)[None, :], n2)
    table = first.table[a1, a2] * n2 + rest.table[b1, b2]
    labels = [f"({first.label(a)},{rest.label(b)})" for a in range(n1) for b in range(n2)]
    name = f"{first.name}x{rest.name}" if first.name and rest.name else None
    return FiniteGroup(table, labels=labels, name=name, _trusted=True)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: indices 0..n-1 rotations, n..2n-1 reflections."""
    if n < 1:
        raise ValidationError("dihedral parameter must be positive")
    m = 2 * n
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            ra, fa = a % n, a >= n
            rb, fb = b % n, b >= n
            if not fa:
                r, f = (ra + rb) % n, fb
            else:
                r, f = (ra - rb) % n, not fb
            table[a, b] = r + (n if f else 0)
    labels = [f"r{k}" for k in range(n)] + [f"sr{k}" for k in range(n)]
    return FiniteGroup(table, labels=labels, name=f"D{n}", _trusted=True)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters, n <= 4, elements ordered lexicographically."""
    if not 1 <= n <= 4:
        raise SizeBoundError("symmetric(n) supported for n <= 4 only")
    perms = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    k = len(perms)
    table = np.empty((k, k), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = pos[tuple(p[q[x]] for x in range(n))]
    labels = ["".join(str(x) for x in p) for p in perms]
    return FiniteGroup(table, labels=labels, name=f"S{n}", _trusted=True)


def quaternion8() -> FiniteGroup:
    """The quaternion group {1, i, j, k, -1, -i, -j, -k}."""
    # packed as (sign, axis) with axis in 1,i,j,k
    mul_axis = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    def unpack(x):
        return (1 if x < 4 else -1), x % 4
    def pack(sign, axis):
        return axis if sign == 1 else axis + 4
    table = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            sa, xa = unpack(a)
            sb, xb = unpack(b)
            s, x = mul_axis[(xa, xb)]
            table[a, b] = pack(sa * sb * s, x)
    labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    return FiniteGroup(table, labels=labels, name="Q8", _trusted=True)


def from_table(rows, labels=None, name=None) -> FiniteGroup:
    """Build and fully validate a group from a raw multiplication table."""
    return FiniteGroup(rows, labels=labels, name=name)


def make_group(spec: str) -> FiniteGroup:
    """Construct a catalog group from a short descriptor.

    Accepted forms: ``C<n>``, products like ``C2xC4``, ``D<n>`` (order 2n),
    ``S<n>`` for n <= 4, and ``Q8``.
    """
    s = spec.strip().replace(" ", "")
    if not s:
        raise ValidationError("empty group descriptor")
    if "x" in s:
        return direct_product(*(make_group(part) for part in s.split("x")))
    kind, rest = s[0].upper(), s[1:]
    if not rest.isdigit():
        raise ValidationError(f"unrecognized group descriptor {spec!r}")
    k = int(rest)
    if kind == "C":
        return cyclic(k)
    if kind == "D":
        return dihedral(k)
    if kind == "S":
        return symmetric(k)
    if kind == "Q" and k == 8:
        return quaternion8()
    raise ValidationError(f"unrecognized group descriptor {spec!r}")


# -- subgroup machinery ----------------------------------------------------


def generated_subgroup(G: FiniteGroup, gens) -> Subgroup:
    closure = {0}
    frontier = [0]
    gens = [int(g) for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (G.mul(x, g), G.mul(g, x)):
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
    return Subgroup(G, tuple(sorted(closure)))


def subgroups(G: FiniteGroup, bound: int = DEFAULT_ENUM_BOUND) -> list[Subgroup]:
    """All subgroups, found by closing generator extensions layer by layer."""
    if G.n > bound:
        raise SizeBoundError(f"subgroup enumeration bounded at order {bound}, group has {G.n}")
    seen = {(0,)}
    frontier = [(0,)]
    while frontier:
        nxt = []
        for elems in frontier:
            eset = set(elems)
            for g in G.elements():
                if g in eset:
                    continue
                bigger = tuple(sorted(_closure(G, eset | {g})))
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    out = [Subgroup(G, elems) for elems in seen]
    out.sort(key=lambda s: (s.order, s.elements))
    return out


def _closure(G: FiniteGroup, seed: set[int]) -> set[int]:
    closure = set(seed) | {0}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for g in list(closure):
            for y in (G.mul(x, g), G.mul(g, x)):
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
    return closure


def normal_subgroups(G: FiniteGroup, bound: int = DEFAULT_ENUM_BOUND) -> list[Subgroup]:
    return [H for H in subgroups(G, bound=bound) if H.is_normal()]


def center(G: FiniteGroup) -> Subgroup:
    elems = tuple(g for g in G.elements() if all(G.mul(g, h) == G.mul(h, g) for h in G.elements()))
    return Subgroup(G, elems)


def coset_space(G: FiniteGroup, H: Subgroup) -> CosetSpace:
    """Left cosets gH with minimal-index representatives, identity coset first."""
    block_of = [-1] * G.n
    blocks, reps = [], []
    for g in G.elements():
        if block_of[g] >= 0:
            continue
        block = tuple(sorted(G.mul(g, h) for h in H.elements))
        idx = len(blocks)
        for x in block:
            block_of[x] = idx
        blocks.append(block)
        reps.append(block[0])
    return CosetSpace(G, H, tuple(blocks), tuple(reps), tuple(block_of))


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """The quotient group G/N plus the projection homomorphism."""
    if not N.is_normal():
        g, h = N.violating_conjugation()
        raise NormalityError(f"subgroup is not normal: {g}*{h}*{g}^-1 leaves it")
    cs = coset_space(G, N)
    k = len(cs)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(cs.representatives):
        for j, b in enumerate(cs.representatives):
            table[i, j] = cs.block_of[G.mul(a, b)]
    labels = [G.label(r) + "N" for r in cs.representatives]
    Q = FiniteGroup(table, labels=labels, name=(G.name or "G") + "/N", _trusted=True)
    proj = GroupHom(G, Q, tuple(cs.block_of))
    return Q, proj


class CosetAction:
    """The permutation action of a group on the left cosets of a subgroup.

    ``perms[g]`` is the permutation of coset indices induced by g.  The hom
    into the symmetric group is realized onto its image: a FiniteGroup whose
    elements are the distinct permutations, which always fits in the
    enumeration bound because it is a quotient of the acting group.
    """

    def __init__(self, G: FiniteGroup, H: Subgroup):
        cs = coset_space(G, H)
        k = len(cs)
        perms = np.empty((G.n, k), dtype=np.int64)
        for g in G.elements():
            for i, r in enumerate(cs.representatives):
                perms[g, i] = cs.block_of[G.mul(g, r)]
        self.group = G
        self.subgroup = H
        self.cosets = cs
        self.perms = perms
        distinct: dict[tuple, int] = {}
        order = []
        for g in G.elements():
            key = tuple(perms[g])
            if key not in distinct:
                distinct[key] = None
                order.append(key)
        ident = tuple(range(k))
        order.sort(key=lambda p: (p != ident, p))
        pos = {p: i for i, p in enumerate(order)}
        m = len(order)
        table = np.empty((m, m), dtype=np.int64)
        for i, p in enumerate(order):
            for j, q in enumerate(order):
                table[i, j] = pos[tuple(p[x] for x in q)]
        self.image_group = FiniteGroup(
            table, labels=["".join(map(str, p)) for p in order], name="image", _trusted=True
        )
        self.hom = GroupHom(G, self.image_group, tuple(pos[tuple(perms[g])] for g in G.elements()))

    def kernel(self) -> Subgroup:
        return self.hom.kernel()

    def is_transitive(self) -> bool:
        k = len(self.cosets)
        reached = set(self.perms[:, 0].tolist())
        return len(reached) == k

    def is_faithful(self) -> bool:
        return self.kernel().order == 1


def coset_action(G: FiniteGroup, H: Subgroup) -> CosetAction:
    return CosetAction(G, H)


# -- abelian invariants ----------------------------------------------------


@dataclass(frozen=True)
class AbelianDecomposition:
    """Invariant factors n1 | n2 | ... | nr with independent generators."""

    invariants: tuple[int, ...]
    generators: tuple[int, ...]


def abelian_invariants(G: FiniteGroup) -> AbelianDecomposition | None:
    """Invariant-factor decomposition of an abelian group, None if non-abelian.

    A maximal-order element always generates a direct factor; a complement is
    found by scanning subgroups, then recursion handles the rest.
    """
    if not G.is_abelian:
        return None
    invs, gens = _abelian_split(G)
    return AbelianDecomposition(tuple(invs), tuple(gens))


def _abelian_split(G: FiniteGroup) -> tuple[list[int], list[int]]:
    if G.n == 1:
        return [], []
    orders = G.element_orders()
    g = max(G.elements(), key=lambda x: (orders[x], -x))
    m = orders[g]
    cyc = set(_closure(G, {g}))
    want = G.n // m
    complement = None
    for K in subgroups(G, bound=G.n):
        if K.order == want and len(set(K.elements) & cyc) == 1:
            complement = K
            break
    if complement is None:  # cannot happen for abelian groups
        raise ValidationError("no complement for a maximal cyclic factor")
    H, embed = complement.as_group()
    rest_invs, rest_gens = _abelian_split(H)
    return rest_invs + [m], [embed[x] for x in rest_gens] + [g]


def is_homocyclic_squarefree(G: FiniteGroup) -> bool:
    """True when all invariant factors coincide and are square-free.

    This is the exact condition under which the maximal elementary quotients
    of a non-degenerate twisted class over the group all coincide.
    """
    dec = abelian_invariants(G)
    if dec is None:
        return False
    if not dec.invariants:
        return True
    q = dec.invariants[-1]
    return all(x == q for x in dec.invariants) and squarefree(q)


def squarefree(n: int) -> bool:
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % (p * p) == 0:
            return False
    return True


# -- isomorphism testing ---------------------------------------------------


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    hom: GroupHom | None
    reason: str


def _generating_sequence(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    while len(span) < G.n:
        g = next(x for x in G.elements() if x not in span)
        gens.append(g)
        span = _closure(G, span | {g})
    return gens


def _extend_hom(G1: FiniteGroup, G2: FiniteGroup, pairs: list[tuple[int, int]]):
    """Grow a partial map by closing under generator products; None on conflict."""
    mapping = {0: 0}
    frontier = [0]
    for a, b in pairs:
        if mapping.get(a, b) != b:
            return None
        mapping[a] = b
        frontier.append(a)
    while frontier:
        x = frontier.pop()
        for a, b in pairs:
            for u, v in ((G1.mul(x, a), G2.mul(mapping[x], b)), (G1.mul(a, x), G2.mul(b, mapping[x]))):
                if u in mapping:
                    if mapping[u] != v:
                        return None
                else:
                    mapping[u] = v
                    frontier.append(u)
    return mapping


def _is_full_isomorphism(G1: FiniteGroup, G2: FiniteGroup, mapping: dict[int, int]) -> bool:
    if len(mapping) != G1.n or len(set(mapping.values())) != G1.n:
        return False
    return all(
        mapping[G1.mul(a, b)] == G2.mul(mapping[a], mapping[b])
        for a in G1.elements()
        for b in G1.elements()
    )


def are_isomorphic(G1: FiniteGroup, G2: FiniteGroup, bound: int = DEFAULT_ENUM_BOUND) -> IsomorphismResult:
    """Decide isomorphism with an explicit witness or a distinguishing invariant."""
    if max(G1.n, G2.n) > bound:
        raise SizeBoundError(f"isomorphism search bounded at order {bound}")
    if G1.n != G2.n:
        return IsomorphismResult(False, None, f"orders differ: {G1.n} vs {G2.n}")
    if G1.order_census() != G2.order_census():
        return IsomorphismResult(False, None, "element-order census differs")
    if G1.is_abelian != G2.is_abelian:
        return IsomorphismResult(False, None, "one group is abelian, the other is not")
    gens = _generating_sequence(G1)
    orders1 = G1.element_orders()
    orders2 = G2.element_orders()
    candidates = [[h for h in G2.elements() if orders2[h] == orders1[g]] for g in gens]

    def backtrack(level: int, pairs: list[tuple[int, int]]):
        if level == len(gens):
            mapping = _extend_hom(G1, G2, pairs)
            if mapping is None or not _is_full_isomorphism(G1, G2, mapping):
                return None
            return mapping
        for h in candidates[level]:
            trial = pairs + [(gens[level], h)]
            if _extend_hom(G1, G2, trial) is None:
                continue
            found = backtrack(level + 1, trial)
            if found is not None:
                return found
        return None

    mapping = backtrack(0, [])
    if mapping is None:
        return IsomorphismResult(False, None, "generator-image search exhausted")
    images = tuple(mapping[g] for g in G1.elements())
    return IsomorphismResult(True, GroupHom(G1, G2, images), "explicit isomorphism found")


# -- text format -----------------------------------------------------------


def format_group_table(G: FiniteGroup) -> str:
    """Serialize to the group-table text format (bit-exact round trip)."""
    lines = [str(G.n)]
    for g in range(G.n):
        lines.append(" ".join(str(int(x)) for x in G.table[g]))
    if G.labels is not None:
        for i, lab in enumerate(G.labels):
            lines.append(f"# {i} {lab}")
    return "\n".join(lines) + "\n"


def parse_group_table(text: str) -> FiniteGroup:
    """Parse the group-table text format, validating the table fully."""
    rows: list[list[int]] = []
    labels: dict[int, str] = {}
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 1)
            if len(parts) != 2 or not parts[0].isdigit():
                raise ValidationError(f"line {lineno}: malformed label line")
            labels[int(parts[0])] = parts[1]
            continue
        if n is None:
            if not line.isdigit():
                raise ValidationError(f"line {lineno}: expected group order")
            n = int(line)
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValidationError(f"line {lineno}: non-integer table entry") from None
        if len(row) != n:
            raise ValidationError(f"line {lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    if n is None or len(rows) != n:
        raise ValidationError(f"expected {n or '?'} table rows, got {len(rows)}")
    label_list = None
    if labels:
        label_list = [labels.get(i, str(i)) for i in range(n)]
    return FiniteGroup(rows, labels=label_list)
