import numpy as np
import pytest

import gquot as gq
from gquot.cocycles import CocycleTable, cohomologous, snap_to_table, standard_nondegenerate
from gquot.errors import NormalityError
from gquot.gradings import descriptor_dims, is_equidimensional_induced
from gquot.mackey import (
    is_ecp_quotient,
    is_elementary_quotient,
    is_simple_quotient,
    mackey_decompose,
)


def test_trivial_kernel_recovers_the_class():
    a = standard_nondegenerate([2])
    G = a.group
    dec = mackey_decompose(G, a, gq.Subgroup(G, (0,)), seed=0)
    assert len(dec.orbits) == 1
    o = dec.orbits[0]
    assert o.dim == 1 and o.inertia.order == G.n
    assert o.x.mults == ((0, 1),)
    # the obstruction table snaps to exponents and is cohomologous to the input
    snapped = snap_to_table(o.omega, o.omega_group, a.scale)
    assert snapped is not None
    relabeled = CocycleTable(G, a.scale, snapped.exps[np.ix_(o.omega_embed, o.omega_embed)])
    assert cohomologous(relabeled, a)[0]


def test_lagrangian_kernel_gives_ecp():
    a = standard_nondegenerate([2])
    G = a.group
    N = gq.generated_subgroup(G, [2])
    dec = mackey_decompose(G, a, N, seed=0)
    assert len(dec.orbits) == 1
    o = dec.orbits[0]
    assert len(o.point_indices) == 2 and o.dim == 1 and o.inertia.order == 1
    assert [k for _, k in o.x.mults] == [1, 1]
    assert is_ecp_quotient(dec) and is_elementary_quotient(dec) and is_simple_quotient(dec)


def test_quaternion_center_quotient():
    Q8 = gq.quaternion8()
    t = CocycleTable.trivial(Q8)
    dec = mackey_decompose(Q8, t, gq.center(Q8), seed=0)
    assert len(dec.orbits) == 2
    kinds = sorted((o.dim, o.inertia.order, o.omega_blocks) for o in dec.orbits)
    assert kinds == [(1, 4, (1, 1, 1, 1)), (1, 4, (2,))]
    trivial_orbit = next(o for o in dec.orbits if o.omega_trivial)
    nondeg_orbit = next(o for o in dec.orbits if o.omega_nondegenerate)
    assert trivial_orbit is not nondeg_orbit
    assert dec.oracle_dims == dec.reconstructed_dims == (1, 1, 1, 1, 2)
    assert not is_simple_quotient(dec)
    assert not is_elementary_quotient(dec)


def test_whole_group_kernel():
    a = standard_nondegenerate([2])
    G = a.group
    dec = mackey_decompose(G, a, gq.Subgroup(G, tuple(range(4))), seed=0)
    assert len(dec.orbits) == 1 and is_simple_quotient(dec)
    t = CocycleTable.trivial(G)
    dec2 = mackey_decompose(G, t, gq.Subgroup(G, tuple(range(4))), seed=0)
    assert len(dec2.orbits) == 4  # one orbit per character


def test_normality_enforced():
    S3 = gq.symmetric(3)
    H = next(h for h in gq.subgroups(S3) if h.order == 2)
    with pytest.raises(NormalityError):
        mackey_decompose(S3, CocycleTable.trivial(S3), H, seed=0)


@pytest.mark.parametrize("spec", ["C6", "C2xC4", "S3", "S4", "D4", "D6", "Q8", "C12"])
def test_reconstruction_across_catalog(spec):
    G = gq.make_group(spec)
    t = CocycleTable.trivial(G)
    for N in gq.normal_subgroups(G):
        dec = mackey_decompose(G, t, N, seed=0)
        assert dec.oracle_dims == dec.reconstructed_dims
        assert sum(o.delta for o in dec.orbits) == G.n
        assert sum(o.dim ** 2 * len(o.transversal) for o in dec.orbits) == N.order
        for o in dec.orbits:
            assert len(o.transversal) * o.inertia.order == dec.quotient_group.n
            # the elementary character puts multiplicity d on each transversal point
            assert all(k == o.dim for _, k in o.x.mults)
            assert [e for e, _ in o.x.mults] == sorted(o.transversal)


def test_quotient_components_all_have_dimension_n():
    a = standard_nondegenerate([4])
    G = a.group
    for N in list(gq.normal_subgroups(G))[:8]:
        dec = mackey_decompose(G, a, N, seed=0)
        dims = descriptor_dims(dec.descriptor)
        assert {dims.get(q, 0) for q in dec.quotient_group.elements()} == {N.order}
        for o in dec.orbits:
            verdict, _ = is_equidimensional_induced(o.x, o.inertia)
            assert verdict


def test_simple_quotient_dimension_identity():
    # for one orbit: |N|^2 |I| = d^2 |G| (checked inside is_simple_quotient)
    a = standard_nondegenerate([6])
    G = a.group
    N = gq.generated_subgroup(G, [7])  # (1,1) generates a diagonal C6
    dec = mackey_decompose(G, a, N, seed=0)
    assert is_simple_quotient(dec)
    assert is_ecp_quotient(dec)


def test_elementary_iff_free_action_cube_free_case():
    a = standard_nondegenerate([2])
    G = a.group
    for N in gq.subgroups(G):
        dec = mackey_decompose(G, a, N, seed=0)
        elementary = is_elementary_quotient(dec)
        assert elementary == gq.groups.squarefree(G.n // N.order)
        if elementary:
            for o in dec.orbits:
                assert o.dim ** 2 * G.n == N.order ** 2


def test_doubly_nondegenerate_has_ct_quotient():
    a = standard_nondegenerate([2, 2])
    G = a.group
    from gquot.cocycles import bicharacter_of

    hits = 0
    for N in gq.subgroups(G):
        rest, sub, _ = a.restrict(N)
        if bicharacter_of(rest).radical().order != 1:
            continue
        hits += 1
        dec = mackey_decompose(G, a, N, seed=0)
        assert len(dec.orbits) == 1
        o = dec.orbits[0]
        q = dec.quotient_group.n
        assert o.inertia.order == q
        assert o.omega_nondegenerate
        assert o.omega_blocks == (int(round(q ** 0.5)),)
    assert hits >= 3  # {e}, the whole group, and symplectic sub-products


def test_determinism_of_decomposition():
    Q8 = gq.quaternion8()
    t = CocycleTable.trivial(Q8)
    Z = gq.center(Q8)
    d1 = mackey_decompose(Q8, t, Z, seed=5)
    d2 = mackey_decompose(Q8, t, Z, seed=5)
    assert d1.oracle_dims == d2.oracle_dims
    for o1, o2 in zip(d1.orbits, d2.orbits):
        assert np.array_equal(o1.omega, o2.omega)
