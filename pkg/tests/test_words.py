import pytest
from hypothesis import given, settings, strategies as st

import gquot as gq
from gquot.errors import DomainError, ValidationError
from gquot.words import (
    FactorMap,
    FreeFactor,
    FreeProductGroup,
    Word,
    enumerate_words,
    hom_eval,
    normal_form,
    syllable_generators_cover,
)


def c2_free_square():
    return FreeProductGroup((gq.cyclic(2), gq.cyclic(2)), name="C2*C2")


def c3_free_c2():
    return FreeProductGroup((gq.cyclic(3), gq.cyclic(2)), name="C3*C2")


def test_normal_form_examples():
    F = c2_free_square()
    a = F.letter(0, 1)
    assert a.mul(a).is_identity()
    b = F.letter(1, 1)
    aba = a.mul(b).mul(a)
    assert aba.syllables == ((0, 1), (1, 1), (0, 1))
    F32 = c3_free_c2()
    g = F32.letter(0, 1)
    assert g.mul(g).mul(g).is_identity()
    assert g.mul(g).syllables == ((0, 2),)


def test_word_inverse_and_power():
    F32 = c3_free_c2()
    g, h = F32.letter(0, 1), F32.letter(1, 1)
    w = g.mul(h).mul(g.mul(g))
    assert w.mul(w.inv()).is_identity()
    assert w.pow(0).is_identity()
    assert w.pow(2) == w.mul(w)
    assert w.pow(-1) == w.inv()


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 2)), max_size=12))
@settings(max_examples=100, deadline=None)
def test_normal_form_idempotent_and_reduced(sylls):
    F32 = c3_free_c2()
    clipped = [(fi, p % (3 if fi == 0 else 2)) for fi, p in sylls]
    w = Word(F32, tuple(clipped))
    assert normal_form(w) == w
    for (f1, p1), (f2, p2) in zip(w.syllables, w.syllables[1:]):
        assert f1 != f2
    for fi, p in w.syllables:
        assert p != 0


@given(
    st.lists(st.tuples(st.integers(0, 1), st.integers(1, 2)), max_size=6),
    st.lists(st.tuples(st.integers(0, 1), st.integers(1, 2)), max_size=6),
    st.lists(st.tuples(st.integers(0, 1), st.integers(1, 2)), max_size=6),
)
@settings(max_examples=60, deadline=None)
def test_word_multiplication_associative(s1, s2, s3):
    F32 = c3_free_c2()

    def mk(s):
        return Word(F32, tuple((fi, p % (3 if fi == 0 else 2)) for fi, p in s))

    w1, w2, w3 = mk(s1), mk(s2), mk(s3)
    assert w1.mul(w2).mul(w3) == w1.mul(w2.mul(w3))


def test_cross_group_multiplication_rejected():
    with pytest.raises(DomainError):
        c2_free_square().identity().mul(c3_free_c2().identity())


def test_hom_eval_examples():
    F = c2_free_square()
    C2 = gq.cyclic(2)
    onto = gq.GroupHom(gq.cyclic(2), C2, (0, 1))
    psi3 = FactorMap(F, C2, (onto, onto))
    a, b = F.letter(0, 1), F.letter(1, 1)
    assert hom_eval(psi3, a) == 1 and hom_eval(psi3, b) == 1
    assert hom_eval(psi3, a.mul(b)) == 0
    assert hom_eval(psi3, F.identity()) == 0
    # a -> involution, b -> identity
    phi1 = FactorMap(F, C2, (onto, gq.GroupHom(gq.cyclic(2), C2, (0, 0))))
    assert hom_eval(phi1, a.mul(b).mul(a)) == 0
    assert phi1.is_surjective()


def test_factor_map_validation():
    F = c2_free_square()
    C3 = gq.cyclic(3)
    with pytest.raises(ValidationError):
        FactorMap(F, C3, (gq.GroupHom(gq.cyclic(2), C3, (0, 0)),))  # wrong arity
    free = FreeProductGroup((FreeFactor("x"),))
    fm = FactorMap(free, C3, (2,))
    assert hom_eval(fm, free.letter(0, 2)) == C3.power(2, 2)
    with pytest.raises(ValidationError):
        FactorMap(free, C3, (5,))


def test_words_distinguished_by_finite_quotients():
    # distinct normal forms in C2*C2 map to distinct elements of a large
    # enough dihedral quotient
    F = c2_free_square()
    D8 = gq.dihedral(8)
    # a -> reflection s, b -> s r (two reflections generating D8)
    s = 8
    sr = 9
    ha = gq.GroupHom(gq.cyclic(2), D8, (0, s))
    hb = gq.GroupHom(gq.cyclic(2), D8, (0, sr))
    fm = FactorMap(F, D8, (ha, hb))
    words = enumerate_words(F, 4)
    images = [hom_eval(fm, w) for w in words]
    assert len(set(images)) == len(words)


def test_enumerate_words_counts():
    F = c2_free_square()
    assert len(enumerate_words(F, 6)) == 13  # 1 + 2 per length
    F32 = c3_free_c2()
    assert len(enumerate_words(F32, 2)) == 8  # e, g, g2, h, gh, g2h, hg, hg2


def test_syllable_coverage():
    F = c2_free_square()
    a, b = F.letter(0, 1), F.letter(1, 1)
    assert syllable_generators_cover(F, [a, b])
    assert not syllable_generators_cover(F, [a])
    free = FreeProductGroup((FreeFactor("x"),))
    assert syllable_generators_cover(free, [free.letter(0, 2), free.letter(0, 3)])
    assert not syllable_generators_cover(free, [free.letter(0, 2)])
