"""Jordan pairs, triples and algebras: axiom validation, ideals and
annihilators, inner derivations, the three-graded Lie envelope, the
quotient-pair decider, and the maximal quotient constructions.

Closed-form oracles: on V = (k, k) with {x,y,z} = 2xyz the operators are
Q_x y = x^2 y and D_{x,y} = 2xy, so every construction below has an exact
scalar prediction.
"""

from fractions import Fraction as Fr

import pytest

from gradlie import jordan as J
from gradlie.derivations import is_quotient
from gradlie.errors import (
    AxiomViolation,
    BadCharacteristic,
    NotAPairIdeal,
    NotJordanThreeGraded,
    NotSemiprime,
    NotStronglyNondegenerate,
    ValidationError,
)
from gradlie.gallery import (
    build_lie,
    heis3,
    jordan_rank1,
    jordan_sym2,
    pair_field,
    pair_padded,
    pair_rect,
    pair_zero,
    padded_subpair,
    sl2,
    triple_2xyz,
)
from gradlie.lie import GradingGroup
from gradlie.linalg import Subspace, rank, span
from gradlie.scalars import GF, QQ

F5 = GF(5)


# -- pair construction and validation ----------------------------------------


def test_pair_field_operators_have_closed_forms():
    pf = pair_field()
    x, y, z = (Fr(3),), (Fr(5),), (Fr(7),)
    assert pf.triple(1, x, y, x) == (Fr(90),)       # 2 * 3 * 5 * 3
    qxy = pf.q_apply(1, x, y)
    assert qxy == (Fr(45),)                          # x^2 y
    assert pf.q_apply(1, qxy, z) == (Fr(45 * 45 * 7),)
    assert pf.d_matrix(1, x, y) == ((Fr(30),),)      # 2xy


def test_pair_axioms_hold_for_rectangular_matrices():
    r = pair_rect(1, 2)
    assert r.dims() == (2, 2)
    assert pair_rect(2, 2, F5).dims() == (4, 4)


def test_pair_axiom_violation_detected():
    r = pair_rect(1, 2)
    tp = [[[list(c) for c in row] for row in plane] for plane in r.table_plus]
    tp[0][0][1][1] = Fr(7)  # corrupt one structure constant
    tp = tuple(tuple(tuple(tuple(c) for c in row) for row in plane)
               for plane in tp)
    with pytest.raises(AxiomViolation):
        J.JordanPair(QQ, r.names_plus, r.names_minus, tp, r.table_minus)


def test_small_characteristics_are_rejected():
    with pytest.raises(BadCharacteristic):
        pair_field(GF(2))
    with pytest.raises(BadCharacteristic):
        pair_field(GF(3))


def test_pair_axioms_survive_exhaustive_f5_scan():
    # the constructor runs the operator identities on all points when the
    # field is finite and small; surviving construction is the assertion
    pair_field(F5)
    pair_rect(1, 2, F5)
    pair_zero(2, 1, F5)


# -- subpairs, ideals, annihilators -------------------------------------------


def test_pair_ideal_predicates():
    r = pair_rect(1, 2)
    assert J.is_pair_ideal(r, J.full_subpair(r))
    assert J.is_pair_ideal(r, J.zero_subpair(r))
    half = J.SubPair(span(QQ, 2, [(QQ.one, QQ.zero)]), Subspace.zero(QQ, 2))
    assert not J.is_pair_ideal(r, half)


def test_padded_pair_splits_into_ideals():
    pp = pair_padded()
    first = padded_subpair(pp)
    assert J.is_pair_ideal(pp, first)
    dead = J.SubPair(span(QQ, 2, [(QQ.zero, QQ.one)]),
                     span(QQ, 2, [(QQ.zero, QQ.one)]))
    assert J.is_pair_ideal(pp, dead)
    # the dead coordinate annihilates everything
    ann = J.pair_annihilator(pp, J.full_subpair(pp))
    assert ann.plus == span(QQ, 2, [(QQ.zero, QQ.one)])
    assert ann.minus == span(QQ, 2, [(QQ.zero, QQ.one)])


def test_pair_ideal_generated_closes_up():
    pp = pair_padded()
    seed = J.SubPair(span(QQ, 2, [(QQ.one, QQ.one)]), Subspace.zero(QQ, 2))
    ideal = J.pair_ideal_generated(pp, seed)
    assert J.is_pair_ideal(pp, ideal)
    assert ideal.plus.contains((QQ.one, QQ.one))


def test_annihilator_of_nondegenerate_pair_vanishes():
    pf = pair_field()
    assert J.pair_annihilator(pf, J.full_subpair(pf)).is_zero()
    assert J.pair_annihilator(pf, J.zero_subpair(pf)).dims() == (1, 1)
    zp = pair_zero()
    assert J.pair_annihilator(zp, J.full_subpair(zp)).dims() == (1, 1)


# -- inner derivations and the graded envelope --------------------------------


def test_inner_derivation_dimensions():
    assert J.inner_derivations(pair_field()).dim == 1
    assert J.inner_derivations(pair_zero()).dim == 0
    assert J.inner_derivations(pair_rect(1, 2)).dim == 4


def test_tkk_dimensions_and_grading():
    t = J.tkk(pair_field())
    assert t.dim == 3
    assert t.support() == [-1, 0, 1]
    assert J.tkk(pair_zero()).dim == 2
    assert J.tkk(pair_rect(1, 2)).dim == 8


def test_tkk_of_pair_field_satisfies_sl2_relations():
    pf = pair_field()
    d = J.tkk_data(pf)
    t = d.algebra
    xp = d.embed_plus((QQ.one,))
    xm = d.embed_minus((QQ.one,))
    h = t.bracket(xp, xm)
    assert t.bracket(h, xp) == tuple(2 * c for c in xp)
    assert t.bracket(h, xm) == tuple(-2 * c for c in xm)


def test_tkk_brackets_realize_the_triple_product():
    # [[x+, y-], z+] = {x, y, z}+ for all basis choices
    for pair in (pair_rect(1, 2), pair_padded()):
        d = J.tkk_data(pair)
        t = d.algebra
        np_, nm_ = pair.dims()
        for i in range(np_):
            x = d.embed_plus(tuple(QQ.one if a == i else QQ.zero
                                   for a in range(np_)))
            for j in range(nm_):
                y = d.embed_minus(tuple(QQ.one if a == j else QQ.zero
                                        for a in range(nm_)))
                for l in range(np_):
                    z = d.embed_plus(tuple(QQ.one if a == l else QQ.zero
                                           for a in range(np_)))
                    got = t.bracket(t.bracket(x, y), z)
                    want = d.embed_plus(pair.table(1)[i][j][l])
                    assert got == want


def test_tkk_ideal_construction():
    r = pair_rect(1, 2)
    t = J.tkk(r)
    assert J.tkk_ideal(r, J.full_subpair(r)).dim == t.dim
    assert J.tkk_ideal(r, J.zero_subpair(r)).is_zero()
    pp = pair_padded()
    lifted = J.tkk_ideal(pp, padded_subpair(pp))
    assert lifted.dim == 3  # two outer lines plus one inner derivation
    assert J.tkk(pp).is_ideal(lifted)
    half = J.SubPair(span(QQ, 2, [(QQ.one, QQ.zero)]), Subspace.zero(QQ, 2))
    with pytest.raises(NotAPairIdeal):
        J.tkk_ideal(r, half)


# -- associated pairs ----------------------------------------------------------


def test_associated_pair_of_sl2():
    ap = J.associated_pair(sl2())
    assert ap.c_v.is_zero()
    assert ap.pair.dims() == (1, 1)
    assert ap.pair.q_apply(1, (Fr(1),), (Fr(1),)) == (Fr(1),)  # Q_e f = e


def test_associated_pair_of_heisenberg_collapses():
    ap = J.associated_pair(heis3())
    assert ap.pair.dims() == (1, 1)
    assert ap.pair.table_plus[0][0][0] == (Fr(0),)
    assert ap.c_v.dim == 1
    assert ap.tkk_algebra.dim == 2


def test_associated_pair_requires_jordan_grading():
    # gl2 shape: [L1, L-1] = span h is proper inside L0 = span{h, u}
    gl2 = build_lie(QQ, ["e", "f", "h", "u"], [1, -1, 0, 0],
                    {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2},
                     ("h", "f"): {"f": -2}})
    with pytest.raises(NotJordanThreeGraded):
        J.associated_pair(gl2)


def test_associated_pair_inverts_tkk():
    for make in (pair_field, lambda: pair_rect(1, 2), pair_zero):
        pair = make()
        ap = J.associated_pair(J.tkk(pair))
        assert ap.c_v.is_zero()
        assert ap.pair.dims() == pair.dims()
        assert ap.pair.table_plus == pair.table_plus
        assert ap.pair.table_minus == pair.table_minus
        assert rank(QQ, ap.map_rows) == J.tkk(pair).dim


# -- semiprimeness --------------------------------------------------------------


def test_pair_semiprime_predicates():
    assert J.pair_is_semiprime(pair_field())
    assert J.pair_is_strongly_nondegenerate(pair_field())
    assert J.pair_is_semiprime(pair_rect(1, 2))
    assert not J.pair_is_semiprime(pair_zero())
    assert not J.pair_is_semiprime(pair_padded())
    w = J.pair_semiprime_witness(pair_zero())
    assert w is not None and not w.is_zero()
    azd = J.pair_absolute_zero_divisor(pair_zero())
    assert azd is not None


def test_pair_semiprime_agrees_over_f5():
    for make in (pair_field, lambda f=F5: pair_rect(1, 2, f),
                 pair_zero, pair_padded):
        over_q = make() if make is not pair_zero else pair_zero()
        try:
            over_5 = make(F5)
        except TypeError:
            over_5 = pair_zero(1, 1, F5)
        assert J.pair_is_semiprime(over_q) == J.pair_is_semiprime(over_5)
        assert (J.pair_is_strongly_nondegenerate(over_q)
                == J.pair_is_strongly_nondegenerate(over_5))


# -- quotient-pair decider -------------------------------------------------------


def test_reflexive_pair_is_its_own_quotients():
    pf = pair_field()
    v = J.is_pair_of_quotients(J.PairEmbedding(pf, J.full_subpair(pf)))
    assert v.value == "true"
    assert "absorbs" in v.reason


def test_padded_pair_refutes_quotients_over_f5():
    pp = pair_padded(F5)
    emb = J.PairEmbedding(pp, padded_subpair(pp))
    v = J.is_pair_of_quotients(emb)
    assert v.value == "false"
    assert v.witness == (1, (0, 1))  # the dead plus coordinate


def test_padded_pair_refutes_quotients_over_q():
    pp = pair_padded()
    emb = J.PairEmbedding(pp, padded_subpair(pp))
    v = J.is_pair_of_quotients(emb)
    assert v.value == "false"
    assert v.witness == (1, (Fr(0), Fr(1)))


def test_decider_requires_semiprime_small_pair():
    zp = pair_zero(1, 1, F5)
    with pytest.raises(NotSemiprime):
        J.is_pair_of_quotients(J.PairEmbedding(zp, J.full_subpair(zp)))


def test_lie_side_agrees_on_the_padded_pair():
    pp = pair_padded(F5)
    emb = J.PairEmbedding(pp, padded_subpair(pp))
    qe = J.tkk_embedding(emb)
    assert qe.big.dim == 5 and qe.small.dim == 3
    assert is_quotient(qe).value == "false"


# -- maximal quotients ------------------------------------------------------------


def test_maximal_pair_quotients_fix_the_field_pair():
    mpq = J.maximal_pair_quotients(pair_field())
    assert mpq.pair.dims() == (1, 1)
    assert rank(QQ, mpq.plus_map) == 1 and rank(QQ, mpq.minus_map) == 1
    assert mpq.verdict.value == "true"


def test_maximal_pair_quotients_fix_the_rectangles():
    mpq = J.maximal_pair_quotients(pair_rect(1, 2))
    assert mpq.pair.dims() == (2, 2)
    assert rank(QQ, mpq.plus_map) == 2 and rank(QQ, mpq.minus_map) == 2


def test_maximal_pair_quotients_need_nondegeneracy():
    with pytest.raises(NotStronglyNondegenerate):
        J.maximal_pair_quotients(pair_zero())


def test_triple_constructions():
    trip = triple_2xyz()
    assert trip.triple((Fr(3),), (Fr(5),), (Fr(7),)) == (Fr(210),)
    mtq = J.maximal_triple_quotients(trip)
    assert mtq.triple.dim == 1
    assert rank(QQ, mtq.embedding) == 1
    e0 = mtq.embedding[0]
    # the embedding preserves {t, t, t} = 2t
    assert mtq.triple.triple(e0, e0, e0) == tuple(Fr(2) * c for c in e0)
    assert mtq.pairs.verdict.value == "true"


# -- Jordan algebras ---------------------------------------------------------------


def test_jordan_algebra_validation():
    tbl = (((QQ.zero, QQ.one), (QQ.one, QQ.zero)),
           ((QQ.one, QQ.zero), (QQ.zero, QQ.zero)))
    with pytest.raises(AxiomViolation):
        J.JordanAlgebra(QQ, ("u", "v"), tbl)  # fails (u.u.v).u = u.u.(v.u)
    lop = (((QQ.zero, QQ.one), (QQ.one, QQ.zero)),
           ((QQ.zero, QQ.zero), (QQ.zero, QQ.zero)))
    with pytest.raises(AxiomViolation):
        J.JordanAlgebra(QQ, ("u", "v"), lop)  # not commutative


def test_jordan_units():
    assert jordan_rank1().unit() == (QQ.one,)
    assert jordan_sym2().unit() == (Fr(1), Fr(0), Fr(1))
    zero_alg = J.JordanAlgebra(QQ, ("n",), (((QQ.zero,),),))
    assert zero_alg.unit() is None


def test_maximal_jordan_algebra_quotients_fix_rank_one():
    mjq = J.maximal_jordan_algebra_quotients(jordan_rank1())
    assert mjq.algebra.dim == 1
    assert rank(QQ, mjq.embedding) == 1
    u = mjq.embedding[0]
    assert mjq.algebra.product(u, u) == u


def test_maximal_jordan_algebra_quotients_fix_sym2():
    sym2 = jordan_sym2()
    mjq = J.maximal_jordan_algebra_quotients(sym2)
    assert mjq.algebra.dim == 3
    assert rank(QQ, mjq.embedding) == 3
    # the unit maps to the unit
    image = [QQ.zero] * 3
    for c, row in zip(sym2.unit(), mjq.embedding):
        image = [x + c * y for x, y in zip(image, row)]
    assert mjq.algebra.unit() == tuple(image)
    assert mjq.triples.pairs.verdict.value == "true"


def test_quotients_recovery_needs_a_unit():
    zero_alg = J.JordanAlgebra(QQ, ("n",), (((QQ.zero,),),))
    with pytest.raises(ValidationError):
        J.maximal_jordan_algebra_quotients(zero_alg)
