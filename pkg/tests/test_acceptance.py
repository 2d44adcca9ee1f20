"""Acceptance gate: the ten headline behaviors, each with a wall-clock
budget and a single PASS/FAIL line written straight to the terminal.

All arithmetic is exact (rationals or mod-p integers); the mod-5 runs are
exhaustive over projective points, so "agrees with the oracle" below means
agreement with a brute-force quantifier, not a sample.
"""

import subprocess
import sys
import time
from contextlib import contextmanager

import _acclog

from gradlie import jordan as J
from gradlie.analysis import (
    graded_core,
    is_semiprime,
    is_strongly_nondegenerate,
)
from gradlie.derivations import (
    QuotientEmbedding,
    check_axiomatic,
    is_quotient,
    is_weak_quotient,
    maximal_quotients,
    maximal_quotients_match,
)
from gradlie.assoc import check_central_quotients, exchange_skew_iso
from gradlie.enumeration import distinct_principal_ideals
from gradlie.gallery import (
    first_component,
    heis3,
    jordan_rank1,
    jordan_sym2,
    m_n_transpose,
    p_mod_i,
    p_mod_i_small,
    pair_field,
    pair_padded,
    pair_rect,
    pair_zero,
    padded_subpair,
    sl2,
    sl2sum,
    sln_e11,
    triple_2xyz,
)
from gradlie.linalg import rank, span
from gradlie.scalars import GF, QQ

F5 = GF(5)


def _line(text):
    # recorded for the terminal summary (capture eats in-test prints) and
    # printed anyway for -s runs
    _acclog.record(text)
    print(text, flush=True)


@contextmanager
def criterion(label, limit):
    t0 = time.monotonic()
    try:
        yield
    except BaseException as exc:
        _line("%s FAIL (%.2fs): %s" % (label, time.monotonic() - t0, exc))
        raise
    dt = time.monotonic() - t0
    if dt >= limit:
        _line("%s FAIL (%.2fs): over the %.0fs budget" % (label, dt, limit))
        raise AssertionError("%s exceeded its %.0fs budget" % (label, limit))
    _line("%s PASS (%.2fs)" % (label, dt))


def test_ac01_polynomial_counterexample_via_cli(tmp_path):
    """Graded weak quotients without graded quotients, at the CLI."""
    path = str(tmp_path / "pmi.json")
    with open(path, "w") as fh:
        subprocess.run([sys.executable, "-m", "gradlie", "gallery",
                        "p_mod_i"], stdout=fh, check=True)
    with criterion("AC01 graded-weak yes / graded-strict no (CLI)", 1.0):
        weak = subprocess.run(
            [sys.executable, "-m", "gradlie", "check-quotient",
             "--graded", "--weak", path],
            capture_output=True, text=True)
        assert weak.returncode == 0, weak.stdout + weak.stderr
        assert "verdict: true" in weak.stdout
        strict = subprocess.run(
            [sys.executable, "-m", "gradlie", "check-quotient",
             "--graded", path],
            capture_output=True, text=True)
        assert strict.returncode == 1, strict.stdout + strict.stderr
        assert "verdict: false" in strict.stdout
        assert "witness: x3" in strict.stdout


def test_ac02_sl2_is_its_own_maximal_quotients():
    """Q_max(sl2) = sl2 through the adjoint embedding, axiomatically."""
    with criterion("AC02 sl2 equals its maximal quotients", 1.0):
        a = sl2()
        plain = maximal_quotients(a)
        assert plain.algebra.dim == 3
        assert rank(QQ, plain.embedding) == 3
        graded = maximal_quotients(a, graded=True)
        assert graded.algebra.dim == 3
        emb = QuotientEmbedding(graded.algebra, list(graded.embedding))
        report = check_axiomatic(emb)
        assert report.absorption and report.faithful and report.realized


def test_ac03_graded_and_plain_quotients_agree_on_semisimple_instances():
    """Support bounded by -2..2; graded and plain constructions match."""
    with criterion("AC03 graded vs plain maximal quotients", 10.0):
        for alg in (sl2(), sl2sum(), sln_e11(3), sln_e11(4)):
            plain, graded, report = maximal_quotients_match(alg)
            assert report["isomorphic"]
            assert set(plain.algebra.support()) <= {-2, -1, 0, 1, 2}
            assert set(graded.algebra.support()) <= {-2, -1, 0, 1, 2}
            if is_strongly_nondegenerate(alg):
                assert set(plain.algebra.support()) <= {-1, 0, 1}
                assert set(graded.algebra.support()) <= {-1, 0, 1}


def test_ac04_graded_core_suite_over_f5():
    """The extracted graded piece of any ideal: graded, inside, and
    essentiality-preserving over the exhaustive ideal list."""
    with criterion("AC04 graded core of every mod-5 ideal", 60.0):
        algebras = [sl2(F5), heis3(F5), sl2sum(F5), sln_e11(3, F5)]
        for alg in algebras:
            assert alg.dim <= 8 and set(alg.support()) <= {-1, 0, 1}
            ideals = [i for i in distinct_principal_ideals(alg)
                      if not i.is_zero()]
            graded_ideals = [i for i in distinct_principal_ideals(
                alg, homogeneous_only=True) if not i.is_zero()]

            def essential(i, pool):
                return all(not i.intersect(j).is_zero() for j in pool)

            semi = is_semiprime(alg)
            for ideal in ideals:
                core = graded_core(alg, ideal)  # asserts the projector
                # identities 2 pi_1 = d^2 + d and 2 pi_-1 = d^2 - d
                assert alg.is_graded_subspace(core)
                assert ideal.contains_space(core)
                if semi:
                    assert essential(ideal, ideals) == \
                        essential(core, ideals)
            if semi:
                # graded essentiality matches plain essentiality
                for ideal in graded_ideals:
                    assert essential(ideal, graded_ideals) == \
                        essential(ideal, ideals)


def test_ac05_three_graded_envelope_correctness():
    """The graded envelope of a pair: Jacobi-complete, degree split
    correct, and inverted by the associated-pair construction."""
    with criterion("AC05 pair envelope and its inverse", 5.0):
        for make in (pair_field, lambda: pair_rect(1, 2), pair_zero):
            pair = make()
            lie = J.tkk(pair)  # constructor checks Jacobi on all triples
            one = lie.degree_component(1)
            minus = lie.degree_component(-1)
            zero = lie.degree_component(0)
            assert lie.bracket_space(one, minus) == zero
            ap = J.associated_pair(lie)
            assert ap.c_v.is_zero()
            assert ap.pair.table_plus == pair.table_plus
            assert ap.pair.table_minus == pair.table_minus
        assert J.tkk(pair_rect(1, 2)).dim == 8


def test_ac06_pair_and_lie_quotient_verdicts_agree():
    """The pair-level decider and the Lie-level decider through the
    graded envelope give the same answer on all mod-5 inclusions."""
    with criterion("AC06 pair decider vs Lie decider (mod 5)", 30.0):
        cases = []
        pf = pair_field(F5)
        cases.append(J.PairEmbedding(pf, J.full_subpair(pf)))
        pp = pair_padded(F5)
        cases.append(J.PairEmbedding(pp, padded_subpair(pp)))
        rc = pair_rect(1, 2, F5)
        cases.append(J.PairEmbedding(rc, J.full_subpair(rc)))
        for emb in cases:
            pair_verdict = J.is_pair_of_quotients(emb)
            lie_verdict = is_quotient(J.tkk_embedding(emb))
            assert pair_verdict.value in ("true", "false")
            assert pair_verdict.value == lie_verdict.value


def test_ac07_maximal_quotient_constructions_fix_their_inputs():
    """Nondegenerate desk examples are their own maximal quotients, and
    the decider confirms each output."""
    with criterion("AC07 maximal quotients return the inputs", 10.0):
        mpq = J.maximal_pair_quotients(pair_field())
        assert mpq.pair.dims() == (1, 1)
        assert rank(QQ, mpq.plus_map) == 1
        assert rank(QQ, mpq.minus_map) == 1
        assert mpq.verdict.value == "true"

        mtq = J.maximal_triple_quotients(triple_2xyz())
        assert mtq.triple.dim == 1
        assert rank(QQ, mtq.embedding) == 1
        assert mtq.pairs.verdict.value == "true"

        for jalg in (jordan_rank1(), jordan_sym2()):
            mjq = J.maximal_jordan_algebra_quotients(jalg)
            assert mjq.algebra.dim == jalg.dim
            assert rank(QQ, mjq.embedding) == jalg.dim
            assert mjq.triples.pairs.verdict.value == "true"


def test_ac08_predicates_cross_validate_over_both_fields():
    """Killing-criterion verdicts match the exhaustive mod-5 oracle, and
    the annihilator laws hold on all enumerated graded ideals."""
    with criterion("AC08 semiprimeness and annihilator laws", 60.0):
        for make in (sl2, sl2sum, heis3):
            over_q = make(QQ)
            over_5 = make(F5)
            assert over_q.dim <= 6
            assert is_semiprime(over_q) == is_semiprime(over_5)

            graded_ideals = [i for i in distinct_principal_ideals(
                over_5, homogeneous_only=True) if not i.is_zero()]
            # annihilators of graded ideals are graded
            for ideal in graded_ideals:
                assert over_5.is_graded_subspace(over_5.annihilator(ideal))
            if is_semiprime(over_5, graded=True):
                for ideal in graded_ideals:
                    ann = over_5.annihilator(ideal)
                    assert ideal.intersect(ann).is_zero()
                    ess = all(not ideal.intersect(j).is_zero()
                              for j in graded_ideals)
                    assert ess == ann.is_zero()


def test_ac09_quotient_hierarchy_over_f5():
    """quotient implies weak quotient; plain quotient implies graded weak
    quotient; graded and plain verdicts agree over graded-semiprime
    bases.  Implications are evaluated lazily."""
    with criterion("AC09 quotient hierarchy on gallery embeddings", 60.0):
        embeddings = []
        for make in (sl2, sl2sum, lambda f: sln_e11(3, f)):
            a = make(F5)
            embeddings.append(QuotientEmbedding(a, a.full_space()))
        s5 = sl2sum(F5)
        embeddings.append(QuotientEmbedding(s5, first_component(s5, 3)))
        pm = p_mod_i(F5)
        embeddings.append(QuotientEmbedding(pm, p_mod_i_small(pm)))

        for emb in embeddings:
            strict = is_quotient(emb)
            if strict.value == "true":
                assert is_weak_quotient(emb).value == "true"
                assert is_weak_quotient(emb, graded=True).value == "true"
            if is_semiprime(emb.small_alg, graded=True):
                assert is_quotient(emb, graded=True).value == strict.value


def test_ac10_matrix_involution_instances():
    """Central quotient comparison for the transpose skew algebra and the
    commutator algebra through the exchange double."""
    with criterion("AC10 matrix algebra central quotients", 5.0):
        k_report = check_central_quotients(m_n_transpose(3), variant="K")
        assert k_report.verdict.value == "true"
        minus_report = check_central_quotients(m_n_transpose(2),
                                               variant="minus")
        assert minus_report.verdict.value == "true"
        assert minus_report.exchange_checked
        # the skew copy inside the double is a faithful bracket image
        dbl, rows = exchange_skew_iso(m_n_transpose(2))
        assert rank(QQ, list(rows)) == 4
