"""Associative matrix algebras with involution and their Lie shadows.

Two Lie algebras live inside an associative algebra A: the commutator
algebra A^- on all of A, and the skew elements K(A) under an involution.
Both are graded trivially.  The central quotient comparison asks whether
K of the bigger object and the skew part of an exchange double are
identified after killing the center; the package verifies the expected
identifications on matrix models.
"""

from gradlie.assoc import (
    central_quotient,
    check_central_quotients,
    exchange_double,
    exchange_skew_iso,
)
from gradlie.gallery import m_n_transpose
from gradlie.linalg import rank
from gradlie.scalars import QQ

# 3x3 matrices with the transpose involution
a3 = m_n_transpose(3)
print("M3(Q): dim", a3.dim, "involution fixes E11:",
      a3.star(a3.basis_vector(0)) == a3.basis_vector(0))

# skew part = antisymmetric matrices, dim 3 for n = 3
print("skew dim", a3.skew_elements().dim)

# the commutator Lie algebra of all of M2 has a 1-dim center (scalars)
a2 = m_n_transpose(2)
l2 = a2.minus_algebra()
print("\nM2(Q)^-: dim", l2.dim, "center dim", l2.center().dim)

# killing the center leaves a 3-dim perfect algebra (sl2 in disguise)
cq = central_quotient(a2, variant="minus")
print("central quotient dim", cq.dim,
      "derived space dim", cq.derived_space(cq.full_space()).dim)

# the exchange double A (+) A-op swaps the two copies; its skew part is
# a faithful copy of A^- as a Lie algebra
dbl = exchange_double(a2)
print("\nexchange double of M2: dim", dbl.dim)
_, rows = exchange_skew_iso(a2)
print("skew part of the double has rank", rank(QQ, list(rows)),
      "over dim", a2.dim, "input")

# the packaged comparisons: skew central quotients for the transpose
# model, commutator central quotients through the exchange double
for n, variant in ((3, "K"), (2, "minus")):
    rep = check_central_quotients(m_n_transpose(n), variant=variant)
    print("M%d variant %s: verdict %s (exchange checked: %s)"
          % (n, variant, rep.verdict.value, rep.exchange_checked))
