"""Extracting a graded ideal from an arbitrary ideal of a 3-graded
algebra, and why semiprimeness is the load-bearing hypothesis.

For support inside {-1, 0, 1} and characteristic other than 2 or 3, the
grading derivation d (multiply the degree-k slice by k) satisfies closed
projector identities: 2 pi_1 = d^2 + d, 2 pi_-1 = d^2 - d, and pi_0 is
what remains.  Since d maps an ideal's derived space [I, I] back into I,
the homogeneous slices of every x in [I, I] stay inside I, and the ideal
they generate is a graded ideal sandwiched inside I.  On semiprime
algebras this core is essential exactly when I is; without semiprimeness
the core can even vanish while I is essential.
"""

from gradlie.analysis import graded_core, is_essential_ideal
from gradlie.gallery import heis3, sl2sum
from gradlie.scalars import GF

F5 = GF(5)
n = heis3(F5)

# a skew ideal: x + y mixes degrees +1 and -1, yet together with the
# center z it absorbs all brackets
x, y, z = (n.basis_vector(i) for i in range(3))
gen = tuple(a + b for a, b in zip(x, y))
ideal = n.ideal_generated([gen])
print("ideal generated by x + y: dim", ideal.dim,
      "| graded:", n.is_graded_subspace(ideal),
      "| ideal:", n.is_ideal(ideal))

# [I, I] = 0 here, so nothing survives the extraction
core = graded_core(n, ideal)
print("graded core: dim", core.dim,
      "| graded:", n.is_graded_subspace(core),
      "| inside:", ideal.contains_space(core))

# and that kills the essentiality transfer: heis3 is not semiprime, the
# ideal is essential (every nonzero ideal meets the center), the core
# is not
print("essential ideal:", is_essential_ideal(n, ideal),
      "| essential core:", is_essential_ideal(n, core))

# the degree projections by hand: pi_1(x + y) is x, pi_-1(x + y) is y
f = n.field


def d(v):
    out = n.zero_vector()
    for deg, part in n.homogeneous_decompose(v).items():
        out = tuple(f.of(a + deg * b) for a, b in zip(out, part))
    return out


half = f.inv(f.of(2))
dx = d(gen)
ddx = d(dx)
pi_plus = tuple(f.of(half * (a + b)) for a, b in zip(ddx, dx))
pi_minus = tuple(f.of(half * (a - b)) for a, b in zip(ddx, dx))
print("\npi_1(x + y) =", pi_plus, " (x)")
print("pi_-1(x + y) =", pi_minus, " (y)")

# on a semiprime algebra the guarantee holds; here every ideal is
# already graded and the extraction is the identity
s = sl2sum(F5)
comp = s.ideal_generated([s.basis_vector(0)])
print("\nsl2 (+) sl2 component: core == ideal:",
      graded_core(s, comp) == comp,
      "| essentiality matches:",
      is_essential_ideal(s, comp) ==
      is_essential_ideal(s, graded_core(s, comp)))
