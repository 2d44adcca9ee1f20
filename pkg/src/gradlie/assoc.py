"""Graded associative algebras with involution and their derived Lie objects.

The Lie side of an associative algebra A enters through the commutator
algebra (written A with a minus here), the skew elements of an involution,
and their central quotients.  The double A (+) A-opposite with the
exchange involution turns commutator statements into skew-element
statements: its skew part is exactly {(a, -a)} and bracketing there copies
the commutator of A, which this module constructs and verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    AssociativityViolation,
    GradingViolation,
    InvolutionViolation,
    NoInvolution,
    ValidationError,
)
from .lie import GradedLieAlgebra, GradingGroup
from .linalg import Subspace, kernel_basis, mat_vec, span


class AssocAlgebra:
    """Finite dimensional graded associative algebra, optional involution.

    table[i][j] is the coordinate tuple of b_i * b_j.  The involution, when
    present, is a matrix whose row i gives the coordinates of b_i* and must
    be a degree-preserving anti-automorphism of order at most two.
    """

    __slots__ = ("field", "names", "table", "group", "degrees", "involution")

    def __init__(self, field, names, table, group=None, degrees=None,
                 involution=None):
        self.field = field
        self.names = tuple(names)
        n = len(self.names)
        self.table = tuple(tuple(tuple(field.of(c) for c in cell)
                                 for cell in row) for row in table)
        if group is None:
            group = GradingGroup.trivial()
        self.group = group
        if degrees is None:
            degrees = (group.zero,) * n
        self.degrees = tuple(group.canon(d) for d in degrees)
        if involution is not None:
            involution = tuple(tuple(field.of(c) for c in row)
                               for row in involution)
        self.involution = involution
        self._validate()

    @property
    def dim(self):
        return len(self.names)

    def _validate(self):
        n = self.dim
        f = self.field
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValidationError("structure table has the wrong shape")
        for i in range(n):
            for j in range(n):
                for k, c in enumerate(self.table[i][j]):
                    if c != f.zero and self.group.add(
                            self.degrees[i], self.degrees[j]) != self.degrees[k]:
                        raise GradingViolation(i, j, k)
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    left = self._mul_coords(ij, self.basis_vector(k))
                    right = self._mul_coords(self.basis_vector(i),
                                             self.table[j][k])
                    if left != right:
                        raise AssociativityViolation(i, j, k)
        if self.involution is not None:
            inv = self.involution
            for i in range(n):
                # order two
                again = mat_vec(inv[i], inv, f)
                if tuple(again) != self.basis_vector(i):
                    raise InvolutionViolation(
                        "involution applied twice moves basis vector %d" % i)
                # degree preserving
                for k, c in enumerate(inv[i]):
                    if c != f.zero and self.degrees[k] != self.degrees[i]:
                        raise InvolutionViolation(
                            "involution mixes degrees at basis vector %d" % i)
            for i in range(n):
                for j in range(n):
                    lhs = self.star(self.table[i][j])
                    rhs = self._mul_coords(inv[j], inv[i])
                    if lhs != rhs:
                        raise InvolutionViolation(
                            "involution is not an anti-homomorphism at "
                            "(%d, %d)" % (i, j))

    def _mul_coords(self, x, y):
        f = self.field
        n = self.dim
        out = [f.zero] * n
        for i, a in enumerate(x):
            if a == f.zero:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if b == f.zero:
                    continue
                cell = row[j]
                ab = f.of(a * b)
                for k in range(n):
                    c = cell[k]
                    if c != f.zero:
                        out[k] = f.of(out[k] + ab * c)
        return tuple(out)

    def product(self, x, y):
        return self._mul_coords(self.vec(x), self.vec(y))

    def basis_vector(self, i):
        f = self.field
        return tuple(f.one if j == i else f.zero for j in range(self.dim))

    def vec(self, coords):
        return tuple(self.field.of(c) for c in coords)

    def star(self, x):
        if self.involution is None:
            raise NoInvolution("no involution on this algebra")
        return tuple(mat_vec(self.vec(x), self.involution, self.field))

    def minus_algebra(self):
        """Same module with the commutator bracket; grading carries over."""
        f = self.field
        n = self.dim
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                ij = self.table[i][j]
                ji = self.table[j][i]
                row.append(tuple(f.of(a - b) for a, b in zip(ij, ji)))
            table.append(tuple(row))
        return GradedLieAlgebra(f, self.names, tuple(table), self.group,
                                self.degrees)

    def skew_elements(self):
        """The subspace {x : x* = -x}, a graded Lie subalgebra of A minus."""
        if self.involution is None:
            raise NoInvolution("skew elements need an involution")
        f = self.field
        n = self.dim
        # rows of (involution + identity) as linear conditions on x
        eqs = []
        for k in range(n):
            eq = []
            for j in range(n):
                c = self.involution[j][k]
                if j == k:
                    c = f.of(c + f.one)
                eq.append(c)
            eqs.append(tuple(eq))
        return kernel_basis(f, eqs, n)


def exchange_double(a):
    """A (+) A-opposite with the exchange involution (x, y)* = (y, x).

    The product is (x, y)(z, w) = (xz, wy), so the second block multiplies
    in the opposite order and the exchange map is an anti-automorphism.
    """
    f = a.field
    n = a.dim
    names = tuple("(%s,0)" % nm for nm in a.names) + \
            tuple("(0,%s)" % nm for nm in a.names)
    zero = (f.zero,) * (2 * n)
    table = [[zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            left = a.table[i][j]
            table[i][j] = tuple(left) + (f.zero,) * n
            right = a.table[j][i]
            table[n + i][n + j] = (f.zero,) * n + tuple(right)
    table = tuple(tuple(r) for r in table)
    inv = []
    for i in range(n):
        row = [f.zero] * (2 * n)
        row[n + i] = f.one
        inv.append(tuple(row))
    for i in range(n):
        row = [f.zero] * (2 * n)
        row[i] = f.one
        inv.append(tuple(row))
    return AssocAlgebra(f, names, table, a.group, a.degrees + a.degrees,
                        tuple(inv))


def exchange_skew_iso(a):
    """Verify that a |-> (a, -a) is a graded bracket isomorphism onto the
    skew part of the exchange double; returns (double, map rows)."""
    f = a.field
    n = a.dim
    dbl = exchange_double(a)
    skew = dbl.skew_elements()
    rows = []
    for i in range(n):
        v = [f.zero] * (2 * n)
        v[i] = f.one
        v[n + i] = f.of(-1)
        rows.append(tuple(v))
    image = span(f, 2 * n, rows)
    if image != skew:
        raise ValidationError("skew part of the double is not the "
                              "anti-diagonal copy")
    aminus = a.minus_algebra()
    dminus = dbl.minus_algebra()
    for i in range(n):
        for j in range(n):
            br = aminus.table[i][j]
            mapped = tuple(br) + tuple(f.neg(c) for c in br)
            direct = dminus.bracket(rows[i], rows[j])
            if mapped != tuple(direct):
                raise ValidationError("exchange map fails to preserve the "
                                      "bracket at (%d, %d)" % (i, j))
        if aminus.degrees[i] != dminus.degrees[i]:
            raise ValidationError("exchange map moves degrees")
    return dbl, tuple(rows)


VARIANTS = ("K", "KK", "minus", "AA")


def _variant_subspace(a, variant):
    """The requested Lie subalgebra of A minus, as a subspace of A."""
    aminus = a.minus_algebra()
    full = aminus.full_space()
    if variant == "minus":
        return aminus, full
    if variant == "AA":
        return aminus, aminus.bracket_space(full, full)
    if variant in ("K", "KK"):
        k = a.skew_elements()
        if variant == "K":
            return aminus, k
        return aminus, aminus.bracket_space(k, k)
    raise ValidationError("unknown variant %r" % (variant,))


def central_quotient(a, variant="K"):
    """Build the requested Lie algebra from A and quotient by its center."""
    if variant not in VARIANTS:
        raise ValidationError("variant must be one of %s" % (VARIANTS,))
    aminus, sub = _variant_subspace(a, variant)
    small, _rows = aminus.restrict(sub)
    quot, _proj, _section = small.quotient_by_ideal(small.center())
    return quot


@dataclass
class CentralQuotientReport:
    verdict: object
    variant: str
    dims: dict = dc_field(default_factory=dict)
    exchange_checked: bool = False
    asserted_overring: bool = True


def check_central_quotients(a, q=None, inclusion=None, variant="K"):
    """Exercise the central-quotient comparison for an embedding A in Q.

    Builds the variant Lie algebra on both sides, quotients each by its
    center, checks that the inclusion descends (the center of the small
    side must map into the center of the big side), and runs the graded
    quotient decider on the induced embedding.  The commutator variants
    are first rerouted through the exchange double, whose skew part is
    verified to copy A minus.  That Q sits inside the symmetric overring
    of A is the caller's assertion, recorded in the report.
    """
    from .derivations import QuotientEmbedding, is_quotient

    if variant not in VARIANTS:
        raise ValidationError("variant must be one of %s" % (VARIANTS,))
    if q is None:
        q = a
    f = a.field
    report = CentralQuotientReport(None, variant)

    if variant in ("minus", "AA"):
        # reroute through the double: skew of the double copies A minus
        dbl_a, _ = exchange_skew_iso(a)
        dbl_q, _ = exchange_skew_iso(q)
        report.exchange_checked = True
        inner = "K" if variant == "minus" else "KK"
        if inclusion is None:
            if a.dim != q.dim:
                raise ValidationError("an inclusion matrix is required when "
                                      "A and Q differ")
            inclusion = tuple(q.basis_vector(i) for i in range(q.dim))
        dbl_inc = []
        for row in inclusion:
            dbl_inc.append(tuple(row) + (f.zero,) * q.dim)
        for row in inclusion:
            dbl_inc.append((f.zero,) * q.dim + tuple(row))
        return _run_check(dbl_a, dbl_q, tuple(dbl_inc), inner, report)

    if inclusion is None:
        if a.dim != q.dim:
            raise ValidationError("an inclusion matrix is required when "
                                  "A and Q differ")
        inclusion = tuple(q.basis_vector(i) for i in range(q.dim))
    return _run_check(a, q, tuple(inclusion), variant, report)


def _run_check(a, q, inclusion, variant, report):
    from .derivations import QuotientEmbedding, is_quotient

    f = a.field
    # the inclusion must respect products and stars on basis vectors
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = q._mul_coords(inclusion[i], inclusion[j])
            rhs = _push(f, a.table[i][j], inclusion, q.dim)
            if lhs != rhs:
                raise ValidationError("inclusion is not multiplicative")
    if a.involution is not None and q.involution is not None:
        for i in range(a.dim):
            if q.star(inclusion[i]) != _push(f, a.involution[i], inclusion,
                                             q.dim):
                raise ValidationError("inclusion does not commute with *")

    aminus, sub_a = _variant_subspace(a, variant)
    qminus, sub_q = _variant_subspace(q, variant)
    small_a, rows_a = aminus.restrict(sub_a)
    small_q, rows_q = qminus.restrict(sub_q)
    za = small_a.center()
    zq = small_q.center()
    quot_q, proj_q, _ = small_q.quotient_by_ideal(zq)
    report.dims = {
        "lie_small": small_a.dim, "lie_big": small_q.dim,
        "center_small": za.dim, "center_big": zq.dim,
        "quotient_big": quot_q.dim,
    }

    # push the small Lie algebra through: A-sub rows -> Q coords ->
    # K_Q coordinates -> central quotient
    image_rows = []
    for r in rows_a:
        in_q = _push(f, r, inclusion, q.dim)
        co = sub_q.coords(in_q)
        if co is None:
            raise ValidationError("variant subalgebra of A does not land "
                                  "inside the variant subalgebra of Q")
        image_rows.append(tuple(mat_vec(tuple(co), proj_q, f)))
    # the kernel of the composite must be exactly the center of the small
    # side, otherwise the induced map on central quotients is not injective
    ker_eqs = tuple(tuple(image_rows[i][c] for i in range(len(image_rows)))
                    for c in range(quot_q.dim))
    ker = kernel_basis(f, ker_eqs, len(image_rows))
    if ker != za:
        raise ValidationError("center mismatch: the induced map on central "
                              "quotients is not injective")
    image = span(f, quot_q.dim, image_rows)
    emb = QuotientEmbedding(quot_q, image)
    report.dims["quotient_small"] = image.dim
    report.verdict = is_quotient(emb, graded=True)
    return report


def _push(field, coords, rows, ambient):
    out = [field.zero] * ambient
    for c, row in zip(coords, rows):
        if c != field.zero:
            for j in range(ambient):
                out[j] = field.of(out[j] + c * row[j])
    return tuple(out)
