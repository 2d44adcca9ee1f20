"""Graded Lie algebras over exact scalar fields.

An algebra is stored as a dense table of structure constants
table[i][j][k] = coefficient of basis vector k in the bracket of basis
vectors i and j, together with a grading (trivial, Z, or Z/n) assigning a
degree to every basis vector.  All axioms (antisymmetry, the Jacobi
identity, compatibility of the bracket with the grading) are checked at
construction time; downstream code may therefore assume they hold.

Vectors are plain tuples of field elements in the fixed basis, matrices
are tuples of row vectors, and the row-vector convention of linalg is
used throughout: ``v @ ad_matrix(L, x)`` is the bracket ``[x, v]``.
"""

from __future__ import annotations

import itertools

from .errors import (
    AntisymmetryViolation,
    GradingViolation,
    JacobiViolation,
    NotAnIdeal,
    NotGraded,
    ValidationError,
)
from .linalg import Subspace, kernel_basis, mat_mul, span
from .scalars import Field


class GradingGroup:
    """Trivial group, the integers, or the integers mod n.

    Degrees are always plain ints (0 for the trivial group, any int for Z,
    ints in [0, n) for Z/n); canon() brings an int into normal form.
    """

    __slots__ = ("kind", "n")

    def __init__(self, kind, n=None):
        if kind not in ("trivial", "Z", "Zn"):
            raise ValueError("unknown grading group kind %r" % (kind,))
        if kind == "Zn":
            if not isinstance(n, int) or n < 1:
                raise ValueError("Zn grading needs a positive modulus")
        else:
            n = None
        self.kind = kind
        self.n = n

    @classmethod
    def trivial(cls):
        return cls("trivial")

    @classmethod
    def integers(cls):
        return cls("Z")

    @classmethod
    def mod(cls, n):
        return cls("Zn", n)

    @property
    def zero(self):
        return 0

    def canon(self, d):
        d = int(d)
        if self.kind == "trivial":
            return 0
        if self.kind == "Zn":
            return d % self.n
        return d

    def add(self, a, b):
        return self.canon(a + b)

    def neg(self, a):
        return self.canon(-a)

    def __eq__(self, other):
        return (isinstance(other, GradingGroup)
                and self.kind == other.kind and self.n == other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        if self.kind == "Zn":
            return "GradingGroup.mod(%d)" % self.n
        return "GradingGroup(%r)" % self.kind


def _freeze_vec(field, vec, n):
    out = tuple(field.of(c) for c in vec)
    if len(out) != n:
        raise ValidationError("vector of length %d in dimension %d" % (len(out), n))
    return out


class GradedLieAlgebra:
    """Finite dimensional Lie algebra with a group grading.

    table[i][j] is the coordinate tuple of [b_i, b_j].  Construction
    validates antisymmetry, the grading compatibility, and Jacobi, in that
    order, raising the matching ValidationError subclass on failure.
    """

    __slots__ = ("field", "names", "table", "group", "degrees", "_hash")

    def __init__(self, field, names, table, group=None, degrees=None):
        if not isinstance(field, Field):
            raise ValidationError("field must be a Field instance")
        self.field = field
        self.names = tuple(str(s) for s in names)
        n = len(self.names)
        if group is None:
            group = GradingGroup.trivial()
        self.group = group
        if degrees is None:
            degrees = (0,) * n
        degrees = tuple(group.canon(d) for d in degrees)
        if len(degrees) != n:
            raise ValidationError("need one degree per basis vector")
        self.degrees = degrees

        rows = []
        for i in range(n):
            row = tuple(_freeze_vec(field, table[i][j], n) for j in range(n))
            if len(table[i]) != n:
                raise ValidationError("table row %d has wrong length" % i)
            rows.append(row)
        self.table = tuple(rows)

        self._check_antisymmetry()
        self._check_grading()
        self._check_jacobi()
        self._hash = hash((field.p, self.names, self.degrees,
                           self.group, self.table))

    # -- validation -------------------------------------------------

    def _check_antisymmetry(self):
        zero = self.field.zero
        n = self.dim
        for i in range(n):
            if any(c != zero for c in self.table[i][i]):
                raise AntisymmetryViolation(i, i, "[b_i, b_i] != 0")
            for j in range(i + 1, n):
                neg = tuple(self.field.neg(c) for c in self.table[j][i])
                if self.table[i][j] != neg:
                    raise AntisymmetryViolation(i, j, "[b_i,b_j] != -[b_j,b_i]")

    def _check_grading(self):
        zero = self.field.zero
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                want = self.group.add(self.degrees[i], self.degrees[j])
                for k, c in enumerate(self.table[i][j]):
                    if c != zero and self.degrees[k] != want:
                        raise GradingViolation(i, j, k)

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                tij = self.table[i][j]
                for k in range(j + 1, n):
                    r = self._vadd3(self.bracket(tij, self._e(k)),
                                    self.bracket(self.table[j][k], self._e(i)),
                                    self.bracket(self.table[k][i], self._e(j)))
                    if any(c != self.field.zero for c in r):
                        raise JacobiViolation(i, j, k, residue=r)

    # -- basics -----------------------------------------------------

    @property
    def dim(self):
        return len(self.names)

    def _e(self, i):
        z = self.field.zero
        return tuple(self.field.one if j == i else z for j in range(self.dim))

    def basis_vector(self, i):
        return self._e(i)

    def zero_vector(self):
        return (self.field.zero,) * self.dim

    def _vadd3(self, a, b, c):
        f = self.field
        return tuple(f.of(a[i] + b[i] + c[i]) for i in range(self.dim))

    def vec(self, coords):
        return _freeze_vec(self.field, coords, self.dim)

    def bracket(self, x, y):
        """[x, y] by bilinearity over the structure table."""
        f = self.field
        n = self.dim
        zero = f.zero
        acc = [zero] * n
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            ti = self.table[i]
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                row = ti[j]
                c = f.of(xi * yj)
                if c == zero:
                    continue
                for k, t in enumerate(row):
                    if t != zero:
                        acc[k] = f.of(acc[k] + c * t)
        return tuple(acc)

    def ad_matrix(self, x):
        """Matrix of ad x in row convention: v @ M = [x, v]."""
        f = self.field
        n = self.dim
        zero = f.zero
        rows = []
        for j in range(n):
            acc = [zero] * n
            for i, xi in enumerate(x):
                if xi == zero:
                    continue
                row = self.table[i][j]
                for k, t in enumerate(row):
                    if t != zero:
                        acc[k] = f.of(acc[k] + xi * t)
            rows.append(tuple(acc))
        return tuple(rows)

    def right_matrix(self, y):
        """Matrix of right bracketing: v @ R(y) = [v, y]."""
        f = self.field
        n = self.dim
        zero = f.zero
        rows = []
        for k in range(n):
            acc = [zero] * n
            for m, ym in enumerate(y):
                if ym == zero:
                    continue
                row = self.table[k][m]
                for t_idx, t in enumerate(row):
                    if t != zero:
                        acc[t_idx] = f.of(acc[t_idx] + ym * t)
            rows.append(tuple(acc))
        return tuple(rows)

    def __eq__(self, other):
        return (isinstance(other, GradedLieAlgebra)
                and self.field == other.field
                and self.names == other.names
                and self.degrees == other.degrees
                and self.group == other.group
                and self.table == other.table)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "GradedLieAlgebra(dim=%d, field=%r, group=%r)" % (
            self.dim, self.field, self.group)

    # -- grading helpers --------------------------------------------

    def support(self):
        """Sorted list of degrees carrying a nonzero piece of L."""
        return sorted(set(self.degrees))

    def degree_component(self, d):
        d = self.group.canon(d)
        rows = [self._e(i) for i in range(self.dim) if self.degrees[i] == d]
        return span(self.field, self.dim, rows)

    def homogeneous_decompose(self, v):
        """Split v into its homogeneous pieces; returns {degree: vector}."""
        v = self.vec(v)
        zero = self.field.zero
        out = {}
        for i, c in enumerate(v):
            if c == zero:
                continue
            d = self.degrees[i]
            if d not in out:
                out[d] = [zero] * self.dim
            out[d][i] = c
        return {d: tuple(w) for d, w in out.items()}

    def is_homogeneous(self, v):
        return len(self.homogeneous_decompose(v)) <= 1

    def degree_of(self, v):
        """Degree of a nonzero homogeneous vector; None for v = 0."""
        parts = self.homogeneous_decompose(v)
        if not parts:
            return None
        if len(parts) > 1:
            raise ValidationError("vector is not homogeneous")
        return next(iter(parts))

    def is_graded_subspace(self, sub):
        """A subspace is graded iff every canonical basis row is homogeneous.

        The reduced echelon basis of a graded subspace is automatically
        homogeneous (projecting a basis row to the degree of its pivot
        column keeps the pivot and stays inside the subspace, so row and
        projection coincide), hence this check is exact.
        """
        return all(self.is_homogeneous(r) for r in sub.rows)

    def graded_closure_check(self, sub):
        if not self.is_graded_subspace(sub):
            raise NotGraded("subspace is not graded")

    # -- subspace calculus -------------------------------------------

    def full_space(self):
        return Subspace.full(self.field, self.dim)

    def zero_space(self):
        return Subspace.zero(self.field, self.dim)

    def bracket_space(self, u, w):
        """Span of [u_r, w_s] over basis rows of two subspaces."""
        rows = [self.bracket(a, b) for a in u.rows for b in w.rows]
        return span(self.field, self.dim, rows)

    def is_subalgebra(self, s):
        return all(s.contains(self.bracket(a, b))
                   for a, b in itertools.combinations(s.rows, 2))

    def is_ideal(self, s):
        return all(s.contains(self.bracket(self._e(i), r))
                   for i in range(self.dim) for r in s.rows)

    def require_ideal(self, s, what="subspace"):
        if not self.is_ideal(s):
            raise NotAnIdeal("%s is not an ideal" % what)

    def ideal_generated(self, vectors):
        """Smallest ideal containing the given vectors (fixpoint closure)."""
        cur = span(self.field, self.dim, list(vectors))
        while True:
            new_rows = []
            for i in range(self.dim):
                for r in cur.rows:
                    w = self.bracket(self._e(i), r)
                    if not cur.contains(w):
                        new_rows.append(w)
            if not new_rows:
                return cur
            cur = cur.add(span(self.field, self.dim, new_rows))

    def subalgebra_generated(self, vectors):
        cur = span(self.field, self.dim, list(vectors))
        while True:
            new_rows = [self.bracket(a, b)
                        for a, b in itertools.combinations(cur.rows, 2)
                        if not cur.contains(self.bracket(a, b))]
            if not new_rows:
                return cur
            cur = cur.add(span(self.field, self.dim, new_rows))

    def annihilator(self, s):
        """Ann_L(S) = {x in L : [x, S] = 0} as a subspace.

        For S an ideal this is again an ideal; computed as the kernel of
        the joint right multiplication by a basis of S.
        """
        equations = []
        for r in s.rows:
            rm = self.right_matrix(r)
            # equation per output coordinate k: sum_j x_j rm[j][k] = 0
            for k in range(self.dim):
                equations.append(tuple(rm[j][k] for j in range(self.dim)))
        return kernel_basis(self.field, equations, self.dim)

    def center(self):
        return self.annihilator(self.full_space())

    def is_in_quadratic_annihilator(self, x):
        """True iff [x, [x, L]] = 0, i.e. ad(x)^2 vanishes."""
        m = self.ad_matrix(self.vec(x))
        zero = self.field.zero
        sq = mat_mul(m, m, self.field)
        return all(c == zero for row in sq for c in row)

    def derived_space(self, s):
        """[S, S] for a subspace S."""
        return self.bracket_space(s, s)

    # -- quotients and restrictions ----------------------------------

    def quotient_by_ideal(self, ideal, names=None):
        """Quotient algebra L/I with projection and section matrices.

        Representatives are the standard basis vectors at the non pivot
        columns of the canonical basis of I, so the projection of v is
        "reduce v by the echelon rows of I, read off the kept columns".
        I must be an ideal, and graded whenever the grading is nontrivial.
        Returns (Q, proj, section) with proj of shape dim(L) x dim(Q) and
        section of shape dim(Q) x dim(L); both are tuples of rows and
        satisfy section @ proj = identity on Q.
        """
        self.require_ideal(ideal, "quotient kernel")
        if self.group.kind != "trivial":
            self.graded_closure_check(ideal)
        f = self.field
        pivots = ideal.pivots()
        kept = [c for c in range(self.dim) if c not in pivots]
        q = len(kept)

        def project(v):
            red = ideal.reduce(v)
            return tuple(red[c] for c in kept)

        proj = tuple(project(self._e(i)) for i in range(self.dim))
        zero = f.zero
        section = tuple(tuple(f.one if j == kept[a] else zero
                              for j in range(self.dim)) for a in range(q))
        if names is None:
            names = tuple(self.names[c] for c in kept)
        table = [[project(self.bracket(self._e(kept[a]), self._e(kept[b])))
                  for b in range(q)] for a in range(q)]
        degrees = tuple(self.degrees[c] for c in kept)
        quo = GradedLieAlgebra(f, names, table, self.group, degrees)
        return quo, proj, section

    def restrict(self, sub, names=None, require_graded=True):
        """Lie algebra structure on a bracket closed subspace.

        Returns (A, rows) where rows are the canonical basis of the
        subspace; coordinates of A refer to that basis.  With a nontrivial
        grading the subspace must be graded (its canonical rows are then
        homogeneous and carry well defined degrees).
        """
        rows = sub.rows
        if not self.is_subalgebra(sub):
            raise ValidationError("subspace is not closed under the bracket")
        if self.group.kind != "trivial" and require_graded:
            self.graded_closure_check(sub)
            degrees = tuple(self.degree_of(r) if any(c != self.field.zero for c in r)
                            else 0 for r in rows)
            group = self.group
        else:
            degrees = (0,) * sub.dim
            group = GradingGroup.trivial() if not require_graded else self.group
        if names is None:
            names = tuple("u%d" % a for a in range(sub.dim))
        table = []
        for a in range(sub.dim):
            trow = []
            for b in range(sub.dim):
                w = self.bracket(rows[a], rows[b])
                coords = sub.coords(w)
                if coords is None:
                    raise ValidationError("bracket left the subspace")
                trow.append(coords)
            table.append(trow)
        alg = GradedLieAlgebra(self.field, names, table, group, degrees)
        return alg, rows


def direct_sum(a, b, sep="'"):
    """External direct sum of two algebras over the same field and group."""
    if a.field != b.field:
        raise ValidationError("direct sum needs a common scalar field")
    if a.group != b.group:
        raise ValidationError("direct sum needs a common grading group")
    f = a.field
    n, m = a.dim, b.dim
    names = a.names + tuple(s + sep for s in b.names)
    zero = f.zero

    def pad_left(v):
        return tuple(v) + (zero,) * m

    def pad_right(v):
        return (zero,) * n + tuple(v)

    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(pad_left(a.table[i][j]))
            elif i >= n and j >= n:
                row.append(pad_right(b.table[i - n][j - n]))
            else:
                row.append((zero,) * (n + m))
        table.append(row)
    degrees = a.degrees + b.degrees
    return GradedLieAlgebra(f, names, table, a.group, degrees)
