"""Dense exact linear algebra over Q and F_p.

Vectors are rows (tuples of field elements); a linear map is a matrix M of
shape (domain, target) acting on the right, image = v @ M.  Subspaces are
kept in reduced row-echelon form, which is unique per row space, so two
subspaces are equal iff their stored bases are equal entry for entry.

The rational elimination path is fraction-free: rows are scaled to integers,
gcd-normalized after every combination, and divided by their pivot only at
the very end.  Structure constants in this package are integers almost
always, so this keeps the inner loops in small-int arithmetic.
"""

from fractions import Fraction
from math import gcd, lcm


# ---------------------------------------------------------------------------
# elimination cores


def _int_row(row):
    """Scale a row of Fractions/ints to coprime integers."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    ints = [int(x * den) if isinstance(x, Fraction) else x * den for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _reduce_gcd(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _first_nonzero(row):
    for c, x in enumerate(row):
        if x:
            return c
    return None


def _echelon_q(rows):
    """Insertion echelon over Z (row space over Q). Returns {pivot_col: row}."""
    piv = {}
    for raw in rows:
        row = _int_row(raw)
        while True:
            c = _first_nonzero(row)
            if c is None:
                break
            if c in piv:
                q = piv[c]
                a, b = q[c], row[c]
                g = gcd(a, b)
                ka, kb = b // g, a // g
                row = _reduce_gcd([kb * x - ka * y for x, y in zip(row, q)])
            else:
                if row[c] < 0:
                    row = [-x for x in row]
                piv[c] = row
                break
    return piv


def _echelon_p(rows, p):
    """Insertion echelon mod p, rows normalized to leading 1. {pivot_col: row}."""
    piv = {}
    for raw in rows:
        row = [x % p for x in raw]
        while True:
            c = _first_nonzero(row)
            if c is None:
                break
            if c in piv:
                q = piv[c]
                b = row[c]
                row = [(x - b * y) % p for x, y in zip(row, q)]
            else:
                inv = pow(row[c], -1, p)
                piv[c] = [x * inv % p for x in row]
                break
    return piv


def rref(field, rows):
    """Canonical reduced row-echelon basis of the row space. List of tuples."""
    p = field.p
    if p is None:
        piv = _echelon_q(rows)
        cols = sorted(piv)
        # back-eliminate above each pivot, still in integers
        for i in range(len(cols) - 1, -1, -1):
            c = cols[i]
            q = piv[c]
            for c2 in cols[:i]:
                r = piv[c2]
                if r[c]:
                    a, b = q[c], r[c]
                    g = gcd(a, b)
                    ka, kb = b // g, a // g
                    r = _reduce_gcd([kb * x - ka * y for x, y in zip(r, q)])
                    if r[c2] < 0:
                        r = [-x for x in r]
                    piv[c2] = r
        out = []
        for c in cols:
            r = piv[c]
            lead = r[c]
            out.append(tuple(Fraction(x, lead) for x in r))
        return out
    piv = _echelon_p(rows, p)
    cols = sorted(piv)
    for i in range(len(cols) - 1, -1, -1):
        c = cols[i]
        q = piv[c]
        for c2 in cols[:i]:
            r = piv[c2]
            if r[c]:
                b = r[c]
                piv[c2] = [(x - b * y) % p for x, y in zip(r, q)]
    return [tuple(piv[c]) for c in cols]


def rank(field, rows):
    if field.p is None:
        return len(_echelon_q(rows))
    return len(_echelon_p(rows, field.p))


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of field^ambient, stored as a canonical RREF row basis."""

    __slots__ = ("field", "ambient", "rows")

    def __init__(self, field, ambient, rows, *, _canonical=False):
        self.field = field
        self.ambient = ambient
        if _canonical:
            self.rows = tuple(rows)
        else:
            self.rows = tuple(rref(field, [list(r) for r in rows]))

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, (), _canonical=True)

    @classmethod
    def full(cls, field, ambient):
        one, z = field.one, field.zero
        rows = tuple(
            tuple(one if j == i else z for j in range(ambient)) for i in range(ambient)
        )
        return cls(field, ambient, rows, _canonical=True)

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def pivots(self):
        return tuple(_first_nonzero(list(r)) for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"

    def coords(self, vec):
        """Coefficients of vec in the RREF basis, or None if not a member."""
        res = list(vec)
        out = []
        p = self.field.p
        for row in self.rows:
            c = _first_nonzero(list(row))
            t = res[c]
            out.append(t)
            if t:
                if p is None:
                    res = [x - t * y for x, y in zip(res, row)]
                else:
                    res = [(x - t * y) % p for x, y in zip(res, row)]
        if any(res):
            return None
        return out

    def reduce(self, vec):
        """Residual of vec after eliminating this basis' pivot coordinates."""
        res = list(vec)
        p = self.field.p
        for row in self.rows:
            c = _first_nonzero(list(row))
            t = res[c]
            if t:
                if p is None:
                    res = [x - t * y for x, y in zip(res, row)]
                else:
                    res = [(x - t * y) % p for x, y in zip(res, row)]
        return tuple(res)

    def contains(self, vec) -> bool:
        return self.coords(vec) is not None

    def contains_space(self, other) -> bool:
        return all(self.contains(r) for r in other.rows)

    def add(self, other):
        assert self.ambient == other.ambient
        return Subspace(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other):
        return sum_intersect(self, other)[1]


def span(field, ambient, vectors):
    return Subspace(field, ambient, [list(v) for v in vectors])


def sum_intersect(u, w):
    """Zassenhaus: one elimination yields (u + w, u ∩ w)."""
    assert u.ambient == w.ambient and u.field == w.field
    n = u.ambient
    f = u.field
    z = f.zero
    block = [list(r) + list(r) for r in u.rows] + [list(r) + [z] * n for r in w.rows]
    if f.p is None:
        piv = _echelon_q(block)
    else:
        piv = _echelon_p(block, f.p)
    sum_rows, int_rows = [], []
    for c in sorted(piv):
        row = piv[c]
        if c < n:
            sum_rows.append(row[:n])
        else:
            int_rows.append(row[n:])
    return (
        Subspace(f, n, sum_rows),
        Subspace(f, n, int_rows),
    )


def kernel_basis(field, rows, ncols):
    """Canonical basis of {x : rows-as-matrix @ x = 0}, x of length ncols.

    Rows are the equations: each row r imposes sum_j r[j] x[j] = 0.
    """
    red = rref(field, [list(r) for r in rows])
    pivots = [_first_nonzero(list(r)) for r in red]
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    one, z = field.one, field.zero
    basis = []
    for fcol in free:
        v = [z] * ncols
        v[fcol] = one
        for r, pc in zip(red, pivots):
            # x[pc] = -sum over free columns of r[c] * x[c]
            v[pc] = field.neg(r[fcol])
        basis.append(v)
    return Subspace(field, ncols, basis)


def solution_space(field, equations, nunknowns):
    """Alias of kernel_basis with intent-revealing name for big systems."""
    return kernel_basis(field, equations, nunknowns)


# ---------------------------------------------------------------------------
# matrices as list-of-rows


def mat_vec(v, m, field):
    """Row vector times matrix: (v @ m)."""
    p = field.p
    cols = len(m[0]) if m else 0
    out = [field.zero] * cols
    for vi, row in zip(v, m):
        if vi:
            for j, x in enumerate(row):
                if x:
                    out[j] = out[j] + vi * x
    if p is not None:
        out = [x % p for x in out]
    return tuple(out)


def mat_mul(a, b, field):
    p = field.p
    if not a:
        return ()
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero] * cols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j, y in enumerate(brow):
                    if y:
                        acc[j] = acc[j] + x * y
        if p is not None:
            acc = [v % p for v in acc]
        out.append(tuple(acc))
    return tuple(out)


def mat_identity(field, n):
    one, z = field.one, field.zero
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def mat_scale(m, c, field):
    p = field.p
    if p is None:
        return [[x * c for x in row] for row in m]
    return [[x * c % p for x in row] for row in m]


def mat_add(a, b, field):
    p = field.p
    if p is None:
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    return [[(x + y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b, field):
    p = field.p
    if p is None:
        return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    return [[(x - y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq_zero(m):
    return all(not x for row in m for x in row)


def determinant(field, m):
    """Exact determinant; Bareiss over Q (integerized), elimination mod p."""
    n = len(m)
    if n == 0:
        return field.one
    if field.p is None:
        # scale every row to integers, track the denominators
        den = Fraction(1)
        a = []
        for row in m:
            d = 1
            for x in row:
                if isinstance(x, Fraction):
                    d = lcm(d, x.denominator)
            den *= d
            a.append([int(x * d) for x in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return Fraction(0)
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return Fraction(sign * a[n - 1][n - 1], 1) / den
    p = field.p
    a = [[x % p for x in row] for row in m]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det % p
        det = det * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[k])]
    return det % p


def solve_linear(field, equations, rhs, nunknowns=None):
    """One solution x of equations @ x = rhs, or None.

    equations: list of rows (each of length n); rhs: list of scalars.
    Free unknowns are set to zero.
    """
    n = nunknowns if nunknowns is not None else (len(equations[0]) if equations else 0)
    aug = [list(r) + [b] for r, b in zip(equations, rhs)]
    red = rref(field, aug)
    x = [field.zero] * n
    for row in red:
        c = _first_nonzero(list(row))
        if c == n:
            return None  # inconsistent: 0 = 1 row
        x[c] = row[n]
    # with free unknowns at zero, x[pivot] = row[n] solves each RREF row;
    # re-check against the original system as cheap insurance
    p = field.p
    for r, b in zip(equations, rhs):
        s = sum(a * v for a, v in zip(r, x))
        if p is not None:
            s %= p
            b %= p
        if s != b:
            return None
    return x
