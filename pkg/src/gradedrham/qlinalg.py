"""Exact linear algebra over the rationals.

Matrices are stored as sparse rows (``dict`` column -> ``Fraction``) but all
semantics are dense.  Elimination runs on primitive integer rows (each row is
scaled to coprime integers before and after every combination), and only the
final reduced echelon form is normalised back to ``Fraction`` entries.
"""

from fractions import Fraction
from math import gcd

Rat = Fraction


class QMatrix:
    """A rows x cols matrix with rational entries.

    Instances are treated as immutable once built.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        clean = []
        for row in rows:
            r = {}
            for j, v in row.items():
                if not 0 <= j < ncols:
                    raise ValueError(f"column {j} out of range for {ncols} columns")
                if v:
                    r[j] = Fraction(v)
            clean.append(r)
        self.rows = clean

    @classmethod
    def from_dense(cls, data, ncols=None):
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        return cls(len(data), ncols, [{j: v for j, v in enumerate(r) if v} for r in data])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, Fraction(0))

    def to_dense(self):
        out = []
        for row in self.rows:
            r = [Fraction(0)] * self.ncols
            for j, v in row.items():
                r[j] = v
            out.append(r)
        return out

    def transpose(self):
        cols = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return QMatrix(self.ncols, self.nrows, cols)

    def is_zero(self):
        return not any(self.rows)

    def nonzero_entries(self):
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                yield i, j, row[j]

    def apply(self, vec):
        """Matrix times a column vector given as a dense list."""
        if len(vec) != self.ncols:
            raise ValueError(f"vector of length {len(vec)} for {self.ncols} columns")
        out = []
        for row in self.rows:
            s = Fraction(0)
            for j, v in row.items():
                x = vec[j]
                if x:
                    s += v * x
            out.append(s)
        return out

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = []
            for row in self.rows:
                acc = {}
                for k, a in row.items():
                    for j, b in other.rows[k].items():
                        acc[j] = acc.get(j, 0) + a * b
                out.append({j: v for j, v in acc.items() if v})
            return QMatrix(self.nrows, other.ncols, out)
        return self.apply(other)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = []
        for r1, r2 in zip(self.rows, other.rows):
            r = dict(r1)
            for j, v in r2.items():
                r[j] = r.get(j, 0) + v
            out.append({j: v for j, v in r.items() if v})
        return QMatrix(self.nrows, self.ncols, out)

    def scale(self, c):
        c = Fraction(c)
        return QMatrix(self.nrows, self.ncols, [{j: c * v for j, v in r.items()} for r in self.rows])

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"QMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))})"


def _integer_row(row):
    """Scale a sparse rational row to a primitive integer row with positive lead."""
    if not row:
        return {}
    den = 1
    for v in row.values():
        v = Fraction(v)
        den = den * v.denominator // gcd(den, v.denominator)
    ints = {j: int(Fraction(v) * den) for j, v in row.items() if v}
    return _primitive(ints)


def _primitive(row):
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _combine(row, piv_row, col):
    """Eliminate ``col`` from ``row`` using ``piv_row`` (integer arithmetic)."""
    a = piv_row[col]
    b = row[col]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {j: a * v for j, v in row.items()}
    for j, v in piv_row.items():
        w = out.get(j, 0) - b * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return _primitive(out)


class Echelon:
    """Incrementally maintained row echelon form with integer primitive rows.

    Pivots are the leftmost nonzero column of each stored row.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        """Return the integer row left after eliminating every known pivot."""
        r = _integer_row(row)
        while r:
            hit = None
            for c in sorted(r):
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                return r
            r = _combine(r, self.pivots[hit], hit)
        return r

    def add(self, row):
        """Insert a row; return True iff it was independent of the rows so far."""
        r = _integer_row(row)
        while r:
            c = min(r)
            p = self.pivots.get(c)
            if p is None:
                self.pivots[c] = r
                return True
            r = _combine(r, p, c)
        return False

    def contains(self, row):
        return not self.reduce(row)

    def reduced(self):
        """Reduced row echelon form as a list of (pivot, Fraction row) pairs."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            rc = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r2 = rows[c2]
                if c in r2:
                    rows[c2] = _combine(r2, rc, c)
        out = []
        for c in cols:
            r = rows[c]
            lead = r[c]
            out.append((c, {j: Fraction(v, lead) for j, v in r.items()}))
        return out


def _as_rows(m):
    """Rows of a QMatrix, a list of sparse dict rows, or a list of dense lists."""
    if isinstance(m, QMatrix):
        return m.rows
    return [r if isinstance(r, dict) else {j: Fraction(v) for j, v in enumerate(r) if v} for r in m]


def rref(m):
    """Reduced row echelon form.

    Returns ``(R, pivots, rank)`` where ``R`` has the same shape as ``m`` with
    the zero rows at the bottom.
    """
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.add(row)
    red = ech.reduced()
    rows = [r for _, r in red] + [{} for _ in range(m.nrows - len(red))]
    return QMatrix(m.nrows, m.ncols, rows), [c for c, _ in red], len(red)


def rank(m):
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.add(row)
    return ech.rank


def kernel_basis(m):
    """Basis of the right null space, as dense lists of Fractions."""
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.add(row)
    red = ech.reduced()
    pivots = {c for c, _ in red}
    basis = []
    for f in range(m.ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for c, r in red:
            x = r.get(f)
            if x:
                v[c] = -x
        basis.append(v)
    return basis


def quotient_basis(ambient_dim, span):
    """Representatives and reduction map for ``Q^ambient_dim / rowspan(span)``.

    The representatives are the non-pivot columns of ``rref(span)``; the
    reduction map is a ``len(reps) x ambient_dim`` matrix sending an ambient
    coordinate vector to its coordinates on the representatives.
    """
    rows = _as_rows(span)
    ech = Echelon(ambient_dim)
    for row in rows:
        if row and max(row) >= ambient_dim:
            raise ValueError("span row longer than the ambient dimension")
        ech.add(row)
    red = ech.reduced()
    pivot_row = {c: r for c, r in red}
    reps = [j for j in range(ambient_dim) if j not in pivot_row]
    pos = {j: k for k, j in enumerate(reps)}
    cols = []
    for j in range(ambient_dim):
        if j in pos:
            cols.append({pos[j]: Fraction(1)})
        else:
            r = pivot_row[j]
            cols.append({pos[k]: -v for k, v in r.items() if k != j})
    reduction = QMatrix(ambient_dim, len(reps), cols).transpose()
    return reps, reduction


def membership(v, span):
    rows = _as_rows(span)
    ncols = len(v)
    ech = Echelon(ncols)
    for row in rows:
        ech.add(row)
    return ech.contains({j: Fraction(x) for j, x in enumerate(v) if x})


def column_space_rows(m):
    """The columns of ``m`` as sparse rows (i.e. the rows of the transpose)."""
    return m.transpose().rows
