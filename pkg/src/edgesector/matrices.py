"""Exact dense matrices over the rationals.

Entries are ints or fractions.Fraction (mixing is fine; integer matrices stay
integer under the ring operations).  Everything is computed exactly: the
characteristic polynomial goes through a rational Hessenberg reduction plus
the Hessenberg determinant recurrence, with Faddeev-LeVerrier kept as an
independent second route for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly


class DimensionError(ValueError):
    pass


class Matrix:
    """Immutable-by-convention dense matrix with exact entries."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rs = [list(r) for r in rows]
        if rs:
            w = len(rs[0])
            if any(len(r) != w for r in rs):
                raise DimensionError("ragged rows")
        else:
            w = 0
        if ncols is None:
            ncols = w
        elif rs and ncols != w:
            raise DimensionError("ncols does not match row length")
        self._rows = rs
        self.nrows = len(rs)
        self.ncols = ncols

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def diagonal(cls, diag) -> "Matrix":
        d = list(diag)
        n = len(d)
        return cls([[d[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, i: int):
        return self._rows[i]

    def entry(self, i: int, j: int):
        return self._rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        r = self._rows
        return all(r[i][j] == r[j][i] for i in range(self.nrows) for j in range(i))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch in addition")
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch in subtraction")
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)],
            ncols=self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self._rows], ncols=self.ncols)

    def scaled(self, s) -> "Matrix":
        return Matrix([[a * s for a in r] for r in self._rows], ncols=self.ncols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions do not match")
        brows = other._rows
        w = other.ncols
        out = []
        for arow in self._rows:
            acc = [0] * w
            for a, brow in zip(arow, brows):
                # skip-zero accumulation: the operators here are sparse 0/1
                if a == 0:
                    continue
                if a == 1:
                    acc = [x + y for x, y in zip(acc, brow)]
                else:
                    acc = [x + a * y for x, y in zip(acc, brow)]
            out.append(acc)
        return Matrix(out, ncols=w)

    def transpose(self) -> "Matrix":
        return Matrix(
            [list(col) for col in zip(*self._rows)] if self._rows else [],
            ncols=self.nrows,
        )

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        return sum(self._rows[i][i] for i in range(self.nrows))

    def power_traces(self, kmax: int) -> list:
        """[tr(M), tr(M^2), ..., tr(M^kmax)] by successive multiplication."""
        if not self.is_square():
            raise DimensionError("power traces of a non-square matrix")
        traces = []
        power = self
        for _ in range(kmax):
            traces.append(power.trace())
            if len(traces) < kmax:
                power = power * self
        return traces

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(a) for a in r] for r in self._rows], ncols=self.ncols)

    def to_float_rows(self) -> list[list[float]]:
        return [[float(a) for a in r] for r in self._rows]

    def to_json_dict(self) -> dict:
        """Dims plus exact entry strings; the CLI debug export format."""
        from .polynomials import scalar_str

        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[scalar_str(a) for a in r] for r in self._rows],
        }

    # -- eliminations ------------------------------------------------------

    def rank(self) -> int:
        """Exact rank by fraction-preserving Gaussian elimination."""
        m = [[Fraction(a) for a in r] for r in self._rows]
        rank = 0
        col = 0
        nr, nc = self.nrows, self.ncols
        while rank < nr and col < nc:
            piv = next((i for i in range(rank, nr) if m[i][col] != 0), None)
            if piv is None:
                col += 1
                continue
            m[rank], m[piv] = m[piv], m[rank]
            prow = m[rank]
            inv = 1 / prow[col]
            for i in range(rank + 1, nr):
                f = m[i][col] * inv
                if f:
                    mi = m[i]
                    for j in range(col, nc):
                        mi[j] -= f * prow[j]
            rank += 1
            col += 1
        return rank

    def det(self):
        """Exact determinant by Gaussian elimination with row swaps."""
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        n = self.nrows
        m = [[Fraction(a) for a in r] for r in self._rows]
        sign = 1
        for col in range(n):
            piv = next((i for i in range(col, n) if m[i][col] != 0), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            prow = m[col]
            inv = 1 / prow[col]
            for i in range(col + 1, n):
                f = m[i][col] * inv
                if f:
                    mi = m[i]
                    for j in range(col, n):
                        mi[j] -= f * prow[j]
        out = Fraction(sign)
        for i in range(n):
            out *= m[i][i]
        return int(out) if out.denominator == 1 else out

    # -- characteristic polynomial ------------------------------------------

    def charpoly(self) -> Poly:
        """Monic characteristic polynomial det(xI - M), computed exactly.

        Rational Hessenberg reduction followed by the last-column expansion
        recurrence for Hessenberg matrices; O(n^3) field operations.  Integer
        input gives integer output.
        """
        if not self.is_square():
            raise DimensionError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Poly.one()
        h = [[Fraction(a) for a in r] for r in self._rows]
        for j in range(n - 2):
            piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
            if piv is None:
                continue
            if piv != j + 1:
                h[piv], h[j + 1] = h[j + 1], h[piv]
                for row in h:
                    row[piv], row[j + 1] = row[j + 1], row[piv]
            inv = 1 / h[j + 1][j]
            hj = h[j + 1]
            for i in range(j + 2, n):
                f = h[i][j] * inv
                if f:
                    hi = h[i]
                    for c in range(j, n):
                        hi[c] -= f * hj[c]
                    for row in h:
                        row[j + 1] += f * row[i]
        # p_r = (x - h[r,r]) p_{r-1} - sum_k h[k,r] (prod of subdiagonals) p_{k-1}
        ps = [Poly.one()]
        for r in range(1, n + 1):
            term = ps[r - 1].mul_x_minus(h[r - 1][r - 1])
            prod = Fraction(1)
            for k in range(r - 1, 0, -1):
                prod *= h[k][k - 1]
                if prod == 0:
                    break
                coef = h[k - 1][r - 1] * prod
                if coef:
                    term = term.sub_scaled(ps[k - 1], coef)
            ps.append(term)
        return ps[n]

    def faddeev_leverrier(self) -> Poly:
        """Characteristic polynomial again, by the Faddeev-LeVerrier recursion.

        O(n^4); kept as an independent oracle against charpoly().
        """
        if not self.is_square():
            raise DimensionError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Poly.one()
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = Matrix.identity(n)
        for k in range(1, n + 1):
            mk = self * mk
            c = -Fraction(mk.trace()) / k
            coeffs[n - k] = c
            if k < n:
                mk = mk + Matrix.identity(n).scaled(c)
        return Poly(coeffs)

    def __repr__(self):
        return f"Matrix({self._rows!r})"


def det_resolvent(mat: Matrix, scale=1) -> Poly:
    """det(I - w * scale * mat) as an exact polynomial in w.

    This is the degree-reversal of charpoly(scale * mat); the constant term
    is always 1.
    """
    if not mat.is_square():
        raise DimensionError("resolvent determinant of a non-square matrix")
    scaled = mat.scaled(scale) if scale != 1 else mat
    p = scaled.charpoly()
    return p.reversal(at_degree=mat.nrows)
