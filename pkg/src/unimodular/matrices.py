"""Dense exact matrices, Smith normal form, determinants, Whitehead factorization."""
from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, NotInverses
from .rings import Product, Ring, RingElement, whitehead_triples
from .scripts import ElementaryOp, ElementaryScript

__all__ = [
    "ElementaryOp", "ElementaryScript", "ExactMatrix", "apply_script",
    "script_matrix", "smith_normal_form", "determinant", "whitehead_factorization",
    "is_smith_form",
]


class ExactMatrix:
    """Immutable row-major matrix of canonical ring values."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence], ncols: int | None = None):
        rows = tuple(tuple(ring.canonical(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix")
        self.ring = ring
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "ExactMatrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)]
                          for i in range(n)], n)

    @classmethod
    def diagonal(cls, ring: Ring, diag, nrows=None, ncols=None) -> "ExactMatrix":
        nrows = len(diag) if nrows is None else nrows
        ncols = len(diag) if ncols is None else ncols
        rows = [[ring.zero] * ncols for _ in range(nrows)]
        for i, d in enumerate(diag):
            rows[i][i] = d
        return cls(ring, rows, ncols)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.ring == other.ring
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring, self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.format(x) for x in r) for r in self.rows)
        return f"ExactMatrix({self.ring.describe()['kind']}, [{body}])"

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ring != other.ring:
            from .errors import RingMismatch
            raise RingMismatch("matrix rings differ")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        ring = self.ring
        add, mul = ring.add, ring.mul
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ring.zero
                for x, y in zip(r, c):
                    acc = add(acc, mul(x, y))
                row.append(acc)
            out.append(row)
        return ExactMatrix(ring, out, other.ncols)

    def transpose(self) -> "ExactMatrix":
        cols = [[r[j] for r in self.rows] for j in range(self.ncols)]
        return ExactMatrix(self.ring, cols, self.nrows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_diagonal(self) -> bool:
        z = self.ring.zero
        return all(x == z for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def diagonal_entries(self):
        return [self.rows[i][i] for i in range(min(self.shape))]

    def component(self, c: int) -> "ExactMatrix":
        """Component ``c`` of a matrix over a product ring."""
        return ExactMatrix(self.ring.factors[c], [[x[c] for x in r] for r in self.rows], self.ncols)

    @classmethod
    def join(cls, ring: Product, parts) -> "ExactMatrix":
        first = parts[0]
        rows = [[tuple(p.rows[i][j] for p in parts) for j in range(first.ncols)]
                for i in range(first.nrows)]
        return cls(ring, rows, first.ncols)


def apply_script(m: ExactMatrix, script: ElementaryScript, side: str = "columns") -> ExactMatrix:
    """Apply a transvection script to the rows or columns of ``m``.

    ``side="columns"`` returns ``m @ E`` where ``E`` is the script's matrix;
    ``side="rows"`` applies each op to rows, i.e. returns ``E.T @ m``.
    """
    ring = m.ring
    add, mul = ring.add, ring.mul

    def axpy(c, x, y):
        return tuple(add(b, mul(c, a)) for a, b in zip(x, y))

    if side == "rows":
        if script.dimension != m.nrows:
            raise DimensionMismatch(f"script dimension {script.dimension} vs {m.nrows} rows")
        return ExactMatrix(ring, script.replay(m.rows, axpy), m.ncols)
    if side == "columns":
        if script.dimension != m.ncols:
            raise DimensionMismatch(f"script dimension {script.dimension} vs {m.ncols} columns")
        cols = list(zip(*m.rows)) if m.nrows else [()] * m.ncols
        new_cols = script.replay(cols, axpy)
        return ExactMatrix(ring, [list(r) for r in zip(*new_cols)] if m.nrows else [], m.ncols)
    raise ValueError("side must be 'rows' or 'columns'")


def script_matrix(script: ElementaryScript) -> ExactMatrix:
    return apply_script(ExactMatrix.identity(script.ring, script.dimension), script, "columns")


def whitehead_factorization(u, v, i: int, j: int, n: int) -> ElementaryScript:
    """Six transvections whose product is diag(.., u at i, .., v at j, ..)."""
    if isinstance(u, RingElement):
        ring = u.ring
        if isinstance(v, RingElement) and v.ring != ring:
            from .errors import RingMismatch
            raise RingMismatch(f"{v.ring} vs {ring}")
        u, v = u.value, (v.value if isinstance(v, RingElement) else ring.canonical(v))
    else:
        raise TypeError("whitehead_factorization expects RingElement arguments")
    if i == j:
        raise ValueError("i and j must differ")
    if ring.mul(u, v) != ring.one:
        raise NotInverses(f"{ring.format(u)} * {ring.format(v)} != 1")
    return ElementaryScript.from_triples(ring, n, whitehead_triples(ring, u, v, i, j))


# --- Smith normal form -------------------------------------------------------

class _SNFState:
    """Mutable working copy with left (P) and right (Q) transforms."""

    def __init__(self, ring, a: ExactMatrix):
        self.ring = ring
        self.a = [list(r) for r in a.rows]
        self.m, self.n = a.nrows, a.ncols
        self.p = [[ring.one if i == j else ring.zero for j in range(self.m)] for i in range(self.m)]
        self.q = [[ring.one if i == j else ring.zero for j in range(self.n)] for i in range(self.n)]

    # row ops act on A and P; column ops on A and Q
    def add_row(self, src, dst, c):
        add, mul = self.ring.add, self.ring.mul
        for mat in (self.a, self.p):
            rs, rd = mat[src], mat[dst]
            mat[dst] = [add(y, mul(c, x)) for x, y in zip(rs, rd)]

    def add_col(self, src, dst, c):
        add, mul = self.ring.add, self.ring.mul
        for mat in (self.a, self.q):
            for r in mat:
                r[dst] = add(r[dst], mul(c, r[src]))

    def swap_rows(self, i, j):
        if i != j:
            for mat in (self.a, self.p):
                mat[i], mat[j] = mat[j], mat[i]

    def swap_cols(self, i, j):
        if i != j:
            for mat in (self.a, self.q):
                for r in mat:
                    r[i], r[j] = r[j], r[i]

    def scale_row(self, i, u):
        mul = self.ring.mul
        for mat in (self.a, self.p):
            mat[i] = [mul(u, x) for x in mat[i]]


def _snf_euclidean(ring: Ring, a: ExactMatrix):
    st = _SNFState(ring, a)
    A = st.a
    is_zero, measure, dm = ring.is_zero, ring.measure, ring.divmod

    def least(t):
        best = None
        for i in range(t, st.m):
            for j in range(t, st.n):
                x = A[i][j]
                if not is_zero(x) and (best is None or measure(x) < best[0]):
                    best = (measure(x), i, j)
        return best

    for t in range(min(st.m, st.n)):
        found = least(t)
        if found is None:
            break
        _, i, j = found
        st.swap_rows(t, i)
        st.swap_cols(t, j)
        while True:
            dirty = False
            piv = A[t][t]
            for i in range(t + 1, st.m):
                if not is_zero(A[i][t]):
                    q, r = dm(A[i][t], piv)
                    st.add_row(t, i, ring.neg(q))
                    dirty = dirty or not is_zero(r)
            for j in range(t + 1, st.n):
                if not is_zero(A[t][j]):
                    q, r = dm(A[t][j], piv)
                    st.add_col(t, j, ring.neg(q))
                    dirty = dirty or not is_zero(r)
            if dirty:
                # a remainder beat the pivot: bring the smallest one to (t, t)
                best = None
                for i in range(t + 1, st.m):
                    if not is_zero(A[i][t]) and (best is None or measure(A[i][t]) < best[0]):
                        best = (measure(A[i][t]), i, "r")
                for j in range(t + 1, st.n):
                    if not is_zero(A[t][j]) and (best is None or measure(A[t][j]) < best[0]):
                        best = (measure(A[t][j]), j, "c")
                if best[2] == "r":
                    st.swap_rows(t, best[1])
                else:
                    st.swap_cols(t, best[1])
                continue
            # pivot clears its row and column; it must also divide the rest
            bad = None
            for i in range(t + 1, st.m):
                for j in range(t + 1, st.n):
                    if not is_zero(dm(A[i][j], piv)[1]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            st.add_row(bad, t, ring.one)
        g, u = ring.associate(A[t][t])
        if u != ring.one:
            st.scale_row(t, u)
    p = ExactMatrix(ring, st.p, st.m)
    d = ExactMatrix(ring, st.a, st.n)
    q = ExactMatrix(ring, st.q, st.n)
    return p, d, q


def smith_normal_form(a: ExactMatrix):
    """Return ``(P, D, Q)`` with ``P @ a @ Q == D``, ``D`` diagonal and d1 | d2 | ... .

    Diagonal entries are canonical ideal generators.  Zero entries come last.
    """
    ring = a.ring
    if isinstance(ring, Product):
        parts = [_snf_euclidean(f, a.component(c)) for c, f in enumerate(ring.factors)]
        return tuple(ExactMatrix.join(ring, [p[k] for p in parts]) for k in range(3))
    return _snf_euclidean(ring, a)


def is_smith_form(d: ExactMatrix) -> bool:
    ring = d.ring
    if not d.is_diagonal():
        return False
    diag = d.diagonal_entries()
    if any(ring.ideal_generator(x) != x for x in diag):
        return False
    return all(ring.divides(x, y) for x, y in zip(diag, diag[1:]))


def _det_euclidean(ring: Ring, rows):
    a = [list(r) for r in rows]
    n = len(a)
    is_zero, measure, dm = ring.is_zero, ring.measure, ring.divmod
    sign = ring.one
    for t in range(n):
        while True:
            live = [i for i in range(t, n) if not is_zero(a[i][t])]
            if not live:
                return ring.zero
            p = min(live, key=lambda i: (measure(a[i][t]), i))
            if p != t:
                a[t], a[p] = a[p], a[t]
                sign = ring.neg(sign)
            if len(live) == 1:
                break
            for i in range(t + 1, n):
                if not is_zero(a[i][t]):
                    q = ring.neg(dm(a[i][t], a[t][t])[0])
                    a[i] = [ring.add(y, ring.mul(q, x)) for x, y in zip(a[t], a[i])]
    out = sign
    for t in range(n):
        out = ring.mul(out, a[t][t])
    return out


def determinant(a: ExactMatrix):
    """Exact determinant by Euclidean row elimination (returns a raw ring value)."""
    if a.nrows != a.ncols:
        raise DimensionMismatch(f"determinant of non-square {a.shape} matrix")
    ring = a.ring
    if isinstance(ring, Product):
        return tuple(_det_euclidean(f, a.component(c).rows) for c, f in enumerate(ring.factors))
    return _det_euclidean(ring, a.rows)
