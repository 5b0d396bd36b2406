"""Deterministic exact linear algebra: RREF, kernels, canonical subspaces,
sums, intersections and quotient structures.

Every subspace is stored by the unique reduced row-echelon basis of its row
span, so subspace equality is plain structural equality.  All elimination is
leftmost-pivot / topmost-row, which (with exact arithmetic) makes every
downstream basis, complement and report bit-reproducible.  Matrices are dense;
ambient dimensions in this package stay below a few hundred.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .fields import Field, Scalar

Vector = tuple[Scalar, ...]


@dataclass(frozen=True, repr=False)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field.name})"

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence[Scalar]],
                  cols: Optional[int] = None) -> "Matrix":
        data = tuple(tuple(r) for r in rows)
        if data:
            cols = len(data[0])
            if any(len(r) != cols for r in data):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return cls(field, len(data), cols, data)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, n, n,
                   tuple(tuple(one if i == j else zero for j in range(n))
                         for i in range(n)))

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(zip(*self.entries)) if self.entries else
                      tuple(() for _ in range(self.cols)))

    def stack(self, other: "Matrix") -> "Matrix":
        if other.cols != self.cols:
            raise ValueError("column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        nz = [(j, vj) for j, vj in enumerate(v) if vj]
        z = self.field.zero
        return tuple(sum((row[j] * vj for j, vj in nz), z)
                     for row in self.entries)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        z = self.field.zero
        cols_t = other.transpose().entries
        return Matrix(self.field, self.rows, other.cols,
                      tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), z)
                                  for c in cols_t)
                            for r in self.entries))

    def rank(self) -> int:
        return len(rref(self)[1])


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Unique reduced row-echelon basis of the row space of m (no zero rows),
    together with its pivot columns."""
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        if inv != m.field.one:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    reduced = Matrix(m.field, len(pivots), ncols,
                     tuple(tuple(row) for row in rows[:len(pivots)]))
    return reduced, tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of a fixed coordinate space, in canonical RREF basis form.

    Two subspaces of the same ambient space over the same field are equal iff
    their basis matrices are entry-identical.
    """

    field: Field
    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    def __repr__(self):
        return (f"Subspace(dim {self.dim} of "
                f"{self.field.name}^{self.ambient_dim})")

    @classmethod
    def span(cls, field: Field, ambient_dim: int,
             vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        b = SpanBuilder(field, ambient_dim)
        for v in vectors:
            b.add(v)
        return b.subspace()

    @classmethod
    def zero_space(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim,
                   Matrix.from_rows(field, [], cols=ambient_dim), ())

    @classmethod
    def full_space(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim),
                   tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Canonical residual of v after clearing all pivot coordinates."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient mismatch")
        out = list(v)
        for row, p in zip(self.basis.entries, self.pivots):
            f = out[p]
            if f:
                out = [a - f * b for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis.entries)


class SpanBuilder:
    """Incrementally accumulates the row span of vectors, kept in RREF.

    The finished subspace is independent of insertion order (RREF is unique),
    so parallel generation of candidate vectors never affects the result.
    """

    def __init__(self, field: Field, ambient_dim: int):
        self.field = field
        self.ambient_dim = ambient_dim
        self._rows: dict[int, list[Scalar]] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        out = list(v)
        for p, row in self._rows.items():
            f = out[p]
            if f:
                out = [a - f * b for a, b in zip(out, row)]
        return out

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[Scalar]) -> bool:
        """Insert one vector; returns True if it enlarged the span."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient mismatch")
        out = self.reduce(v)
        pivot = next((j for j, x in enumerate(out) if x), None)
        if pivot is None:
            return False
        inv = out[pivot]
        if inv != self.field.one:
            out = [x / inv for x in out]
        for p, row in self._rows.items():
            f = row[pivot]
            if f:
                self._rows[p] = [a - f * b for a, b in zip(row, out)]
        self._rows[pivot] = out
        return True

    def add_all(self, vectors: Iterable[Sequence[Scalar]]) -> None:
        for v in vectors:
            self.add(v)

    def subspace(self) -> Subspace:
        pivots = tuple(sorted(self._rows))
        basis = Matrix.from_rows(self.field,
                                 [self._rows[p] for p in pivots],
                                 cols=self.ambient_dim)
        return Subspace(self.field, self.ambient_dim, basis, pivots)


def kernel(m: Matrix) -> Subspace:
    """Null space {x : m x = 0}, as a canonical subspace of the column space."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    zero, one = m.field.zero, m.field.one
    vectors = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][f]
        vectors.append(v)
    return Subspace.span(m.field, m.cols, vectors)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise ValueError("ambient mismatch")
    builder = SpanBuilder(a.field, a.ambient_dim)
    builder.add_all(a.basis.entries)
    builder.add_all(b.basis.entries)
    return builder.subspace()


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient system.

    A row kernel vector (u, v) of the stacked basis matrix [A; -B] encodes
    u*A = v*B, i.e. one element of the intersection.
    """
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise ValueError("ambient mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero_space(a.field, a.ambient_dim)
    stacked = Matrix.from_rows(
        a.field,
        list(a.basis.entries) + [tuple(-x for x in r) for r in b.basis.entries],
        cols=a.ambient_dim)
    left_null = kernel(stacked.transpose())
    vecs = []
    for coeffs in left_null.basis.entries:
        u = coeffs[:a.dim]
        vecs.append([sum((ui * row[j] for ui, row in zip(u, a.basis.entries) if ui),
                         a.field.zero)
                     for j in range(a.ambient_dim)])
    return Subspace.span(a.field, a.ambient_dim, vecs)


def complement_within(inner: Subspace, outer: Subspace) -> Subspace:
    """Canonical complement of `inner` inside `outer` (echelon rule).

    Requires inner to be contained in outer; takes the rows of outer's RREF
    basis whose pivots are not pivots of inner.  Leading coordinates of such
    combinations avoid inner's pivot set, so the span meets inner trivially.
    """
    if not outer.contains_space(inner):
        raise ValueError("inner subspace not contained in outer")
    skip = set(inner.pivots)
    rows = [r for r, p in zip(outer.basis.entries, outer.pivots) if p not in skip]
    return Subspace.span(outer.field, outer.ambient_dim, rows)


@dataclass(frozen=True)
class QuotientStructure:
    """Coordinates for an ambient space modulo a subspace.

    Coset representatives are the standard basis vectors at the non-pivot
    columns of the subspace, so project(lift(y)) = y and project(v) = 0 exactly
    when v lies in the subspace.
    """

    sub: Subspace
    free_cols: tuple[int, ...]
    coset_reps: tuple[Vector, ...]
    project: Matrix
    lift: Matrix

    def __repr__(self):
        name = self.sub.field.name
        return (f"QuotientStructure({name}^{self.ambient_dim} modulo "
                f"dim {self.sub.dim} -> dim {self.dim})")

    @property
    def ambient_dim(self) -> int:
        return self.sub.ambient_dim

    @property
    def dim(self) -> int:
        return self.project.rows

    def project_vec(self, v: Sequence[Scalar]) -> Vector:
        reduced = self.sub.reduce(v)
        return tuple(reduced[c] for c in self.free_cols)

    def lift_vec(self, y: Sequence[Scalar]) -> Vector:
        return self.lift.apply(y)


def quotient_structure(ambient_dim: int, sub: Subspace) -> QuotientStructure:
    if sub.ambient_dim != ambient_dim:
        raise ValueError("ambient mismatch")
    field = sub.field
    zero, one = field.zero, field.one
    pivot_set = set(sub.pivots)
    free = [j for j in range(ambient_dim) if j not in pivot_set]
    reps = []
    for c in free:
        e = [zero] * ambient_dim
        e[c] = one
        reps.append(tuple(e))
    # project(v)[r] reads coordinate free[r] of the canonical residual of v.
    proj_rows = []
    for c in free:
        row = [zero] * ambient_dim
        row[c] = one
        for brow, p in zip(sub.basis.entries, sub.pivots):
            row[p] = -brow[c]
        proj_rows.append(row)
    project = Matrix.from_rows(field, proj_rows, cols=ambient_dim)
    lift = Matrix.from_rows(field,
                            [[one if free[r] == i else zero
                              for r in range(len(free))]
                             for i in range(ambient_dim)],
                            cols=len(free))
    return QuotientStructure(sub, tuple(free), tuple(reps), project, lift)


def solve(m: Matrix, rhs: Sequence[Scalar]) -> Optional[Vector]:
    """One exact solution x of m x = rhs (free variables set to 0), or None."""
    if len(rhs) != m.rows:
        raise ValueError("dimension mismatch")
    aug = Matrix.from_rows(m.field,
                           [list(r) + [b] for r, b in zip(m.entries, rhs)]
                           or [], cols=m.cols + 1)
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [m.field.zero] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.entries[r][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("not square")
    n = m.rows
    aug = Matrix.from_rows(
        m.field,
        [list(r) + list(i) for r, i in zip(m.entries, Matrix.identity(m.field, n).entries)]
        or [], cols=2 * n)
    reduced, pivots = rref(aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Matrix.from_rows(m.field, [r[n:] for r in reduced.entries], cols=n)


@dataclass(frozen=True)
class LinearMap:
    """Linear map stored as a (target_dim x source_dim) matrix acting on columns."""

    matrix: Matrix

    def __repr__(self):
        name = self.matrix.field.name
        return f"LinearMap({name}^{self.source_dim} -> {name}^{self.target_dim})"

    @property
    def source_dim(self) -> int:
        return self.matrix.cols

    @property
    def target_dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def from_images(cls, field: Field, target_dim: int,
                    images: Sequence[Sequence[Scalar]]) -> "LinearMap":
        rows = [[images[j][i] for j in range(len(images))]
                for i in range(target_dim)]
        return cls(Matrix.from_rows(field, rows, cols=len(images)))

    def apply(self, v: Sequence[Scalar]) -> Vector:
        return self.matrix.apply(v)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix.mul(inner.matrix))

    def image(self) -> Subspace:
        return Subspace.span(self.matrix.field, self.target_dim,
                             [self.matrix.column(j) for j in range(self.source_dim)])

    def kernel(self) -> Subspace:
        return kernel(self.matrix)

    def rank(self) -> int:
        return self.matrix.rank()

    def is_bijective(self) -> bool:
        return (self.source_dim == self.target_dim
                and self.rank() == self.source_dim)

    def inverse(self) -> "LinearMap":
        return LinearMap(inverse(self.matrix))
