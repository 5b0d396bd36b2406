"""Free nilpotent Lie algebras on a Hall-word basis.

The basis of the free nilpotent algebra on d generators of class c consists
of the Hall words of degree at most c; the layer of degree k has dimension
given by the Witt formula (1/k) sum_{e | k} mu(e) d^(k/e).

Structure constants are obtained through the embedding of the free Lie
algebra into the free associative algebra: every Hall word expands to an
integer noncommutative polynomial (its iterated commutator), brackets are
computed as associative commutators truncated above degree c, and results
are re-expressed in the Hall basis by exact linear algebra.  The expansions
are linearly independent, the expressing coordinates are integers, and the
associative model satisfies the Jacobi identity on the nose, which makes
this construction a robust alternative to hand-rolled collection rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import InternalCheckError
from .fields import QQ, Field
from .liealg import LieAlgebra


@dataclass(frozen=True)
class HallWord:
    """A generator x_i or a bracket (u, v) of Hall words with u > v and,
    when u = (a, b), b <= v.  Ordered by degree, then recursively by
    (left, right) / generator index."""

    degree: int
    index: Optional[int] = None
    left: Optional["HallWord"] = None
    right: Optional["HallWord"] = None

    def __lt__(self, other: "HallWord") -> bool:
        if self.degree != other.degree:
            return self.degree < other.degree
        if self.index is not None:
            return self.index < other.index
        if self.left != other.left:
            return self.left < other.left
        return self.right < other.right

    def __le__(self, other: "HallWord") -> bool:
        return self == other or self < other

    def label(self) -> str:
        if self.index is not None:
            return f"x{self.index + 1}"
        return f"[{self.left.label()},{self.right.label()}]"


def mobius(n: int) -> int:
    result = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(d: int, k: int) -> int:
    """Dimension of the degree-k layer of the free Lie algebra on d letters."""
    total = 0
    for e in range(1, k + 1):
        if k % e == 0:
            total += mobius(e) * d ** (k // e)
    return total // k


def hall_words(d: int, c: int) -> tuple[HallWord, ...]:
    """All Hall words on d generators of degree at most c, in basis order."""
    by_degree: list[list[HallWord]] = [[] for _ in range(c + 1)]
    if c >= 1:
        by_degree[1] = [HallWord(1, index=i) for i in range(d)]
    for k in range(2, c + 1):
        layer = []
        for du in range(1, k):
            dv = k - du
            for u in by_degree[du]:
                for v in by_degree[dv]:
                    if v < u and (u.index is not None or u.right <= v):
                        layer.append(HallWord(k, left=u, right=v))
        layer.sort()
        by_degree[k] = layer
    words: list[HallWord] = []
    for k in range(1, c + 1):
        words.extend(by_degree[k])
    return tuple(words)


def _expansion(w: HallWord, c: int, memo: dict) -> dict[tuple, int]:
    """Integer expansion of a Hall word in the free associative algebra,
    truncated above degree c."""
    cached = memo.get(w)
    if cached is not None:
        return cached
    if w.index is not None:
        result = {(w.index,): 1}
    else:
        a = _expansion(w.left, c, memo)
        b = _expansion(w.right, c, memo)
        result = _commutator(a, b, c)
    memo[w] = result
    return result


def _commutator(a: dict, b: dict, c: int) -> dict[tuple, int]:
    out: dict[tuple, int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            if len(ka) + len(kb) > c:
                continue
            key = ka + kb
            out[key] = out.get(key, 0) + va * vb
            key = kb + ka
            out[key] = out.get(key, 0) - va * vb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _integer_structure(d: int, c: int):
    """Integer structure constant table of the free nilpotent algebra,
    shared by all coefficient fields."""
    words = hall_words(d, c)
    nw = len(words)
    memo: dict = {}
    expansions = [_expansion(w, c, memo) for w in words]
    monomials = sorted({m for e in expansions for m in e},
                       key=lambda t: (len(t), t))
    mono_index = {m: i for i, m in enumerate(monomials)}
    nm = len(monomials)

    one = QQ.one
    # Row-reduce the expansion matrix while tracking the combination of
    # original rows, so arbitrary vectors can be expressed in the Hall basis.
    reduced: dict[int, tuple[list, list]] = {}
    for r, e in enumerate(expansions):
        row = [QQ.zero] * nm
        for m, v in e.items():
            row[mono_index[m]] = QQ.scalar(v)
        comb = [QQ.zero] * nw
        comb[r] = one
        for p, (prow, pcomb) in reduced.items():
            f = row[p]
            if f:
                row = [x - f * y for x, y in zip(row, prow)]
                comb = [x - f * y for x, y in zip(comb, pcomb)]
        pivot = next((j for j, x in enumerate(row) if x), None)
        if pivot is None:
            raise InternalCheckError("Hall expansions are not independent")
        inv = row[pivot]
        if inv != one:
            row = [x / inv for x in row]
            comb = [x / inv for x in comb]
        for p, (prow, pcomb) in reduced.items():
            f = prow[pivot]
            if f:
                reduced[p] = ([x - f * y for x, y in zip(prow, row)],
                              [x - f * y for x, y in zip(pcomb, comb)])
        reduced[pivot] = (row, comb)

    def express(poly: dict) -> list[int]:
        vec = [QQ.zero] * nm
        for m, v in poly.items():
            vec[mono_index[m]] = QQ.scalar(v)
        coords = [QQ.zero] * nw
        for p, (prow, pcomb) in reduced.items():
            f = vec[p]
            if f:
                vec = [x - f * y for x, y in zip(vec, prow)]
                coords = [x + f * y for x, y in zip(coords, pcomb)]
        if any(vec):
            raise InternalCheckError("bracket does not lie in the Hall span")
        out = []
        for x in coords:
            if x.denominator != 1:
                raise InternalCheckError("non-integral Hall coordinate")
            out.append(int(x))
        return out

    table = [[None] * nw for _ in range(nw)]
    zero_row = (0,) * nw
    for i in range(nw):
        table[i][i] = zero_row
        for j in range(i):
            if words[i].degree + words[j].degree > c:
                table[i][j] = zero_row
                table[j][i] = zero_row
            else:
                comm = _commutator(expansions[i], expansions[j], c)
                coords = express(comm)
                table[i][j] = tuple(coords)
                table[j][i] = tuple(-x for x in coords)
    labels = tuple(w.label() for w in words)
    degrees = tuple(w.degree for w in words)
    return tuple(tuple(r) for r in table), labels, degrees, words


@dataclass(frozen=True, repr=False)
class FreeNilpotent:
    d: int
    c: int
    algebra: LieAlgebra
    words: tuple[HallWord, ...]
    degrees: tuple[int, ...]

    def __repr__(self):
        return (f"FreeNilpotent(d={self.d}, c={self.c}, "
                f"dim {self.algebra.dim} over {self.algebra.field.name})")

    def layer_dims(self) -> dict[int, int]:
        out = {k: 0 for k in range(1, self.c + 1)}
        for deg in self.degrees:
            out[deg] += 1
        return out


@lru_cache(maxsize=None)
def free_nilpotent(d: int, c: int, field: Field = QQ) -> FreeNilpotent:
    """The free nilpotent Lie algebra on d generators of class c."""
    if d < 0 or c < 1:
        raise ValueError("need d >= 0 and c >= 1")
    int_table, labels, degrees, words = _integer_structure(d, c)
    table = tuple(tuple(tuple(field.scalar(x) for x in cell) for cell in row)
                  for row in int_table)
    algebra = LieAlgebra(field, len(words), table, labels)
    report = algebra.validate()
    if not report.ok:
        raise InternalCheckError(
            f"free nilpotent algebra fails validation: {report.describe()}")
    for k in range(1, c + 1):
        expected = witt_dimension(d, k)
        actual = sum(1 for deg in degrees if deg == k)
        if actual != expected:
            raise InternalCheckError(
                f"degree-{k} layer has {actual} words, Witt number is {expected}")
    return FreeNilpotent(d, c, algebra, words, degrees)
