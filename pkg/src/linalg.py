"""
Exact dense linear algebra over Gaussian rationals (and QuadExt scalars).

Vectors are plain tuples of scalars; Mat and Subspace are immutable.
Subspaces are stored in reduced row-echelon form, so two subspaces are
equal exactly when their basis matrices are equal.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import divisors, ilcm

from src.errors import (AmbientMismatch, EigenvalueOutsideField, NotCommuting,
                     NotInSpan, NotInvariant, NotNilpotent, NotSelfConjugate,
                     NotSemisimpleOperator, SizeMismatch, ZeroVector)
from src.exactnum import ONE, ZERO, GaussRat, QuadExt, as_gauss

Vector = Tuple


def _scalar(x):
    if isinstance(x, (GaussRat, QuadExt)):
        return x
    return as_gauss(x)


# vector helpers

def vector(values: Iterable) -> Vector:
    return tuple(_scalar(x) for x in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(n))


def vec_add(v: Vector, u: Vector) -> Vector:
    return tuple(a + b for a, b in zip(v, u))


def vec_sub(v: Vector, u: Vector) -> Vector:
    return tuple(a - b for a, b in zip(v, u))


def vec_scale(c, v: Vector) -> Vector:
    if not c:
        return zero_vector(len(v))
    return tuple(c * a if a else a for a in v)


def vec_conj(v: Vector) -> Vector:
    return tuple(a.conj() for a in v)


def vec_real(v: Vector) -> Vector:
    return tuple(a.real() for a in v)


def vec_imag(v: Vector) -> Vector:
    return tuple(a.imag() for a in v)


def vec_is_zero(v: Vector) -> bool:
    return not any(v)


def first_nonzero(v: Vector) -> int:
    for i, a in enumerate(v):
        if a:
            return i
    return -1


def combine(coeffs: Sequence, vectors: Sequence[Vector], n: Optional[int] = None) -> Vector:
    """Linear combination Σ coeffs[i]·vectors[i]."""
    if n is None:
        n = len(vectors[0])
    acc = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for j, a in enumerate(v):
            if a:
                acc[j] = acc[j] + c * a
    return tuple(acc)


def is_real_vector(v: Vector) -> bool:
    return all(a.is_real for a in v)


class Mat:
    """Immutable dense matrix, row-major."""

    __slots__ = ("rows", "cols", "_data", "_sparse")

    def __init__(self, data: Sequence[Sequence], cols: Optional[int] = None):
        rows = tuple(tuple(_scalar(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise SizeMismatch("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        if any(len(row) != cols for row in rows):
            raise SizeMismatch("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows
        self._sparse = None

    @classmethod
    def _wrap(cls, rows: Tuple[Tuple, ...], cols: int) -> "Mat":
        obj = cls.__new__(cls)
        obj.rows = len(rows)
        obj.cols = cols
        obj._data = rows
        obj._sparse = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._wrap(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls._wrap(tuple(zero_vector(cols) for _ in range(rows)), cols)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence) -> "Mat":
        if len(entries) != rows * cols:
            raise SizeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Mat":
        """Matrix unit e_ij (0-based)."""
        return cls._wrap(tuple(unit_vector(n, j) if r == i else zero_vector(n) for r in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int) -> "Mat":
        return cls._wrap(tuple(tuple(col[i] for col in columns) for i in range(rows)), len(columns))

    # access

    @property
    def entries(self) -> Tuple:
        return tuple(x for row in self._data for x in row)

    @property
    def data(self) -> Tuple[Tuple, ...]:
        return self._data

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def _nonzero_rows(self):
        if self._sparse is None:
            self._sparse = tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in self._data)
        return self._sparse

    # arithmetic

    def _check_same(self, other: "Mat"):
        if self.rows != other.rows or self.cols != other.cols:
            raise SizeMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._wrap(tuple(vec_add(a, b) for a, b in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._wrap(tuple(vec_sub(a, b) for a, b in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> "Mat":
        return Mat._wrap(tuple(tuple(-x for x in row) for row in self._data), self.cols)

    def scale(self, c) -> "Mat":
        c = _scalar(c)
        return Mat._wrap(tuple(vec_scale(c, row) for row in self._data), self.cols)

    def __mul__(self, c) -> "Mat":
        if isinstance(c, Mat):
            return self @ c
        return self.scale(c)

    def __rmul__(self, c) -> "Mat":
        return self.scale(c)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise SizeMismatch(f"vector of length {len(v)} for {self.cols} columns")
        out = []
        for nz in self._nonzero_rows():
            acc = ZERO
            for j, x in nz:
                if v[j]:
                    acc = acc + x * v[j]
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return self.apply(tuple(other))
        if self.cols != other.rows:
            raise SizeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        right = other._nonzero_rows()
        out = []
        for nz in self._nonzero_rows():
            acc = [ZERO] * other.cols
            for k, a in nz:
                for j, b in right[k]:
                    acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Mat._wrap(tuple(out), other.cols)

    def power(self, k: int) -> "Mat":
        result = Mat.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def transpose(self) -> "Mat":
        return Mat._wrap(tuple(self.column(j) for j in range(self.cols)), self.rows)

    def conj(self) -> "Mat":
        return Mat._wrap(tuple(vec_conj(row) for row in self._data), self.cols)

    def trace(self):
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._data[i][i]
        return acc

    def kron(self, other: "Mat") -> "Mat":
        out = []
        for row_a in self._data:
            for row_b in other._data:
                out.append(tuple(a * b for a in row_a for b in row_b))
        return Mat._wrap(tuple(out), self.cols * other.cols)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._data)

    @property
    def is_real(self) -> bool:
        return all(is_real_vector(row) for row in self._data)

    def inverse(self) -> "Mat":
        if not self.is_square:
            raise SizeMismatch("inverse of a non-square matrix")
        n = self.rows
        builder = EchelonBuilder(2 * n)
        for i, row in enumerate(self._data):
            builder.add(row + unit_vector(n, i))
        rows = builder.rows()
        if len(rows) < n or any(p >= n for p, _ in rows):
            raise ZeroDivisionError("singular matrix")
        return Mat._wrap(tuple(tuple(r[n:]) for _, r in rows), n)

    # comparison

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self._data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"


def bracket_mat(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


class EchelonBuilder:
    """Incrementally maintained reduced row-echelon basis."""

    def __init__(self, n: int):
        self.n = n
        self._rows: Dict[int, list] = {}

    def __len__(self):
        return len(self._rows)

    def copy(self) -> "EchelonBuilder":
        other = EchelonBuilder(self.n)
        other._rows = {p: list(row) for p, row in self._rows.items()}
        return other

    def reduce(self, v: Sequence) -> list:
        w = list(v)
        for p, row in self._rows.items():
            c = w[p]
            if c:
                for j in range(p, self.n):
                    x = row[j]
                    if x:
                        w[j] = w[j] - c * x
        return w

    def add(self, v: Sequence) -> bool:
        """Insert v; returns False when v was already in the span."""
        w = self.reduce(v)
        p = first_nonzero(w)
        if p < 0:
            return False
        inv = 1 / w[p] if not isinstance(w[p], QuadExt) else w[p].inverse()
        w = [x * inv if x else x for x in w]
        w[p] = ONE
        for q, row in self._rows.items():
            c = row[p]
            if c:
                for j in range(p, self.n):
                    x = w[j]
                    if x:
                        row[j] = row[j] - c * x
        self._rows[p] = w
        return True

    def contains(self, v: Sequence) -> bool:
        return first_nonzero(self.reduce(v)) < 0

    def rows(self) -> List[Tuple[int, Tuple]]:
        return [(p, tuple(self._rows[p])) for p in sorted(self._rows)]

    def subspace(self) -> "Subspace":
        return Subspace._wrap(self.n, [r for _, r in self.rows()])


class Subspace:
    """Subspace of an ambient coordinate space, basis in RREF."""

    __slots__ = ("ambient_dim", "vectors", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        builder = EchelonBuilder(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in a {ambient_dim}-dim space")
            builder.add(vector(v))
        rows = builder.rows()
        self.ambient_dim = ambient_dim
        self.vectors = tuple(r for _, r in rows)
        self.pivots = tuple(p for p, _ in rows)

    @classmethod
    def _wrap(cls, ambient_dim: int, rows: List[Tuple]) -> "Subspace":
        obj = cls.__new__(cls)
        obj.ambient_dim = ambient_dim
        obj.vectors = tuple(rows)
        obj.pivots = tuple(first_nonzero(r) for r in rows)
        return obj

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, vectors)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._wrap(n, [])

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls._wrap(n, [unit_vector(n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def basis(self) -> Mat:
        return Mat._wrap(self.vectors, self.ambient_dim)

    @property
    def is_real(self) -> bool:
        return all(is_real_vector(v) for v in self.vectors)

    def reduce(self, v: Sequence) -> Vector:
        w = list(v)
        for p, row in zip(self.pivots, self.vectors):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in a {self.ambient_dim}-dim space")
        return vec_is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v in the RREF basis; raises NotInSpan."""
        if not self.contains_vector(v):
            raise NotInSpan("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def lift(self, coords: Sequence) -> Vector:
        if not self.vectors:
            return zero_vector(self.ambient_dim)
        return combine(coords, self.vectors, self.ambient_dim)

    def conj(self) -> "Subspace":
        return Subspace(self.ambient_dim, [vec_conj(v) for v in self.vectors])

    def map(self, m: Mat) -> "Subspace":
        return Subspace(m.rows, [m.apply(v) for v in self.vectors])

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vectors == other.vectors

    def __hash__(self):
        return hash((self.ambient_dim, self.vectors))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"


# reduction

def rref(m: Mat) -> Mat:
    """Reduced row-echelon form with leftmost pivots; zero rows at the bottom."""
    builder = EchelonBuilder(m.cols)
    for row in m.data:
        builder.add(row)
    rows = [r for _, r in builder.rows()]
    rows += [zero_vector(m.cols)] * (m.rows - len(rows))
    return Mat._wrap(tuple(rows), m.cols)


def rank(m: Mat) -> int:
    builder = EchelonBuilder(m.cols)
    for row in m.data:
        builder.add(row)
    return len(builder)


def nullspace(m: Mat) -> Subspace:
    """All x with m·x = 0."""
    builder = EchelonBuilder(m.cols)
    for row in m.data:
        builder.add(row)
    rows = builder.rows()
    pivot_cols = {p for p, _ in rows}
    basis = []
    for free in range(m.cols):
        if free in pivot_cols:
            continue
        x = [ZERO] * m.cols
        x[free] = ONE
        for p, r in rows:
            if r[free]:
                x[p] = -r[free]
        basis.append(tuple(x))
    return Subspace(m.cols, basis)


def joint_nullspace(mats: Sequence[Mat], n: int) -> Subspace:
    """Common kernel of a family of n-column matrices."""
    if not mats:
        return Subspace.full(n)
    stacked = tuple(row for m in mats for row in m.data)
    return nullspace(Mat._wrap(stacked, n))


class CoordinateFrame:
    """Coordinates with respect to an arbitrary (independent) list of vectors."""

    def __init__(self, vectors: Sequence[Sequence]):
        if not vectors:
            raise ValueError("empty frame")
        self.vectors = [vector(v) for v in vectors]
        self.n = len(self.vectors[0])
        k = len(self.vectors)
        builder = EchelonBuilder(self.n + k)
        for i, v in enumerate(self.vectors):
            builder.add(v + unit_vector(k, i))
        rows = builder.rows()
        if len(rows) < k or any(p >= self.n for p, _ in rows):
            raise ValueError("frame vectors are linearly dependent")
        self._pivots = [p for p, _ in rows]
        self._reduced = [r[:self.n] for _, r in rows]
        self._transform = [r[self.n:] for _, r in rows]

    def __len__(self):
        return len(self.vectors)

    def coordinates(self, v: Sequence) -> Vector:
        w = list(v)
        for p, row in zip(self._pivots, self._reduced):
            c = w[p]
            if c:
                for j in range(p, self.n):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        if first_nonzero(w) >= 0:
            raise NotInSpan("vector is not a combination of the frame")
        return combine([v[p] for p in self._pivots], self._transform, len(self.vectors))

    def combine(self, coords: Sequence) -> Vector:
        return combine(coords, self.vectors, self.n)


# polynomials

class Poly:
    """Polynomial with Gaussian-rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        c = [_scalar(x) for x in coeffs]
        while len(c) > 1 and not c[-1]:
            c.pop()
        self.coeffs = tuple(c) if c else (ZERO,)

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Poly":
        p = cls([ONE])
        for r in roots:
            p = p * cls([-_scalar(r), ONE])
        return p

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and not self.coeffs[0]:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __mul__(self, other: "Poly") -> "Poly":
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def deflate(self, root) -> "Poly":
        """Quotient by (t − root); assumes root is a root."""
        n = self.degree
        quotient = [ZERO] * n
        carry = ZERO
        for k in range(n, 0, -1):
            carry = carry * root + self.coeffs[k]
            quotient[k - 1] = carry
        return Poly(quotient)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(" + ", ".join(str(c) for c in self.coeffs) + ")"


def char_poly(m: Mat) -> Poly:
    """det(t·I − m) by the Faddeev–LeVerrier recursion."""
    if not m.is_square:
        raise SizeMismatch("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    identity = Mat.identity(n)
    am = Mat.zeros(n, n)
    for k in range(1, n + 1):
        mk = am + identity.scale(coeffs[n - k + 1])
        am = m @ mk
        coeffs[n - k] = -am.trace() / k
    return Poly(coeffs)


@dataclass
class RootSearch:
    roots: List[Tuple[GaussRat, int]]
    full_degree: bool

    def __iter__(self):
        return iter(self.roots)


def _gaussian_divisors(x: int, y: int, one_per_class: bool = False) -> List[Tuple[int, int]]:
    """All Gaussian-integer divisors of x + y·i, found through divisors of the norm."""
    norm = x * x + y * y
    found = []
    for m in map(int, divisors(norm)):
        bound = isqrt(m)
        for a in range(-bound, bound + 1):
            rest = m - a * a
            b = isqrt(rest)
            if b * b != rest:
                continue
            for bb in {b, -b}:
                # (x + yi)/(a + bb·i) is a Gaussian integer
                if (x * a + y * bb) % m == 0 and (y * a - x * bb) % m == 0:
                    if one_per_class and not (a > 0 and bb >= 0):
                        continue
                    found.append((a, bb))
    return sorted(set(found))


def gauss_rational_roots(p: Poly) -> RootSearch:
    """Roots of p lying in ℚ(i), with multiplicities."""
    if p.degree < 0:
        raise ValueError("roots of the zero polynomial")
    coeffs = list(p.coeffs)
    roots: List[Tuple[GaussRat, int]] = []
    k = 0
    while not coeffs[k]:
        k += 1
    if k:
        roots.append((ZERO, k))
    q = Poly(coeffs[k:])
    if q.degree == 0:
        return RootSearch(roots, True)
    scale = 1
    for c in q.coeffs:
        c = as_gauss(c)
        scale = int(ilcm(scale, c.re.denominator, c.im.denominator))
    ints = [(int(as_gauss(c).re * scale), int(as_gauss(c).im * scale)) for c in q.coeffs]
    numerators = _gaussian_divisors(*ints[0])
    denominators = _gaussian_divisors(*ints[-1], one_per_class=True)
    candidates = {GaussRat(a, b) / GaussRat(c, d) for a, b in numerators for c, d in denominators}
    for r in sorted(candidates, key=lambda z: z.sort_key()):
        multiplicity = 0
        while q.degree > 0 and not q(r):
            q = q.deflate(r)
            multiplicity += 1
        if multiplicity:
            roots.append((r, multiplicity))
        if q.degree == 0:
            break
    roots.sort(key=lambda item: item[0].sort_key())
    return RootSearch(roots, q.degree == 0)


# operators on subspaces

def restrict(op: Mat, within: Subspace) -> Mat:
    """Matrix of op on an invariant subspace, in its RREF basis coordinates."""
    columns = []
    for v in within.vectors:
        image = op.apply(v)
        if not within.contains_vector(image):
            raise NotInvariant("operator does not preserve the subspace")
        columns.append(within.coordinates(image))
    return Mat.from_columns(columns, within.dim)


def _eigenspaces(op: Mat, within: Subspace):
    if within.dim == 0:
        return []
    local = restrict(op, within)
    search = gauss_rational_roots(char_poly(local))
    if not search.full_degree:
        raise EigenvalueOutsideField(
            f"characteristic polynomial of a {within.dim}-dim restriction does not split over Q(i)"
        )
    identity = Mat.identity(within.dim)
    blocks = []
    for eigval, multiplicity in search.roots:
        kernel = nullspace(local - identity.scale(eigval))
        if kernel.dim != multiplicity:
            raise NotSemisimpleOperator(
                f"eigenvalue {eigval}: geometric multiplicity {kernel.dim} < algebraic {multiplicity}"
            )
        blocks.append((eigval, Subspace(within.ambient_dim, [within.lift(c) for c in kernel.vectors])))
    return blocks


def simultaneous_eigenspaces(family: Sequence[Mat], within: Optional[Subspace] = None):
    """Joint eigenspace decomposition of commuting operators on `within`."""
    if not family:
        raise ValueError("empty operator family")
    n = family[0].rows
    if within is None:
        within = Subspace.full(n)
    for a, b in combinations(family, 2):
        for v in within.vectors:
            if a.apply(b.apply(v)) != b.apply(a.apply(v)):
                raise NotCommuting("operators do not commute on the subspace")
    blocks = [((), within)]
    for op in family:
        refined = []
        for values, space in blocks:
            for eigval, eigenspace in _eigenspaces(op, space):
                refined.append((values + (eigval,), eigenspace))
        blocks = refined
    return blocks


def exp_nilpotent(m: Mat) -> Mat:
    """exp(m) for nilpotent m, as a finite sum."""
    if not m.is_square:
        raise SizeMismatch("exponential of a non-square matrix")
    result = Mat.identity(m.rows)
    term = Mat.identity(m.rows)
    for j in range(1, m.rows + 1):
        term = (term @ m).scale(GaussRat(Fraction(1, j)))
        if term.is_zero():
            return result
        result = result + term
    raise NotNilpotent(f"no power up to {m.rows} of the matrix vanishes")


def linearly_dependent(v: Sequence, u: Sequence) -> bool:
    """True iff the 2-row matrix [v; u] has rank 1."""
    if len(v) != len(u):
        raise AmbientMismatch("vectors of different length")
    p = first_nonzero(v)
    if p < 0 or first_nonzero(u) < 0:
        raise ZeroVector("linear dependence of a zero vector")
    ratio = u[p] / v[p]
    return all(b == ratio * a for a, b in zip(v, u))


_HALF = GaussRat(Fraction(1, 2))
_MINUS_HALF_I = GaussRat(0, Fraction(-1, 2))


def real_points(s: Subspace, conjugation: Optional[Callable[[Vector], Vector]] = None) -> Subspace:
    """Fixed vectors of an antilinear involution inside a stable subspace."""
    sigma = conjugation or vec_conj
    images = [sigma(v) for v in s.vectors]
    if not all(s.contains_vector(w) for w in images):
        raise NotSelfConjugate("subspace is not stable under the conjugation")
    spanning = []
    for v, w in zip(s.vectors, images):
        spanning.append(vec_scale(_HALF, vec_add(v, w)))
        spanning.append(vec_scale(_MINUS_HALF_I, vec_sub(v, w)))
    return Subspace(s.ambient_dim, spanning)


def _check_ambient(s: Subspace, t: Subspace):
    if s.ambient_dim != t.ambient_dim:
        raise AmbientMismatch(f"ambient dims {s.ambient_dim} and {t.ambient_dim}")


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return Subspace(s.ambient_dim, s.vectors + t.vectors)


def subspace_intersect(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    if not s.dim or not t.dim:
        return Subspace.zero(s.ambient_dim)
    stacked = Mat._wrap(s.vectors + t.vectors, s.ambient_dim)
    relations = nullspace(stacked.transpose())
    k = s.dim
    return Subspace(s.ambient_dim, [combine(x[:k], s.vectors, s.ambient_dim) for x in relations.vectors])


def contains(s: Subspace, t: Subspace) -> bool:
    """True iff t ⊆ s."""
    _check_ambient(s, t)
    return all(s.contains_vector(v) for v in t.vectors)


if __name__ == "__main__":
    # Quick smoke test
    m = Mat([[1, 0], [0, 2]])
    print(f"char poly of diag(1,2): {char_poly(m)}")
    print(f"roots: {gauss_rational_roots(Poly([1, 0, 1])).roots}")
    print(f"nullspace of zero 2x2: dim {nullspace(Mat.zeros(2, 2)).dim}")
