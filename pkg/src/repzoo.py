"""
Builders for named algebras and representations.

Algebras: so(p,q), sl(n), su(2) (realified on ℝ⁴).
Representations: defining, adjoint, end-left, poly:d, tensor2, realified,
plus direct sums and rational basis changes of existing ones.
"""
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import BadSignature, ParseError, ValidationError
from src.exactnum import ZERO, GaussRat, parse_scalar
from src.liealg import CartanSubalgebra, LieAlgebra
from src.linalg import Mat, unit_vector
from src.rep import Representation


def so_pq(p: int, q: int) -> LieAlgebra:
    """so(p,q) for the metric diag(1^p, (−1)^q), generators in lexicographic (i, j) order."""
    n = p + q
    if p < 0 or q < 0 or n < 2:
        raise BadSignature(f"so({p},{q}) needs p, q ≥ 0 and p + q ≥ 2")
    signs = [1] * p + [-1] * q
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            e_ij, e_ji = Mat.unit(n, i, j), Mat.unit(n, j, i)
            basis.append(e_ij - e_ji if signs[i] * signs[j] == 1 else e_ij + e_ji)
    return LieAlgebra(basis, name=f"so({p},{q})")


def sl_n(n: int) -> LieAlgebra:
    """sl(n, ℝ): off-diagonal units e_ij in lexicographic order, then e_kk − e_(k+1)(k+1)."""
    if n < 2:
        raise BadSignature(f"sl({n}) needs n ≥ 2")
    basis = [Mat.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    basis += [Mat.unit(n, k, k) - Mat.unit(n, k + 1, k + 1) for k in range(n - 1)]
    return LieAlgebra(basis, name=f"sl({n})")


def _realify(m: Sequence[Sequence[GaussRat]]) -> Mat:
    """Complex n×n matrix as a real 2n×2n matrix; a + bi becomes [[a, −b], [b, a]]."""
    n = len(m)
    out = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            z = m[i][j]
            out[2 * i][2 * j] = z.real()
            out[2 * i][2 * j + 1] = -z.imag()
            out[2 * i + 1][2 * j] = z.imag()
            out[2 * i + 1][2 * j + 1] = z.real()
    return Mat(out)


def su2_realified() -> LieAlgebra:
    """su(2) acting on ℂ² = ℝ⁴; the defining rep is of quaternionic type."""
    i = GaussRat(0, 1)
    one, zero = GaussRat(1), GaussRat(0)
    generators = [
        [[i, zero], [zero, -i]],
        [[zero, one], [-one, zero]],
        [[zero, i], [i, zero]],
    ]
    return LieAlgebra([_realify(m) for m in generators], name="su(2)")


def default_cartan(g: LieAlgebra) -> CartanSubalgebra:
    """
    Cartan subalgebra used when none is given.

    so(p,q): generators of the coordinate planes (1,2), (3,4), ...
    sl(n): the regular element diag(−(n−1), −(n−3), ..., n−1) followed by
        e_kk − e_(k+1)(k+1) for k = 1..n−2
    anything else: the first basis element
    """
    m = re.fullmatch(r"so\((\d+),(\d+)\)", g.name)
    if m:
        n = int(m.group(1)) + int(m.group(2))
        planes = [(2 * k, 2 * k + 1) for k in range(n // 2)]
        return CartanSubalgebra.from_indices(g, [_pair_index(n, i, j) for i, j in planes])
    m = re.fullmatch(r"sl\((\d+)\)", g.name)
    if m:
        n = int(m.group(1))
        offset = n * n - n
        diagonal = [2 * k - n - 1 for k in range(1, n + 1)]
        regular = [ZERO] * g.dim
        running = 0
        for k in range(n - 1):
            running += diagonal[k]
            regular[offset + k] = GaussRat(running)
        elements = [tuple(regular)] + [unit_vector(g.dim, offset + k) for k in range(n - 2)]
        return CartanSubalgebra(g, elements)
    return CartanSubalgebra.from_indices(g, [0])


def _pair_index(n: int, i: int, j: int) -> int:
    """Position of the (i, j) generator, i < j, in the so(p,q) basis."""
    return sum(n - 1 - k for k in range(i)) + (j - i - 1)


def defining_rep(g: LieAlgebra) -> Representation:
    return Representation(g, list(g.basis), name=f"{g.name} defining")


def adjoint_rep(g: LieAlgebra) -> Representation:
    return Representation(g, [g.ad_basis(i) for i in range(g.dim)], name=f"{g.name} adjoint")


def endo_left_rep(g: LieAlgebra) -> Representation:
    """ρ(A)(X) = AX on n×n matrices, row-major coordinates: A ⊗ I."""
    identity = Mat.identity(g.n)
    return Representation(g, [a.kron(identity) for a in g.basis], name=f"{g.name} end-left")


@dataclass(frozen=True)
class MonomialBasis:
    """Degree-d monomials in n variables, graded-lex with x1 greatest."""
    n_vars: int
    degree: int

    @property
    def monomials(self) -> List[Tuple[int, ...]]:
        exps = []
        for combo in combinations_with_replacement(range(self.n_vars), self.degree):
            e = [0] * self.n_vars
            for k in combo:
                e[k] += 1
            exps.append(tuple(e))
        return sorted(exps, reverse=True)

    def __len__(self):
        return comb(self.n_vars + self.degree - 1, self.degree)

    def index(self) -> Dict[Tuple[int, ...], int]:
        return {m: k for k, m in enumerate(self.monomials)}

    def label(self, exps: Tuple[int, ...]) -> str:
        parts = []
        for k, e in enumerate(exps, 1):
            if e == 1:
                parts.append(f"x{k}")
            elif e > 1:
                parts.append(f"x{k}^{e}")
        return "*".join(parts) or "1"


def vector_field_matrix(a: Mat, basis: MonomialBasis) -> Mat:
    """Matrix of V_A = Σ a_ij x_j ∂/∂x_i on the monomial basis."""
    index = basis.index()
    size = len(index)
    out = [[ZERO] * size for _ in range(size)]
    for col, m in enumerate(basis.monomials):
        for i in range(basis.n_vars):
            if not m[i]:
                continue
            for j in range(basis.n_vars):
                coeff = a[i, j]
                if not coeff:
                    continue
                image = list(m)
                image[i] -= 1
                image[j] += 1
                row = index[tuple(image)]
                out[row][col] = out[row][col] + coeff * m[i]
    return Mat(out)


def poly_rep(g: LieAlgebra, degree: int) -> Representation:
    """Vector-field action on homogeneous polynomials of the given degree (anti-homomorphism)."""
    if degree < 1:
        raise ValidationError(f"polynomial degree must be at least 1, got {degree}")
    basis = MonomialBasis(g.n, degree)
    return Representation(g, [vector_field_matrix(a, basis) for a in g.basis], anti=True,
                          name=f"{g.name} poly:{degree}")


def tensor_square_rep(g: LieAlgebra) -> Representation:
    """V ⊗ V for V the linear polynomials: Aᵀ⊗I + I⊗Aᵀ (anti-homomorphism)."""
    identity = Mat.identity(g.n)
    images = [a.transpose().kron(identity) + identity.kron(a.transpose()) for a in g.basis]
    return Representation(g, images, anti=True, name=f"{g.name} tensor2")


def direct_sum_rep(first: Representation, second: Representation) -> Representation:
    if first.algebra is not second.algebra:
        raise ValidationError("direct sum of representations of different algebras")
    if first.anti != second.anti:
        raise ValidationError("direct sum mixes homomorphisms and anti-homomorphisms")
    n1, n2 = first.space_dim, second.space_dim
    images = []
    for a, b in zip(first.images, second.images):
        rows = [row + (ZERO,) * n2 for row in a.data] + [(ZERO,) * n1 + row for row in b.data]
        images.append(Mat(rows))
    return Representation(first.algebra, images, anti=first.anti,
                          name=f"{first.name} + {second.name}")


def conjugate_rep(rep: Representation, q: Mat) -> Representation:
    """Rational change of basis: images Q·ρ(a)·Q⁻¹."""
    q_inv = q.inverse()
    if not q.is_real:
        raise ValidationError("basis change must be rational")
    return Representation(rep.algebra, [q @ m @ q_inv for m in rep.images], anti=rep.anti,
                          name=f"{rep.name} (rebased)")


def twisted_double(rep: Representation) -> Representation:
    """ρ ⊕ ρ rebased by [[I, 0], [P, I]], P the swap of the first two coordinates."""
    n = rep.space_dim
    q = Mat.identity(2 * n) + Mat.unit(2 * n, n, 1) + Mat.unit(2 * n, n + 1, 0)
    return conjugate_rep(direct_sum_rep(rep, rep), q)


# named builders

_ALGEBRA_PATTERNS = [
    (re.compile(r"^so\((\d+),(\d+)\)$"), lambda m: so_pq(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^so\((\d+)\)$"), lambda m: so_pq(int(m.group(1)), 0)),
    (re.compile(r"^sl\((\d+)\)$"), lambda m: sl_n(int(m.group(1)))),
    (re.compile(r"^su\(2\)$"), lambda m: su2_realified()),
]


def build_algebra(name: str) -> LieAlgebra:
    """so(p,q), so(n), sl(n) or su(2)."""
    text = name.replace(" ", "")
    for pattern, builder in _ALGEBRA_PATTERNS:
        m = pattern.match(text)
        if m:
            return builder(m)
    raise ParseError(f"Unknown algebra {name!r}; expected so(p,q), so(n), sl(n) or su(2)")


REP_KINDS = ("defining", "adjoint", "end-left", "poly:d", "tensor2", "realified")


def build_rep(g: LieAlgebra, kind: str) -> Representation:
    """Representation by kind name."""
    text = kind.strip().lower()
    if text in ("defining", "realified"):
        return defining_rep(g)
    if text == "adjoint":
        return adjoint_rep(g)
    if text == "end-left":
        return endo_left_rep(g)
    if text == "tensor2":
        return tensor_square_rep(g)
    m = re.fullmatch(r"poly:(\d+)", text)
    if m:
        return poly_rep(g, int(m.group(1)))
    raise ParseError(f"Unknown representation kind {kind!r}; expected one of {', '.join(REP_KINDS)}")


def parse_cartan(g: LieAlgebra, text: Optional[str]) -> CartanSubalgebra:
    """
    Parse a Cartan selection.

    "e1,e6" picks basis elements (1-based); "1,0,0;0,0,1" gives coefficient
    vectors separated by ';'. Empty text selects the default Cartan.
    """
    if not text:
        return default_cartan(g)
    text = text.replace(" ", "")
    if re.fullmatch(r"e\d+(,e\d+)*", text):
        indices = [int(tok[1:]) - 1 for tok in text.split(",")]
        bad = [k + 1 for k in indices if not 0 <= k < g.dim]
        if bad:
            raise ParseError(f"Cartan index out of range for a {g.dim}-dim algebra: {bad}")
        return CartanSubalgebra.from_indices(g, indices)
    vectors = []
    for chunk in text.split(";"):
        coeffs = [parse_scalar(tok) for tok in chunk.split(",")]
        if len(coeffs) != g.dim:
            raise ParseError(f"Cartan vector {chunk!r} has {len(coeffs)} entries, expected {g.dim}")
        vectors.append(tuple(coeffs))
    return CartanSubalgebra(g, vectors)
