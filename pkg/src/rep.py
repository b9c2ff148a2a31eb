"""
Representations of a real matrix Lie algebra on V = ℚ^N and their
highest-weight data on the complexification ℂ^N.
"""
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import NotHomomorphism, SizeMismatch, ValidationError
from src.liealg import LieAlgebra, RootData, Weight, bracket, combine_ops
from src.linalg import (EchelonBuilder, Mat, Subspace, Vector, exp_nilpotent, joint_nullspace,
                        simultaneous_eigenspaces, unit_vector, vec_conj)


class Representation:
    """A (possibly anti-)homomorphism from an algebra into gl(N, ℚ)."""

    def __init__(self, algebra: LieAlgebra, images: Sequence[Mat], anti: bool = False,
                 name: str = "", check: bool = True):
        """
        Initialize and verify a representation.

        Args:
            algebra: The Lie algebra being represented
            images: One N×N rational matrix per algebra basis element
            anti: True when the images satisfy ρ([a,b]) = −[ρ(a), ρ(b)]
                (vector-field actions); the engine then acts by a ↦ −ρ(a)
            name: Label used in reports
            check: Verify the (anti-)homomorphism identity
        """
        if len(images) != algebra.dim:
            raise SizeMismatch(f"{len(images)} images for a {algebra.dim}-dim algebra")
        self.algebra = algebra
        self.images = [m if isinstance(m, Mat) else Mat(m) for m in images]
        self.anti = anti
        self.name = name or f"rep of {algebra.name}"
        self.space_dim = self.images[0].rows
        for m in self.images:
            if not m.is_square or m.rows != self.space_dim:
                raise SizeMismatch(f"{self.name}: images must all be {self.space_dim}x{self.space_dim}")
            if not m.is_real:
                raise ValidationError(f"{self.name}: images must have rational entries")
        self.action = [-m for m in self.images] if anti else list(self.images)
        if check:
            self._check_homomorphism()

    def __repr__(self):
        return f"Representation({self.name}, N={self.space_dim})"

    def _check_homomorphism(self):
        g = self.algebra
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.act(g.structure_constant(i, j))
                rhs = bracket(self.action[i], self.action[j])
                if lhs != rhs:
                    kind = "anti-homomorphism" if self.anti else "homomorphism"
                    raise NotHomomorphism(f"{self.name}: {kind} identity fails on (b{i + 1}, b{j + 1})")

    def act(self, x: Sequence) -> Mat:
        """Action of the algebra element with coordinates x (complex allowed)."""
        return combine_ops(x, self.action)


def conj_vector(v: Sequence) -> Vector:
    """Coordinatewise conjugation on ℂ^N = V ⊕ i·V."""
    return vec_conj(tuple(v))


@dataclass(frozen=True)
class WeightVector:
    weight: Weight
    vec: Vector


@dataclass
class IsotypicalComponent:
    """Highest-weight vectors sharing one weight."""
    weight: Weight
    space: Subspace

    @property
    def hw_basis(self) -> List[WeightVector]:
        return [WeightVector(self.weight, v) for v in self.space.vectors]

    @property
    def multiplicity(self) -> int:
        return self.space.dim


def raising_ops(rep: Representation, data: RootData, simple_only: bool = True) -> List[Mat]:
    roots = data.simples if simple_only else data.positives
    return [rep.act(data.triples[r.values].X) for r in roots]


def lowering_ops(rep: Representation, data: RootData) -> List[Mat]:
    return [rep.act(data.triples[r.values].Y) for r in data.positives]


def cartan_ops(rep: Representation, data: RootData) -> List[Mat]:
    return [rep.act(h) for h in data.cartan.elements]


def highest_weights(rep: Representation, data: RootData) -> List[IsotypicalComponent]:
    """Joint kernel of the simple raising operators, split into Cartan eigenspaces."""
    kernel = joint_nullspace(raising_ops(rep, data), rep.space_dim)
    full = joint_nullspace(raising_ops(rep, data, simple_only=False), rep.space_dim)
    if kernel != full:
        raise ValidationError(f"{rep.name}: simple raising operators do not generate the nilradical action")
    if kernel.dim == 0:
        return []
    blocks = simultaneous_eigenspaces(cartan_ops(rep, data), within=kernel)
    return [IsotypicalComponent(weight=tuple(values), space=space) for values, space in blocks]


def omega_rho(rep: Representation, data: RootData, check: bool = True) -> Mat:
    """Product over the Weyl word of exp(τX)·exp(−τY)·exp(τX)."""
    omega = Mat.identity(rep.space_dim)
    for beta in data.word.letter_values:
        t = data.triples[beta]
        x, y = rep.act(t.X), rep.act(t.Y)
        ex = exp_nilpotent(x)
        omega = omega @ ex @ exp_nilpotent(-y) @ ex
    if check:
        omega_inv = omega.inverse()
        for k in range(rep.algebra.dim):
            moved = data.word.omega_adjoint.apply(unit_vector(rep.algebra.dim, k))
            if omega @ rep.action[k] @ omega_inv != rep.act(moved):
                raise ValidationError(f"{rep.name}: ω_ρ fails to intertwine on b{k + 1}")
    return omega


def invariant_span(rep: Representation, seed: Sequence, ops: Optional[Sequence[Mat]] = None) -> Subspace:
    """Smallest subspace containing the seed(s) and stable under ops (default: the action)."""
    seeds = [tuple(seed)] if seed and not isinstance(seed[0], (tuple, list)) else [tuple(s) for s in seed]
    ops = rep.action if ops is None else ops
    builder = EchelonBuilder(rep.space_dim)
    queue = deque()
    for s in seeds:
        if builder.add(s):
            queue.append(s)
    while queue:
        v = queue.popleft()
        for op in ops:
            w = op.apply(v)
            if builder.add(w):
                queue.append(w)
    return builder.subspace()


def descending_span(rep: Representation, data: RootData, seeds: Sequence[Sequence]) -> Subspace:
    """Span of the Y_{i_k}…Y_{i_1}·v over lowering operators."""
    return invariant_span(rep, [tuple(s) for s in seeds], ops=lowering_ops(rep, data))


class ConjugationTwist:
    """The antilinear map J = ω_ρ⁻¹∘conj on ℂ^N."""

    def __init__(self, omega: Mat):
        self.omega = omega
        self.omega_inv = omega.inverse()

    def __call__(self, v: Sequence) -> Vector:
        return self.omega_inv.apply(conj_vector(v))


def commutant_system(rep: Representation) -> DomainMatrix:
    """The linear conditions X·ρ(a) = ρ(a)·X over QQ, one block of N² rows per generator."""
    n = rep.space_dim
    identity = Mat.identity(n)
    rows = []
    for m in rep.images:
        # vec(AX − XA) = (A⊗I − I⊗Aᵀ)·vec(X), row-major
        block = m.kron(identity) - identity.kron(m.transpose())
        rows.extend([QQ(x.re.numerator, x.re.denominator) for x in row] for row in block.data)
    return DomainMatrix(rows, (len(rows), n * n), QQ)


def commutant_dimension(rep: Representation) -> int:
    """Real dimension of {X : X·ρ(a) = ρ(a)·X for all a}."""
    system = commutant_system(rep)
    return system.shape[1] - system.rank()
