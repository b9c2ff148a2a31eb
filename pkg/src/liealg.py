"""
Lie algebra structure: brackets, Killing form, root decomposition relative to
an ordered Cartan basis, positive and simple roots, sl2-triples, reflections,
the conjugation permutation of roots and the Weyl word matching the Borel
subalgebra with its conjugate.

Algebra elements are coordinate vectors over the algebra basis; the basis is
real, so complex conjugation of an element is coordinatewise.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import (DegenerateRoot, NonTerminating, NotCartan, NotClosed,
                        NotInSpan, SizeMismatch, ValidationError)
from src.exactnum import ZERO, GaussRat, as_gauss, is_positive_complex, sqrt_exact
from src.linalg import (CoordinateFrame, Mat, Subspace, Vector, combine, exp_nilpotent,
                        first_nonzero, rank, simultaneous_eigenspaces, unit_vector,
                        vec_conj, vec_is_zero, vec_scale, vector)

Weight = Tuple


def bracket(a: Mat, b: Mat) -> Mat:
    """Matrix commutator ab − ba."""
    if not a.is_square or not b.is_square or a.rows != b.rows:
        raise SizeMismatch(f"bracket of {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return a @ b - b @ a


def weight_key(values: Sequence) -> Tuple:
    """Sort key realizing the complex-number order on value vectors."""
    key = []
    for x in values:
        x = as_gauss(x)
        key.extend((x.re, x.im))
    return tuple(key)


def format_weight(values: Sequence) -> str:
    return "(" + ", ".join(str(x) for x in values) + ")"


class LieAlgebra:
    """A real matrix Lie algebra given by a basis of n×n rational matrices."""

    def __init__(self, basis: Sequence[Mat], name: str = "", verbose: bool = False):
        """
        Args:
            basis: Linearly independent real matrices spanning the algebra
            name: Label used in reports
            verbose: Print construction progress
        """
        if not basis:
            raise ValidationError("Lie algebra needs at least one basis element")
        self.basis = [m if isinstance(m, Mat) else Mat(m) for m in basis]
        self.n = self.basis[0].rows
        self.dim = len(self.basis)
        self.name = name or f"g({self.dim})"
        for m in self.basis:
            if not m.is_square or m.rows != self.n:
                raise SizeMismatch(f"{self.name}: generators must all be {self.n}x{self.n}")
            if not m.is_real:
                raise ValidationError(f"{self.name}: generators must have rational entries")
        try:
            self._frame = CoordinateFrame([m.entries for m in self.basis])
        except ValueError as e:
            raise ValidationError(f"{self.name}: generators are linearly dependent") from e

        # structure constants: _brackets[i][j] = coordinates of [b_i, b_j]
        self._brackets = [[None] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            self._brackets[i][i] = (ZERO,) * self.dim
            for j in range(i + 1, self.dim):
                try:
                    c = self.coordinates(bracket(self.basis[i], self.basis[j]))
                except NotInSpan as e:
                    raise NotClosed(f"{self.name}: [b{i + 1}, b{j + 1}] leaves the span") from e
                self._brackets[i][j] = c
                self._brackets[j][i] = tuple(-x for x in c)

        # ad(b_i)[k][j] = k-th coordinate of [b_i, b_j]
        self._ad = [
            Mat.from_columns([self._brackets[i][j] for j in range(self.dim)], self.dim)
            for i in range(self.dim)
        ]
        if verbose:
            print(f"✓ Built {self.name}: dim {self.dim}, {self.n}x{self.n} matrices")

    def __repr__(self):
        return f"LieAlgebra({self.name}, dim={self.dim})"

    def coordinates(self, m: Mat) -> Vector:
        """Coordinates of a (complex) matrix in the basis; raises NotInSpan."""
        return self._frame.coordinates(m.entries)

    def element(self, coords: Sequence) -> Mat:
        """Matrix of the element with the given coordinates."""
        return Mat.from_entries(self.n, self.n, combine(coords, [m.entries for m in self.basis], self.n * self.n))

    def structure_constant(self, i: int, j: int) -> Vector:
        return self._brackets[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """Bracket of two elements given by coordinates."""
        acc = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                ab = a * b
                for k, c in enumerate(self._brackets[i][j]):
                    if c:
                        acc[k] = acc[k] + ab * c
        return tuple(acc)

    def ad(self, x: Sequence) -> Mat:
        """ad(x) acting on coordinates."""
        acc = Mat.zeros(self.dim, self.dim)
        for i, a in enumerate(x):
            if a:
                acc = acc + self._ad[i].scale(a)
        return acc

    def ad_basis(self, i: int) -> Mat:
        return self._ad[i]

    def killing_form(self) -> Mat:
        return Mat([[(self._ad[i] @ self._ad[j]).trace() for j in range(self.dim)] for i in range(self.dim)])


def verify_semisimple(g: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return rank(g.killing_form()) == g.dim


class CartanSubalgebra:
    """Ordered basis h_1..h_r of a Cartan subalgebra, as algebra coordinates."""

    def __init__(self, g: LieAlgebra, elements: Sequence[Sequence]):
        if not elements:
            raise NotCartan("Cartan subalgebra needs at least one element")
        self.algebra = g
        self.elements = [vector(h) for h in elements]
        for h in self.elements:
            if len(h) != g.dim:
                raise NotCartan(f"Cartan element of length {len(h)} in a {g.dim}-dim algebra")
            if any(not x.is_real for x in h):
                raise NotCartan("Cartan elements must be real")
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                if not vec_is_zero(g.bracket(self.elements[i], self.elements[j])):
                    raise NotCartan(f"h{i + 1} and h{j + 1} do not commute")
        self.span = Subspace(g.dim, self.elements)
        if self.span.dim != len(self.elements):
            raise NotCartan("Cartan elements are linearly dependent")
        self._frame = CoordinateFrame(self.elements)
        self.ad_ops = [g.ad(h) for h in self.elements]

    @classmethod
    def from_indices(cls, g: LieAlgebra, indices: Sequence[int]) -> "CartanSubalgebra":
        """Cartan spanned by basis elements (0-based indices)."""
        return cls(g, [unit_vector(g.dim, i) for i in indices])

    @property
    def rank(self) -> int:
        return len(self.elements)

    def coordinates(self, x: Sequence) -> Vector:
        """Coordinates of an element of the complexified Cartan in the ordered basis."""
        return self._frame.coordinates(x)

    def evaluate(self, values: Sequence, x: Sequence):
        """λ(x) for a functional given by its values on h_1..h_r."""
        coords = self.coordinates(x)
        return pair(values, coords)


def pair(values: Sequence, coords: Sequence):
    """λ(h) for h = Σ coords_i h_i."""
    acc = ZERO
    for a, b in zip(values, coords):
        if a and b:
            acc = acc + a * b
    return acc


@dataclass(frozen=True)
class Root:
    values: Weight
    space: Subspace
    positive: bool = False

    @property
    def key(self) -> Tuple:
        return weight_key(self.values)


@dataclass(frozen=True)
class Sl2Triple:
    """Standard triple [X, Y] = H, [H, X] = 2X, [H, Y] = −2Y for a root α."""
    alpha: Weight
    X: Vector
    Y: Vector
    H: Vector
    coroot: Vector  # H in Cartan coordinates

    def pairing(self, values: Sequence):
        """β(H_α)."""
        return pair(values, self.coroot)


@dataclass
class WeylWord:
    letters: List[int]
    letter_values: List[Weight]
    omega_defining: Optional[Mat] = None
    omega_adjoint: Optional[Mat] = None

    def __len__(self):
        return len(self.letters)


def root_decomposition(g: LieAlgebra, c: CartanSubalgebra) -> List[Root]:
    """Joint eigenspaces of ad(h_i) on the complexified algebra, nonzero ones only."""
    blocks = simultaneous_eigenspaces(c.ad_ops)
    roots = []
    zero = None
    for values, space in blocks:
        if vec_is_zero(values):
            zero = space
        else:
            roots.append(Root(values=values, space=space))
    if zero is None or zero != c.span:
        found = 0 if zero is None else zero.dim
        raise NotCartan(f"zero weight space has dim {found}, Cartan has dim {c.rank}")
    roots.sort(key=lambda r: r.key, reverse=True)
    return [Root(r.values, r.space, is_positive_complex(r.values[first_nonzero(r.values)])) for r in roots]


def positive_system(roots: Sequence[Root]) -> Tuple[List[Root], List[Root]]:
    positives = [r for r in roots if r.positive]
    negatives = [r for r in roots if not r.positive]
    return positives, negatives


def _add(a: Sequence, b: Sequence) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Sequence) -> Weight:
    return tuple(-x for x in a)


def simple_roots(positives: Sequence[Root]) -> List[Root]:
    """Positive roots that are not a sum of two positive roots, most positive first."""
    values = [r.values for r in positives]
    sums = {_add(a, b) for i, a in enumerate(values) for b in values[i:]}
    simples = [r for r in positives if r.values not in sums]
    simples.sort(key=lambda r: r.key, reverse=True)
    return simples


def _normalize_last(v: Vector) -> Vector:
    """Scale so that the last nonzero coordinate is 1."""
    last = max(i for i, x in enumerate(v) if x)
    return vec_scale(1 / v[last], v)


def sl2_triple(g: LieAlgebra, c: CartanSubalgebra, alpha: Root, minus_alpha: Root) -> Sl2Triple:
    """Standard triple with X in the α root space and α(H) = 2."""
    if alpha.space.dim != 1 or minus_alpha.space.dim != 1:
        raise DegenerateRoot(f"root {format_weight(alpha.values)} has a root space of dim {alpha.space.dim}")
    x = _normalize_last(alpha.space.vectors[0])
    # compact roots: rescale X so that Y = −X̄ (keeps reflection representatives real)
    if tuple(v.conj() for v in alpha.values) == _neg(alpha.values):
        q = -c.evaluate(alpha.values, g.bracket(x, vec_conj(x))) * Fraction(1, 2)
        if q.is_real and q.re > 0:
            root = sqrt_exact(q.re)
            if isinstance(root, Fraction):
                x = vec_scale(GaussRat(1 / root), x)
    y0 = _normalize_last(minus_alpha.space.vectors[0])
    h0 = g.bracket(x, y0)
    try:
        scale = c.evaluate(alpha.values, h0)
    except NotInSpan as e:
        raise DegenerateRoot(f"[X, Y] for {format_weight(alpha.values)} is not in the Cartan") from e
    if not scale:
        raise DegenerateRoot(f"α([X, Y]) = 0 for α = {format_weight(alpha.values)}")
    y = vec_scale(2 / scale, y0)
    h = g.bracket(x, y)
    coroot = c.coordinates(h)
    if g.bracket(h, x) != vec_scale(GaussRat(2), x) or g.bracket(h, y) != vec_scale(GaussRat(-2), y):
        raise DegenerateRoot(f"sl2 relations fail for {format_weight(alpha.values)}")
    return Sl2Triple(alpha=alpha.values, X=x, Y=y, H=h, coroot=coroot)


def reflect_root(beta: Sequence, triple: Sl2Triple) -> Weight:
    """w_α(β) = β − β(H_α)·α; also valid for weights."""
    k = triple.pairing(beta)
    if not k:
        return tuple(beta)
    return tuple(b - k * a for b, a in zip(beta, triple.alpha))


def conjugation_permutation(g: LieAlgebra, roots: Sequence[Root]) -> Dict[Weight, Weight]:
    """p(λ) = λ^σ; the Cartan basis is real, so λ^σ has the conjugate values."""
    by_values = {r.values: r for r in roots}
    perm = {}
    for r in roots:
        image = tuple(v.conj() for v in r.values)
        if image not in by_values:
            raise ValidationError(f"conjugate of root {format_weight(r.values)} is not a root")
        if r.space.conj() != by_values[image].space:
            raise ValidationError(f"σ does not carry the root space of {format_weight(r.values)} onto its image")
        perm[r.values] = image
    return perm


def borel_matching_word(positives: Sequence[Root], simples: Sequence[Root],
                        perm: Dict[Weight, Weight], triples: Dict[Weight, Sl2Triple]) -> WeylWord:
    """Greedy word w = w_{β1}…w_{βl} with w(R⁺) = p(R⁺)."""
    positive_set = {r.values for r in positives}

    def apply_word(letters, values):
        for beta in reversed(letters):
            values = reflect_root(values, triples[beta])
        return values

    def bad(letters):
        return [r.values for r in positives if perm[apply_word(letters, r.values)] not in positive_set]

    letters: List[Weight] = []
    remaining = len(bad(letters))
    for _ in range(len(positives) + 1):
        if not remaining:
            break
        for beta in simples:
            if perm[apply_word(letters, beta.values)] not in positive_set:
                letters.append(beta.values)
                break
        else:
            raise NonTerminating("no simple root is sent negative")
        count = len(bad(letters))
        if count != remaining - 1:
            raise NonTerminating(f"word step did not reduce the count ({remaining} -> {count})")
        remaining = count
    else:
        raise NonTerminating("Weyl word exceeded the number of positive roots")

    index = {r.values: i for i, r in enumerate(simples)}
    return WeylWord(letters=[index[b] for b in letters], letter_values=letters)


def act_word(word: WeylWord, values: Sequence, triples: Dict[Weight, Sl2Triple]) -> Weight:
    """w·λ for w = w_{β1}…w_{βl}; the rightmost letter acts first."""
    for beta in reversed(word.letter_values):
        values = reflect_root(values, triples[beta])
    return tuple(values)


def reflection_representative(x: Mat, y: Mat) -> Mat:
    """exp(X)·exp(−Y)·exp(X)."""
    ex = exp_nilpotent(x)
    return ex @ exp_nilpotent(-y) @ ex


def omega_matrices(g: LieAlgebra, word: WeylWord, triples: Dict[Weight, Sl2Triple]) -> Tuple[Mat, Mat]:
    """ω in the defining representation and its adjoint action on coordinates."""
    defining = Mat.identity(g.n)
    adjoint = Mat.identity(g.dim)
    for beta in word.letter_values:
        t = triples[beta]
        defining = defining @ reflection_representative(g.element(t.X), g.element(t.Y))
        adjoint = adjoint @ reflection_representative(g.ad(t.X), g.ad(t.Y))
    return defining, adjoint


def nilradical(positives: Sequence[Root], dim: int) -> Subspace:
    """Span of the positive root spaces."""
    return Subspace(dim, [v for r in positives for v in r.space.vectors])


def cartan_matrix(simples: Sequence[Root], triples: Dict[Weight, Sl2Triple]) -> List[List]:
    """Entries β_i(H_{β_j})."""
    return [[triples[b.values].pairing(a.values) for b in simples] for a in simples]


@dataclass
class RootData:
    """Everything derived from (g, Cartan): roots, positivity, triples, word, ω."""
    algebra: LieAlgebra
    cartan: CartanSubalgebra
    roots: List[Root]
    positives: List[Root]
    negatives: List[Root]
    simples: List[Root]
    triples: Dict[Weight, Sl2Triple]
    permutation: Dict[Weight, Weight]
    word: WeylWord
    theta_matrix: Mat = field(default=None)

    @classmethod
    def build(cls, g: LieAlgebra, c: CartanSubalgebra, verbose: bool = False) -> "RootData":
        roots = root_decomposition(g, c)
        positives, negatives = positive_system(roots)
        simples = simple_roots(positives)
        by_values = {r.values: r for r in roots}
        triples = {r.values: sl2_triple(g, c, r, by_values[_neg(r.values)]) for r in positives}
        perm = conjugation_permutation(g, roots)
        word = borel_matching_word(positives, simples, perm, triples)
        word.omega_defining, word.omega_adjoint = omega_matrices(g, word, triples)
        data = cls(algebra=g, cartan=c, roots=roots, positives=positives, negatives=negatives,
                   simples=simples, triples=triples, permutation=perm, word=word)
        data._check_conjugates_nilradical()
        data.theta_matrix = data._ad_omega_on_cartan()
        if verbose:
            print(f"✓ {len(roots)} roots, {len(simples)} simple, Weyl word of length {len(word)}")
        return data

    def root(self, values: Sequence) -> Root:
        for r in self.roots:
            if r.values == tuple(values):
                return r
        raise KeyError(format_weight(values))

    def nilradical(self) -> Subspace:
        return nilradical(self.positives, self.algebra.dim)

    def _check_conjugates_nilradical(self):
        nil = self.nilradical()
        image = Subspace(self.algebra.dim, [self.word.omega_adjoint.apply(v) for v in nil.vectors])
        if image != nil.conj():
            raise ValidationError("ω does not conjugate the nilradical to its conjugate")
        g = self.algebra
        omega = self.word.omega_defining
        omega_inv = omega.inverse()
        moved = Subspace(g.dim, [g.coordinates(omega @ g.element(v) @ omega_inv) for v in nil.vectors])
        if moved != nil.conj():
            raise ValidationError("defining ω does not conjugate the nilradical to its conjugate")

    def _ad_omega_on_cartan(self) -> Mat:
        """M with Ad(ω)h_i = Σ_j M_ij h_j."""
        rows = []
        for h in self.cartan.elements:
            rows.append(self.cartan.coordinates(self.word.omega_adjoint.apply(h)))
        return Mat(rows)

    def theta(self, weight: Sequence) -> Weight:
        """Θ(λ) = ω⁻¹·λ^σ, i.e. Θ(λ)(h_i) = λ^σ(Ad(ω) h_i)."""
        conj = [as_gauss(x).conj() for x in weight]
        return self.theta_matrix.apply(tuple(conj))

    def act_word(self, weight: Sequence) -> Weight:
        return act_word(self.word, weight, self.triples)

    def cartan_matrix(self) -> List[List]:
        return cartan_matrix(self.simples, self.triples)

    def delta(self) -> Weight:
        """Half the sum of the positive roots."""
        acc = (ZERO,) * self.cartan.rank
        for r in self.positives:
            acc = _add(acc, r.values)
        return tuple(x * Fraction(1, 2) for x in acc)


def combine_ops(coords: Sequence, ops: Sequence[Mat]) -> Mat:
    """Σ coords_i·ops_i."""
    acc = None
    for a, m in zip(coords, ops):
        if not a:
            continue
        term = m.scale(a)
        acc = term if acc is None else acc + term
    if acc is None:
        return Mat.zeros(ops[0].rows, ops[0].cols)
    return acc


if __name__ == "__main__":
    # Quick smoke test: so(3)
    def e(i, j):
        return Mat.unit(3, i, j)
    g = LieAlgebra([e(0, 1) - e(1, 0), e(0, 2) - e(2, 0), e(1, 2) - e(2, 1)], name="so(3)", verbose=True)
    print(f"semisimple: {verify_semisimple(g)}")
    data = RootData.build(g, CartanSubalgebra.from_indices(g, [0]), verbose=True)
    print(f"roots: {[format_weight(r.values) for r in data.roots]}")
    print(f"omega: {data.word.omega_defining}")
