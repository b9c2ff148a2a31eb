"""
Decomposition driver: splits a real representation into real irreducible
components.

The procedure runs in seven steps:
    1. root data for the chosen Cartan subalgebra (positive system, Weyl word, ω)
    2. highest-weight vectors of the complexified representation
    3. the matrix ω_ρ and the antilinear map J = ω_ρ⁻¹∘conj
    4. orbits of the involution Θ on highest weights
    5. orbit representatives
    6. components for orbits of length two (conjugate pairs)
    7. components for self-conjugate weights, by peeling the isotypic space
"""
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from config import settings
from src.errors import (DecompositionError, ExhaustionFailure, NotDominant, NotScalar,
                        ValidationError, WeightNotInOrbit2, ZeroD)
from src.exactnum import I, GaussRat, QuadExt, as_gauss, reduce_scalar, sqrt_exact
from src.liealg import CartanSubalgebra, RootData, Weight, format_weight, weight_key
from src.linalg import (EchelonBuilder, Subspace, Vector, first_nonzero, joint_nullspace,
                        linearly_dependent, real_points, subspace_intersect, subspace_sum,
                        vec_add, vec_imag, vec_is_zero, vec_real, vec_scale, vec_sub)
from src.rep import (ConjugationTwist, IsotypicalComponent, Representation, WeightVector,
                     descending_span, highest_weights, invariant_span, omega_rho, raising_ops)

CASE_A = "A_selfconj"
CASE_B = "B_distinct_pair"
CASE_C_POS = "C_split_positive_d"
CASE_C_NEG = "C_irreducible_negative_d"
CASES = (CASE_A, CASE_B, CASE_C_POS, CASE_C_NEG)

# hw lines expected in the complexification of one component
_HW_LINES = {CASE_A: 1, CASE_B: 2, CASE_C_POS: 1, CASE_C_NEG: 2}


@dataclass
class RealComponent:
    basis: Subspace
    case_tag: str
    weights: List[Weight]
    seed_vectors: List[Vector]
    d: Optional[Fraction] = None
    notes: List[str] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.basis.dim


@dataclass
class Orbit:
    """A Θ-orbit of highest weights; the representative comes first."""
    weights: Tuple[Weight, ...]
    multiplicity: int
    schur: List = field(default_factory=list)

    @property
    def representative(self) -> Weight:
        return self.weights[0]

    @property
    def length(self) -> int:
        return len(self.weights)


@dataclass
class CheckSummary:
    results: Dict[str, bool] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def record(self, name: str, ok: bool, detail: str = ""):
        self.results[name] = self.results.get(name, True) and ok
        if not ok:
            self.failures.append(f"{name}: {detail}" if detail else name)


@dataclass
class DecompositionReport:
    algebra: str
    representation: str
    space_dim: int
    components: List[RealComponent]
    orbits: List[Orbit]
    word: List[int]
    word_values: List[Weight]
    checks: Optional[CheckSummary] = None

    @property
    def dims(self) -> List[int]:
        return [c.dim for c in self.components]


@contextmanager
def _step(number: int, label: str, verbose: bool):
    try:
        yield
    except DecompositionError as e:
        raise type(e)(f"Step {number} ({label}): {e}") from e
    if verbose:
        print(f"✓ Step {number}: {label}")


def _rationalize(space: Subspace) -> Subspace:
    """Drop vanishing √d parts from a basis."""
    rows = [tuple(reduce_scalar(x) for x in v) for v in space.vectors]
    return Subspace._wrap(space.ambient_dim, rows)


def _has_irrational_entries(space: Subspace) -> bool:
    return any(isinstance(x, QuadExt) and x.v for v in space.vectors for x in v)


def classify_orbits(components: Sequence[IsotypicalComponent], data: RootData,
                    seed_order: str = "default") -> List[Orbit]:
    """Partition highest weights into Θ-orbits; representative = lexicographically smallest."""
    multiplicity = {c.weight: c.multiplicity for c in components}
    order = [c.weight for c in components]
    if seed_order == "lex":
        order.sort(key=weight_key)
    orbits = []
    seen = set()
    for w in order:
        if w in seen:
            continue
        t = data.theta(w)
        if t not in multiplicity:
            raise ValidationError(f"Θ{format_weight(w)} = {format_weight(t)} is not a highest weight")
        if data.theta(t) != w:
            raise ValidationError(f"Θ is not an involution at {format_weight(w)}")
        if multiplicity[t] != multiplicity[w]:
            raise ValidationError(f"weights {format_weight(w)} and {format_weight(t)} have different multiplicities")
        if t == w:
            orbits.append(Orbit(weights=(w,), multiplicity=multiplicity[w]))
        else:
            pair = tuple(sorted((w, t), key=weight_key))
            orbits.append(Orbit(weights=pair, multiplicity=multiplicity[w]))
        seen.update((w, t))
    return orbits


def schur_scalar_d(v: WeightVector, twist: ConjugationTwist) -> Fraction:
    """The real scalar d with J²v = d·v."""
    jjv = twist(twist(v.vec))
    p = first_nonzero(v.vec)
    if p < 0:
        raise NotScalar("zero highest-weight vector")
    d = reduce_scalar(jjv[p] / v.vec[p])
    if jjv != vec_scale(d, v.vec):
        raise NotScalar(f"J² is not a multiple of the identity on the line of weight {format_weight(v.weight)}")
    try:
        d = as_gauss(d)
    except ValueError as e:
        raise NotScalar(f"J² acts by the irrational scalar {d}") from e
    if not d.is_real:
        raise NotScalar(f"J² acts by the non-real scalar {d}")
    if not d:
        raise ZeroD(f"J² vanishes on weight {format_weight(v.weight)}")
    return d.re


def common_schur_scalar(weight: Weight, values: Sequence[Fraction]) -> Optional[Fraction]:
    """The single Schur scalar shared by every highest-weight vector of one weight."""
    distinct = set(values)
    if len(distinct) > 1:
        shown = ", ".join(str(d) for d in sorted(distinct))
        raise NotScalar(f"J² acts by different scalars ({shown}) on highest weight {format_weight(weight)}")
    return next(iter(distinct), None)


def case_a_extract(rep: Representation, v: WeightVector, d: Optional[Fraction] = None) -> RealComponent:
    """v ∧ Jv = 0: the closure M of v is conjugation-stable; take its real points."""
    complex_span = invariant_span(rep, v.vec)
    basis = _rationalize(real_points(complex_span))
    notes = ["irrational basis"] if _has_irrational_entries(basis) else []
    return RealComponent(basis=basis, case_tag=CASE_A, weights=[v.weight], seed_vectors=[v.vec],
                         d=d, notes=notes)


def case_b_extract(rep: Representation, v: WeightVector, twist: ConjugationTwist,
                   theta_weight: Weight) -> RealComponent:
    """Θ(λ) ≠ λ: the real span of v + v̄, closed from Re(v) and Im(v)."""
    if tuple(theta_weight) == tuple(v.weight):
        raise WeightNotInOrbit2(f"weight {format_weight(v.weight)} is self-conjugate")
    complex_span = invariant_span(rep, v.vec)
    spans = [invariant_span(rep, part) for part in (vec_real(v.vec), vec_imag(v.vec)) if not vec_is_zero(part)]
    notes = []
    basis = spans[0]
    if len(spans) == 2 and spans[0] != spans[1]:
        notes.append("closures of Re(v) and Im(v) differ; used the real points of M + conj(M)")
        basis = real_points(subspace_sum(complex_span, complex_span.conj()))
    if basis.dim != 2 * complex_span.dim:
        raise ValidationError(
            f"conjugate-pair component of weight {format_weight(v.weight)} has dim {basis.dim}, "
            f"expected {2 * complex_span.dim}"
        )
    return RealComponent(basis=basis, case_tag=CASE_B, weights=[tuple(v.weight), tuple(theta_weight)],
                         seed_vectors=[v.vec, twist(v.vec)], notes=notes)


def _real_part_closure(rep: Representation, w: Vector, prefer_real: bool):
    first, second = (vec_real(w), vec_imag(w)) if prefer_real else (vec_imag(w), vec_real(w))
    notes = []
    seed = first
    if vec_is_zero(first):
        seed = second
        notes.append("seed part vanished; used the {} part".format("imaginary" if prefer_real else "real"))
    basis = _rationalize(invariant_span(rep, seed))
    if _has_irrational_entries(basis):
        notes.append("irrational basis")
    return basis, notes


def case_c_split(rep: Representation, v: WeightVector, twist: ConjugationTwist,
                 d: Fraction) -> List[RealComponent]:
    """v and Jv independent: two components when d > 0, one when d < 0."""
    if not d:
        raise ZeroD(f"Schur scalar vanishes for weight {format_weight(v.weight)}")
    jv = twist(v.vec)
    if d < 0:
        complex_span = invariant_span(rep, v.vec)
        basis = real_points(subspace_sum(complex_span, complex_span.conj()))
        return [RealComponent(basis=basis, case_tag=CASE_C_NEG, weights=[v.weight],
                              seed_vectors=[v.vec, jv], d=d)]
    root = sqrt_exact(d)
    s = GaussRat(root) if isinstance(root, Fraction) else root.value()
    # Jv₁ = s·v₁ and Jv₂ = −s·v₂
    v1 = vec_add(vec_scale(s, v.vec), jv)
    v2 = vec_sub(vec_scale(s, v.vec), jv)
    components = []
    for w, prefer_real in ((v1, True), (v2, False)):
        basis, notes = _real_part_closure(rep, w, prefer_real)
        components.append(RealComponent(basis=basis, case_tag=CASE_C_POS, weights=[v.weight],
                                         seed_vectors=[w], d=d, notes=notes))
    return components


def _j_real_combinations(candidates, consumed: EchelonBuilder, twist: ConjugationTwist):
    """s·b + Jb and i(s·b − Jb) satisfy J·u = s·u when d = s² > 0."""
    for b in candidates:
        if consumed.contains(b):
            continue
        jb = twist(b)
        jjb = twist(jb)
        p = first_nonzero(b)
        d = reduce_scalar(jjb[p] / b[p])
        if isinstance(d, QuadExt) or not d.is_real or d.re <= 0:
            continue
        root = sqrt_exact(d.re)
        s = GaussRat(root) if isinstance(root, Fraction) else root.value()
        yield vec_add(vec_scale(s, b), jb)
        yield vec_scale(I, vec_sub(vec_scale(s, b), jb))


def isotypical_refine(rep: Representation, comp: IsotypicalComponent, twist: ConjugationTwist,
                      seed_order: str = "default", verbose: bool = False,
                      expected_d: Optional[Fraction] = None) -> List[RealComponent]:
    """Peel a self-conjugate isotypic hw space into real irreducible components."""
    candidates = list(comp.space.vectors)
    if seed_order == "lex":
        candidates.sort(key=weight_key)
    consumed = EchelonBuilder(rep.space_dim)
    results: List[RealComponent] = []
    while len(consumed) < comp.multiplicity:
        choice = None
        pool = chain(candidates, _j_real_combinations(candidates, consumed, twist))
        for b in pool:
            if consumed.contains(b):
                continue
            jb = twist(b)
            if linearly_dependent(b, jb):
                choice = ("a", b, jb)
                break
            trial = consumed.copy()
            if trial.add(b) and trial.add(jb):
                choice = ("c", b, jb)
                break
        if choice is None:
            raise ExhaustionFailure(
                f"no admissible highest-weight vector left for {format_weight(comp.weight)} "
                f"({len(consumed)} of {comp.multiplicity} consumed)"
            )
        kind, b, jb = choice
        v = WeightVector(comp.weight, b)
        d = schur_scalar_d(v, twist)
        if expected_d is not None and d != expected_d:
            raise NotScalar(f"J² acts by {d} on a vector of weight {format_weight(comp.weight)}, "
                            f"expected {expected_d}")
        if kind == "a":
            results.append(case_a_extract(rep, v, d))
            consumed.add(b)
        else:
            results.extend(case_c_split(rep, v, twist, d))
            consumed.add(b)
            consumed.add(jb)
        if verbose:
            print(f"  {format_weight(comp.weight)}: case {kind}, d = {d}")
    return results


def decompose(rep: Representation, cartan: CartanSubalgebra, seed_order: Optional[str] = None,
              verify: Optional[bool] = None, verbose: bool = False) -> DecompositionReport:
    """
    Decompose a real representation into real irreducible components.

    Args:
        rep: Representation of the algebra the Cartan subalgebra lives in
        cartan: Ordered Cartan basis fixing the positive system
        seed_order: "default" (discovery order) or "lex"; falls back to settings
        verify: Run verify_decomposition on the result; falls back to settings
        verbose: Print step progress

    Returns:
        DecompositionReport with components in representative order
    """
    seed_order = seed_order or settings.DECOMP_SEED_ORDER
    if verify is None:
        verify = settings.DECOMP_VERIFY == "on"

    with _step(1, "root data", verbose):
        data = RootData.build(rep.algebra, cartan)
    with _step(2, "highest weights", verbose):
        isotypic = highest_weights(rep, data)
    with _step(3, "ω_ρ", verbose):
        omega = omega_rho(rep, data)
        twist = ConjugationTwist(omega)
    by_weight = {c.weight: c for c in isotypic}
    with _step(4, "Θ-orbits", verbose):
        for c in isotypic:
            target = by_weight.get(data.theta(c.weight))
            for v in c.space.vectors:
                if target is None or not target.space.contains_vector(twist(v)):
                    raise ValidationError(f"J does not carry highest weight {format_weight(c.weight)} to Θ of it")
    with _step(5, "orbit representatives", verbose):
        orbits = classify_orbits(isotypic, data, seed_order)

    components: List[RealComponent] = []
    show = verbose and settings.DECOMP_SHOW_PROGRESS
    with tqdm(total=len(orbits), desc="Orbits", disable=not show) as pbar:
        for orbit in orbits:
            comp = by_weight[orbit.representative]
            vectors = list(comp.space.vectors)
            if seed_order == "lex":
                vectors.sort(key=weight_key)
            if orbit.length == 2:
                with _step(6, f"conjugate pair {format_weight(orbit.representative)}", verbose):
                    other = orbit.weights[1]
                    for b in vectors:
                        components.append(case_b_extract(rep, WeightVector(comp.weight, b), twist, other))
            else:
                with _step(7, f"self-conjugate {format_weight(orbit.representative)}", verbose):
                    orbit.schur = [schur_scalar_d(WeightVector(comp.weight, b), twist) for b in vectors]
                    d = common_schur_scalar(comp.weight, orbit.schur)
                    components.extend(isotypical_refine(rep, comp, twist, seed_order, verbose, expected_d=d))
            pbar.update(1)

    report = DecompositionReport(
        algebra=rep.algebra.name,
        representation=rep.name,
        space_dim=rep.space_dim,
        components=components,
        orbits=orbits,
        word=list(data.word.letters),
        word_values=list(data.word.letter_values),
    )
    if verify:
        report.checks = verify_decomposition(report, rep, data)
        if verbose:
            status = "passed" if report.checks.passed else "FAILED"
            print(f"✓ Verification {status}")
            for failure in report.checks.failures:
                print(f"  Warning: {failure}")
    return report


def weyl_dimension(weight: Sequence, data: RootData) -> int:
    """Π over positive α of (λ+δ)(H_α)/δ(H_α)."""
    for beta in data.simples:
        k = as_gauss(data.triples[beta.values].pairing(weight))
        if not k.is_real or k.re < 0 or k.re.denominator != 1:
            raise NotDominant(f"{format_weight(weight)} pairs to {k} with the coroot of {format_weight(beta.values)}")
    delta = data.delta()
    shifted = tuple(a + b for a, b in zip(weight, delta))
    result = Fraction(1)
    for alpha in data.positives:
        t = data.triples[alpha.values]
        result *= as_gauss(t.pairing(shifted)).re / as_gauss(t.pairing(delta)).re
    if result.denominator != 1:
        raise ValidationError(f"Weyl dimension of {format_weight(weight)} is not an integer: {result}")
    return int(result)


def verify_decomposition(report: DecompositionReport, rep: Representation,
                         data: Optional[RootData] = None) -> CheckSummary:
    """Re-check a report against the representation; failures are named, not raised."""
    summary = CheckSummary()
    n = rep.space_dim

    for idx, comp in enumerate(report.components, 1):
        invariant = all(comp.basis.contains_vector(op.apply(v)) for op in rep.action for v in comp.basis.vectors)
        summary.record("invariance", invariant, f"component {idx} is not invariant")

    total = sum(c.dim for c in report.components)
    whole = Subspace(n, [v for c in report.components for v in c.basis.vectors])
    summary.record("completeness", total == n and whole.dim == n,
                   f"dims sum to {total}, span has dim {whole.dim}, expected {n}")

    for orbit in report.orbits:
        if orbit.length != 1 or not orbit.schur:
            continue
        weight = orbit.representative
        values = set(orbit.schur) | {c.d for c in report.components
                                     if c.d is not None and tuple(c.weights) == (weight,)}
        summary.record("schur_scalar", len(values) == 1,
                       f"weight {format_weight(weight)} has Schur scalars {sorted(values)}")

    if data is None:
        return summary

    raising = raising_ops(rep, data)
    for idx, comp in enumerate(report.components, 1):
        spanned = descending_span(rep, data, comp.seed_vectors)
        summary.record("spanning", spanned == comp.basis,
                       f"component {idx}: lowering operators span dim {spanned.dim} of {comp.dim}")
        hw_lines = subspace_intersect(joint_nullspace(raising, n), comp.basis)
        expected = _HW_LINES.get(comp.case_tag, 1)
        summary.record("hw_count", hw_lines.dim == expected,
                       f"component {idx}: {hw_lines.dim} highest-weight lines, expected {expected}")
        try:
            predicted = sum(weyl_dimension(w, data) for w in comp.weights)
            if comp.case_tag == CASE_C_NEG:
                predicted *= 2
        except DecompositionError as e:
            summary.record("weyl_dimension", False, f"component {idx}: {e}")
            continue
        summary.record("weyl_dimension", predicted == comp.dim,
                       f"component {idx}: Weyl formula gives {predicted}, found {comp.dim}")
    return summary
