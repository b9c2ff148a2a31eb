"""
Independent cross-check for decomposition reports of small representations.

Does not use the decomposition driver. A report is accepted when
    - the components are invariant and add up to the whole space,
    - the real and imaginary parts of every weight vector of a component
      generate that whole component,
    - the real commutant has the dimension Σ m²·dim D predicted by the
      component types (D = ℝ, ℂ or ℍ).
"""
from collections import Counter
from typing import List

from src.linalg import Subspace, simultaneous_eigenspaces, vec_imag, vec_is_zero, vec_real
from src.rep import Representation, commutant_dimension, invariant_span

DIVISION_ALGEBRA_DIM = {
    "A_selfconj": 1,
    "C_split_positive_d": 1,
    "B_distinct_pair": 2,
    "C_irreducible_negative_d": 4,
}


def weight_vectors(rep: Representation, cartan, space: Subspace) -> List[tuple]:
    """Basis vectors of the joint Cartan eigenspaces inside a component."""
    ops = [rep.act(h) for h in cartan.elements]
    return [v for _, block in simultaneous_eigenspaces(ops, within=space) for v in block.vectors]


def closure_failures(rep: Representation, cartan, report) -> List[str]:
    failures = []
    for idx, comp in enumerate(report.components, 1):
        for w in weight_vectors(rep, cartan, comp.basis):
            for part in (vec_real(w), vec_imag(w)):
                if vec_is_zero(part):
                    continue
                if invariant_span(rep, part) != comp.basis:
                    failures.append(f"component {idx}: a weight vector generates a proper subspace")
    return failures


def predicted_commutant(report) -> int:
    classes = Counter((frozenset(c.weights), DIVISION_ALGEBRA_DIM[c.case_tag]) for c in report.components)
    return sum(m * m * d for (_, d), m in classes.items())


def oracle_failures(rep: Representation, cartan, report) -> List[str]:
    """Everything the oracle disagrees with; empty when the report is accepted."""
    failures = []
    n = rep.space_dim
    for idx, comp in enumerate(report.components, 1):
        if not all(comp.basis.contains_vector(op.apply(v)) for op in rep.action for v in comp.basis.vectors):
            failures.append(f"component {idx} is not invariant")
    whole = Subspace(n, [v for c in report.components for v in c.basis.vectors])
    if sum(report.dims) != n or whole.dim != n:
        failures.append(f"components do not form a direct sum of the {n}-dim space")
    failures.extend(closure_failures(rep, cartan, report))
    expected = predicted_commutant(report)
    found = commutant_dimension(rep)
    if found != expected:
        failures.append(f"commutant has dim {found}, component types predict {expected}")
    return failures
