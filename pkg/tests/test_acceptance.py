"""
End-to-end decompositions with known answers, cross-checked by the oracle.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import settings
from oracle import oracle_failures
from src.decomp import CASE_A, decompose
from src.exactnum import as_gauss
from src.liealg import LieAlgebra, RootData, verify_semisimple
from src.linalg import Mat, Subspace, unit_vector, vec_sub, vector
from src.rep import highest_weights, invariant_span
from src.repzoo import (MonomialBasis, build_algebra, build_rep, direct_sum_rep, parse_cartan,
                        poly_rep, twisted_double)


def poly_vector(n_vars: int, degree: int, terms: dict):
    """Coordinates of Σ c·x^e in the monomial basis."""
    index = MonomialBasis(n_vars, degree).index()
    v = [0] * len(index)
    for exps, c in terms.items():
        v[index[exps]] += c
    return vector(v)


def poly_mul(*factors: dict) -> dict:
    """Product of polynomials given as {exponents: coefficient}."""
    result = factors[0]
    for other in factors[1:]:
        out = {}
        for e1, c1 in result.items():
            for e2, c2 in other.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        result = {e: c for e, c in out.items() if c}
    return result


def linear(n_vars: int, coeffs: dict) -> dict:
    """Σ c·x_k for {k: c}, variables numbered from 0."""
    return {tuple(int(j == k) for j in range(n_vars)): c for k, c in coeffs.items()}


def quadratic_form(signs) -> dict:
    n = len(signs)
    return {tuple(2 * int(j == k) for j in range(n)): s for k, s in enumerate(signs)}


def closures(rep, vectors):
    return {invariant_span(rep, v) for v in vectors}


def run(name, cartan, kind):
    g = build_algebra(name)
    c = parse_cartan(g, cartan)
    rep = build_rep(g, kind) if isinstance(kind, str) else kind(g)
    return g, c, rep, decompose(rep, c, verify=True)


def check_generators(name, cartan, n_vars, degree, dims, generators):
    """Components are exactly the closures of the given polynomials."""
    g, c, rep, report = run(name, cartan, f"poly:{degree}")
    label = f"{name} degree {degree}"
    assert sorted(report.dims) == dims, label
    expected = closures(rep, [poly_vector(n_vars, degree, p) for p in generators])
    assert {comp.basis for comp in report.components} == expected, label
    assert report.checks.passed, label


def test_so3_left_multiplication():
    """Left multiplication on 3×3 matrices: the three column spaces, ω = diag(1, −1, −1)."""
    g, c, rep, report = run("so(3)", "e1", "end-left")
    assert report.dims == [3, 3, 3]
    assert {comp.case_tag for comp in report.components} == {CASE_A}
    assert {comp.basis for comp in report.components} == closures(rep, [unit_vector(9, j) for j in range(3)])
    data = RootData.build(g, c)
    assert data.word.omega_defining == Mat([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert report.checks.passed


def test_so3_polynomials():
    """Harmonic pieces of polynomials on ℝ³."""
    x, y = linear(3, {0: 1}), linear(3, {1: 1})
    r2 = quadratic_form([1, 1, 1])
    test_cases = [
        (2, [1, 5], [r2, poly_mul(x, y)]),
        (3, [3, 7], [poly_mul(x, r2), {(3, 0, 0): 1, (1, 2, 0): -3}]),
        (4, [1, 5, 9], [
            {(4, 0, 0): 1, (2, 2, 0): -6, (0, 4, 0): 1},
            {(0, 2, 2): 1, (2, 0, 2): -1, (0, 4, 0): 1, (4, 0, 0): -1},
            poly_mul(r2, r2),
        ]),
    ]
    for degree, dims, generators in test_cases:
        check_generators("so(3)", "e1", 3, degree, dims, generators)


def test_so4_polynomials():
    """Compact so(4) on polynomials of degree 2, 3 and 4."""
    g = build_algebra("so(4)")
    data = RootData.build(g, parse_cartan(g, "e1,e6"))
    assert len(data.word) == 2
    w = linear(4, {3: 1})
    r2 = quadratic_form([1, 1, 1, 1])
    w2_minus_y2 = {(0, 0, 0, 2): 1, (0, 2, 0, 0): -1}
    test_cases = [
        (2, [1, 9], [r2, w2_minus_y2]),
        (3, [4, 16], [{(0, 0, 0, 3): 1, (0, 2, 0, 1): -3}, poly_mul(w, r2)]),
        (4, [1, 9, 25], [
            {(0, 0, 0, 4): 1, (0, 2, 0, 2): -6, (0, 4, 0, 0): 1},
            poly_mul(w2_minus_y2, r2),
            poly_mul(r2, r2),
        ]),
    ]
    for degree, dims, generators in test_cases:
        check_generators("so(4)", "e1,e6", 4, degree, dims, generators)
        for comp in highest_weights(poly_rep(g, degree), data):
            assert data.theta(comp.weight) == comp.weight


def test_so4_invariant_eigenvalue_sequences():
    """On the joint invariants of degree d, I₁ = e2 − e5 and I₂ = e2 + e5 act by ±d·i, ±(d−2)·i, …"""
    g = build_algebra("so(4)")
    data = RootData.build(g, parse_cartan(g, "0,1,0,0,-1,0;0,1,0,0,1,0"))
    for degree in (2, 3, 4):
        components = highest_weights(poly_rep(g, degree), data)
        assert all(comp.multiplicity == 1 for comp in components), degree
        expected = list(range(degree % 2, degree + 1, 2))
        for k in range(2):
            values = [as_gauss(comp.weight[k]) for comp in components]
            assert all(v.re == 0 for v in values), degree
            assert sorted(abs(v.im) for v in values) == expected, degree
            # one sign along the whole sequence
            assert len({v.im > 0 for v in values if v.im}) == 1, degree


def test_so4_adjoint():
    """so(4) = so(3) ⊕ so(3): two real-type summands, each a semisimple subalgebra."""
    g, c, rep, report = run("so(4)", "e1,e6", "adjoint")
    assert report.dims == [3, 3]
    for comp in report.components:
        assert comp.case_tag == CASE_A
        assert comp.d == 1
        h = LieAlgebra([g.element(v) for v in comp.basis.vectors])
        assert verify_semisimple(h)
    assert report.checks.passed


def test_so13():
    """so(1,3): the adjoint is of complex type; polynomials split along (x+y)^k·q^j."""
    g, c, rep, report = run("so(1,3)", "e1,e6", "adjoint")
    assert report.dims == [6]
    assert len(report.components[0].weights) == 2

    e = linear(4, {0: 1, 1: 1})
    q = quadratic_form([1, -1, -1, -1])
    test_cases = [
        (2, [1, 9], [poly_mul(e, e), q]),
        (3, [4, 16], [poly_mul(e, e, e), poly_mul(e, q)]),
        (4, [1, 9, 25], [poly_mul(e, e, e, e), poly_mul(q, q), poly_mul(e, e, q)]),
    ]
    for degree, dims, generators in test_cases:
        check_generators("so(1,3)", "e1,e6", 4, degree, dims, generators)


def test_so22_split_cartan():
    """so(2,2) with a split Cartan: empty word; polynomials split along (x+z)^k·q^j."""
    g, c, rep, report = run("so(2,2)", "e2,e5", "poly:3")
    assert report.word == []
    e = linear(4, {0: 1, 2: 1})
    q = quadratic_form([1, 1, -1, -1])
    test_cases = [
        (2, [1, 9], [poly_mul(e, e), q]),
        (3, [4, 16], [poly_mul(e, e, e), poly_mul(e, q)]),
        (4, [1, 9, 25], [poly_mul(e, e, e, e), poly_mul(q, q), poly_mul(e, e, q)]),
    ]
    for degree, dims, generators in test_cases:
        check_generators("so(2,2)", "e2,e5", 4, degree, dims, generators)


def test_real_type_multiplicity_two():
    """Quadratics ⊕ quadratics on ℝ³: four real-type components, commutant of dim 8."""
    g = build_algebra("so(3)")
    c = parse_cartan(g, "e1")
    rep = direct_sum_rep(poly_rep(g, 2), poly_rep(g, 2))
    report = decompose(rep, c, verify=True)
    assert sorted(report.dims) == [1, 1, 5, 5]
    assert {comp.case_tag for comp in report.components} == {CASE_A}
    assert [o.multiplicity for o in report.orbits] == [2, 2]
    assert report.checks.passed
    assert oracle_failures(rep, c, report) == []


def test_sl_n_highest_weights():
    """sl(n): x1^δ on polynomials; x1⊗x1 and x1⊗x2 − x2⊗x1 on V ⊗ V."""
    for n in (2, 3, 4):
        g = build_algebra(f"sl({n})")
        data = RootData.build(g, parse_cartan(g, None))
        for degree in range(1, 5):
            rep = poly_rep(g, degree)
            components = highest_weights(rep, data)
            assert [comp.space for comp in components] == [Subspace(rep.space_dim, [unit_vector(rep.space_dim, 0)])]
        rep = build_rep(g, "tensor2")
        spaces = {comp.space for comp in highest_weights(rep, data)}
        n2 = n * n
        wedge = vec_sub(unit_vector(n2, 1), unit_vector(n2, n))
        assert spaces == {Subspace(n2, [unit_vector(n2, 0)]), Subspace(n2, [wedge])}, n


def test_oracle_agrees_on_small_representations():
    """Every small built-in case passes both the internal checks and the oracle."""
    cases = [
        ("so(3)", "e1", "defining"),
        ("so(3)", "e1", "poly:2"),
        ("so(3)", "e1", "poly:3"),
        ("so(3)", "e1", "end-left"),
        ("so(3)", "e1", twisted_double_of_defining),
        ("so(4)", "e1,e6", "defining"),
        ("so(4)", "e1,e6", "adjoint"),
        ("so(4)", "e1,e6", "poly:2"),
        ("so(1,3)", "e1,e6", "defining"),
        ("so(1,3)", "e1,e6", "adjoint"),
        ("so(1,3)", "e1,e6", "poly:2"),
        ("so(2,2)", "e2,e5", "defining"),
        ("so(2,2)", "e2,e5", "adjoint"),
        ("sl(2)", None, "poly:3"),
        ("sl(3)", None, "adjoint"),
        ("sl(3)", None, "tensor2"),
        ("su(2)", None, "realified"),
    ]
    checked = 0
    for name, cartan, kind in cases:
        g, c, rep, report = run(name, cartan, kind)
        if rep.space_dim > settings.DECOMP_ORACLE_MAX_DIM:
            continue
        label = f"{name} {kind}"
        assert report.checks.passed, label
        assert oracle_failures(rep, c, report) == [], label
        checked += 1
    assert checked > 0


def twisted_double_of_defining(g):
    return twisted_double(build_rep(g, "defining"))


if __name__ == "__main__":
    # Run tests
    print("Running acceptance tests...")

    tests = [
        test_so3_left_multiplication,
        test_so3_polynomials,
        test_so4_polynomials,
        test_so4_invariant_eigenvalue_sequences,
        test_so4_adjoint,
        test_so13,
        test_so22_split_cartan,
        test_real_type_multiplicity_two,
        test_sl_n_highest_weights,
        test_oracle_agrees_on_small_representations,
    ]
    for test in tests:
        try:
            test()
            print(f"✓ {test.__name__} passed")
        except Exception as e:
            print(f"✗ {test.__name__} failed: {e}")
