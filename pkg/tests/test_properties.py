"""Randomized property suites over small instances.

Each suite runs at least 100 generated cases (hypothesis profile below).
"""

from collections import Counter
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from torusweights import (
    FreeModuleSpec,
    ModuleTermOrder,
    PolyMatrix,
    RingSpec,
    ScalarMatrix,
    buchberger,
    enumerate_terms,
    is_minimal_map,
    normal_form,
    propagate,
    propagate_forward,
    standard_monomials,
)
from torusweights.linalg import Echelon
from torusweights.rings import Polynomial, monomial_divides

SETTINGS = settings(max_examples=120, deadline=None, derandomize=True)

TOP_UP = ModuleTermOrder("top-up")
POT_UP = ModuleTermOrder("pot-up")


def std_ring(n, order="grevlex"):
    weights = [[int(i == j) for j in range(n)] for i in range(n)]
    return RingSpec(["x%d" % (i + 1) for i in range(n)], [[1]] * n, weights, order)


def bigraded_ring():
    return RingSpec(
        ["x1", "x2", "y1", "y2"],
        [[1, 0], [1, 0], [0, 1], [0, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    )


monomials3 = st.tuples(*(st.integers(0, 4) for _ in range(3)))


# ---------- term order axioms ----------


@SETTINGS
@given(a=monomials3, b=monomials3, c=monomials3, order=st.sampled_from(["grevlex", "lex"]))
def test_term_order_axioms(a, b, c, order):
    ring = std_ring(3, order)
    cmp_ab = ring.compare_monomials(a, b)
    # totality and consistency with equality
    assert cmp_ab in (-1, 0, 1)
    assert (cmp_ab == 0) == (a == b)
    assert cmp_ab == -ring.compare_monomials(b, a)
    # multiplicative
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert ring.compare_monomials(ac, bc) == cmp_ab
    # the unit monomial is minimal
    assert ring.compare_monomials((0, 0, 0), a) <= 0


@SETTINGS
@given(s=monomials3, t=monomials3)
def test_weight_additivity(s, t):
    ring = RingSpec(
        ["a", "b", "c"], [[1]] * 3, [[2, -1], [0, 3], [1, 1]]
    )
    st_prod = tuple(x + y for x, y in zip(s, t))
    assert ring.monomial_weight(st_prod) == tuple(
        x + y for x, y in zip(ring.monomial_weight(s), ring.monomial_weight(t))
    )


# ---------- random homogeneous matrices ----------


@st.composite
def homogeneous_row_matrix(draw, ring=None, max_cols=3, max_degree=3):
    """A one-row matrix of homogeneous polynomials over a small ring."""
    ring = ring or std_ring(2)
    num_cols = draw(st.integers(1, max_cols))
    columns = []
    degrees = []
    for _ in range(num_cols):
        if ring.degree_length == 1:
            degree = (draw(st.integers(1, max_degree)),)
        else:
            degree = (draw(st.integers(0, 2)), draw(st.integers(0, 2)))
            assume(any(degree))
        monos = ring.monomials_of_degree(degree)
        assume(monos)
        coeffs = draw(
            st.lists(st.integers(-3, 3), min_size=len(monos), max_size=len(monos))
        )
        poly = Polynomial(dict(zip(monos, coeffs)))
        assume(not poly.is_zero)
        columns.append(poly)
        degrees.append(degree)
    cod = FreeModuleSpec(ring, [[0] * ring.degree_length])
    dom = FreeModuleSpec(ring, degrees)
    return PolyMatrix(cod, dom, [columns])


@st.composite
def degree_preserving_mixing(draw, matrix):
    """Invertible scalar matrix mixing only equal-degree columns."""
    degrees = matrix.domain.basis_degrees
    n = len(degrees)
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    ops = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-2, 2)), max_size=6))
    for i, j, c in ops:
        if i == j or degrees[i] != degrees[j]:
            continue
        # column j += c * column i
        for k in range(n):
            u[k][j] += c * u[k][i]
    scale = draw(st.lists(st.sampled_from([1, -1, 2]), min_size=n, max_size=n))
    for j, s in enumerate(scale):
        for k in range(n):
            u[k][j] *= s
    perm = draw(st.permutations(range(n)))
    permuted = [[u[k][perm[j]] for j in range(n)] for k in range(n)]
    return ScalarMatrix(permuted), perm


@SETTINGS
@given(data=st.data())
def test_gb_canonical_under_column_mixing(data):
    m = data.draw(homogeneous_row_matrix())
    u, perm = data.draw(degree_preserving_mixing(m))
    new_domain = FreeModuleSpec(
        m.domain.ring, [m.domain.basis_degrees[perm[j]] for j in range(m.num_cols)]
    )
    mixed = m @ u.to_poly_matrix(m.domain, new_domain)
    assert buchberger(m, TOP_UP).elements == buchberger(mixed, TOP_UP).elements


@SETTINGS
@given(data=st.data(), order=st.sampled_from(["grevlex", "lex"]))
def test_gb_matches_independent_implementation(data, order):
    # cross-check the ideal case against sympy's reduced Groebner bases
    sympy = __import__("sympy")
    ring = std_ring(2, order)
    m = data.draw(homogeneous_row_matrix(ring=ring))
    basis = buchberger(m, TOP_UP)
    mine = {frozenset(g.entries[0].terms.items()) for g in basis.elements}

    syms = sympy.symbols("x1 x2")
    exprs = []
    for col in m.columns():
        expr = sympy.Integer(0)
        for mono, coeff in col.entries[0].terms.items():
            term = sympy.Rational(coeff)
            for s, e in zip(syms, mono):
                term *= s ** e
            expr += term
        exprs.append(expr)
    reference = sympy.groebner(exprs, *syms, order=order, field=True)
    theirs = set()
    for poly in reference.polys:
        theirs.add(
            frozenset(
                (mono, Fraction(int(c.numerator), int(c.denominator)))
                for mono, c in poly.terms()
            )
        )
    assert mine == theirs


@SETTINGS
@given(data=st.data())
def test_gb_membership_soundness(data):
    m = data.draw(homogeneous_row_matrix())
    basis = buchberger(m, TOP_UP)
    divisors = list(basis.elements)
    cols = m.columns()
    coeffs = data.draw(
        st.lists(st.integers(-2, 2), min_size=len(cols), max_size=len(cols))
    )
    monos = data.draw(
        st.lists(
            st.tuples(st.integers(0, 2), st.integers(0, 2)),
            min_size=len(cols),
            max_size=len(cols),
        )
    )
    combo = m.codomain.zero_element()
    for col, c, mono in zip(cols, coeffs, monos):
        combo = combo + col.multiply_term(mono, c)
    assert normal_form(combo, divisors, TOP_UP).remainder.is_zero


@SETTINGS
@given(data=st.data())
def test_hilbert_function_of_leading_term_module(data):
    m = data.draw(homogeneous_row_matrix(max_cols=2, max_degree=2))
    ring = m.domain.ring
    basis = buchberger(m, TOP_UP)
    module = m.codomain
    for total in range(0, 4):
        degree = (total,)
        terms = enumerate_terms(module, degree)
        index = {t: i for i, t in enumerate(terms)}
        ech = Echelon()
        for j, col in enumerate(m.columns()):
            gap = total - m.domain.basis_degrees[j][0]
            if gap < 0:
                continue
            for mono in ring.monomials_of_degree((gap,)):
                shifted = col.multiply_term(mono, 1)
                vec = [Fraction(0)] * len(terms)
                for term, coeff in shifted.support():
                    vec[index[term]] = coeff
                ech.add(vec)
        image_dim = ech.rank
        standard = standard_monomials(basis, degree, module)
        assert len(standard) == len(terms) - image_dim


# ---------- minimal monomial matrices and propagation invariants ----------


@st.composite
def monomial_antichain_matrix(draw, ring):
    """Row matrix of monomials, none dividing another (a minimal map)."""
    n = ring.num_vars
    pool = draw(
        st.lists(
            st.tuples(*(st.integers(0, 2) for _ in range(n))),
            min_size=1,
            max_size=5,
            unique=True,
        )
    )
    kept = []
    for mono in pool:
        if any(monomial_divides(other, mono) for other in kept):
            continue
        kept = [other for other in kept if not monomial_divides(mono, other)]
        kept.append(mono)
    assume(kept)
    cod = FreeModuleSpec(ring, [[0] * ring.degree_length])
    dom = FreeModuleSpec(ring, [ring.monomial_degree(m) for m in kept])
    return PolyMatrix(cod, dom, [[Polynomial({m: 1}) for m in kept]])


def assert_support_weights(result, codomain_weights, ring):
    # every support term of every sorted-basis column shares the column weight
    g = result.sorted_matrix
    for j in range(g.num_cols):
        for term, _ in g.column(j).support():
            combined = tuple(
                a + b
                for a, b in zip(ring.monomial_weight(term.monomial), codomain_weights[term.index])
            )
            assert combined == result.weights[j]


@SETTINGS
@given(data=st.data())
def test_propagation_exactness_and_invertibility(data):
    ring = bigraded_ring()
    m = data.draw(monomial_antichain_matrix(ring))
    weights = [(0, 0, 0, 0)]
    result = propagate(m, weights, TOP_UP)
    c = result.change_of_basis
    # G = M C exactly, and C is invertible
    rebased = m @ c.to_poly_matrix(m.domain, result.rebased_module)
    assert rebased == result.sorted_matrix
    assert c @ c.inverse() == ScalarMatrix.identity(m.num_cols)
    assert_support_weights(result, weights, ring)
    # the bigrading is a linear function of the torus weights here
    for v, degree in zip(result.weights, result.rebased_module.basis_degrees):
        assert (v[0] + v[1], v[2] + v[3]) == degree


@SETTINGS
@given(data=st.data())
def test_weight_multiset_agrees_across_position_up_orders(data):
    ring = bigraded_ring()
    m = data.draw(monomial_antichain_matrix(ring))
    weights = [(0, 0, 0, 0)]
    top = propagate(m, weights, TOP_UP)
    pot = propagate(m, weights, POT_UP)
    assert Counter(top.weights) == Counter(pot.weights)


@st.composite
def koszul_first_differential(draw):
    """Linear forms spanning the variables: a mixed regular sequence."""
    n = draw(st.integers(2, 3))
    ring = std_ring(n)
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i, j, c in draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-2, 2)), max_size=5)
    ):
        if i != j:
            for k in range(n):
                u[k][j] += c * u[k][i]
    variables = PolyMatrix(
        FreeModuleSpec(ring, [[0]]),
        FreeModuleSpec(ring, [[1]] * n),
        [[ring.variable(i) for i in range(n)]],
    )
    mixing = ScalarMatrix(u).to_poly_matrix(variables.domain, variables.domain)
    w0 = tuple(draw(st.integers(-2, 2)) for _ in range(n))
    return variables @ mixing, (w0,)


@SETTINGS
@given(data=st.data())
def test_round_trip_on_koszul_first_differential(data):
    d1, w0 = data.draw(koszul_first_differential())
    back = propagate(d1, w0, TOP_UP)
    forward = propagate_forward(back.sorted_matrix, back.weights, TOP_UP)
    assert Counter(forward.weights) == Counter(w0)


def test_support_weights_on_worked_fixtures(koszul, bigraded):
    # non-monomial sorted bases keep weight-consistent supports
    diffs = [koszul.matrices[n] for n in koszul.resolution]
    result = propagate_resolution_fixture(diffs, koszul.weightlists["W0"])
    ring = koszul.ring
    for idx in (1, 2, 3):
        step = result.steps[idx]
        assert_support_weights(step.result, result.per_module[idx - 1], ring)


def propagate_resolution_fixture(diffs, weights):
    from torusweights import propagate_resolution

    return propagate_resolution(diffs, 0, weights, TOP_UP)
