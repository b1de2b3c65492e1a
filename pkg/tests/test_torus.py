import random
from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hkdual.intlin import FinAbGroup, IntMatrix
from hkdual.torus import (
    POSITIVE_DIMENSIONAL,
    PolarizedTorus,
    TorusHom,
    affine_fixed_points,
    dual_polarization,
    isogeny_kernel,
    polarization_isogeny,
    polarization_type,
    standard_dual_polarization,
    standard_polarization,
    symplectic_normal_form,
)
from oracles import random_unimodular


@st.composite
def type_chains(draw, g_max=3):
    g = draw(st.integers(1, g_max))
    d = [draw(st.integers(1, 4))]
    for _ in range(g - 1):
        d.append(d[-1] * draw(st.integers(1, 3)))
    return tuple(d)


@st.composite
def alternating_forms(draw, max_g=3):
    g = draw(st.integers(1, max_g))
    n = 2 * g
    vals = draw(st.lists(st.integers(-6, 6), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    a = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = next(it)
            a[j][i] = -a[i][j]
    return IntMatrix(a)


def test_standard_form_shape_for_type_1_3():
    assert standard_polarization(1, 3).tolist() == [
        [0, 0, 1, 0],
        [0, 0, 0, 3],
        [-1, 0, 0, 0],
        [0, -3, 0, 0],
    ]


def test_polarized_torus_validation():
    with pytest.raises(ValueError):
        PolarizedTorus(IntMatrix([[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        PolarizedTorus(IntMatrix([[0, 0], [0, 0]]))
    with pytest.raises(ValueError):
        PolarizedTorus(IntMatrix([[0, 1, 0]]))
    assert PolarizedTorus.of_type(1, 2).g == 2


@settings(max_examples=80)
@given(type_chains())
def test_type_of_standard_form(d):
    assert polarization_type(PolarizedTorus.of_type(*d)) == d


@settings(max_examples=120)
@given(alternating_forms())
def test_symplectic_normal_form_is_a_congruence(E):
    if E.det() == 0:
        with pytest.raises(ValueError):
            symplectic_normal_form(E)
        return
    B, d = symplectic_normal_form(E)
    assert abs(B.det()) == 1
    assert B.T @ E @ B == standard_polarization(*d)
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    # Pfaffian oracle: det E = (prod d)^2
    p = 1
    for x in d:
        p *= x
    assert p * p == int(sympy.Matrix(E.tolist()).det())


@settings(max_examples=80)
@given(type_chains(g_max=2), st.randoms(use_true_random=False))
def test_type_invariant_under_unimodular_change(d, rnd):
    E = standard_polarization(*d)
    B = IntMatrix(random_unimodular(rnd, E.rows))
    assert polarization_type(PolarizedTorus(B.T @ E @ B)) == d


def test_polarization_isogeny_is_the_form():
    T = PolarizedTorus.of_type(1, 3)
    assert polarization_isogeny(T).F == standard_polarization(1, 3)


@pytest.mark.parametrize("d1,d2", [(1, 1), (1, 2), (1, 3), (2, 2), (1, 6), (2, 4), (3, 3), (2, 6)])
def test_dual_polarization_composes_to_multiplication(d1, d2):
    phi = TorusHom(standard_polarization(d1, d2))
    dual = dual_polarization(phi, d1 * d2)
    assert dual.F == standard_dual_polarization(d1, d2)
    assert (dual @ phi).F == IntMatrix.identity(4, d1 * d2)
    assert (phi @ dual).F == IntMatrix.identity(4, d1 * d2)


def test_dual_polarization_rejects_wrong_degree():
    with pytest.raises(ValueError):
        dual_polarization(TorusHom(standard_polarization(2, 4)), 3)
    with pytest.raises(ValueError):
        dual_polarization(TorusHom(standard_polarization(1, 1, 1)), 1)
    with pytest.raises(ValueError):
        dual_polarization(TorusHom(IntMatrix.zeros(4, 4)), 1)


def _brute_kernel_order(F: IntMatrix) -> int:
    # points y in (1/N) Z^n / Z^n with F y in Z^n, N = |det F|
    N = abs(F.det())
    n = F.rows
    return sum(1 for y in product(range(N), repeat=n) if all(v % N == 0 for v in F @ y))


@pytest.mark.parametrize("d1,d2", [(1, 2), (1, 3), (2, 2)])
def test_kernel_against_torsion_enumeration(d1, d2):
    phi = TorusHom(standard_polarization(d1, d2))
    assert isogeny_kernel(phi).order == _brute_kernel_order(phi.F) == (d1 * d2) ** 2
    dual = dual_polarization(phi, d1 * d2)
    assert isogeny_kernel(dual) == FinAbGroup.from_cyclic([d1, d2]) ** 2


def test_kernel_needs_isogeny():
    with pytest.raises(ValueError):
        isogeny_kernel(TorusHom(IntMatrix([[1, 1], [1, 1]])))


def test_sixteen_two_torsion_points():
    assert affine_fixed_points(IntMatrix.identity(4, -1), [0] * 4) == 16
    assert affine_fixed_points(IntMatrix.identity(2, -1), [Fraction(1, 2), 0]) == 4


def test_translation_fixed_points():
    I = IntMatrix.identity(4)
    assert affine_fixed_points(I, [0] * 4) == POSITIVE_DIMENSIONAL
    assert affine_fixed_points(I, [Fraction(1, 3), 0, 0, 0]) == 0
    # swap of two coordinates composed with a translation along the diagonal
    S = IntMatrix([[0, 1], [1, 0]])
    assert affine_fixed_points(S, [Fraction(1, 2), Fraction(1, 2)]) == POSITIVE_DIMENSIONAL
    # here y2 = y2 + 1/2 would be forced
    assert affine_fixed_points(S, [Fraction(1, 2), 0]) == 0


def test_affine_fixed_points_matches_enumeration_for_finite_order_maps():
    # Lefschetz: when det(M - I) != 0 the count is |det(M - I)| for every x
    rng = random.Random(5)
    M = IntMatrix([[0, -1], [1, -1]])  # order 3
    for _ in range(5):
        x = [Fraction(rng.randint(0, 5), 6), Fraction(rng.randint(0, 5), 6)]
        N = 6 * 3
        brute = 0
        for y in product(range(N), repeat=2):
            img = [Fraction(v, N) for v in M @ y]
            if all(((a + b) - Fraction(c, N)).denominator == 1 for a, b, c in zip(img, x, y)):
                brute += 1
        assert affine_fixed_points(M, x) == brute == 3


def test_affine_fixed_points_dimension_check():
    with pytest.raises(ValueError):
        affine_fixed_points(IntMatrix.identity(2), [0])
