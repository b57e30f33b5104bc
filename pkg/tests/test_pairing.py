import random
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fixture_path
from tanglepoly.diagram import load_tng, max_label, mirror
from tanglepoly.errors import DomainError
from tanglepoly.generate import random_tangle
from tanglepoly.laurent import ROOT_INDICES, delta_power
from tanglepoly.pairing import (MAX_HALF_BOUNDARY, p_eval, p_poly,
                                pairing_matrix, plat_loop_count)
from tanglepoly.skein import enumerate_basis


def test_plat_loop_counts_for_the_22_basis():
    e0, e1 = enumerate_basis(2, 2).elements
    assert plat_loop_count(2, 2, e0, e0) == 4
    assert plat_loop_count(2, 2, e0, e1) == 3
    assert plat_loop_count(2, 2, e1, e0) == 3
    assert plat_loop_count(2, 2, e1, e1) == 2


def test_plat_loop_count_rejects_partial_matchings():
    with pytest.raises(DomainError):
        plat_loop_count(2, 2, ((1, 2),), ((1, 2), (3, 4)))


def test_pairing_matrix_22_golden():
    A = pairing_matrix(2, 2)
    assert A.entries == (
        (delta_power(4), delta_power(3)),
        (delta_power(3), delta_power(2)),
    )


def test_pairing_matrix_is_symmetric_and_bar_fixed():
    for m, n in ((0, 0), (1, 1), (2, 0), (2, 2), (3, 1), (4, 0), (3, 3)):
        A = pairing_matrix(m, n)
        size = len(A.entries)
        for i in range(size):
            for j in range(size):
                assert A.entries[i][j] == A.entries[j][i], (m, n, i, j)
                assert A.entries[i][j].bar() == A.entries[i][j], (m, n, i, j)


def test_pairing_entries_are_delta_powers_in_range():
    # every closure is a disjoint union of 1..(m+n) loops
    for m, n in ((1, 1), (2, 2), (3, 1), (4, 2)):
        basis = enumerate_basis(m, n)
        for e_i in basis.elements:
            for e_j in basis.elements:
                loops = plat_loop_count(m, n, e_i, e_j)
                assert 1 <= loops <= m + n
        A = pairing_matrix(m, n)
        for row in A.entries:
            for entry in row:
                assert any(entry == delta_power(c) for c in range(1, m + n + 1))


def test_pairing_size_guard():
    with pytest.raises(DomainError):
        pairing_matrix(MAX_HALF_BOUNDARY * 2 + 2, 0)


GOLDEN_P = {
    "identity_11": delta_power(1),
    "circle": delta_power(2),
    "identity_22": delta_power(2),
    "one_crossing": delta_power(2),
    "sigma": delta_power(2),
    "sigma_cubed": delta_power(2),
    "two_circles": delta_power(4),
    "three_strand": delta_power(3),
}


def test_p_poly_goldens():
    for name, expected in GOLDEN_P.items():
        assert p_poly(load_tng(fixture_path(f"{name}.tng"))) == expected, name


def test_p_poly_trefoil_golden():
    p = p_poly(load_tng(fixture_path("trefoil.tng")))
    assert p.terms == {16: -1, 12: -1, 4: 2, 0: 4, -4: 2, -12: -1, -16: -1}
    for k in ROOT_INDICES:
        assert abs(p.eval_root(k) - 9.0) < 1e-9


def test_triple_twist_matches_identity_exactly():
    a = p_poly(load_tng(fixture_path("sigma_cubed.tng")))
    b = p_poly(load_tng(fixture_path("identity_22.tng")))
    assert a == b


def test_trefoil_and_unlink_differ_as_polynomials_not_at_roots():
    a = p_poly(load_tng(fixture_path("trefoil.tng")))
    b = p_poly(load_tng(fixture_path("two_circles.tng")))
    assert a != b
    for k in ROOT_INDICES:
        assert abs(a.eval_root(k) - b.eval_root(k)) < 1e-9


def test_p_eval_validates_the_root_index():
    d = load_tng(fixture_path("circle.tng"))
    assert abs(p_eval(d, 1) - 3.0) < 1e-12
    with pytest.raises(DomainError):
        p_eval(d, 2)


def test_p_poly_rejects_graph_diagrams():
    with pytest.raises(DomainError):
        p_poly(load_tng(fixture_path("theta.tng")))


def test_extra_circle_multiplies_by_delta_squared():
    for name in ("identity_22", "sigma", "trefoil"):
        d = load_tng(fixture_path(f"{name}.tng"))
        with_circle = replace(d, circles=d.circles + (max_label(d) + 1,))
        assert p_poly(with_circle) == p_poly(d) * delta_power(2), name


def test_p_poly_is_mirror_invariant_on_fixtures():
    for name in ("sigma", "sigma_cubed", "trefoil", "one_crossing"):
        d = load_tng(fixture_path(f"{name}.tng"))
        assert p_poly(mirror(d)) == p_poly(d), name


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_p_poly_is_palindromic_and_real_at_roots(seed):
    d = random_tangle(random.Random(seed), max_crossings=4)
    p = p_poly(d)
    assert p.bar() == p
    for k in ROOT_INDICES:
        assert abs(p.eval_root(k).imag) < 1e-9
