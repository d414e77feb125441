import pytest

import hamsuper as hs
from hamsuper.superspace import MIXED
from hamsuper.wittham import MixedParityError, VectorField


def D(space, i):
    return VectorField(space, {i: space.one()})


def field(space, **comps):
    return VectorField(space, {i: f for i, f in comps.items()})


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------

def test_pairing_is_an_involution(desk_geom):
    for i in range(1, desk_geom.space.s + 1):
        assert desk_geom.prime(desk_geom.prime(i)) == i


def test_sigma_products(desk_geom):
    for i in range(1, desk_geom.space.s + 1):
        prod = desk_geom.sigma(i) * desk_geom.sigma(desk_geom.prime(i))
        assert prod == (-1 if i <= desk_geom.space.m else 1)


def test_tau(desk_geom):
    assert [desk_geom.tau(i) for i in range(1, 5)] == [0, 0, 1, 1]


def test_desk_pairing_values(desk_geom):
    assert [desk_geom.prime(i) for i in range(1, 5)] == [2, 1, 4, 3]


# ---------------------------------------------------------------------------
# vector fields and the bracket
# ---------------------------------------------------------------------------

def test_apply_field(desk_space):
    sp = desk_space
    X = field(sp, **{2: sp.x(2)})
    assert X.apply(sp.x(2)) == sp.x(2)
    assert not X.apply(sp.one())


def test_apply_field_term_by_term(desk_space):
    # oracle: (2 x_1 D_1 + x_2 D_2)(x_1) = 2 x_1 * 1 + x_2 * 0
    sp = desk_space
    X = VectorField(sp, {1: 2 * sp.x(1), 2: sp.x(2)})
    assert X.apply(sp.x(1)) == 2 * sp.x(1)


def test_bracket_constant_with_linear(desk_space):
    sp = desk_space
    X = hs.witt_bracket(D(sp, 1), VectorField(sp, {2: sp.x(1)}))
    assert X == D(sp, 2)


def test_bracket_odd_coefficient_fields(desk_space):
    # hand expansion: both fields have parity d(x_3)+tau(4) = 0, so
    # [x_3 D_4, x_4 D_3] = x_3 D_4(x_4) D_3 - x_4 D_3(x_3) D_4
    #                    = x_3 D_3 - x_4 D_4 = x_3 D_3 + 2 x_4 D_4 over GF(3)
    sp = desk_space
    X = VectorField(sp, {4: sp.x(3)})
    Y = VectorField(sp, {3: sp.x(4)})
    assert X.parity() == 0 and Y.parity() == 0
    got = hs.witt_bracket(X, Y)
    assert got == VectorField(sp, {3: sp.x(3), 4: 2 * sp.x(4)})


def test_constant_fields_commute(desk_space):
    sp = desk_space
    for i in range(1, sp.m + 1):
        for j in range(1, sp.m + 1):
            assert not hs.witt_bracket(D(sp, i), D(sp, j))


def test_bracket_rejects_mixed_parity(desk_space):
    sp = desk_space
    X = VectorField(sp, {1: sp.one() + sp.x(3)})
    assert X.parity() == MIXED
    with pytest.raises(MixedParityError):
        hs.witt_bracket(X, D(sp, 1))


def test_field_parity(desk_space):
    sp = desk_space
    assert D(sp, 1).parity() == 0
    assert D(sp, 3).parity() == 1
    assert VectorField(sp, {4: sp.x(3)}).parity() == 0
    assert VectorField(sp, {}).parity() == 0


# ---------------------------------------------------------------------------
# the Hamiltonian operator
# ---------------------------------------------------------------------------

def test_operator_kills_constants(desk_geom):
    sp = desk_geom.space
    assert not hs.hamiltonian_field(desk_geom, sp.one())


def test_operator_on_quadratic_even(desk_geom):
    # components: sigma(2) D_2(x_1 x_2) in direction 1, sigma(1) D_1(..) in 2
    sp = desk_geom.space
    got = hs.hamiltonian_field(desk_geom, sp.x(1) * sp.x(2))
    assert got == VectorField(sp, {1: 2 * sp.x(1), 2: sp.x(2)})


def test_operator_on_odd_generator(desk_geom):
    # direction 4 picks up sigma(3) (-1)^{tau(3)} D_3(x_3) = -1
    sp = desk_geom.space
    assert hs.hamiltonian_field(desk_geom, sp.x(3)) == VectorField(sp, {4: 2 * sp.one()})


def test_operator_image_of_even_generator(desk_geom):
    sp = desk_geom.space
    assert hs.hamiltonian_field(desk_geom, sp.x(1)) == D(sp, 2)


def test_operator_preserves_parity(desk_geom):
    sp = desk_geom.space
    for mono in sp.basis:
        X = hs.hamiltonian_field(desk_geom, sp.poly({mono: 1}))
        if X:
            assert X.parity() == mono.parity


def test_operator_is_a_bracket_homomorphism(desk_geom):
    # [X_f, X_g] = X_{X_f(g)} for all generator pairs
    sp = desk_geom.space
    gens = [mono for mono in sp.basis if mono.degree >= 1]
    images = {mono: hs.hamiltonian_field(desk_geom, sp.poly({mono: 1})) for mono in gens}
    for a in gens:
        for b in gens:
            lhs = hs.witt_bracket(images[a], images[b])
            rhs = hs.hamiltonian_field(desk_geom, images[a].apply(sp.poly({b: 1})))
            assert lhs == rhs


# ---------------------------------------------------------------------------
# structure algebras
# ---------------------------------------------------------------------------

def test_witt_algebra_desk(desk_witt, desk_space):
    assert desk_witt.dim == 144
    assert min(desk_witt.zdegrees) == -1
    assert max(desk_witt.zdegrees) == desk_space.height - 1


def test_witt_algebra_jacobi_exhaustive(desk_witt):
    assert hs.jacobi_check(desk_witt).ok


def test_hbar_dimension(desk_hbar):
    assert desk_hbar.dim == 35


def test_hbar_bracket_consistency(desk_hbar, desk_geom):
    # table entry for [X_{x_1}, X_{x_2}] equals the image of X_{x_1}(x_2)
    sp = desk_geom.space
    idx = {m: i for i, m in enumerate(desk_hbar.monomials)}
    a = idx[sp.monomial((1, 0), ())]
    b = idx[sp.monomial((0, 1), ())]
    g = hs.hamiltonian_field(desk_geom, sp.x(1)).apply(sp.x(2))
    want = {idx[mono]: c for mono, c in g.terms.items() if mono.degree >= 1}
    assert desk_hbar.bracket(a, b) == want


def test_h_dimension_and_grading(desk_h, desk_space):
    assert desk_h.dim == 34
    assert desk_space.height == 6
    assert min(desk_h.zdegrees) == -1
    assert max(desk_h.zdegrees) == desk_space.height - 3


def test_h_contains_all_degree_one_images(desk_h):
    labels = set(desk_h.labels)
    for i, lab in ((1, "DH[x^(1,0)]"), (2, "DH[x^(0,1)]"), (3, "DH[x<3>]"), (4, "DH[x<4>]")):
        assert lab in labels


def test_h_jacobi(desk_h):
    assert hs.jacobi_check(desk_h).ok


def test_grading_is_additive(desk_h):
    for (i, j), row in desk_h.constants.items():
        for k in row:
            assert desk_h.zdegrees[k] == desk_h.zdegrees[i] + desk_h.zdegrees[j]


def test_degree_dims_sum(desk_h):
    by_degree = {}
    for z in desk_h.zdegrees:
        by_degree[z] = by_degree.get(z, 0) + 1
    assert sum(by_degree.values()) == desk_h.dim
    assert by_degree == {-1: 4, 0: 8, 1: 10, 2: 8, 3: 4}
