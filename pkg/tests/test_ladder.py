import numpy as np
import pytest

from toyqft import (
    OccupationState,
    ac_operator,
    annihilator,
    anticommutator,
    commutator,
    creator,
    ket,
    number_of,
)
from toyqft.errors import SpaceMismatch, UnknownMode
from toyqft.ladder import identity, number_operator

from conftest import generic_coeffs, j_space, k_space, l_space

MAXABS = lambda op: np.max(np.abs(op.mat))


def test_fermion_annihilation_action():
    space = k_space(2)
    a1 = annihilator(space, 0)
    # a(p1)|p1 p2> = |p2>
    col = a1.mat[:, ket(space, 0, 1)]
    expected = np.zeros(4)
    expected[ket(space, 1)] = 1.0
    assert np.allclose(col, expected)


def test_fermion_annihilation_sign():
    space = k_space(2)
    a2 = annihilator(space, 1)
    # p2 sits behind p1 in |p1 p2>, so removing it costs a sign
    assert a2.mat[ket(space, 0), ket(space, 0, 1)] == -1


def test_annihilator_kills_vacuum():
    for space in (k_space(2), j_space(2, 2)):
        for mode in range(2):
            assert np.allclose(annihilator(space, mode).mat[:, 0], 0)


def test_boson_sqrt_factor():
    space = j_space(2, 3)
    a1 = annihilator(space, 0)
    two = space.index_of(OccupationState(bosons=((0, 2),)))
    one = space.index_of(OccupationState(bosons=((0, 1),)))
    assert np.isclose(a1.mat[one, two], np.sqrt(2))


def test_creator_on_vacuum():
    space = k_space(3)
    for mode in range(3):
        col = creator(space, mode).mat[:, 0]
        assert col[ket(space, mode)] == 1
        assert np.count_nonzero(col) == 1


def test_boson_creator_boundary_zero():
    space = j_space(2, 2)
    c1 = creator(space, 0)
    for idx, state in enumerate(space.basis):
        if state.total == space.cutoff_s:
            assert np.allclose(c1.mat[:, idx], 0)


def test_fermion_double_occupation_zero():
    space = k_space(3)
    c1 = creator(space, 0)
    assert np.allclose(c1.mat[:, ket(space, 0)], 0)


@pytest.mark.parametrize(
    "space_builder",
    [lambda: k_space(4), lambda: j_space(2, 3), lambda: l_space(2, 2, 3)],
)
def test_creator_is_adjoint_of_annihilator(space_builder):
    space = space_builder()
    for mode in range(len(space.modes)):
        c = creator(space, mode)
        a = annihilator(space, mode)
        assert np.array_equal(c.mat, a.adjoint().mat)


@pytest.mark.parametrize("s", range(1, 7))
def test_fermion_car(s):
    space = k_space(s)
    eye = identity(space)
    ann = [annihilator(space, i) for i in range(s)]
    cre = [creator(space, i) for i in range(s)]
    for i in range(s):
        for j in range(s):
            assert MAXABS(anticommutator(ann[i], ann[j])) <= 1e-12
            assert MAXABS(anticommutator(cre[i], cre[j])) <= 1e-12
            delta = eye if i == j else 0 * eye
            assert MAXABS(anticommutator(ann[i], cre[j]) - delta) <= 1e-12


def test_boson_commutators_vanish_everywhere():
    space = j_space(3, 3)
    for i in range(3):
        for j in range(3):
            assert MAXABS(commutator(annihilator(space, i), annihilator(space, j))) <= 1e-12
            assert MAXABS(commutator(creator(space, i), creator(space, j))) <= 1e-12


def test_boson_ccr_off_boundary():
    space = j_space(2, 3)
    eye = identity(space)
    interior = [
        idx for idx, state in enumerate(space.basis)
        if state.total < space.cutoff_s
    ]
    for i in range(2):
        for j in range(2):
            delta = eye if i == j else 0 * eye
            diff = (
                commutator(annihilator(space, i), creator(space, j)) - delta
            ).mat
            assert np.max(np.abs(diff[:, interior])) <= 1e-12


def test_boson_boundary_rule_diagonal():
    # [a_j, a_j*] psi = -N_j(psi) psi on total-count-s states
    space = j_space(2, 3)
    for j in range(2):
        comm = commutator(annihilator(space, j), creator(space, j)).mat
        for idx, state in enumerate(space.basis):
            if state.total != space.cutoff_s:
                continue
            expected = np.zeros(space.dimension)
            expected[idx] = -state.count_of(j)
            assert np.max(np.abs(comm[:, idx] - expected)) <= 1e-12


def test_space_mismatch_rejected():
    a = annihilator(k_space(2), 0)
    b = annihilator(k_space(2), 0)
    with pytest.raises(SpaceMismatch):
        _ = a + b  # distinct space objects, same shape


def test_unknown_mode():
    with pytest.raises(UnknownMode):
        annihilator(k_space(2), 5)


def test_ac_operator_zero_alpha():
    space = k_space(2)
    assert MAXABS(ac_operator(space, 0, 0)) == 0


def test_ac_operator_hermitian_and_square(rng):
    space = k_space(3)
    (alpha,) = generic_coeffs(rng, 1)
    eta = ac_operator(space, 0, alpha)
    assert np.array_equal(eta.mat, eta.mat.conj().T)
    # eta(p1)^2 = |alpha|^2 I on K^s
    assert MAXABS(eta @ eta - abs(alpha) ** 2 * identity(space)) <= 1e-12


def test_ac_anticommutator_relation(rng):
    space = k_space(3)
    alphas = generic_coeffs(rng, 3)
    etas = [ac_operator(space, i, a) for i, a in enumerate(alphas)]
    eye = identity(space)
    for i in range(3):
        for j in range(3):
            expected = (2 * abs(alphas[i]) ** 2 * eye) if i == j else 0 * eye
            assert MAXABS(anticommutator(etas[i], etas[j]) - expected) <= 1e-12


def test_number_of():
    state = OccupationState(bosons=((0, 2), (1, 1)))
    assert number_of(0, state) == 2
    assert number_of(1, state) == 1
    assert number_of(5, state) == 0
    assert number_of(0, OccupationState()) == 0
    assert number_of(0, OccupationState(fermions=(0, 1))) == 1


def test_number_operator_diagonal():
    space = j_space(2, 2)
    n0 = number_operator(space, 0)
    for idx, state in enumerate(space.basis):
        assert n0.mat[idx, idx] == state.count_of(0)


def test_operator_json_round_trip():
    space = k_space(2)
    entries = ac_operator(space, 0, 1 + 2j).to_json()
    rebuilt = np.array([[complex(re, im) for re, im in row] for row in entries])
    assert np.array_equal(rebuilt, ac_operator(space, 0, 1 + 2j).mat)
