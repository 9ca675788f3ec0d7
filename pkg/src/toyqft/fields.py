"""Free fields, interaction fields, self-interactions, form classification.

A free field is a sum of AC-operators, specified as (mode, coefficient)
terms so the same spec instantiates on any compatible space.  The
interaction of two fields is their symmetrized product.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import DuplicateTerm, NotAForm
from .ladder import ac_operator, anticommutator, zero


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class FormClassification:
    """Type/form of a vector in the occupation plane of two modes.

    form is the tuple of (i, j) occupation pairs of the contributing
    kets, in basis order; type_t is its length.
    """

    type_t: int
    form: tuple
    parity: Parity


def free_field(space, spec):
    """Sum of AC-operators over a (mode id, alpha) term list."""
    seen = set()
    for mode_id, _ in spec:
        if mode_id in seen:
            raise DuplicateTerm(f"mode {mode_id} listed twice")
        seen.add(mode_id)
    op = zero(space)
    for mode_id, alpha in spec:
        op = op + ac_operator(space, mode_id, alpha)
    return op


def interaction_field(phi, psi):
    """Symmetrized product (phi psi + psi phi) / 2; Hermitian for
    Hermitian inputs and symmetric in its arguments."""
    return 0.5 * anticommutator(phi, psi)


def self_interaction(phi):
    """phi squared; positive semidefinite for Hermitian phi."""
    return phi @ phi


def classify_form(space, vector, p_mode, q_mode, tol=1e-9):
    """Classify a vector by its (p_mode, q_mode) occupation pattern.

    Components with |amplitude| > tol contribute.  All contributing kets
    must agree in every occupation other than the two tracked modes;
    otherwise the vector has no well-defined form and NotAForm is raised.
    """
    if len(vector) != space.dimension:
        raise ValueError("vector dimension does not match space")
    if tol <= 0:
        raise ValueError("tol must be positive")

    pairs = []
    spectator = None
    for idx, amp in enumerate(vector):
        if abs(amp) <= tol:
            continue
        state = space.state_at(idx)
        i = state.count_of(p_mode)
        j = state.count_of(q_mode)
        rest = (
            tuple(f for f in state.fermions if f not in (p_mode, q_mode)),
            tuple(b for b in state.bosons if b[0] not in (p_mode, q_mode)),
        )
        if spectator is None:
            spectator = rest
        elif rest != spectator:
            raise NotAForm(
                "contributing kets differ outside the tracked modes"
            )
        pairs.append((i, j))

    if all((i + j) % 2 == 0 for i, j in pairs):
        parity = Parity.EVEN
    elif all((i + j) % 2 == 1 for i, j in pairs):
        parity = Parity.ODD
    else:
        parity = Parity.MIXED
    return FormClassification(len(pairs), tuple(pairs), parity)
