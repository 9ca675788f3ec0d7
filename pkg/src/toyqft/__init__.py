"""Finite-dimensional toy quantum fields on truncated Fock spaces."""

from .fock import (
    FockSpace,
    OccupationState,
    ParticleMode,
    Statistics,
    build_space,
    canonicalize,
    dimension,
    ket,
)
from .ladder import (
    OperatorMatrix,
    ac_operator,
    annihilator,
    anticommutator,
    commutator,
    creator,
    number_of,
)
from .fields import (
    FormClassification,
    Parity,
    classify_form,
    free_field,
    interaction_field,
    self_interaction,
)
from .spectral import SpectralDecomposition, eigh, projectors, reconstruct, unitary_exp
from .spacetime import (
    EnergyMomentum,
    LatticePoint,
    field_at,
    hyperboloid,
    lorentz_product,
    minkowski_sq,
    phase,
    space_volume,
)
from .scatter import (
    ScatterScenario,
    amplitude,
    build_roster,
    hamiltonian,
    hamiltonian_density,
    probability,
    probability_table,
    scattering_operator,
)

__version__ = "0.1.0"
