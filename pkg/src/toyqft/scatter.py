"""Toy scattering: Hamiltonian densities, the time-slice-averaged
Hamiltonian, the scattering operator exp(iH) and transition probabilities.

The density at a lattice point is the interaction of two free fields,
one per particle mass; the Hamiltonian averages the density over the
spatial ball of radius x0 at time x0.
"""

from dataclasses import dataclass

from .errors import EmptyRoster
from .fields import interaction_field
from .fock import ParticleMode, Statistics
from .ladder import OperatorMatrix
from .spacetime import field_at, hyperboloid, space_slice
from .spectral import eigh, unitary_exp


@dataclass(frozen=True)
class ScatterScenario:
    """Parameters for one scattering run."""

    mass1: int
    mass2: int
    r: int
    cutoff_s: int
    x0: int
    statistics1: Statistics = Statistics.BOSON
    statistics2: Statistics = Statistics.BOSON
    in_state: object = None
    out_states: tuple = ()
    coupling: float = 1.0


def build_roster(mass1, mass2, r, statistics1=Statistics.BOSON,
                 statistics2=Statistics.BOSON):
    """One mode per point of each mass hyperboloid (p0 <= r), mass-1
    block first.  Mode ids and momenta are deterministic."""
    modes = []
    for mass, stats, tag in (
        (mass1, statistics1, "a"),
        (mass2, statistics2, "b"),
    ):
        points = hyperboloid(mass, r)
        if not points:
            raise EmptyRoster(f"mass-{mass} hyperboloid empty for r={r}")
        for p in points:
            modes.append(
                ParticleMode(
                    id=len(modes),
                    label=f"{tag}{p.as_tuple()}",
                    statistics=stats,
                    mass=mass,
                    momentum=p.as_tuple(),
                )
            )
    return modes


def _mass_blocks(space, r, m1, m2):
    n1 = len(hyperboloid(m1, r))
    n2 = len(hyperboloid(m2, r))
    ids = [m.id for m in space.modes]
    return ids[:n1], ids[n1 : n1 + n2]


def hamiltonian_density(space, x, r, m1, m2):
    """Interaction of the two mass-block fields at lattice point x."""
    block1, block2 = _mass_blocks(space, r, m1, m2)
    phi = field_at(space, x, r, m1, mode_ids=block1)
    psi = field_at(space, x, r, m2, mode_ids=block2)
    return interaction_field(phi, psi)


def hamiltonian(space, x0, r, m1, m2):
    """Average of the density over the time-x0 slice {|x| <= x0}."""
    points = space_slice(x0)
    total = None
    for x in points:
        tau = hamiltonian_density(space, x, r, m1, m2)
        total = tau if total is None else total + tau
    return (1.0 / len(points)) * total


def scattering_operator(h, coupling=1.0):
    """Unitary exp(i g H) via the spectral representation.

    The dimensionless coupling g (default 1) is an extension knob; the
    bare construction is exp(iH).
    """
    op = coupling * h if coupling != 1.0 else h
    u = unitary_exp(eigh(op))
    return OperatorMatrix(h.space, u)


def amplitude(s, in_state, out_state):
    """Matrix element <out|S|in> between unit basis kets."""
    space = s.space
    return complex(s.mat[space.index_of(out_state), space.index_of(in_state)])


def probability(s, in_state, out_state):
    """Transition probability |<out|S|in>|^2."""
    return abs(amplitude(s, in_state, out_state)) ** 2


def total_momentum(space, state):
    """Summed 4-momentum of a state's occupied modes, or None when some
    occupied mode carries no momentum label."""
    total = (0, 0, 0, 0)
    for mode in space.modes:
        n = state.count_of(mode.id)
        if n == 0:
            continue
        if mode.momentum is None:
            return None
        total = tuple(t + n * c for t, c in zip(total, mode.momentum))
    return total


@dataclass(frozen=True)
class ProbabilityRow:
    out_state: object
    probability: float
    conserves_momentum: bool | None


def probability_table(s, in_state, threshold=0.0, enforce_conservation=False):
    """All out-states with probability above threshold, descending.

    Each row flags whether the out-state's total 4-momentum equals the
    in-state's; with enforce_conservation the non-conserving rows are
    dropped.  The flag is None when momenta are not labeled.
    """
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    space = s.space
    p_in = total_momentum(space, in_state)
    col = s.mat[:, space.index_of(in_state)]
    rows = []
    for idx, amp in enumerate(col):
        prob = abs(amp) ** 2
        if prob <= threshold:
            continue
        out = space.state_at(idx)
        p_out = total_momentum(space, out)
        conserves = None if p_in is None or p_out is None else p_out == p_in
        if enforce_conservation and conserves is False:
            continue
        rows.append(ProbabilityRow(out, prob, conserves))
    rows.sort(key=lambda row: (-row.probability, space.index_of(row.out_state)))
    return rows
