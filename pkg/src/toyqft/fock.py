"""Truncated Fock spaces with canonically ordered occupation bases.

A space is parametrized by a roster of particle modes (each fermion or
boson) and a cutoff s on the total particle number.  Pure-fermion,
pure-boson and mixed spaces are all instances of the same construction.
"""

from dataclasses import dataclass, field
from enum import Enum

from math import comb

from .errors import InvalidRoster, NotInBasis, UnknownMode


class Statistics(Enum):
    FERMION = "fermion"
    BOSON = "boson"


@dataclass(frozen=True)
class ParticleMode:
    """One particle species: identity, statistics, mass, optional 4-momentum.

    Mass is in units of the lattice energy quantum.  If a momentum
    (p0, p1, p2, p3) is attached it must lie on the forward mass shell:
    p0 >= 0 and p0^2 - |p|^2 = mass^2.
    """

    id: int
    label: str
    statistics: Statistics
    mass: int = 0
    momentum: tuple | None = None

    def __post_init__(self):
        if self.mass < 0:
            raise ValueError(f"mode {self.label}: negative mass")
        if self.momentum is not None:
            p0, p1, p2, p3 = self.momentum
            if p0 < 0:
                raise ValueError(f"mode {self.label}: negative energy")
            if p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3 != self.mass**2:
                raise ValueError(
                    f"mode {self.label}: momentum {self.momentum} off the "
                    f"mass-{self.mass} shell"
                )


@dataclass(frozen=True)
class OccupationState:
    """One basis ket: an occupied-fermion set plus boson occupation counts.

    fermions is a strictly increasing tuple of fermion mode ids; bosons is
    a tuple of (mode id, count) pairs sorted by mode id with counts >= 1.
    """

    fermions: tuple = ()
    bosons: tuple = ()

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.fermions, self.fermions[1:])):
            raise ValueError("fermion ids must be strictly increasing")
        if any(c < 1 for _, c in self.bosons):
            raise ValueError("boson counts must be positive")
        ids = [m for m, _ in self.bosons]
        if any(a >= b for a, b in zip(ids, ids[1:])):
            raise ValueError("boson ids must be strictly increasing")

    @property
    def total(self):
        """Total particle count."""
        return len(self.fermions) + sum(c for _, c in self.bosons)

    def count_of(self, mode_id):
        """Occupation number of one mode (0 or 1 for fermions)."""
        if mode_id in self.fermions:
            return 1
        for m, c in self.bosons:
            if m == mode_id:
                return c
        return 0

    def encoding(self):
        """Canonical flat encoding: fermion ids, then boson ids with
        multiplicity.  Used for the basis sort order."""
        expanded = []
        for m, c in self.bosons:
            expanded.extend([m] * c)
        return self.fermions + tuple(expanded)

    def to_json(self):
        return {
            "fermions": list(self.fermions),
            "bosons": [[m, c] for m, c in self.bosons],
        }


VACUUM = OccupationState()


@dataclass(frozen=True)
class FockSpace:
    """Enumerated basis of all occupation states with total count <= cutoff_s.

    Basis order: total particle count ascending, then lexicographic on the
    canonical encoding (fermion block first).  Index 0 is the vacuum.
    Immutable after construction.
    """

    modes: tuple
    cutoff_s: int
    basis: tuple
    index: dict = field(compare=False, repr=False)

    @property
    def dimension(self):
        return len(self.basis)

    def mode(self, mode_id):
        if 0 <= mode_id < len(self.modes):
            return self.modes[mode_id]
        raise UnknownMode(f"mode id {mode_id} not in roster")

    def is_fermion(self, mode_id):
        return self.mode(mode_id).statistics is Statistics.FERMION

    def index_of(self, state):
        try:
            return self.index[state]
        except KeyError:
            raise NotInBasis(f"state {state} not in basis") from None

    def state_at(self, ordinal):
        if 0 <= ordinal < len(self.basis):
            return self.basis[ordinal]
        raise NotInBasis(f"ordinal {ordinal} out of range")

    def basis_to_json(self):
        """Ordered basis dump: fermion ids and boson counts per ket."""
        return [state.to_json() for state in self.basis]


def build_space(modes, cutoff_s):
    """Enumerate the truncated Fock space over the given mode roster.

    Mode ids must be dense 0..k-1.  Every occupation state with total
    particle count <= cutoff_s is included, deterministically ordered.
    """
    modes = tuple(modes)
    if cutoff_s < 1:
        raise ValueError("cutoff_s must be >= 1")
    ids = [m.id for m in modes]
    if sorted(ids) != list(range(len(modes))):
        raise InvalidRoster(f"mode ids {ids} are not dense 0..{len(modes) - 1}")
    modes = tuple(sorted(modes, key=lambda m: m.id))

    states = []

    def fill(k, budget, fermions, bosons):
        if k == len(modes):
            states.append(OccupationState(tuple(fermions), tuple(bosons)))
            return
        mode = modes[k]
        fill(k + 1, budget, fermions, bosons)
        cap = min(1, budget) if mode.statistics is Statistics.FERMION else budget
        for n in range(1, cap + 1):
            if mode.statistics is Statistics.FERMION:
                fill(k + 1, budget - n, fermions + [mode.id], bosons)
            else:
                fill(k + 1, budget - n, fermions, bosons + [(mode.id, n)])

    fill(0, cutoff_s, [], [])
    states.sort(key=lambda st: (st.total, st.encoding()))
    index = {st: i for i, st in enumerate(states)}
    return FockSpace(modes, cutoff_s, tuple(states), index)


def dimension(space):
    """Basis size of the space."""
    return space.dimension


def fermion_dimension(s):
    """Closed form for a pure-fermion space with n = s modes."""
    return 2**s


def boson_dimension(n, s):
    """Closed form for a pure-boson space: sum of multiset coefficients."""
    return sum(comb(n + k - 1, k) for k in range(s + 1))


def _permutation_sign(seq):
    """Parity of the permutation sorting seq ascending (distinct entries)."""
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def fermion_family(mode):
    """Exchange-sign family of a fermion mode.

    Interchanging two fermions of the same species (same mass) flips the
    sign; fermions of distinct species, like fermion/boson pairs, commute.
    Keyed by mass, which is what distinguishes species in every roster.
    """
    return mode.mass


def canonicalize(space, raw):
    """Bring a raw mode-id sequence to canonical occupation form.

    Returns (OccupationState, sign) where the sign is the product of the
    permutation parities of the same-species fermion subsequences, or
    None when a fermion id repeats (the ket is annihilated).  Boson
    entries carry no sign, and neither does any cross-species interchange.
    """
    fermion_seq = []
    boson_counts = {}
    for mode_id in raw:
        mode = space.mode(mode_id)
        if mode.statistics is Statistics.FERMION:
            fermion_seq.append(mode_id)
        else:
            boson_counts[mode_id] = boson_counts.get(mode_id, 0) + 1
    if len(set(fermion_seq)) != len(fermion_seq):
        return None
    sign = 1
    families = {fermion_family(space.mode(f)) for f in fermion_seq}
    for fam in families:
        sub = [
            f for f in fermion_seq
            if fermion_family(space.mode(f)) == fam
        ]
        sign *= _permutation_sign(sub)
    state = OccupationState(
        tuple(sorted(fermion_seq)),
        tuple(sorted(boson_counts.items())),
    )
    return state, sign


def ket(space, *raw):
    """Basis index of the canonical state for a raw id sequence.

    Convenience for tests and the CLI; the dropped sign is only ever
    relevant for odd fermion permutations.
    """
    result = canonicalize(space, raw)
    if result is None:
        raise NotInBasis(f"sequence {raw} annihilates (repeated fermion)")
    state, _ = result
    return space.index_of(state)
