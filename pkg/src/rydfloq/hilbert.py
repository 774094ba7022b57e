"""Product bases for ensembles of three-level atoms and collective states.

Each atom has levels g < e < r (indices 0, 1, 2).  Product states are
ordered lexicographically with atom 0 as the most significant digit, so
index((g, e)) = 1 for two atoms.  The ordering is part of the public
contract: state indices are stable across runs and test fixtures.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, DimensionMismatchError

LEVELS = ("g", "e", "r")
LEVEL_INDEX = {name: i for i, name in enumerate(LEVELS)}

#: largest atom count for which the full 3^N product space is built.
#: Larger ensembles must use the symmetric superatom model instead.
FULL_SPACE_CAP = 6

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
NORM_TOL = 1e-10

COLLECTIVE_LABELS = ("G", "W", "P", "T", "D")


@dataclass(frozen=True)
class Basis:
    """Lexicographic product basis for ``atom_count`` three-level atoms."""

    atom_count: int
    dim: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.atom_count, int) or self.atom_count < 1:
            raise ValueError(f"atom_count must be a positive integer, got {self.atom_count!r}")
        if self.atom_count > FULL_SPACE_CAP:
            raise CapacityError(
                f"full product space capped at {FULL_SPACE_CAP} atoms "
                f"(3^{self.atom_count} = {3 ** self.atom_count} states requested); "
                "use the symmetric superatom model for larger ensembles"
            )
        object.__setattr__(self, "dim", 3 ** self.atom_count)

    @property
    def level_labels(self):
        return LEVELS

    @property
    def labels(self):
        """Collective-state labels available for populations in this space."""
        if self.atom_count == 1:
            return ("G", "W", "T")
        return COLLECTIVE_LABELS

    def index_of(self, levels) -> int:
        """Flat index of a per-atom level tuple (names or 0..2 integers)."""
        if len(levels) != self.atom_count:
            raise DimensionMismatchError(
                f"expected {self.atom_count} levels, got {len(levels)}"
            )
        idx = 0
        for lev in levels:
            d = LEVEL_INDEX[lev] if isinstance(lev, str) else int(lev)
            if not 0 <= d <= 2:
                raise ValueError(f"level out of range: {lev!r}")
            idx = idx * 3 + d
        return idx

    def levels_of(self, index: int):
        """Per-atom level indices (atom 0 first) for a flat index."""
        if not 0 <= index < self.dim:
            raise ValueError(f"index {index} outside [0, {self.dim})")
        out = []
        for _ in range(self.atom_count):
            out.append(index % 3)
            index //= 3
        return tuple(reversed(out))

    def iter_levels(self):
        return itertools.product(range(3), repeat=self.atom_count)

    def state(self, label: str) -> np.ndarray:
        """Amplitudes of the collective state with the given label."""
        return collective_state(self, label).amplitudes


def build_basis(atom_count: int) -> Basis:
    """Product basis for 1..6 atoms with deterministic lexicographic order."""
    return Basis(atom_count)


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex square matrix tagged as hermitian, unitary, or general."""

    entries: np.ndarray
    kind: str = "general"

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"operator must be square, got shape {entries.shape}")
        object.__setattr__(self, "entries", entries)
        if self.kind == "hermitian":
            dev = np.max(np.abs(entries - entries.conj().T))
            if dev >= HERMITIAN_TOL:
                raise ValueError(f"matrix tagged hermitian deviates by {dev:.3e}")
        elif self.kind == "unitary":
            dev = np.max(np.abs(entries.conj().T @ entries - np.eye(entries.shape[0])))
            if dev >= UNITARY_TOL:
                raise ValueError(f"matrix tagged unitary deviates by {dev:.3e}")
        elif self.kind != "general":
            raise ValueError(f"unknown operator kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def hermitian(cls, entries) -> "OperatorMatrix":
        return cls(entries, kind="hermitian")

    @classmethod
    def unitary(cls, entries) -> "OperatorMatrix":
        return cls(entries, kind="unitary")


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over a basis or symmetric model space."""

    space: object
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 1:
            raise ValueError("amplitudes must be a vector")
        if amps.shape[0] != self.space.dim:
            raise DimensionMismatchError(
                f"amplitude length {amps.shape[0]} != space dim {self.space.dim}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) >= NORM_TOL:
            raise ValueError(f"state norm {norm!r} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    @classmethod
    def normalized(cls, space, amplitudes) -> "StateVector":
        amps = np.asarray(amplitudes, dtype=complex)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(space, amps / norm)


def embed_single_atom(basis: Basis, atom_index: int, op3) -> OperatorMatrix:
    """Embed a single-atom 3x3 operator at ``atom_index``: I x ... x op3 x ... x I."""
    op3 = np.asarray(op3, dtype=complex)
    if op3.shape != (3, 3):
        raise ValueError(f"single-atom operator must be 3x3, got {op3.shape}")
    if not 0 <= atom_index < basis.atom_count:
        raise ValueError(
            f"atom_index {atom_index} outside [0, {basis.atom_count})"
        )
    left = 3 ** atom_index
    right = 3 ** (basis.atom_count - atom_index - 1)
    out = np.kron(np.kron(np.eye(left), op3), np.eye(right))
    return OperatorMatrix(out)


def collective_state(basis: Basis, which: str) -> StateVector:
    """Symmetric collective state: G, W (one e), P (two e), T (one r), D (one e + one r)."""
    n = basis.atom_count
    if which not in COLLECTIVE_LABELS:
        raise ValueError(f"unknown collective state {which!r}; choose from {COLLECTIVE_LABELS}")
    if which in ("P", "D") and n < 2:
        raise ValueError(f"{which} state requires at least 2 atoms")
    amps = np.zeros(basis.dim, dtype=complex)
    if which == "G":
        amps[0] = 1.0
    elif which == "W":
        for i in range(n):
            levels = [0] * n
            levels[i] = 1
            amps[basis.index_of(levels)] = 1.0
    elif which == "P":
        for i, j in itertools.combinations(range(n), 2):
            levels = [0] * n
            levels[i] = levels[j] = 1
            amps[basis.index_of(levels)] = 1.0
    elif which == "T":
        for i in range(n):
            levels = [0] * n
            levels[i] = 2
            amps[basis.index_of(levels)] = 1.0
    elif which == "D":
        for i, j in itertools.permutations(range(n), 2):
            levels = [0] * n
            levels[i] = 1
            levels[j] = 2
            amps[basis.index_of(levels)] = 1.0
    amps /= np.linalg.norm(amps)
    return StateVector(basis, amps)


def lowering_matrix(from_level: str, to_level: str) -> np.ndarray:
    """3x3 matrix |to><from| in the single-atom space."""
    m = np.zeros((3, 3), dtype=complex)
    m[LEVEL_INDEX[to_level], LEVEL_INDEX[from_level]] = 1.0
    return m


def projector_matrix(level: str) -> np.ndarray:
    """3x3 projector |level><level|."""
    m = np.zeros((3, 3), dtype=complex)
    m[LEVEL_INDEX[level], LEVEL_INDEX[level]] = 1.0
    return m
