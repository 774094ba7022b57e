"""Drive and interaction Hamiltonians of the two-stage Floquet protocol.

Internal unit system: angular frequencies in rad/us, times in us.  The
config loader converts linear MHz/kHz inputs by multiplying with 2*pi,
so "omega/2pi = 1 MHz" enters as omega = 2*pi rad/us.

Stage a couples g <-> e with angular Rabi frequency ``omega``; stage b
couples e <-> r with ``omega_ryd`` and adds the pairwise Rydberg shift
``u_rr`` on doubly excited Rydberg pairs.  Segment durations are derived:
t_a = pi / (sqrt(N_atoms) * cycles * omega) so the accumulated stage-a
area over all cycles is a collective pi pulse, and t_b = 4*pi/omega_ryd
is a 4pi pulse on e <-> r.
"""

from __future__ import annotations

import dataclasses
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .hilbert import (
    Basis,
    OperatorMatrix,
    embed_single_atom,
    lowering_matrix,
    projector_matrix,
)

TWO_PI = 2.0 * math.pi

TWO_ATOM_LABELS = ("gg", "W2", "ee", "T2", "D2")
TWO_ATOM_LABELS_RR = ("gg", "W2", "ee", "T2", "D2", "rr")
SUPERATOM_LABELS = ("G", "W", "P", "T", "D")

#: model-space label -> full-space collective label
_TWO_ATOM_TO_COLLECTIVE = {"gg": "G", "W2": "W", "ee": "P", "T2": "T", "D2": "D"}


@dataclass(frozen=True)
class PhysParams:
    """All physical and protocol parameters, validated on construction.

    omega, omega_ryd, u_rr, gamma, detuning_e, detuning_r are angular
    frequencies in rad/us; phase is in radians.
    """

    omega: float
    omega_ryd: float
    u_rr: float
    atom_count: int
    cycles: int
    gamma: float = 0.0
    detuning_e: float = 0.0
    detuning_r: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError(f"omega must be > 0, got {self.omega}")
        if self.omega_ryd <= 0:
            raise ValueError(f"omega_ryd must be > 0, got {self.omega_ryd}")
        if self.u_rr < 0:
            raise ValueError(f"u_rr must be >= 0, got {self.u_rr}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if not isinstance(self.atom_count, int) or self.atom_count < 1:
            raise ValueError(f"atom_count must be a positive integer, got {self.atom_count!r}")
        if not isinstance(self.cycles, int) or self.cycles < 1:
            raise ValueError(f"cycles must be an integer >= 1, got {self.cycles!r}")

    @property
    def t_a(self) -> float:
        """Stage-a duration: one N-th of a collective pi pulse on g <-> e."""
        return math.pi / (math.sqrt(self.atom_count) * self.cycles * self.omega)

    @property
    def t_b(self) -> float:
        """Stage-b duration: a 4pi pulse on e <-> r."""
        return 4.0 * math.pi / self.omega_ryd

    @property
    def period(self) -> float:
        return self.t_a + self.t_b

    def replace(self, **changes) -> "PhysParams":
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_linear(
        cls,
        omega_mhz: float,
        omega_ryd_mhz: float,
        urr_over_omega_ryd: float,
        atoms: int,
        cycles: int,
        gamma_khz: float = 0.0,
        detuning_khz: float = 0.0,
        phase_rad: float = 0.0,
    ) -> "PhysParams":
        """Build from linear frequencies (MHz / kHz), multiplying by 2*pi."""
        omega = TWO_PI * omega_mhz
        omega_ryd = TWO_PI * omega_ryd_mhz
        detuning = TWO_PI * detuning_khz * 1e-3
        return cls(
            omega=omega,
            omega_ryd=omega_ryd,
            u_rr=urr_over_omega_ryd * omega_ryd,
            gamma=TWO_PI * gamma_khz * 1e-3,
            atom_count=atoms,
            cycles=cycles,
            detuning_e=detuning,
            detuning_r=detuning,
            phase=phase_rad,
        )


def paper_params(atoms: int = 2, cycles: int = 20, **overrides) -> PhysParams:
    """Reference parameter point: omega/2pi = 1 MHz, omega_ryd = 5 omega, u_rr = 45 omega_ryd."""
    base = PhysParams(
        omega=TWO_PI,
        omega_ryd=5 * TWO_PI,
        u_rr=45 * 5 * TWO_PI,
        atom_count=atoms,
        cycles=cycles,
    )
    return base.replace(**overrides) if overrides else base


def hamiltonian_a(basis: Basis, params: PhysParams) -> OperatorMatrix:
    """Stage-a Hamiltonian: sum_i (omega/2) e^{i phase} |e_i><g_i| + h.c. + detuning_e * n_e."""
    if basis.atom_count != params.atom_count:
        raise DimensionMismatchError(
            f"basis has {basis.atom_count} atoms, params specify {params.atom_count}"
        )
    dim = basis.dim
    h = np.zeros((dim, dim), dtype=complex)
    raise_ge = lowering_matrix("g", "e")  # |e><g|
    amp = 0.5 * params.omega * np.exp(1j * params.phase)
    for i in range(basis.atom_count):
        h += amp * embed_single_atom(basis, i, raise_ge).entries
    h = h + h.conj().T
    if params.detuning_e != 0.0:
        proj_e = projector_matrix("e")
        for i in range(basis.atom_count):
            h += params.detuning_e * embed_single_atom(basis, i, proj_e).entries
    return OperatorMatrix.hermitian(h)


def hamiltonian_b(basis: Basis, params: PhysParams, u_rr_pairs=None) -> OperatorMatrix:
    """Stage-b Hamiltonian: e <-> r drive plus pairwise Rydberg shift.

    ``u_rr_pairs`` optionally overrides the shared scalar with a symmetric
    per-pair matrix (entry [i, j] applied to the pair i < j).
    """
    if basis.atom_count != params.atom_count:
        raise DimensionMismatchError(
            f"basis has {basis.atom_count} atoms, params specify {params.atom_count}"
        )
    n = basis.atom_count
    dim = basis.dim
    h = np.zeros((dim, dim), dtype=complex)
    raise_er = lowering_matrix("e", "r")  # |r><e|
    amp = 0.5 * params.omega_ryd * np.exp(1j * params.phase)
    for i in range(n):
        h += amp * embed_single_atom(basis, i, raise_er).entries
    h = h + h.conj().T
    if params.detuning_r != 0.0:
        proj_r = projector_matrix("r")
        for i in range(n):
            h += params.detuning_r * embed_single_atom(basis, i, proj_r).entries
    if u_rr_pairs is not None:
        u_rr_pairs = np.asarray(u_rr_pairs, dtype=float)
        if u_rr_pairs.shape != (n, n):
            raise DimensionMismatchError(
                f"u_rr_pairs must be {n}x{n}, got {u_rr_pairs.shape}"
            )
        if np.max(np.abs(u_rr_pairs - u_rr_pairs.T)) > 0:
            raise ValueError("u_rr_pairs must be symmetric")
    # pairwise |r_i r_j><r_i r_j| shift accumulated on the diagonal
    diag = np.zeros(dim)
    for idx, levels in enumerate(basis.iter_levels()):
        r_atoms = [i for i, lev in enumerate(levels) if lev == 2]
        if len(r_atoms) >= 2:
            for a in range(len(r_atoms)):
                for b in range(a + 1, len(r_atoms)):
                    if u_rr_pairs is not None:
                        diag[idx] += u_rr_pairs[r_atoms[a], r_atoms[b]]
                    else:
                        diag[idx] += params.u_rr
    h += np.diag(diag)
    return OperatorMatrix.hermitian(h)


@dataclass(frozen=True)
class SymmetricModel:
    """Hamiltonian pair restricted to a symmetric collective basis.

    ``family`` is "two_atom" (labels gg, W2, ee, T2, D2 and optionally rr)
    or "superatom" (labels G, W, P, T, D for any atom count under perfect
    blockade).  ``with_params`` rebuilds the matrices for new parameters,
    which is how per-segment noise enters the evolution drivers.
    """

    labels: tuple
    h_a: OperatorMatrix
    h_b: OperatorMatrix
    family: str
    params: PhysParams

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def atom_count(self) -> int:
        return self.params.atom_count

    def state(self, label: str) -> np.ndarray:
        if label not in self.labels:
            raise ValueError(f"unknown label {label!r}; model labels are {self.labels}")
        amps = np.zeros(self.dim, dtype=complex)
        amps[self.labels.index(label)] = 1.0
        return amps

    def with_params(self, params: PhysParams) -> "SymmetricModel":
        if self.family == "two_atom":
            return two_atom_symmetric(params, include_rr=len(self.labels) == 6)
        return superatom_model(params)

    def collective_label(self, label: str) -> str:
        """Map a model label to the G/W/P/T/D collective family (rr has none)."""
        if self.family == "superatom":
            return label
        return _TWO_ATOM_TO_COLLECTIVE.get(label, label)


def _symmetric_matrices(params: PhysParams, dim: int, couplings_a, couplings_b):
    h_a = np.zeros((dim, dim), dtype=complex)
    h_b = np.zeros((dim, dim), dtype=complex)
    phase = np.exp(1j * params.phase)
    for (i, j, g) in couplings_a:
        h_a[j, i] += g * phase
    h_a = h_a + h_a.conj().T
    for (i, j, g) in couplings_b:
        h_b[j, i] += g * phase
    h_b = h_b + h_b.conj().T
    return h_a, h_b


def two_atom_symmetric(params: PhysParams, include_rr: bool = False) -> SymmetricModel:
    """Two-atom model in the symmetric basis {gg, W2, ee, T2, D2[, rr]}.

    Without rr this is the blockade-restricted five-level model; with rr the
    model is the exact symmetric sector of the full two-atom space, with
    coupling sqrt(2)*omega_ryd/2 between D2 and rr and diagonal u_rr on rr.
    """
    if params.atom_count != 2:
        raise ValueError(f"two-atom model requires atom_count=2, got {params.atom_count}")
    labels = TWO_ATOM_LABELS_RR if include_rr else TWO_ATOM_LABELS
    dim = len(labels)
    om, Om = params.omega, params.omega_ryd
    sq2 = math.sqrt(2.0)
    couplings_a = [  # (from, to, strength) for the raising part
        (0, 1, sq2 * om / 2),  # gg -> W2
        (1, 2, sq2 * om / 2),  # W2 -> ee
        (3, 4, om / 2),        # T2 -> D2
    ]
    couplings_b = [
        (1, 3, Om / 2),        # W2 -> T2
        (2, 4, sq2 * Om / 2),  # ee -> D2
    ]
    if include_rr:
        couplings_b.append((4, 5, sq2 * Om / 2))  # D2 -> rr
    h_a, h_b = _symmetric_matrices(params, dim, couplings_a, couplings_b)
    # diagonal terms: detunings count excitations per label
    n_e = {"gg": 0, "W2": 1, "ee": 2, "T2": 0, "D2": 1, "rr": 0}
    n_r = {"gg": 0, "W2": 0, "ee": 0, "T2": 1, "D2": 1, "rr": 2}
    for k, lab in enumerate(labels):
        h_a[k, k] += params.detuning_e * n_e[lab]
        h_b[k, k] += params.detuning_r * n_r[lab]
    if include_rr:
        h_b[5, 5] += params.u_rr
    return SymmetricModel(
        labels=labels,
        h_a=OperatorMatrix.hermitian(h_a),
        h_b=OperatorMatrix.hermitian(h_b),
        family="two_atom",
        params=params,
    )


def superatom_model(params: PhysParams) -> SymmetricModel:
    """Collective five-level model {G, W, P, T, D} under perfect blockade.

    Valid for any atom count >= 2; stage-a couplings scale as sqrt(n),
    sqrt(2(n-1)), sqrt(n-1) while stage-b couplings are n-independent.
    """
    n = params.atom_count
    if n < 2:
        raise ValueError(f"superatom model requires atom_count >= 2, got {n}")
    om, Om = params.omega, params.omega_ryd
    couplings_a = [
        (0, 1, math.sqrt(n) * om / 2),            # G -> W
        (1, 2, math.sqrt(2 * (n - 1)) * om / 2),  # W -> P
        (3, 4, math.sqrt(n - 1) * om / 2),        # T -> D
    ]
    couplings_b = [
        (1, 3, Om / 2),                 # W -> T
        (2, 4, math.sqrt(2) * Om / 2),  # P -> D
    ]
    h_a, h_b = _symmetric_matrices(params, 5, couplings_a, couplings_b)
    n_e = {"G": 0, "W": 1, "P": 2, "T": 0, "D": 1}
    n_r = {"G": 0, "W": 0, "P": 0, "T": 1, "D": 1}
    for k, lab in enumerate(SUPERATOM_LABELS):
        h_a[k, k] += params.detuning_e * n_e[lab]
        h_b[k, k] += params.detuning_r * n_r[lab]
    return SymmetricModel(
        labels=SUPERATOM_LABELS,
        h_a=OperatorMatrix.hermitian(h_a),
        h_b=OperatorMatrix.hermitian(h_b),
        family="superatom",
        params=params,
    )


def effective_two_photon(omega1, omega2, delta_a, omega3, omega4, delta_p):
    """Two-photon Rabi frequencies after adiabatic elimination.

    Returns (omega, omega_ryd) = (O1*O2/(2*delta_a), O3*O4/(2*delta_p)).
    Warns when a detuning is not at least 10x the larger single-photon
    Rabi frequency of its pair, where the elimination becomes unreliable.
    """
    if delta_a == 0 or delta_p == 0:
        raise ValueError("two-photon reduction requires nonzero detunings")
    if abs(delta_a) < 10 * max(abs(omega1), abs(omega2)):
        warnings.warn(
            "delta_a is less than 10x the single-photon Rabi frequencies; "
            "adiabatic elimination may be inaccurate",
            stacklevel=2,
        )
    if abs(delta_p) < 10 * max(abs(omega3), abs(omega4)):
        warnings.warn(
            "delta_p is less than 10x the single-photon Rabi frequencies; "
            "adiabatic elimination may be inaccurate",
            stacklevel=2,
        )
    return omega1 * omega2 / (2 * delta_a), omega3 * omega4 / (2 * delta_p)


def blockade_radius(c6: float, atom_count: int, omega_ryd: float) -> float:
    """Collective blockade radius [c6 / (sqrt(n) * omega_ryd)]^(1/6), hbar = 1.

    Diagnostic only: positions never enter the dynamics, which depend on
    the interaction solely through the scalar u_rr.
    """
    if c6 <= 0 or omega_ryd <= 0 or atom_count < 1:
        raise ValueError("c6, omega_ryd must be positive and atom_count >= 1")
    return (c6 / (math.sqrt(atom_count) * omega_ryd)) ** (1.0 / 6.0)
