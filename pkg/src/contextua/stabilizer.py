"""Stabilizer groups with sign-resolved membership, plus a dense oracle.

The group data is just the signed generator list; membership queries solve
for generator exponents over GF(2) and multiply the chosen generators to
recover the sign. The dense state-vector path exists for desk-scale checks
and is capped at 10 qubits; the sign arithmetic itself has no cap.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import gf2
from .contexts import MinusIdentityError, NonCommutingGeneratorsError
from .pauli import PauliOperator, commutes, multiply_all


class DependentGeneratorsError(ValueError):
    """A generator is a product of earlier ones (group would be degenerate)."""


class WidthTooLargeError(ValueError):
    """Dense state vectors are limited to 10 qubits."""


_DENSE_WIDTH_CAP = 10


class MemberSign(enum.IntEnum):
    """Outcome of a sign-resolved membership query: +P, -P, or neither."""

    PLUS = 1
    MINUS = -1
    NOT_MEMBER = 0


@dataclass(frozen=True)
class StabilizerGroup:
    generators: tuple[PauliOperator, ...]
    width: int

    @property
    def rank(self) -> int:
        return len(self.generators)

    def basis_matrix(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, 2 * self.width), dtype=np.uint8)
        return np.array([g.symplectic() for g in self.generators], dtype=np.uint8)


def make_stabilizer(gens: list[PauliOperator] | tuple[PauliOperator, ...]) -> StabilizerGroup:
    """Validate signed generators into a StabilizerGroup.

    Requires Hermitian, equal-width, pairwise commuting, symplectically
    independent generators; a dependent generator whose sign disagrees with
    the product of the ones it depends on would put minus the identity in
    the group and is rejected as such.
    """
    ops = list(gens)
    if not ops:
        raise ValueError("at least one generator is required")
    width = ops[0].width
    for op in ops:
        if op.width != width:
            raise ValueError(f"width mismatch: {op.width} vs {width}")
        if not op.is_hermitian:
            raise ValueError(f"non-Hermitian generator: {op!r}")
    for i, p in enumerate(ops):
        for q in ops[i + 1 :]:
            if not commutes(p, q):
                raise NonCommutingGeneratorsError(
                    f"{p.body()} and {q.body()} do not commute"
                )
    accepted: list[PauliOperator] = []
    basis: list[np.ndarray] = []
    for op in ops:
        vector = np.asarray(op.symplectic(), dtype=np.uint8)
        if basis:
            exponents = gf2.linear_solve(np.array(basis, dtype=np.uint8).T, vector)
        else:
            exponents = None if np.any(vector) else np.zeros(0, dtype=np.uint8)
        if exponents is None:
            accepted.append(op)
            basis.append(vector)
            continue
        chosen = [g for g, e in zip(accepted, exponents) if e]
        product = multiply_all(chosen, width=width)
        if product.phase_exp == op.phase_exp:
            raise DependentGeneratorsError(
                f"{op} is the product of earlier generators"
            )
        raise MinusIdentityError(
            f"{op} conflicts in sign with the product of earlier generators"
        )
    return StabilizerGroup(generators=tuple(accepted), width=width)


def member_sign(group: StabilizerGroup, op: PauliOperator) -> MemberSign:
    """Resolve whether +op, -op, or neither lies in the group."""
    if op.width != group.width:
        raise ValueError(f"width mismatch: {op.width} vs {group.width}")
    if not op.is_hermitian:
        raise ValueError(f"non-Hermitian query: {op!r}")
    vector = np.asarray(op.symplectic(), dtype=np.uint8)
    if group.rank == 0:
        exponents = None if np.any(vector) else np.zeros(0, dtype=np.uint8)
    else:
        exponents = gf2.linear_solve(group.basis_matrix().T, vector)
    if exponents is None:
        return MemberSign.NOT_MEMBER
    chosen = [g for g, e in zip(group.generators, exponents) if e]
    product = multiply_all(chosen, width=group.width)
    return MemberSign.PLUS if product.phase_exp == op.phase_exp else MemberSign.MINUS


@dataclass(eq=False)
class DenseState:
    """Explicit amplitudes over the computational basis, qubit 0 first.

    Basis index bit ordering matches np.kron applied left to right: qubit 0
    is the most significant bit of the index.
    """

    amplitudes: np.ndarray
    width: int


def _reverse_bits(mask: int, width: int) -> int:
    out = 0
    for k in range(width):
        if (mask >> k) & 1:
            out |= 1 << (width - 1 - k)
    return out


def apply_pauli(op: PauliOperator, amplitudes: np.ndarray) -> np.ndarray:
    """Apply the operator to a dense vector by index shuffling (no matrices)."""
    n = op.width
    if amplitudes.shape != (1 << n,):
        raise ValueError(f"amplitude vector must have length {1 << n}")
    xr = _reverse_bits(op.x_bits, n)
    zr = _reverse_bits(op.z_bits, n)
    indices = np.arange(1 << n)
    parity = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        if (zr >> k) & 1:
            parity ^= (indices >> k) & 1
    factors = (1j ** op.phase_exp) * np.where(parity, -1.0, 1.0)
    out = np.empty_like(amplitudes, dtype=complex)
    out[indices ^ xr] = factors * amplitudes
    return out


def state_vector(group: StabilizerGroup) -> DenseState:
    """A unit vector stabilized by every generator (eigenvalue +1).

    Projects computational basis states through the group projector until one
    survives; the survivor is normalized with its first nonzero amplitude made
    real positive, so repeated calls give the identical vector.
    """
    n = group.width
    if n > _DENSE_WIDTH_CAP:
        raise WidthTooLargeError(f"width {n} exceeds the dense cap of {_DENSE_WIDTH_CAP}")
    dim = 1 << n
    for seed in range(dim):
        vec = np.zeros(dim, dtype=complex)
        vec[seed] = 1.0
        for g in group.generators:
            vec = (vec + apply_pauli(g, vec)) / 2.0
        norm = np.linalg.norm(vec)
        if norm > 1e-9:
            vec /= norm
            first = np.flatnonzero(np.abs(vec) > 1e-9)[0]
            vec *= np.conj(vec[first]) / np.abs(vec[first])
            return DenseState(amplitudes=vec, width=n)
    raise RuntimeError("projector annihilated every basis state; invalid group")


def expectation(state: DenseState, op: PauliOperator) -> float:
    """⟨ψ|P|ψ⟩ as a real number (operators here are Hermitian)."""
    if op.width != state.width:
        raise ValueError(f"width mismatch: {op.width} vs {state.width}")
    return float(np.vdot(state.amplitudes, apply_pauli(op, state.amplitudes)).real)
