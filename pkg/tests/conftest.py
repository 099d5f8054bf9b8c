"""Shared oracles and generators for the test suite.

The dense-matrix helpers here are written directly against explicit 2x2
matrices and np.kron, independently of the package's symplectic arithmetic,
so they can serve as ground truth for it.
"""
from __future__ import annotations

import numpy as np

from contextua import gf2
from contextua.mbqc import MBQCInstance, validate_instance
from contextua.pauli import PauliOperator, commutes, format_pauli
from contextua.stabilizer import StabilizerGroup, make_stabilizer

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
LETTER_MATRICES = {"I": I2, "X": X2, "Y": Y2, "Z": Z2}

LETTERS = "IXYZ"


def dense_from_string(text: str) -> np.ndarray:
    """Matrix for a signed Pauli string, built by plain kron products."""
    sign = 1.0
    body = text
    if body[0] in "+-":
        sign = -1.0 if body[0] == "-" else 1.0
        body = body[1:]
    out = np.array([[sign]], dtype=complex)
    for letter in body:
        out = np.kron(out, LETTER_MATRICES[letter])
    return out


def dense_operator(op: PauliOperator) -> np.ndarray:
    """Matrix for an operator from its raw encoding (phases included)."""
    out = np.array([[1j ** op.phase_exp]], dtype=complex)
    for k in range(op.width):
        factor = I2
        if (op.z_bits >> k) & 1:
            factor = Z2 @ factor
        if (op.x_bits >> k) & 1:
            factor = X2 @ factor
        out = np.kron(out, factor)
    return out


def ghz_vector() -> np.ndarray:
    vec = np.zeros(8, dtype=complex)
    vec[0] = vec[7] = 1 / np.sqrt(2)
    return vec


def random_pauli(rng: np.random.Generator, width: int, signed: bool = True) -> PauliOperator:
    body = "".join(LETTERS[int(i)] for i in rng.integers(0, 4, size=width))
    sign = "-" if signed and rng.integers(0, 2) else "+"
    from contextua.pauli import parse_pauli

    return parse_pauli(sign + body)


def random_commuting_set(
    rng: np.random.Generator, width: int, count: int
) -> list[PauliOperator]:
    """Pairwise commuting positive operators, drawn by rejection."""
    chosen: list[PauliOperator] = []
    attempts = 0
    while len(chosen) < count and attempts < 400:
        attempts += 1
        candidate = random_pauli(rng, width, signed=False)
        if candidate.is_identity_class:
            continue
        if any(candidate.identity_key() == c.identity_key() for c in chosen):
            continue
        if all(commutes(candidate, c) for c in chosen):
            chosen.append(candidate)
    return chosen


def random_stabilizer_group(rng: np.random.Generator, width: int) -> StabilizerGroup:
    """A full-rank stabilizer group (width independent signed generators)."""
    gens: list[PauliOperator] = []
    basis: list[np.ndarray] = []
    attempts = 0
    while len(gens) < width:
        attempts += 1
        if attempts > 2000:
            raise RuntimeError("generator sampling stalled")
        candidate = random_pauli(rng, width, signed=True)
        if candidate.is_identity_class:
            continue
        if not all(commutes(candidate, g) for g in gens):
            continue
        vector = np.asarray(candidate.symplectic(), dtype=np.uint8)
        stacked = np.array(basis + [vector], dtype=np.uint8)
        if gf2.rank(stacked) <= len(basis):
            continue
        gens.append(candidate)
        basis.append(vector)
    return make_stabilizer(gens)


def _embedded_vector(letter_index: int, party: int, width: int) -> np.ndarray:
    vec = np.zeros(2 * width, dtype=np.uint8)
    x = letter_index in (1, 2)
    z = letter_index in (2, 3)
    if x:
        vec[party] = 1
    if z:
        vec[width + party] = 1
    return vec


def random_valid_instance(
    rng: np.random.Generator, max_parties: int = 4, max_input_bits: int = 3
) -> MBQCInstance:
    """A random instance whose every reachable joint observable is determined.

    Sampling: draw a full-rank resource group, resample per-party observable
    letters until the all-zeros setting has its joint in the group's row
    space, then restrict the setting-matrix columns to the solution space of
    settings that keep the joint inside that row space.
    """
    n = int(rng.integers(1, max_parties + 1))
    m = int(rng.integers(1, max_input_bits + 1))
    group = random_stabilizer_group(rng, n)
    g_matrix = group.basis_matrix()
    for _ in range(500):
        letters = rng.integers(0, 4, size=(2, n))
        v0 = np.zeros(2 * n, dtype=np.uint8)
        for k in range(n):
            v0 ^= _embedded_vector(int(letters[0][k]), k, n)
        if gf2.row_space_contains(g_matrix, v0):
            break
    else:
        raise RuntimeError("observable sampling stalled")
    deltas = np.array(
        [
            _embedded_vector(int(letters[0][k]), k, n)
            ^ _embedded_vector(int(letters[1][k]), k, n)
            for k in range(n)
        ],
        dtype=np.uint8,
    )
    stacked = np.vstack([deltas, g_matrix])
    admissible = [sel[:n] for sel in gf2.left_nullspace(stacked)]
    columns = []
    for _ in range(m):
        col = np.zeros(n, dtype=np.uint8)
        for vec in admissible:
            if rng.integers(0, 2):
                col ^= vec
        columns.append(col)
    setting_matrix = (
        np.array(columns, dtype=np.uint8).T
        if columns
        else np.zeros((n, 0), dtype=np.uint8)
    )
    signs = rng.integers(0, 2, size=(2, n))
    observables = [
        [
            ("-" if signs[b][k] else "+") + "".join(
                LETTERS[int(letters[b][k])] if j == k else "I" for j in range(n)
            )
            for k in range(n)
        ]
        for b in (0, 1)
    ]
    raw = {
        "parties": n,
        "input_bits": m,
        "Q": [[int(b) for b in row] for row in setting_matrix],
        "observables": observables,
        "resource": [format_pauli(g) for g in group.generators],
    }
    return validate_instance(raw)


def exhaustive_affine_tables(m: int) -> set[tuple[int, ...]]:
    """Truth tables of all 2^(m+1) affine forms on m bits."""
    tables = set()
    for mask in range(1 << m):
        coefficients = tuple((mask >> (m - 1 - j)) & 1 for j in range(m))
        for constant in (0, 1):
            form = gf2.AffineForm(a=coefficients, c=constant)
            tables.add(
                tuple(
                    form.evaluate(gf2.input_vector(i, m)) for i in range(1 << m)
                )
            )
    return tables
