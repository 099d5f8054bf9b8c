"""The spectral presheaf over a poset of measurement contexts.

Each context carries its spectrum: the set of multiplicative ±1 valuations
of its observables, encoded as bit assignments (value a means eigenvalue
(-1)^a). Restriction maps valuations down the poset. A global section is a
single bit assignment over all named observables whose restriction to every
context is a valuation; deciding whether one exists reduces to a GF(2)
linear system whose rows are the context relations plus any pinned
eigenvalues of a distinguished state. An inconsistency certificate for that
system is a Kochen-Specker style proof of contextuality.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .contexts import ContextGroup
from .pauli import PauliOperator


class EmptySpectrumError(ValueError):
    """The context admits no valuation (minus the identity is a member)."""


class NotASubcontextError(ValueError):
    """Restriction target is not contained in the valuation's context."""


class UnknownConstrainedObservableError(ValueError):
    """A pinned observable does not occur in any provided context."""


class TooLargeError(ValueError):
    """Brute-force enumeration refused: too many observables."""


@dataclass(eq=True)
class Valuation:
    """A point of one context's spectrum.

    values maps each canonical member observable to its bit a, meaning the
    observable takes eigenvalue (-1)^a. Construction validates that every
    relation of the context is respected, so a Valuation is multiplicative
    by construction.
    """

    context: ContextGroup
    values: dict[PauliOperator, int]

    def __post_init__(self) -> None:
        members = set(self.context.members)
        if set(self.values) != members:
            raise ValueError("valuation must cover exactly the context members")
        for bit in self.values.values():
            if bit not in (0, 1):
                raise ValueError(f"valuation bits must be 0 or 1, got {bit!r}")
        for rel in self.context.relations:
            total = sum(self.values[op] for op in rel.members) % 2
            if total != rel.sign_bit:
                raise ValueError(f"valuation violates relation {rel}")

    @property
    def bits(self) -> tuple[int, ...]:
        """Values in member order (the context's sorted member tuple)."""
        return tuple(self.values[op] for op in self.context.members)

    def value_of(self, op: PauliOperator) -> int:
        """Bit assigned to any group element, signed operators included.

        Extends the member assignment multiplicatively through the group.
        Raises KeyError for operators outside the context.
        """
        if op.is_identity_class:
            return op.sign_bit
        canon = op.canonical()
        if canon in self.values:
            return (self.values[canon] + op.sign_bit) % 2
        decomposed = self.context.decompose(canon)
        if decomposed is None:
            raise KeyError(f"{op} is not in this context")
        exponents, sign_bit = decomposed
        total = sign_bit + op.sign_bit
        for g, e in zip(self.context.generators, exponents):
            if e:
                total += self.values[g]
        return total % 2


def spectrum(context: ContextGroup) -> tuple[Valuation, ...]:
    """All 2^g valuations of a context with g independent generators.

    Enumeration order is binary counting on the generator bits, generator 0
    taken as the most significant, so the order is reproducible.
    """
    for rel in context.relations:
        if not rel.members and rel.sign_bit:
            raise EmptySpectrumError("context contains minus the identity")
    g = context.rank
    points = []
    for idx in range(1 << g):
        gen_bits = {
            gen: (idx >> (g - 1 - j)) & 1 for j, gen in enumerate(context.generators)
        }
        values: dict[PauliOperator, int] = {}
        for op in context.members:
            exponents, sign_bit = context.decompose(op)  # members always decompose
            total = sign_bit
            for gen, e in zip(context.generators, exponents):
                if e:
                    total += gen_bits[gen]
            values[op] = total % 2
        points.append(Valuation(context=context, values=values))
    return tuple(points)


def restrict(valuation: Valuation, sub: ContextGroup) -> Valuation:
    """Restriction map of the presheaf: push a valuation down to a subcontext."""
    if not sub.is_subgroup_of(valuation.context):
        raise NotASubcontextError("target context is not contained in the source")
    values = {op: valuation.value_of(op) for op in sub.members}
    return Valuation(context=sub, values=values)


@dataclass(frozen=True)
class StateConstraint:
    """Pins one observable to a fixed eigenvalue bit: λ(O) = (-1)^value_bit.

    Signed operators are folded onto the canonical representative, so pinning
    -XYY to eigenvalue -1 is stored as XYY pinned to +1.
    """

    observable: PauliOperator
    value_bit: int

    def __post_init__(self) -> None:
        if self.value_bit not in (0, 1):
            raise ValueError("value_bit must be 0 or 1")
        if not self.observable.is_hermitian:
            raise ValueError("only Hermitian observables can be pinned")
        if self.observable.sign_bit or self.observable != self.observable.canonical():
            folded = (self.value_bit + self.observable.sign_bit) % 2
            object.__setattr__(self, "observable", self.observable.canonical())
            object.__setattr__(self, "value_bit", folded)

    @classmethod
    def from_eigenvalue(cls, observable: PauliOperator, eigenvalue: int) -> "StateConstraint":
        if eigenvalue not in (1, -1):
            raise ValueError("eigenvalue must be +1 or -1")
        return cls(observable=observable, value_bit=0 if eigenvalue == 1 else 1)


@dataclass(eq=True)
class GlobalSection:
    """A global bit assignment restricting to a valuation in every context.

    values is keyed by observable body string in variable order; dimension is
    the GF(2) dimension of the full solution space the section was drawn from.
    """

    values: dict[str, int]
    dimension: int = 0

    def value_of(self, op: PauliOperator) -> int:
        return (self.values[op.canonical().body()] + op.sign_bit) % 2


@dataclass(frozen=True)
class Empty:
    """Brute-force verdict: no assignment satisfies the problem."""


def build_global_problem(
    contexts: Sequence[ContextGroup],
    constraints: Iterable[StateConstraint] = (),
) -> gf2.Gf2System:
    """Assemble the global-section decision problem as a GF(2) system.

    One variable per observable identity (first appearance across the given
    contexts, member order within each); one row per context relation, then
    one pinned row per state constraint, in the given order.
    """
    if not contexts:
        raise ValueError("at least one context is required")
    widths = {c.width for c in contexts}
    if len(widths) > 1:
        raise ValueError(f"contexts of mixed widths: {sorted(widths)}")
    columns: dict[tuple[int, int, int], int] = {}
    labels: list[str] = []
    for ctx in contexts:
        for op in ctx.members:
            key = op.identity_key()
            if key not in columns:
                columns[key] = len(labels)
                labels.append(op.body())
    rows: list[np.ndarray] = []
    rhs: list[int] = []
    for ctx in contexts:
        for rel in ctx.relations:
            row = np.zeros(len(labels), dtype=np.uint8)
            for op in rel.members:
                row[columns[op.identity_key()]] ^= 1
            rows.append(row)
            rhs.append(rel.sign_bit)
    for constraint in constraints:
        key = constraint.observable.identity_key()
        if key not in columns:
            raise UnknownConstrainedObservableError(
                f"pinned observable {constraint.observable.body()} "
                "does not occur in any context"
            )
        row = np.zeros(len(labels), dtype=np.uint8)
        row[columns[key]] = 1
        rows.append(row)
        rhs.append(constraint.value_bit)
    matrix = (
        np.array(rows, dtype=np.uint8)
        if rows
        else np.zeros((0, len(labels)), dtype=np.uint8)
    )
    return gf2.Gf2System(
        matrix=matrix,
        rhs=np.array(rhs, dtype=np.uint8),
        labels=tuple(labels),
    )


def _lowest_solution(solution: gf2.Gf2Solution) -> np.ndarray:
    """Binary-lowest assignment in the solution's affine space (MSB = var 0)."""
    assignment = solution.assignment.copy()
    if solution.nullspace.shape[0] == 0:
        return assignment
    reduced = gf2.rref(solution.nullspace)
    for row in reduced.reduced[: reduced.rank]:
        lead = int(np.flatnonzero(row)[0])
        if assignment[lead]:
            assignment ^= row
    return assignment


def solve_global(problem: gf2.Gf2System) -> GlobalSection | gf2.Certificate:
    """Decide the global-section problem.

    Returns the binary-lowest satisfying assignment as a GlobalSection, or
    the inconsistency Certificate naming the contradicting rows.
    """
    outcome = gf2.solve(problem)
    if isinstance(outcome, gf2.Certificate):
        return outcome
    assignment = _lowest_solution(outcome)
    values = {label: int(bit) for label, bit in zip(problem.labels, assignment)}
    return GlobalSection(values=values, dimension=outcome.dimension)


def brute_force_global(
    contexts: Sequence[ContextGroup],
    constraints: Iterable[StateConstraint] = (),
) -> GlobalSection | Empty:
    """Independent oracle: exhaust all bit assignments over the observables.

    Kept deliberately separate from the linear-algebra path; the two must
    agree on existence. The returned witness is the lowest satisfying
    assignment in binary order (variable 0 most significant).
    """
    problem = build_global_problem(contexts, constraints)
    v = problem.num_vars
    if v > 20:
        raise TooLargeError(f"{v} observables exceed the 2^20 enumeration cap")
    candidates = np.arange(1 << v, dtype=np.int64)
    shifts = np.array([v - 1 - j for j in range(v)], dtype=np.int64)
    bits = ((candidates[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
    residual = (bits @ problem.matrix.T + problem.rhs[None, :]) % 2
    satisfying = np.flatnonzero(~residual.any(axis=1))
    if satisfying.size == 0:
        return Empty()
    witness = bits[satisfying[0]]
    values = {label: int(bit) for label, bit in zip(problem.labels, witness)}
    return GlobalSection(values=values, dimension=int(round(np.log2(satisfying.size))))


def section_valuation(section: GlobalSection, context: ContextGroup) -> Valuation:
    """Restrict a global section to one context (raises if it fails to be one)."""
    values = {op: section.value_of(op) for op in context.members}
    return Valuation(context=context, values=values)
