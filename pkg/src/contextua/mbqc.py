"""Measurement-based computation with mod-2 linear classical control.

An instance is a resource stabilizer state on n qubits, an n x m setting
matrix Q over GF(2), and per party k one single-qubit observable for each
setting bit. Input i selects settings q = Q*i; the computed output is the
parity of the n local outcomes, which is deterministic exactly when the
joint observable (the tensor of the selected locals) lies in the resource
group up to sign. The module builds the instance's measurement contexts,
decides contextuality of the state-pinned presheaf, tabulates the computed
function, and checks the statement that a noncontextual instance computes
an affine function of its input.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gf2
from .contexts import ContextGroup, close_context
from .pauli import PauliOperator, from_letter, multiply_all, parse_pauli
from .presheaf import (
    GlobalSection,
    StateConstraint,
    build_global_problem,
    solve_global,
)
from .stabilizer import MemberSign, StabilizerGroup, make_stabilizer, member_sign


class NonLocalObservableError(ValueError):
    """A party's observable acts outside that party's qubit."""


class ShapeMismatchError(ValueError):
    """Instance dimensions disagree (setting matrix, widths, list lengths)."""


class InvalidResourceError(ValueError):
    """The resource is not a valid stabilizer group (or not one at all)."""


class SpecialContextNotStabilizingError(ValueError):
    """Some reachable joint observable is not in the resource group up to sign."""


class IndeterminateInputsError(ValueError):
    """Truth table requested but some inputs have undetermined output."""

    def __init__(self, inputs: tuple[tuple[int, ...], ...]) -> None:
        self.inputs = inputs
        listing = ", ".join("".join(str(b) for b in i) for i in inputs)
        super().__init__(f"output is indeterminate for inputs: {listing}")


class VerificationFailedError(RuntimeError):
    """Internal check failed: the derived affine map disagrees with the table."""


@dataclass(eq=False)
class MBQCInstance:
    """A validated instance; build through validate_instance.

    observables[setting][party] is the full-width embedded operator the
    party measures for that setting bit.
    """

    parties: int
    input_bits: int
    setting_matrix: np.ndarray
    observables: tuple[tuple[PauliOperator, ...], ...]
    resource: StabilizerGroup


@dataclass(frozen=True)
class TruthTable:
    """The computed function o: Z_2^m -> Z_2, outputs in binary input order."""

    input_bits: int
    outputs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.outputs) != 1 << self.input_bits:
            raise ValueError("truth table must cover every input")
        if any(bit not in (0, 1) for bit in self.outputs):
            raise ValueError("outputs must be bits")

    def lookup(self, bits: Sequence[int]) -> int:
        index = 0
        for b in bits:
            index = (index << 1) | (b & 1)
        return self.outputs[index]


@dataclass(eq=False)
class ContextualityReport:
    """Everything the theorem check needs, bundled.

    theorem_consistent is False only if a global section exists while the
    table is not affine; that combination would contradict the statement
    that noncontextual instances compute affine functions.
    """

    global_section: GlobalSection | gf2.Certificate
    truth_table: TruthTable | None
    indeterminate_inputs: tuple[tuple[int, ...], ...]
    affine: gf2.AffineForm | None
    theorem_consistent: bool
    contexts: tuple[ContextGroup, ...]
    pins: tuple[StateConstraint, ...]
    problem: gf2.Gf2System

    @property
    def is_contextual(self) -> bool:
        return isinstance(self.global_section, gf2.Certificate)


@dataclass(frozen=True)
class LinearOutputMap:
    """Affine description of the output plus the per-party outcome bits.

    outcomes[k] = (s_k(0), s_k(1)); the affine form satisfies
    o(i) = sum_k s_k((Qi)_k) = a.i + c over GF(2) for every input.
    """

    affine: gf2.AffineForm
    outcomes: tuple[tuple[int, int], ...]


def _parse_observable(entry: str, party: int, parties: int) -> PauliOperator:
    text = entry.strip()
    sign = 1
    if text[:1] in "+-":
        sign = -1 if text[0] == "-" else 1
        text = text[1:]
    if len(text) == 1:
        op = from_letter(text, party, parties)
    else:
        op = parse_pauli(text)
        if op.width != parties:
            raise ShapeMismatchError(
                f"observable {entry!r} has width {op.width}, expected {parties}"
            )
        if not set(op.support()) <= {party}:
            raise NonLocalObservableError(
                f"observable {entry!r} for party {party} acts on qubits "
                f"{sorted(op.support())}"
            )
    return op.negate() if sign == -1 else op


def validate_instance(raw: dict) -> MBQCInstance:
    """Check raw (JSON-shaped) instance data and build an MBQCInstance."""
    try:
        parties = int(raw["parties"])
        input_bits = int(raw["input_bits"])
        q_rows = raw["Q"]
        observable_lists = raw["observables"]
        resource_lines = raw["resource"]
    except (KeyError, TypeError) as exc:
        raise ShapeMismatchError(f"missing or malformed instance field: {exc}") from exc
    if parties < 1 or input_bits < 0:
        raise ShapeMismatchError("parties must be >= 1 and input_bits >= 0")
    if len(q_rows) != parties or any(len(row) != input_bits for row in q_rows):
        raise ShapeMismatchError(
            f"setting matrix must be {parties} rows of {input_bits} bits"
        )
    matrix = np.array(q_rows, dtype=np.uint8).reshape(parties, input_bits) % 2
    if len(observable_lists) != 2 or any(len(lst) != parties for lst in observable_lists):
        raise ShapeMismatchError("observables must be two lists of one entry per party")
    observables = tuple(
        tuple(
            _parse_observable(entry, party, parties)
            for party, entry in enumerate(setting_list)
        )
        for setting_list in observable_lists
    )
    try:
        gens = [parse_pauli(line) for line in resource_lines]
        for g in gens:
            if g.width != parties:
                raise ShapeMismatchError(
                    f"resource generator {g} has width {g.width}, expected {parties}"
                )
        resource = make_stabilizer(gens)
    except ShapeMismatchError:
        raise
    except ValueError as exc:
        raise InvalidResourceError(str(exc)) from exc
    return MBQCInstance(
        parties=parties,
        input_bits=input_bits,
        setting_matrix=matrix,
        observables=observables,
        resource=resource,
    )


def _settings(inst: MBQCInstance, bits: Sequence[int]) -> np.ndarray:
    vector = np.asarray(list(bits), dtype=np.uint8)
    if vector.shape != (inst.input_bits,):
        raise ValueError(f"input must have {inst.input_bits} bits")
    if inst.input_bits == 0:
        return np.zeros(inst.parties, dtype=np.uint8)
    return (inst.setting_matrix @ vector) % 2


def joint_observable(
    inst: MBQCInstance, bits: Sequence[int]
) -> tuple[PauliOperator, ContextGroup]:
    """The measured product observable for one input, and its local context.

    The context is generated by the selected per-party observables together
    with their product, so the product appears as a named member.
    """
    q = _settings(inst, bits)
    locals_ = [inst.observables[int(q[k])][k] for k in range(inst.parties)]
    joint = multiply_all(locals_, width=inst.parties)
    gens = [
        op.canonical() for op in (*locals_, joint) if not op.is_identity_class
    ]
    context = close_context(gens, width=inst.parties)
    return joint, context


def run(inst: MBQCInstance, bits: Sequence[int]) -> int | None:
    """Computed output bit for one input; None when indeterminate.

    The parity of the local outcomes is fixed by the resource exactly when
    the joint observable is a signed member of the stabilizer group: sign +1
    gives output 0, sign -1 gives output 1.
    """
    joint, _ = joint_observable(inst, bits)
    verdict = member_sign(inst.resource, joint)
    if verdict is MemberSign.NOT_MEMBER:
        return None
    return 0 if verdict is MemberSign.PLUS else 1


def truth_table(inst: MBQCInstance) -> TruthTable:
    """Outputs for all 2^m inputs; raises if any input is indeterminate."""
    outputs: list[int] = []
    missing: list[tuple[int, ...]] = []
    for index in range(1 << inst.input_bits):
        bits = gf2.input_vector(index, inst.input_bits)
        out = run(inst, bits)
        if out is None:
            missing.append(bits)
        else:
            outputs.append(out)
    if missing:
        raise IndeterminateInputsError(tuple(missing))
    return TruthTable(input_bits=inst.input_bits, outputs=tuple(outputs))


def mbqc_contexts(inst: MBQCInstance) -> list[ContextGroup]:
    """One context per reachable setting vector, plus the special context.

    Local contexts appear in first-reached order over binary input
    enumeration. The special context is the closure of the reachable joint
    observables; every one of them must lie in the resource group up to
    sign, otherwise the instance has indeterminate outputs and no
    state-pinned analysis is meaningful.
    """
    seen_settings: set[tuple[int, ...]] = set()
    locals_: list[ContextGroup] = []
    joints: list[PauliOperator] = []
    joint_keys: set[tuple[int, int, int]] = set()
    for index in range(1 << inst.input_bits):
        bits = gf2.input_vector(index, inst.input_bits)
        q = tuple(int(b) for b in _settings(inst, bits))
        if q in seen_settings:
            continue
        seen_settings.add(q)
        joint, context = joint_observable(inst, bits)
        locals_.append(context)
        if member_sign(inst.resource, joint) is MemberSign.NOT_MEMBER:
            raise SpecialContextNotStabilizingError(
                f"joint observable {joint} for settings {q} is not in the "
                "resource group up to sign"
            )
        canon = joint.canonical()
        if canon.identity_key() not in joint_keys:
            joint_keys.add(canon.identity_key())
            joints.append(canon)
    special = close_context(joints, width=inst.parties)
    return [*locals_, special]


def contextuality_report(inst: MBQCInstance) -> ContextualityReport:
    """Decide contextuality of the state-pinned presheaf and check the theorem."""
    contexts = mbqc_contexts(inst)
    special = contexts[-1]
    pins = []
    for op in special.members:
        verdict = member_sign(inst.resource, op)
        if verdict is MemberSign.NOT_MEMBER:
            raise SpecialContextNotStabilizingError(
                f"special context member {op} is not in the resource group up to sign"
            )
        pins.append(StateConstraint(observable=op, value_bit=0 if verdict is MemberSign.PLUS else 1))
    problem = build_global_problem(contexts, pins)
    outcome = solve_global(problem)
    table: TruthTable | None
    indeterminate: tuple[tuple[int, ...], ...]
    try:
        table = truth_table(inst)
        indeterminate = ()
    except IndeterminateInputsError as exc:
        table = None
        indeterminate = exc.inputs
    affine = gf2.fit_affine(table.outputs) if table is not None else None
    inconsistent = (
        isinstance(outcome, GlobalSection) and table is not None and affine is None
    )
    return ContextualityReport(
        global_section=outcome,
        truth_table=table,
        indeterminate_inputs=indeterminate,
        affine=affine,
        theorem_consistent=not inconsistent,
        contexts=tuple(contexts),
        pins=tuple(pins),
        problem=problem,
    )


def linear_output_map(section: GlobalSection, inst: MBQCInstance) -> LinearOutputMap:
    """Read the affine output description off a global section.

    The outcome bit for party k at setting b is the section's value on the
    signed observable O_k(b). A setting whose observable never occurs in any
    reachable context leaves no trace in the output; its outcome bit falls
    back to the setting-0 bit, which drops its coefficient.
    """
    outcomes: list[tuple[int, int]] = []
    for k in range(inst.parties):
        pair: list[int | None] = []
        for b in (0, 1):
            op = inst.observables[b][k]
            if op.is_identity_class:
                pair.append(op.sign_bit)
                continue
            label = op.canonical().body()
            if label in section.values:
                pair.append(section.value_of(op))
            else:
                pair.append(None)
        s0, s1 = pair
        if s0 is None:
            raise ValueError(
                f"section does not cover party {k}'s setting-0 observable"
            )
        outcomes.append((s0, s0 if s1 is None else s1))
    c = sum(s0 for s0, _ in outcomes) % 2
    coefficients = []
    for j in range(inst.input_bits):
        total = 0
        for k, (s0, s1) in enumerate(outcomes):
            total ^= (s0 ^ s1) & int(inst.setting_matrix[k, j])
        coefficients.append(total)
    affine = gf2.AffineForm(a=tuple(coefficients), c=c)
    table = truth_table(inst)
    for index, expected in enumerate(table.outputs):
        bits = gf2.input_vector(index, inst.input_bits)
        if affine.evaluate(bits) != expected:
            raise VerificationFailedError(
                f"derived map disagrees with the table at input {bits}"
            )
    return LinearOutputMap(affine=affine, outcomes=tuple(outcomes))
