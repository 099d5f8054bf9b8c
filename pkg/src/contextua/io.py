"""Parsers and writers for the small text formats the tool consumes.

Observable files: one signed Pauli string per line, `#` starts a comment.
A line reading `context:` opens an explicit context block; every operator
line after it belongs to that block (or the next one). Loose observables
must appear before the first block.

Pin files: lines of `pin <signed-pauli> <+1|-1>` fixing eigenvalues.

Stabilizer files: one signed Pauli generator per line.

Instance files: JSON with fields `parties`, `input_bits`, `Q`,
`observables` (two lists, settings 0 and 1), `resource`.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .mbqc import MBQCInstance, validate_instance
from .pauli import PauliOperator, format_pauli, parse_pauli
from .presheaf import StateConstraint
from .stabilizer import StabilizerGroup, make_stabilizer


class FileFormatError(ValueError):
    """The file does not follow the documented grammar."""


def sha256_digest(*chunks: bytes) -> str:
    digest = hashlib.sha256()
    for chunk in chunks:
        digest.update(chunk)
        digest.update(b"\x00")
    return digest.hexdigest()


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def parse_observable_file(
    text: str,
) -> tuple[tuple[PauliOperator, ...], tuple[tuple[PauliOperator, ...], ...]]:
    """Split a file into loose observables and explicit context blocks."""
    loose: list[PauliOperator] = []
    blocks: list[list[PauliOperator]] = []
    in_blocks = False
    for number, line in _content_lines(text):
        if line == "context:":
            in_blocks = True
            blocks.append([])
            continue
        try:
            op = parse_pauli(line)
        except ValueError as exc:
            raise FileFormatError(f"line {number}: {exc}") from exc
        if in_blocks:
            blocks[-1].append(op)
        else:
            loose.append(op)
    for block in blocks:
        if not block:
            raise FileFormatError("empty context block")
    widths = {op.width for op in loose} | {op.width for b in blocks for op in b}
    if len(widths) > 1:
        raise FileFormatError(f"mixed operator widths: {sorted(widths)}")
    return tuple(loose), tuple(tuple(b) for b in blocks)


def parse_pin_file(text: str) -> tuple[StateConstraint, ...]:
    pins: list[StateConstraint] = []
    for number, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "pin":
            raise FileFormatError(
                f"line {number}: expected 'pin <signed-pauli> <+1|-1>', got {line!r}"
            )
        if parts[2] not in ("+1", "-1"):
            raise FileFormatError(f"line {number}: eigenvalue must be +1 or -1")
        try:
            op = parse_pauli(parts[1])
        except ValueError as exc:
            raise FileFormatError(f"line {number}: {exc}") from exc
        pins.append(
            StateConstraint.from_eigenvalue(op, 1 if parts[2] == "+1" else -1)
        )
    return tuple(pins)


def parse_stabilizer_file(text: str) -> StabilizerGroup:
    gens: list[PauliOperator] = []
    for number, line in _content_lines(text):
        try:
            gens.append(parse_pauli(line))
        except ValueError as exc:
            raise FileFormatError(f"line {number}: {exc}") from exc
    if not gens:
        raise FileFormatError("stabilizer file lists no generators")
    return make_stabilizer(gens)


def load_instance(path: str | Path) -> MBQCInstance:
    text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise FileFormatError("instance file must hold a JSON object")
    return validate_instance(raw)


def instance_to_dict(inst: MBQCInstance) -> dict:
    """Raw JSON-shaped form of an instance (full-width observable strings)."""
    return {
        "parties": inst.parties,
        "input_bits": inst.input_bits,
        "Q": [[int(b) for b in row] for row in inst.setting_matrix],
        "observables": [
            [format_pauli(op) for op in setting] for setting in inst.observables
        ],
        "resource": [format_pauli(g) for g in inst.resource.generators],
    }
