"""Measurement contexts: abelian Pauli groups with sign-tracked relations.

A context is the group generated by a set of pairwise commuting Hermitian
observables. Observables are identified projectively (the canonical positive
representative); all sign information is carried by product relations, e.g.
the relation ({XYY, YXY, YYX, XXX}, sign_bit=1) records that the product of
those four observables is minus the identity. Any valuation that respects a
left-nullspace basis of relations respects every product constraint of the
context, so the relation set stays small.

Group membership and inclusion are projective: the poset of contexts is
ordered by inclusion of symplectic row spaces. Signed sign data is recovered
on demand by actually multiplying generators, never stored per element.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .pauli import PauliOperator, commutes, identity, multiply_all


class NonCommutingGeneratorsError(ValueError):
    """A context was requested for observables that do not pairwise commute."""


class MinusIdentityError(ValueError):
    """The generated group contains minus the identity, so no valuation exists."""


@dataclass(frozen=True)
class Relation:
    """A product constraint inside one context.

    The product of the selected member observables (canonical positive
    representatives, in member order) equals (-1)^sign_bit times the identity.
    """

    members: tuple[PauliOperator, ...]
    sign_bit: int

    def __str__(self) -> str:
        product = " * ".join(op.body() for op in self.members)
        value = "-1" if self.sign_bit else "+1"
        return f"{product} = {value}"


def _sort_key(op: PauliOperator) -> str:
    return op.body()


def _symplectic_matrix(ops: Sequence[PauliOperator], width: int) -> np.ndarray:
    if not ops:
        return np.zeros((0, 2 * width), dtype=np.uint8)
    return np.array([op.symplectic() for op in ops], dtype=np.uint8)


class ContextGroup:
    """The abelian group generated by commuting Hermitian observables.

    Attributes:
        width: qubit count.
        members: the named observables (canonical positive, deduplicated,
            sorted by body string).
        generators: a maximal symplectically independent subset of members;
            the group they generate has exactly 2 ** rank elements and never
            contains minus the identity.
        relations: one Relation per left-nullspace basis vector of the member
            symplectic matrix, with signs computed by exact multiplication.

    Construct through :func:`close_context`; the constructor assumes its
    arguments are already validated and canonical.
    """

    def __init__(
        self,
        width: int,
        members: tuple[PauliOperator, ...],
        generators: tuple[PauliOperator, ...],
        relations: tuple[Relation, ...],
    ) -> None:
        self.width = width
        self.members = members
        self.generators = generators
        self.relations = relations
        self._basis = _symplectic_matrix(generators, width)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def group_order(self) -> int:
        return 1 << self.rank

    def span_key(self) -> bytes:
        """Canonical fingerprint of the projective group (its row space)."""
        reduced = gf2.rref(self._basis).reduced[: self.rank]
        return reduced.tobytes()

    def decompose(self, op: PauliOperator) -> tuple[np.ndarray, int] | None:
        """Express op over the generators, with the realized sign.

        Returns (exponents, sign_bit) such that the product of generators with
        exponent 1 equals (-1)^sign_bit times the canonical representative of
        op, or None when op is not in the group projectively.
        """
        if op.width != self.width:
            raise ValueError(f"width mismatch: {op.width} vs {self.width}")
        target = np.asarray(op.symplectic(), dtype=np.uint8)
        if self.rank == 0:
            if np.any(target):
                return None
            return np.zeros(0, dtype=np.uint8), 0
        exponents = gf2.linear_solve(self._basis.T, target)
        if exponents is None:
            return None
        chosen = [g for g, e in zip(self.generators, exponents) if e]
        realized = multiply_all(chosen, width=self.width)
        sign_bit = (realized.phase_exp - op.canonical().phase_exp) % 4 // 2
        return exponents, sign_bit

    def contains(self, op: PauliOperator) -> bool:
        """Projective membership: is op (up to sign) in the group?"""
        return self.decompose(op) is not None

    def element_sign(self, op: PauliOperator) -> int | None:
        """Sign bit of the group element matching op's identity, or None.

        0 means +op is the group element, 1 means -op is (for canonical op).
        """
        result = self.decompose(op.canonical())
        if result is None:
            return None
        return result[1]

    def is_subgroup_of(self, other: "ContextGroup") -> bool:
        """Projective inclusion: every generator lies in the other's row space."""
        if self.width != other.width:
            return False
        return all(
            gf2.row_space_contains(other._basis, np.asarray(g.symplectic(), dtype=np.uint8))
            for g in self.generators
        )

    def __repr__(self) -> str:
        names = ", ".join(op.body() for op in self.members)
        return f"ContextGroup([{names}])"


def close_context(gens: Iterable[PauliOperator], *, width: int | None = None) -> ContextGroup:
    """Close a commuting Hermitian generating set into a ContextGroup.

    Generators are deduplicated by observable identity and canonicalized to
    the positive representative; the relation set then carries all signs. A
    pair of generators with equal identity but opposite signs, or an explicit
    negative identity operator, puts -I in the group and is rejected because
    such a context has an empty spectrum.
    """
    ops = list(gens)
    if not ops and width is None:
        raise ValueError("empty generator list needs an explicit width")
    w = width if width is not None else ops[0].width
    seen_signs: dict[tuple[int, int, int], int] = {}
    members: list[PauliOperator] = []
    for op in ops:
        if op.width != w:
            raise ValueError(f"width mismatch: {op.width} vs {w}")
        if not op.is_hermitian:
            raise ValueError(f"non-Hermitian generator: {op!r}")
        if op.is_identity_class:
            if op.sign == -1:
                raise MinusIdentityError("generator is minus the identity")
            continue
        key = op.identity_key()
        if key in seen_signs:
            if seen_signs[key] != op.sign:
                raise MinusIdentityError(
                    f"generators include both +{op.body()} and -{op.body()}"
                )
            continue
        seen_signs[key] = op.sign
        members.append(op.canonical())
    for i, p in enumerate(members):
        for q in members[i + 1 :]:
            if not commutes(p, q):
                raise NonCommutingGeneratorsError(
                    f"{p.body()} and {q.body()} do not commute"
                )
    members.sort(key=_sort_key)

    matrix = _symplectic_matrix(members, w)
    generators: list[PauliOperator] = []
    basis_rows: list[np.ndarray] = []
    for op, row in zip(members, matrix):
        stacked = np.array(basis_rows + [row], dtype=np.uint8)
        if gf2.rank(stacked) > len(basis_rows):
            generators.append(op)
            basis_rows.append(row)

    relations = []
    for selector in gf2.left_nullspace(matrix):
        chosen = tuple(op for op, bit in zip(members, selector) if bit)
        product = multiply_all(chosen, width=w)
        if product.x_bits or product.z_bits:
            raise AssertionError("nullspace product is not a phase")
        relations.append(Relation(members=chosen, sign_bit=product.phase_exp // 2))

    return ContextGroup(
        width=w,
        members=tuple(members),
        generators=tuple(generators),
        relations=tuple(relations),
    )


def commutation_graph(obs: Sequence[PauliOperator]) -> np.ndarray:
    """Boolean adjacency matrix: edge (i, j) iff obs[i] and obs[j] commute."""
    n = len(obs)
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if commutes(obs[i], obs[j]):
                adj[i, j] = adj[j, i] = True
    return adj


def _maximal_cliques(adj: np.ndarray) -> list[frozenset[int]]:
    """Bron-Kerbosch enumeration of all maximal cliques (exhaustive)."""
    n = adj.shape[0]
    neighbours = [frozenset(np.flatnonzero(adj[v]).tolist()) for v in range(n)]
    cliques: list[frozenset[int]] = []

    def extend(clique: frozenset[int], candidates: frozenset[int], excluded: frozenset[int]) -> None:
        if not candidates and not excluded:
            cliques.append(clique)
            return
        for v in sorted(candidates):
            extend(clique | {v}, candidates & neighbours[v], excluded & neighbours[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    extend(frozenset(), frozenset(range(n)), frozenset())
    return cliques


def maximal_contexts(obs: Sequence[PauliOperator]) -> list[ContextGroup]:
    """One closed context per maximal clique of the commutation graph.

    Input observables are canonicalized and deduplicated by identity first.
    The output order is lexicographic in the sorted member body strings, so
    repeated runs produce identical context lists.
    """
    unique: list[PauliOperator] = []
    seen: set[tuple[int, int, int]] = set()
    for op in obs:
        canon = op.canonical()
        if canon.identity_key() not in seen:
            seen.add(canon.identity_key())
            unique.append(canon)
    if not unique:
        return []
    widths = {op.width for op in unique}
    if len(widths) > 1:
        raise ValueError(f"mixed widths in observable set: {sorted(widths)}")
    adj = commutation_graph(unique)
    contexts = [
        close_context(unique[i] for i in sorted(clique)) for clique in _maximal_cliques(adj)
    ]
    contexts.sort(key=lambda c: tuple(op.body() for op in c.members))
    return contexts


@dataclass(frozen=True)
class ContextPoset:
    """Contexts ordered by projective group inclusion.

    order holds index pairs (i, j) meaning nodes[i] is contained in nodes[j];
    the relation is reflexive, antisymmetric (nodes are deduplicated by row
    space) and transitive.
    """

    nodes: tuple[ContextGroup, ...]
    order: frozenset[tuple[int, int]]

    def covers(self, node_index: int) -> tuple[int, ...]:
        """Indices of nodes containing the given node (including itself)."""
        return tuple(j for (i, j) in sorted(self.order) if i == node_index)


def _intersect_spans(a: ContextGroup, b: ContextGroup) -> ContextGroup:
    """Context generated by the intersection of two projective row spaces."""
    width = a.width
    ma = _symplectic_matrix(a.generators, width)
    mb = _symplectic_matrix(b.generators, width)
    if ma.shape[0] == 0 or mb.shape[0] == 0:
        return close_context((), width=width)
    stacked = np.vstack([ma, mb])
    vectors = []
    for selector in gf2.left_nullspace(stacked):
        vec = (selector[: ma.shape[0]] @ ma) % 2
        vectors.append(vec)
    if not vectors:
        return close_context((), width=width)
    reduced = gf2.rref(np.array(vectors, dtype=np.uint8))
    basis = reduced.reduced[: reduced.rank]
    ops = [_operator_from_vector(row, width) for row in basis]
    return close_context(ops, width=width)


def _operator_from_vector(vector: np.ndarray, width: int) -> PauliOperator:
    x = sum(int(vector[k]) << k for k in range(width))
    z = sum(int(vector[width + k]) << k for k in range(width))
    return PauliOperator(width, x, z).canonical()


def build_poset(maximal: Sequence[ContextGroup]) -> ContextPoset:
    """Close a set of maximal contexts under pairwise intersection.

    New intersection nodes are themselves intersected until a fixpoint is
    reached; nodes are deduplicated by row space and ordered by inclusion.
    """
    if not maximal:
        return ContextPoset(nodes=(), order=frozenset())
    widths = {c.width for c in maximal}
    if len(widths) > 1:
        raise ValueError(f"contexts of mixed widths: {sorted(widths)}")
    nodes: list[ContextGroup] = []
    keys: set[bytes] = set()

    def add(ctx: ContextGroup) -> bool:
        key = ctx.span_key()
        if key in keys:
            return False
        keys.add(key)
        nodes.append(ctx)
        return True

    for ctx in maximal:
        add(ctx)
    frontier = list(nodes)
    while frontier:
        fresh: list[ContextGroup] = []
        snapshot = list(nodes)
        for new in frontier:
            for old in snapshot:
                meet = _intersect_spans(new, old)
                if add(meet):
                    fresh.append(meet)
        frontier = fresh

    nodes.sort(key=lambda c: (c.rank, tuple(op.body() for op in c.members)))
    order = frozenset(
        (i, j)
        for i, low in enumerate(nodes)
        for j, high in enumerate(nodes)
        if low.is_subgroup_of(high)
    )
    return ContextPoset(nodes=tuple(nodes), order=order)
