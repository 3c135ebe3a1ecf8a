"""The eight non-increasing simplest degenerations and their transition graph.

A class of the nonsingular-curve family bounds its region by the
non-contractible component, the section, and two pools of empty ovals:
(g-1) inner ones and k outer ones.  Conjunctions merge an oval with the
non-contractible component (1, 1') or with another oval of the same pool
(2, 2'); contractions shrink one oval to a point (3, 3'); the two
self-conjunctions (4, 4') produce the non-contractible node case.  Every
outcome is a candidate only: none of these degenerations is known to be
realizable for every pair of end curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .atlas import Atlas, Family, HInvariant, InvolutionClass, gk_invariants, load_atlas
from .errors import MoveNotApplicable, NotInAtlas, SpecialClass, WrongFamily
from .tables import U_EXCLUDED_TRIPLES
from .topology import IsotopyType, TopCase


class Degeneration(Enum):
    CONJ1 = "conj1"
    CONJ2 = "conj2"
    CONTR3 = "contr3"
    CONJ1P = "conj1p"
    CONJ2P = "conj2p"
    CONTR3P = "contr3p"
    CONJ4 = "conj4"
    CONJ4P = "conj4p"


_MOVE_LABELS = {
    Degeneration.CONJ1: "Conjunction 1)",
    Degeneration.CONJ2: "Conjunction 2)",
    Degeneration.CONTR3: "Contraction 3)",
    Degeneration.CONJ1P: "Conjunction 1')",
    Degeneration.CONJ2P: "Conjunction 2')",
    Degeneration.CONTR3P: "Contraction 3')",
    Degeneration.CONJ4: "Conjunction 4)",
    Degeneration.CONJ4P: "Conjunction 4')",
}

UNPRIMED_MOVES = (Degeneration.CONJ1, Degeneration.CONJ2, Degeneration.CONTR3)
PRIMED_MOVES = (Degeneration.CONJ1P, Degeneration.CONJ2P, Degeneration.CONTR3P)


def move_label(move: Degeneration) -> str:
    return _MOVE_LABELS[move]


@dataclass(frozen=True)
class DegenerationOutcome:
    """Result of one move: a candidate isotopy type with its target class,
    or an impossibility when the required oval pool is too small."""

    move: Degeneration
    iso: IsotopyType | None
    target: InvolutionClass | None

    @property
    def impossible(self) -> bool:
        return self.iso is None

    def cell(self) -> tuple[int, int] | None:
        if self.iso is None or self.iso.case is TopCase.NODE_STAR:
            return None
        return (self.iso.alpha, self.iso.beta)

    def __str__(self) -> str:
        if self.impossible:
            return f"{move_label(self.move)}: impossible"
        return f"{move_label(self.move)}: {self.iso} -> {self.target}"


def _target(atlas: Atlas, c: InvolutionClass, primed: bool) -> InvolutionClass:
    if primed:
        key = (c.r - 1, c.a + 1, c.delta, HInvariant.Z2)
    else:
        key = (c.r, c.a, c.delta, HInvariant.ZERO)
    target = atlas.lookup(Family.S311, *key[:3], key[3])
    if target is None:
        raise NotInAtlas(
            f"no class with invariants {key[:3]} and H={key[3].value} exists"
        )
    return target


def apply_degeneration(
    c: InvolutionClass, move: Degeneration, atlas: Atlas | None = None
) -> DegenerationOutcome:
    """One simplest degeneration step applied to a nonsingular-curve class."""
    atlas = atlas or load_atlas()
    if c.family is not Family.U:
        raise WrongFamily("degenerations start from the nonsingular-curve family")
    if c.triple == (10, 10, 0):
        raise SpecialClass(
            "(10,10,0) has an empty real part; no real curve degenerates"
        )
    if c.triple == (10, 8, 0):
        raise SpecialClass(
            "(10,8,0) carries no oval bookkeeping; degenerations are undefined"
        )

    if move is Degeneration.CONJ4:
        if c.triple != (9, 9, 1):
            raise MoveNotApplicable("the self-conjunction 4) starts from (9,9,1) only")
        target = atlas.lookup(Family.S311, 10, 8, 0, HInvariant.ZERO)
        if target is None:
            raise NotInAtlas("the (10,8,0,H=0) class is missing from the atlas")
        return DegenerationOutcome(move, IsotopyType(TopCase.NODE_STAR, 0, 0), target)
    if move is Degeneration.CONJ4P:
        if c.triple != (11, 9, 1):
            raise MoveNotApplicable("the self-conjunction 4') starts from (11,9,1) only")
        target = atlas.lookup(Family.S311, 9, 9, 0, HInvariant.Z2)
        if target is None:
            raise NotInAtlas("the (9,9,0,H=Z2) class is missing from the atlas")
        return DegenerationOutcome(move, IsotopyType(TopCase.NODE_STAR, 0, 0), target)

    g, k = gk_invariants(c)
    requirement = {
        Degeneration.CONJ1: g >= 2,
        Degeneration.CONJ2: g >= 3,
        Degeneration.CONTR3: g >= 2,
        Degeneration.CONJ1P: k >= 1,
        Degeneration.CONJ2P: k >= 2,
        Degeneration.CONTR3P: k >= 1,
    }[move]
    if not requirement:
        return DegenerationOutcome(move, None, None)
    case = {
        Degeneration.CONJ1: TopCase.NODE1,
        Degeneration.CONJ2: TopCase.NODE2,
        Degeneration.CONTR3: TopCase.ISOLATED,
        Degeneration.CONJ1P: TopCase.NODE1,
        Degeneration.CONJ2P: TopCase.NODE2,
        Degeneration.CONTR3P: TopCase.ISOLATED,
    }[move]
    if move is Degeneration.CONJ1:
        alpha, beta = k, g - 2
    elif move is Degeneration.CONJ2:
        alpha, beta = k, g - 3
    elif move is Degeneration.CONTR3:
        alpha, beta = k, g - 2
    elif move is Degeneration.CONJ1P:
        alpha, beta = g - 1, k - 1
    elif move is Degeneration.CONJ2P:
        alpha, beta = g - 1, k - 2
    else:
        alpha, beta = g - 1, k - 1
    primed = move in PRIMED_MOVES
    return DegenerationOutcome(
        move, IsotopyType(case, alpha, beta), _target(atlas, c, primed)
    )


def applicable_moves(c: InvolutionClass) -> tuple[Degeneration, ...]:
    moves = UNPRIMED_MOVES + PRIMED_MOVES
    if c.triple == (9, 9, 1):
        moves += (Degeneration.CONJ4,)
    if c.triple == (11, 9, 1):
        moves += (Degeneration.CONJ4P,)
    return moves


class TableSide(Enum):
    UNPRIMED = "unprimed"
    PRIMED = "primed"
    STAR = "star"


@dataclass(frozen=True)
class MoveTableRow:
    index: str
    r: int
    a: int
    delta: int
    g: int
    k: int
    cells: tuple[tuple[Degeneration, tuple[int, int] | None], ...]


def degeneration_table(side: TableSide, atlas: Atlas | None = None) -> list[MoveTableRow]:
    """Regenerate a full move table from ``apply_degeneration``.

    The unprimed table lists every class with g >= 2, the primed table
    every class with k >= 1, each under its index on that side; the star
    table holds the two self-conjunction rows.
    """
    atlas = atlas or load_atlas()
    rows: list[MoveTableRow] = []
    if side is TableSide.STAR:
        for triple, move in (((9, 9, 1), Degeneration.CONJ4), ((11, 9, 1), Degeneration.CONJ4P)):
            c = atlas.lookup(Family.U, *triple)
            if c is None:
                continue
            outcome = apply_degeneration(c, move, atlas)
            g, k = gk_invariants(c)
            rows.append(
                MoveTableRow(c.index, c.r, c.a, c.delta, g, k, ((move, outcome.cell()),))
            )
        return rows

    primed = side is TableSide.PRIMED
    moves = PRIMED_MOVES if primed else UNPRIMED_MOVES

    def row_index(c: InvolutionClass) -> str:
        # The primed table labels a class after its related partner; whenever
        # k >= 1 the partner has g = k + 1 >= 2 and hence an unprimed label.
        if primed:
            return atlas.related_class(c).index + "'"
        return c.index

    members = []
    for c in atlas.all_classes(Family.U):
        if c.triple in U_EXCLUDED_TRIPLES:
            continue
        g, k = gk_invariants(c)
        if (k >= 1) if primed else (g >= 2):
            members.append((c, g, k))

    def sort_value(item):
        digits = "".join(ch for ch in row_index(item[0]) if ch.isdigit())
        return int(digits) if digits else 10**6

    for c, g, k in sorted(members, key=sort_value):
        cells = tuple(
            (move, apply_degeneration(c, move, atlas).cell()) for move in moves
        )
        rows.append(MoveTableRow(row_index(c), c.r, c.a, c.delta, g, k, cells))
    return rows


# ---------------------------------------------------------------------------
# The correspondence between degeneration outcomes and isotopy candidates


@dataclass
class CorrespondenceReport:
    checked: int = 0
    mismatches: list[str] | None = None

    def __post_init__(self):
        if self.mismatches is None:
            self.mismatches = []

    @property
    def ok(self) -> bool:
        return not self.mismatches


def correspondence_check(atlas: Atlas | None = None) -> CorrespondenceReport:
    """Degenerations of the class No.k land exactly on the isotopy
    candidates of the class No.k on the other side, move by move; likewise
    for No.k' with the primed moves, and for the two self-conjunctions.

    Also checks single-valuedness: each (class, move) pair determines one
    outcome class.
    """
    from .topology import candidate_isotopy_types

    atlas = atlas or load_atlas()
    report = CorrespondenceReport()
    move_to_case = {
        Degeneration.CONJ1: TopCase.NODE1,
        Degeneration.CONJ2: TopCase.NODE2,
        Degeneration.CONTR3: TopCase.ISOLATED,
        Degeneration.CONJ1P: TopCase.NODE1,
        Degeneration.CONJ2P: TopCase.NODE2,
        Degeneration.CONTR3P: TopCase.ISOLATED,
    }

    for k in range(1, 51):
        for label, moves in ((f"No.{k}", UNPRIMED_MOVES), (f"No.{k}'", PRIMED_MOVES)):
            u_class = atlas.lookup_index(Family.U, label)
            s_class = atlas.lookup_index(Family.S311, label)
            if u_class is None or s_class is None:
                report.mismatches.append(f"{label}: missing from one of the catalogs")
                continue
            candidates = {
                t.case: (t.alpha, t.beta)
                for t in candidate_isotopy_types(s_class)
                if t.case is not TopCase.NODE_STAR
            }
            for move in moves:
                report.checked += 1
                outcome = apply_degeneration(u_class, move, atlas)
                repeat = apply_degeneration(u_class, move, atlas)
                if (outcome.cell(), outcome.target) != (repeat.cell(), repeat.target):
                    report.mismatches.append(f"{label} {move.value}: not single-valued")
                case = move_to_case[move]
                expected = candidates.get(case)
                if outcome.impossible:
                    if expected is not None:
                        report.mismatches.append(
                            f"{label} {move.value}: impossible, but {case.value} "
                            f"{expected} is a candidate"
                        )
                    continue
                if expected is None:
                    report.mismatches.append(
                        f"{label} {move.value}: produced {outcome.cell()}, but "
                        f"{case.value} is not a candidate of {label}"
                    )
                elif outcome.cell() != expected:
                    report.mismatches.append(
                        f"{label} {move.value}: produced {outcome.cell()}, "
                        f"candidate is {expected}"
                    )
                if outcome.target is not s_class:
                    report.mismatches.append(
                        f"{label} {move.value}: target {outcome.target} is not {label}"
                    )

    for triple, move, target_key in (
        ((9, 9, 1), Degeneration.CONJ4, (10, 8, 0, HInvariant.ZERO)),
        ((11, 9, 1), Degeneration.CONJ4P, (9, 9, 0, HInvariant.Z2)),
    ):
        report.checked += 1
        u_class = atlas.lookup(Family.U, *triple)
        if u_class is None:
            report.mismatches.append(f"{triple}: missing from the catalog")
            continue
        outcome = apply_degeneration(u_class, move, atlas)
        target = atlas.lookup(Family.S311, *target_key[:3], target_key[3])
        star_candidates = [
            t for t in candidate_isotopy_types(target) if t.case is TopCase.NODE_STAR
        ]
        if outcome.impossible or outcome.target is not target or not star_candidates:
            report.mismatches.append(f"{triple} {move.value}: star outcome mismatch")
    return report


# ---------------------------------------------------------------------------
# Transition graph


@dataclass(frozen=True)
class TransitionEdge:
    source: InvolutionClass
    target: InvolutionClass
    move: Degeneration
    iso: IsotopyType


@dataclass(frozen=True)
class TransitionGraph:
    nodes: tuple[InvolutionClass, ...]
    edges: tuple[TransitionEdge, ...]


_MOVE_ORDER = {move: i for i, move in enumerate(Degeneration)}


def transition_graph(atlas: Atlas | None = None) -> TransitionGraph:
    """All candidate degeneration edges over both catalogs."""
    atlas = atlas or load_atlas()
    nodes = tuple(
        sorted(
            atlas.all_classes(Family.S311) + atlas.all_classes(Family.U),
            key=InvolutionClass.sort_key,
        )
    )
    edges = []
    for c in atlas.all_classes(Family.U):
        if c.triple in U_EXCLUDED_TRIPLES:
            continue
        for move in applicable_moves(c):
            outcome = apply_degeneration(c, move, atlas)
            if not outcome.impossible:
                edges.append(TransitionEdge(c, outcome.target, move, outcome.iso))
    edges.sort(key=lambda e: (e.source.sort_key(), _MOVE_ORDER[e.move]))
    return TransitionGraph(nodes, tuple(edges))


def _node_id(c: InvolutionClass) -> str:
    if c.family is Family.U:
        return f"U:{c.index} ({c.r},{c.a},{c.delta})"
    return f"S:({c.r},{c.a},{c.delta},{c.h.value})"


def graph_to_dot(graph: TransitionGraph) -> str:
    def quote(s: str) -> str:
        return '"{}"'.format(s.replace('"', r"\""))

    lines = ["digraph degenerations {"]
    for node in graph.nodes:
        lines.append(f"  {quote(_node_id(node))};")
    for edge in graph.edges:
        lines.append(
            "  {} -> {} [label={}];".format(
                quote(_node_id(edge.source)),
                quote(_node_id(edge.target)),
                quote(edge.move.value),
            )
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: TransitionGraph) -> dict:
    return {
        "nodes": [
            {
                "id": _node_id(c),
                "family": c.family.value,
                "index": c.index,
                "r": c.r,
                "a": c.a,
                "delta": c.delta,
                "h": None if c.h is HInvariant.NOT_APPLICABLE else c.h.value,
            }
            for c in graph.nodes
        ],
        "edges": [
            {
                "from": _node_id(e.source),
                "to": _node_id(e.target),
                "move": e.move.value,
                "alpha": e.iso.alpha,
                "beta": e.iso.beta,
                "case": e.iso.case.value,
            }
            for e in graph.edges
        ],
    }
