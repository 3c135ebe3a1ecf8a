"""End-to-end consistency checks across catalogs, generators and tables.

``run_all_checks`` re-derives every isotopy-candidate and degeneration
cell from the closed forms and compares them against the shipped tables,
verifies the invariant roundtrips, the Euler-characteristic identity of
the branched double cover, the move-by-move correspondence between the
two class families, and the combinatorial monotonicity of the moves.  A
single shipped cell is whitelisted (see ``tables.WHITELISTED_CELLS``);
everything else must match exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import tables
from .atlas import (
    Atlas,
    AtlasReport,
    Family,
    HInvariant,
    gk_invariants,
    load_atlas,
    validate_atlas,
)
from .degenerations import (
    PRIMED_MOVES,
    UNPRIMED_MOVES,
    TableSide,
    apply_degeneration,
    correspondence_check,
    degeneration_table,
    transition_graph,
)
from .topology import (
    Side,
    TopCase,
    candidate_isotopy_types,
    component_count,
    double_cover_euler_check,
    invariants_from_isotopy,
)

# The region bookkeeping in the isolated point case: the shipped tables
# carry the same oval sums as Node (1), alpha + beta = 9 - a on the H = 0
# side, while the prose source also states an "alpha + beta = 8 - a"
# variant for that case.  The tables win; the conflict is recorded here
# rather than resolved silently.
FLAGGED_NOTES = (
    "isolated-point oval sum: tables use alpha + beta = 9 - a (H = 0 side); "
    "the stated 8 - a variant is not used",
)


@dataclass
class CheckSection:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    whitelisted: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class ValidationSummary:
    atlas_report: AtlasReport
    sections: list[CheckSection]
    notes: tuple[str, ...] = FLAGGED_NOTES

    @property
    def violations(self) -> list[str]:
        out = list(self.atlas_report.violations)
        for section in self.sections:
            out.extend(f"{section.name}: {v}" for v in section.violations)
        return out

    @property
    def whitelisted(self) -> list[str]:
        out = []
        for section in self.sections:
            out.extend(f"{section.name}: {w}" for w in section.whitelisted)
        return out

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary_line(self) -> str:
        counts = self.atlas_report.counts
        status = "correspondence OK" if self.ok else f"{len(self.violations)} violations"
        n_white = len(self.whitelisted)
        noun = "discrepancy" if n_white == 1 else "discrepancies"
        return (
            f"{counts.get('s311', '?')}/{counts.get('s311 quotient', '?')}, "
            f"{counts.get('u', '?')}/{counts.get('u quotient', '?')}, "
            f"{status}, {n_white} whitelisted {noun}"
        )


def _check_isotopy_tables(atlas: Atlas) -> CheckSection:
    section = CheckSection("isotopy tables")
    for h, rows in ((HInvariant.ZERO, tables.ISOTOPY_H0), (HInvariant.Z2, tables.ISOTOPY_Z2)):
        for row in rows:
            c = atlas.lookup(Family.S311, row.r, row.a, row.delta, h)
            section.checked += 1
            if c is None:
                section.violations.append(f"row {row.index}: class missing from atlas")
                continue
            if c.index != row.index:
                section.violations.append(
                    f"row {row.index}: atlas carries index {c.index}"
                )
            if gk_invariants(c) != (row.g, row.k):
                section.violations.append(f"row {row.index}: (g,k) mismatch")
            generated: dict[TopCase, tuple[int, int]] = {}
            has_star = False
            for t in candidate_isotopy_types(c):
                if t.case is TopCase.NODE_STAR:
                    has_star = True
                else:
                    generated[t.case] = (t.alpha, t.beta)
            expected = {
                TopCase.NODE1: row.node1,
                TopCase.ISOLATED: row.isolated,
                TopCase.NODE2: row.node2,
            }
            for case, cell in expected.items():
                if generated.get(case) != cell:
                    section.violations.append(
                        f"row {row.index} {case.value}: generated "
                        f"{generated.get(case)}, shipped {cell}"
                    )
            if has_star != (row.node_star is not None):
                section.violations.append(f"row {row.index}: star cell mismatch")
    return section


def _check_move_tables(atlas: Atlas) -> CheckSection:
    section = CheckSection("degeneration tables")
    whitelist = {(idx, move): (shipped, derived) for idx, move, shipped, derived in tables.WHITELISTED_CELLS}
    for side, golden_rows, names in (
        (TableSide.UNPRIMED, tables.MOVES_UNPRIMED, ("conj1", "conj2", "contr3")),
        (TableSide.PRIMED, tables.MOVES_PRIMED, ("conj1p", "conj2p", "contr3p")),
    ):
        rows = degeneration_table(side, atlas)
        if len(rows) != len(golden_rows):
            section.violations.append(
                f"{side.value} table has {len(rows)} rows, shipped {len(golden_rows)}"
            )
            continue
        for row, golden in zip(rows, golden_rows):
            section.checked += 1
            if (row.index, row.r, row.a, row.delta, row.g, row.k) != (
                golden.index,
                golden.r,
                golden.a,
                golden.delta,
                golden.g,
                golden.k,
            ):
                section.violations.append(
                    f"{side.value} row {golden.index}: head columns mismatch"
                )
                continue
            generated = {move.value: cell for move, cell in row.cells}
            for name, shipped in zip(names, (golden.conj1, golden.conj2, golden.contr3)):
                cell = generated[name]
                if cell == shipped:
                    continue
                entry = whitelist.get((golden.index, name))
                if entry and entry == (shipped, cell):
                    section.whitelisted.append(
                        f"row {golden.index} {name}: shipped {shipped}, derived {cell}"
                    )
                else:
                    section.violations.append(
                        f"row {golden.index} {name}: derived {cell}, shipped {shipped}"
                    )
    star_rows = degeneration_table(TableSide.STAR, atlas)
    expected_stars = [(r.index, r.r, r.a, r.delta, r.g, r.k, r.result) for r in tables.MOVES_STAR]
    got_stars = [
        (r.index, r.r, r.a, r.delta, r.g, r.k, "Node (*)") for r in star_rows
    ]
    section.checked += len(expected_stars)
    if got_stars != expected_stars:
        section.violations.append("star table mismatch")
    return section


def _check_roundtrips(atlas: Atlas) -> CheckSection:
    section = CheckSection("invariant roundtrips")
    for c in atlas.all_classes(Family.S311):
        side = (
            Side.PHI_COVERS_A_MINUS if c.h is HInvariant.ZERO else Side.PHI_COVERS_A_PLUS
        )
        for t in candidate_isotopy_types(c):
            section.checked += 1
            if t.case is TopCase.NODE_STAR:
                star_keys = {
                    (10, 8, 0, HInvariant.ZERO),
                    (9, 9, 0, HInvariant.Z2),
                }
                if (c.r, c.a, c.delta, c.h) not in star_keys:
                    section.violations.append(f"{c.index}: unexpected star candidate")
                continue
            r, a, h = invariants_from_isotopy(t.case, t.alpha, t.beta, side)
            if (r, a, h) != (c.r, c.a, c.h):
                section.violations.append(
                    f"{c.index} {t}: roundtrip gave ({r},{a},H={h.value})"
                )
            # Oval-sum rules on the H = 0 side.
            if c.h is HInvariant.ZERO:
                expected_sum = 8 - c.a if t.case is TopCase.NODE2 else 9 - c.a
                if t.alpha + t.beta != expected_sum:
                    section.violations.append(f"{c.index} {t}: oval sum violated")
            # Component-count bounds for the real curve.
            n_comp = component_count(t.case, t.alpha, t.beta)
            low, high = (2, 11) if t.case is TopCase.ISOLATED else (1, 10)
            if not low <= n_comp <= high:
                section.violations.append(
                    f"{c.index} {t}: {n_comp} components out of range"
                )
    return section


def _check_euler(atlas: Atlas) -> CheckSection:
    section = CheckSection("double-cover Euler identity")
    for c in atlas.all_classes(Family.S311):
        for t in candidate_isotopy_types(c, include_degenerate=True):
            section.checked += 1
            if not double_cover_euler_check(t.case, t.alpha, t.beta):
                section.violations.append(f"{c.index} {t}: chi mismatch")
    return section


def _check_exclusions(atlas: Atlas) -> CheckSection:
    section = CheckSection("exclusions")
    # The H = 0 case formulas never land on (10,10,0) or (10,8,0).
    for c in atlas.all_classes(Family.S311):
        if c.h is not HInvariant.ZERO or c.triple not in ((10, 10, 0), (10, 8, 0)):
            continue
        section.checked += 1
        cases = {t.case for t in candidate_isotopy_types(c)}
        if cases - {TopCase.NODE_STAR}:
            section.violations.append(
                f"{c.index}: case I/II candidates emitted for excluded invariants"
            )
    return section


def _check_monotonicity(atlas: Atlas) -> CheckSection:
    """Each move consumes its side's oval pool by one (conjunction with the
    non-contractible component, contraction) or two (oval-oval merge)."""
    section = CheckSection("oval-count monotonicity")
    drops = {
        "conj1": 1,
        "contr3": 1,
        "conj2": 2,
        "conj1p": 1,
        "contr3p": 1,
        "conj2p": 2,
    }
    for c in atlas.all_classes(Family.U):
        if c.triple in tables.U_EXCLUDED_TRIPLES:
            continue
        g, k = gk_invariants(c)
        before = (g - 1) + k
        for move in UNPRIMED_MOVES + PRIMED_MOVES:
            outcome = apply_degeneration(c, move, atlas)
            if outcome.impossible:
                # Impossibility criteria in terms of the pools.
                section.checked += 1
                pool = g - 1 if move in UNPRIMED_MOVES else k
                needed = 2 if move.value in ("conj2", "conj2p") else 1
                if pool >= needed:
                    section.violations.append(
                        f"{c.index} {move.value}: impossible despite {pool} ovals"
                    )
                continue
            section.checked += 1
            after = outcome.iso.alpha + outcome.iso.beta
            if before - after != drops[move.value]:
                section.violations.append(
                    f"{c.index} {move.value}: oval count dropped by {before - after}"
                )
    return section


def _check_graph(atlas: Atlas) -> CheckSection:
    section = CheckSection("transition graph")
    graph = transition_graph(atlas)
    section.checked += 1
    if len(graph.nodes) != 165:
        section.violations.append(f"{len(graph.nodes)} nodes, expected 63 + 102")
    indegree: dict[str, int] = {}
    for edge in graph.edges:
        indegree[edge.target.index] = indegree.get(edge.target.index, 0) + 1
    for c in atlas.all_classes(Family.S311):
        section.checked += 1
        expected_min = 1
        if indegree.get(c.index, 0) < expected_min:
            section.violations.append(f"{c.index}: no incoming degeneration edge")
    for star_index in ("special-(10,8,0)", "special-(9,9,0)"):
        section.checked += 1
        if indegree.get(star_index, 0) != 1:
            section.violations.append(f"{star_index}: in-degree != 1")
    return section


def run_all_checks(atlas: Atlas | None = None) -> ValidationSummary:
    atlas = atlas or load_atlas()
    report = validate_atlas(atlas)
    if not report.ok:
        # A structurally damaged catalog already fails; the deeper checks
        # assume pairing partners and table rows exist.
        return ValidationSummary(report, [])
    sections = [
        _check_isotopy_tables(atlas),
        _check_move_tables(atlas),
        _check_roundtrips(atlas),
        _check_euler(atlas),
        _check_exclusions(atlas),
        _check_monotonicity(atlas),
    ]
    correspondence = correspondence_check(atlas)
    corr_section = CheckSection("correspondence", checked=correspondence.checked)
    corr_section.violations.extend(correspondence.mismatches)
    sections.append(corr_section)
    # Graph checks only make sense once the catalogs agree with the tables.
    if corr_section.ok:
        sections.append(_check_graph(atlas))
    return ValidationSummary(report, sections)
