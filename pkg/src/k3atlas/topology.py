"""Topological case analysis for one-double-point real trigonal curves.

A singular real curve in |12c + 3s| with one real double point falls into
six cases, grouped by how the double point sits relative to the fiber
intersection point: group I (Node (1), Cusp (1), Isolated point), group
II (Node (2), Cusp (2)), and group III (Node (*)).  The oval counts
(alpha, beta) in the two regions R1, R2 determine, and are determined by,
the lattice invariants (r, a) and the H invariant of the covering
involutions; the closed forms here were checked cell by cell against the
shipped tables, which remain authoritative.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .atlas import Family, HInvariant, InvolutionClass, gk_invariants
from .errors import InconsistentInput, OutOfRange, WrongFamily


class TopCase(Enum):
    NODE1 = "Node (1)"
    NODE2 = "Node (2)"
    NODE_STAR = "Node (*)"
    CUSP1 = "Cusp (1)"
    CUSP2 = "Cusp (2)"
    ISOLATED = "Isolated point"


CASE_I = frozenset({TopCase.NODE1, TopCase.CUSP1, TopCase.ISOLATED})
CASE_II = frozenset({TopCase.NODE2, TopCase.CUSP2})


class Side(Enum):
    PHI_COVERS_A_MINUS = "A-"
    PHI_COVERS_A_PLUS = "A+"


class Region(Enum):
    A_PLUS = "A+"
    A_MINUS = "A-"


class Cover(Enum):
    PHI = "phi"
    RELATED_PHI = "related_phi"


_STAR_DATA = {
    # (r, a, delta, h) of the two classes whose singular component is
    # non-contractible; fixed data, not covered by the case I/II formulas.
    (10, 8, 0, HInvariant.ZERO),
    (9, 9, 0, HInvariant.Z2),
}


@dataclass(frozen=True)
class IsotopyType:
    """A topological case with oval counts in the regions R1 and R2."""

    case: TopCase
    alpha: int
    beta: int
    table_data: bool = True
    conjectured_nonrealizable: bool = False

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise InconsistentInput("oval counts are nonnegative")
        total = self.alpha + self.beta
        if self.case is TopCase.NODE_STAR:
            if total:
                raise InconsistentInput("the non-contractible node case has no ovals")
        elif self.case in CASE_II:
            if total > 8:
                raise InconsistentInput("alpha + beta <= 8 in group II")
        elif total > 9:
            raise InconsistentInput("alpha + beta <= 9 in group I")

    @property
    def triple(self) -> tuple[TopCase, int, int]:
        return (self.case, self.alpha, self.beta)

    def __str__(self) -> str:
        if self.case is TopCase.NODE_STAR:
            return self.case.value
        return f"{self.case.value} ({self.alpha},{self.beta})"


def component_count(case: TopCase, alpha: int, beta: int) -> int:
    """Connected components of the real curve implied by a candidate."""
    ovals = alpha + beta
    if case is TopCase.NODE_STAR:
        return 2
    if case in (TopCase.NODE1, TopCase.CUSP1):
        return 1 + ovals
    # Group II and the isolated point each add a second component
    # (the contractible singular one, or the isolated point itself).
    return 2 + ovals


def candidate_isotopy_types(
    c: InvolutionClass, include_degenerate: bool = False
) -> list[IsotopyType]:
    """All candidate (case, alpha, beta) data for a class of the 102-atlas.

    Follows the shipped tables: the H = 0 side assigns (k, g-2) to group I
    and (k, g-3) to Node (2); the H = Z/2 side assigns (g-1, k) and
    (g-1, k-1).  Assignments with a negative entry are omitted, matching
    empty table cells.  Cusp variants are emitted only when
    ``include_degenerate`` is set and are flagged as non-table data.
    """
    if c.family is not Family.S311:
        raise WrongFamily("isotopy candidates are defined for the 102-class family")

    key = (c.r, c.a, c.delta, c.h)
    if key == (10, 8, 0, HInvariant.ZERO):
        return [IsotopyType(TopCase.NODE_STAR, 0, 0)]

    g, k = gk_invariants(c)
    if c.h is HInvariant.ZERO:
        group_i = (k, g - 2)
        group_ii = (k, g - 3)
    else:
        group_i = (g - 1, k)
        group_ii = (g - 1, k - 1)

    conjectured = key == (9, 9, 0, HInvariant.Z2)
    out: list[IsotopyType] = []

    def emit(case: TopCase, cell: tuple[int, int], table: bool = True) -> None:
        alpha, beta = cell
        if alpha < 0 or beta < 0:
            return
        out.append(
            IsotopyType(
                case,
                alpha,
                beta,
                table_data=table,
                conjectured_nonrealizable=conjectured
                and case in (TopCase.NODE1, TopCase.ISOLATED),
            )
        )

    emit(TopCase.NODE1, group_i)
    emit(TopCase.ISOLATED, group_i)
    emit(TopCase.NODE2, group_ii)
    if conjectured:
        out.append(IsotopyType(TopCase.NODE_STAR, 0, 0))
    if include_degenerate:
        emit(TopCase.CUSP1, group_i, table=False)
        emit(TopCase.CUSP2, group_ii, table=False)
    return out


def invariants_from_isotopy(
    case: TopCase, alpha: int, beta: int, side: Side
) -> tuple[int, int, HInvariant]:
    """Recover (r, a) and H of the covering involution from a candidate.

    ``side`` states which region the involution covers; the region covered
    determines H (the lower region gives H = 0).
    """
    if case is TopCase.NODE_STAR:
        raise InconsistentInput(
            "the non-contractible node case carries fixed invariants, "
            "(10,8,0,H=0) and (9,9,0,H=Z2)"
        )
    IsotopyType(case, alpha, beta)  # bounds check
    if case in CASE_I:
        if side is Side.PHI_COVERS_A_MINUS:
            r, a = 9 + alpha - beta, 9 - alpha - beta
        else:
            r, a = 10 - alpha + beta, 10 - alpha - beta
    else:
        if side is Side.PHI_COVERS_A_MINUS:
            r, a = 8 + alpha - beta, 8 - alpha - beta
        else:
            r, a = 11 - alpha + beta, 9 - alpha - beta
    if a < 0:
        raise OutOfRange(f"{case.value} with ({alpha},{beta}) gives a = {a} < 0")
    h = HInvariant.ZERO if side is Side.PHI_COVERS_A_MINUS else HInvariant.Z2
    return r, a, h


# ---------------------------------------------------------------------------
# Real parts of the covering surfaces


@dataclass(frozen=True)
class SurfaceDescriptor:
    """Disjoint union of closed orientable surfaces; genus 0 means a sphere."""

    genera: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "genera", tuple(sorted((int(g) for g in self.genera), reverse=True))
        )
        if any(g < 0 for g in self.genera):
            raise ValueError("genus is nonnegative")

    @property
    def euler_characteristic(self) -> int:
        return sum(2 - 2 * g for g in self.genera)

    def __str__(self) -> str:
        parts = []
        spheres = 0
        for g in self.genera:
            if g == 0:
                spheres += 1
            elif g == 1:
                parts.append("T^2")
            else:
                parts.append(f"Sigma_{g}")
        if spheres == 1:
            parts.append("S^2")
        elif spheres > 1:
            parts.append(f"{spheres}S^2")
        return " u ".join(parts) if parts else "empty"


def closed_surface(genus: int, spheres: int = 0) -> SurfaceDescriptor:
    return SurfaceDescriptor((genus,) + (0,) * spheres)


class PieceKind(Enum):
    ANNULUS_WITH_HOLES = "annulus with holes"
    DISK = "disk"
    MOEBIUS_COMPOSITE = "annulus-minus-disk glued to a Moebius band, with holes"
    PAIR_OF_PANTS = "disk minus two disks"
    ANNULUS = "annulus"
    MOEBIUS_BAND = "Moebius band"


_PIECE_EULER = {
    PieceKind.ANNULUS_WITH_HOLES: lambda holes: -holes,
    PieceKind.DISK: lambda holes: 1,
    PieceKind.MOEBIUS_COMPOSITE: lambda holes: -1 - holes,
    PieceKind.PAIR_OF_PANTS: lambda holes: -1,
    PieceKind.ANNULUS: lambda holes: 0,
    PieceKind.MOEBIUS_BAND: lambda holes: 0,
}


@dataclass(frozen=True)
class RegionPiece:
    kind: PieceKind
    holes: int = 0

    @property
    def euler_characteristic(self) -> int:
        return _PIECE_EULER[self.kind](self.holes)


@dataclass(frozen=True)
class RegionDescriptor:
    """A region of the quotient torus as a disjoint union of pieces."""

    pieces: tuple[RegionPiece, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum(p.euler_characteristic for p in self.pieces)

    def __str__(self) -> str:
        named: list[str] = []
        counted: dict[str, int] = {}
        for p in self.pieces:
            if p.kind in (PieceKind.ANNULUS_WITH_HOLES, PieceKind.MOEBIUS_COMPOSITE):
                named.append(f"({p.kind.value.replace('holes', f'{p.holes} holes')})")
            else:
                counted[p.kind.value] = counted.get(p.kind.value, 0) + 1
        for kind, count in counted.items():
            named.append(kind if count == 1 else f"{count} {kind}s")
        return " u ".join(named) if named else "empty"


def region_descriptor(
    case: TopCase, alpha: int, beta: int, region: Region
) -> RegionDescriptor:
    """Homeomorphism type of a region cut out by the real branch curve."""
    IsotopyType(case, alpha, beta)  # bounds check
    if case is TopCase.NODE_STAR:
        if region is Region.A_PLUS:
            return RegionDescriptor((RegionPiece(PieceKind.PAIR_OF_PANTS),))
        return RegionDescriptor(
            (RegionPiece(PieceKind.MOEBIUS_BAND), RegionPiece(PieceKind.ANNULUS))
        )
    extra = 0 if case in CASE_I else 1
    if region is Region.A_PLUS:
        pieces = [RegionPiece(PieceKind.ANNULUS_WITH_HOLES, alpha)]
        pieces += [RegionPiece(PieceKind.DISK)] * (beta + extra)
    else:
        pieces = [RegionPiece(PieceKind.MOEBIUS_COMPOSITE, beta + extra)]
        pieces += [RegionPiece(PieceKind.DISK)] * alpha
    return RegionDescriptor(tuple(pieces))


def _surface_for(case: TopCase, alpha: int, beta: int, region: Region) -> SurfaceDescriptor:
    # Real part of the involution whose image is the given region.
    if case is TopCase.NODE_STAR:
        if region is Region.A_MINUS:
            return SurfaceDescriptor((1, 1))
        return closed_surface(2)
    extra = 0 if case in CASE_I else 1
    if region is Region.A_MINUS:
        return closed_surface(2 + beta + extra, alpha)
    return closed_surface(1 + alpha, beta + extra)


def real_part_topology(
    c: InvolutionClass, iso: IsotopyType, which: Cover = Cover.PHI
) -> SurfaceDescriptor:
    """Real part of the chosen covering involution for a class candidate.

    The involution with H = 0 covers the lower region; its related
    involution covers the other one.
    """
    if c.family is not Family.S311:
        raise WrongFamily("real-part types are defined for the 102-class family")
    if iso.case is TopCase.NODE_STAR:
        if (c.r, c.a, c.delta, c.h) not in _STAR_DATA:
            raise InconsistentInput(f"{iso} does not occur for ({c.r},{c.a},{c.delta})")
    else:
        side = Side.PHI_COVERS_A_MINUS if c.h is HInvariant.ZERO else Side.PHI_COVERS_A_PLUS
        r, a, h = invariants_from_isotopy(iso.case, iso.alpha, iso.beta, side)
        if (r, a, h) != (c.r, c.a, c.h):
            raise InconsistentInput(f"{iso} does not occur for ({c.r},{c.a},{c.delta})")
    phi_region = Region.A_MINUS if c.h is HInvariant.ZERO else Region.A_PLUS
    other = Region.A_PLUS if phi_region is Region.A_MINUS else Region.A_MINUS
    region = phi_region if which is Cover.PHI else other
    return _surface_for(iso.case, iso.alpha, iso.beta, region)


def double_cover_euler_check(case: TopCase, alpha: int, beta: int) -> bool:
    """Branched double cover consistency: chi(real part) = 2 chi(region).

    The branch locus consists of circles, which carry no Euler
    characteristic, so the identity holds on both sides simultaneously.
    """
    for region in (Region.A_PLUS, Region.A_MINUS):
        surface = _surface_for(case, alpha, beta, region)
        region_piece = region_descriptor(case, alpha, beta, region)
        if surface.euler_characteristic != 2 * region_piece.euler_characteristic:
            return False
    return True
