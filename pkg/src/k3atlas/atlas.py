"""Catalogs of isometry classes of integral involutions of the K3 lattice.

Two families are carried: the 102 classes living over the rank-3 fixed
lattice, keyed by (r, a, delta, H), and the 63 classes of the
nonsingular-curve family, keyed by (r, a, delta).  Classes are built from
the shipped tables; ``related_class`` realizes the pairing between an
involution and its composition with the reflection fixing the sublattice.

Setting the environment variable ``ATLAS_DATA_DIR`` to a directory that
contains ``s311.json`` and ``u.json`` (records in the export schema of
``Atlas.to_records``) replaces the embedded catalogs; ``validate_atlas``
then reports any damage in the external data.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from . import tables
from .errors import NotInAtlas, SpecialClass
from .tables import U_EXCLUDED_TRIPLES, U_UNTABULATED_TRIPLES


class Family(Enum):
    S311 = "s311"
    U = "u"


class HInvariant(Enum):
    ZERO = "0"
    Z2 = "Z2"
    NOT_APPLICABLE = "NA"


_H_ORDER = {HInvariant.ZERO: 0, HInvariant.Z2: 1, HInvariant.NOT_APPLICABLE: 2}


@dataclass(frozen=True)
class InvolutionClass:
    family: Family
    r: int
    a: int
    delta: int
    h: HInvariant
    index: str

    def __post_init__(self):
        if self.delta not in (0, 1):
            raise ValueError("delta is 0 or 1")
        if self.r < 0 or self.a < 0:
            raise ValueError("r and a are nonnegative")
        if self.family is Family.U and self.h is not HInvariant.NOT_APPLICABLE:
            raise ValueError("the nonsingular-curve family carries no H invariant")
        if self.family is Family.S311 and self.h is HInvariant.NOT_APPLICABLE:
            raise ValueError("classes of this family need H = 0 or H = Z/2")

    @property
    def key(self) -> tuple[int, int, int, HInvariant]:
        return (self.r, self.a, self.delta, self.h)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.r, self.a, self.delta)

    def sort_key(self):
        return (self.family.value, self.r, self.a, self.delta, _H_ORDER[self.h])

    def __str__(self) -> str:
        if self.family is Family.U:
            return f"U:{self.index} ({self.r},{self.a},{self.delta})"
        return f"S:({self.r},{self.a},{self.delta},{self.h.value})"


def gk_invariants(c: InvolutionClass) -> tuple[int, int]:
    """Genus and sphere count of the fixed real part, (22-r-a)/2 and (r-a)/2."""
    if c.family is Family.U and c.triple in U_EXCLUDED_TRIPLES:
        raise SpecialClass(f"{c.index} carries no genus/sphere description")
    g2 = 22 - c.r - c.a
    k2 = c.r - c.a
    if g2 < 0 or k2 < 0 or g2 % 2 or k2 % 2:
        raise SpecialClass(f"({c.r},{c.a},{c.delta}) has no integral (g, k)")
    return g2 // 2, k2 // 2


def related_key(c: InvolutionClass) -> tuple[int, int, int, HInvariant]:
    """Invariants of the related involution (composition with the reflection)."""
    if c.family is Family.U:
        return (20 - c.r, c.a, c.delta, HInvariant.NOT_APPLICABLE)
    if c.h is HInvariant.ZERO:
        return (19 - c.r, c.a + 1, c.delta, HInvariant.Z2)
    return (19 - c.r, c.a - 1, c.delta, HInvariant.ZERO)


def _primed(index: str) -> str:
    return index + "'"


class Atlas:
    """Immutable pair of class catalogs with exact-match lookups."""

    def __init__(self, classes: list[InvolutionClass]):
        self._by_family: dict[Family, tuple[InvolutionClass, ...]] = {}
        self._by_key: dict[tuple, InvolutionClass] = {}
        self._by_index: dict[tuple[Family, str], InvolutionClass] = {}
        for family in Family:
            members = tuple(
                sorted(
                    (c for c in classes if c.family is family),
                    key=InvolutionClass.sort_key,
                )
            )
            self._by_family[family] = members
        for c in classes:
            self._by_key.setdefault((c.family,) + c.key, c)
            self._by_index.setdefault((c.family, c.index), c)
        for c in classes:
            # "No.k'" names the related class of "No.k"; register the alias
            # for classes whose canonical label comes from the other table.
            if (
                c.family is Family.U
                and c.index.startswith("No.")
                and not c.index.endswith("'")
            ):
                partner = self._by_key.get((Family.U,) + related_key(c))
                if partner is not None:
                    self._by_index.setdefault((Family.U, _primed(c.index)), partner)

    def all_classes(self, family: Family) -> tuple[InvolutionClass, ...]:
        return self._by_family[family]

    def lookup(
        self,
        family: Family,
        r: int,
        a: int,
        delta: int,
        h: HInvariant = HInvariant.NOT_APPLICABLE,
    ) -> InvolutionClass | None:
        """Exact-match retrieval; None means the tuple is not realizable."""
        return self._by_key.get((family, r, a, delta, h))

    def lookup_index(self, family: Family, index: str) -> InvolutionClass | None:
        return self._by_index.get((family, index))

    def related_class(self, c: InvolutionClass) -> InvolutionClass:
        if self._by_key.get((c.family,) + c.key) is not c:
            raise NotInAtlas(f"{c} is not a member of this atlas")
        partner = self._by_key.get((c.family,) + related_key(c))
        if partner is None:
            raise NotInAtlas(f"related invariants of {c} are missing from the atlas")
        return partner

    def related_index(self, c: InvolutionClass) -> str:
        # The pairing is written No.k <-> No.k'; toggling the prime always
        # names the partner (possibly as an alias of its canonical label).
        partner = self.related_class(c)
        if c.index.startswith("No."):
            return c.index[:-1] if c.index.endswith("'") else _primed(c.index)
        return partner.index

    def to_records(self, family: Family) -> list[dict]:
        records = []
        for c in self.all_classes(family):
            try:
                g, k = gk_invariants(c)
            except SpecialClass:
                g = k = None
            records.append(
                {
                    "family": c.family.value,
                    "r": c.r,
                    "a": c.a,
                    "delta": c.delta,
                    "h": None if c.h is HInvariant.NOT_APPLICABLE else c.h.value,
                    "index": c.index,
                    "g": g,
                    "k": k,
                    "related_index": self.related_index(c),
                }
            )
        return records

    @classmethod
    def from_records(cls, records: list[dict]) -> "Atlas":
        classes = []
        for rec in records:
            family = Family(rec["family"])
            h = HInvariant.NOT_APPLICABLE if rec.get("h") in (None, "", "NA") else HInvariant(rec["h"])
            classes.append(
                InvolutionClass(
                    family=family,
                    r=int(rec["r"]),
                    a=int(rec["a"]),
                    delta=int(rec["delta"]),
                    h=h,
                    index=str(rec["index"]),
                )
            )
        return cls(classes)


def _embedded_classes() -> list[InvolutionClass]:
    classes: list[InvolutionClass] = []
    for row in tables.ISOTOPY_H0:
        classes.append(
            InvolutionClass(Family.S311, row.r, row.a, row.delta, HInvariant.ZERO, row.index)
        )
    for row in tables.ISOTOPY_Z2:
        classes.append(
            InvolutionClass(Family.S311, row.r, row.a, row.delta, HInvariant.Z2, row.index)
        )
    seen: dict[tuple[int, int, int], str] = {}
    u_members: list[tuple[tuple[int, int, int], str]] = []
    for row in tables.MOVES_UNPRIMED:
        seen[(row.r, row.a, row.delta)] = row.index
        u_members.append(((row.r, row.a, row.delta), row.index))
    for row in tables.MOVES_PRIMED:
        triple = (row.r, row.a, row.delta)
        if triple not in seen:
            seen[triple] = row.index
            u_members.append((triple, row.index))
    for triple in U_EXCLUDED_TRIPLES + U_UNTABULATED_TRIPLES:
        label = "special-({},{},{})".format(*triple)
        u_members.append((triple, label))
    for (r, a, delta), index in u_members:
        classes.append(
            InvolutionClass(Family.U, r, a, delta, HInvariant.NOT_APPLICABLE, index)
        )
    return classes


@lru_cache(maxsize=None)
def _embedded_atlas() -> Atlas:
    return Atlas(_embedded_classes())


def _atlas_from_dir(path: str) -> Atlas:
    records: list[dict] = []
    for name in ("s311.json", "u.json"):
        with open(os.path.join(path, name), encoding="utf-8") as handle:
            records.extend(json.load(handle))
    return Atlas.from_records(records)


def load_atlas(data_dir: str | None = None) -> Atlas:
    """The embedded atlas, or the one under data_dir / $ATLAS_DATA_DIR."""
    path = data_dir if data_dir is not None else os.environ.get("ATLAS_DATA_DIR")
    if path:
        return _atlas_from_dir(path)
    return _embedded_atlas()


def all_classes(family: Family) -> tuple[InvolutionClass, ...]:
    return load_atlas().all_classes(family)


def lookup(
    family: Family,
    r: int,
    a: int,
    delta: int,
    h: HInvariant = HInvariant.NOT_APPLICABLE,
) -> InvolutionClass | None:
    return load_atlas().lookup(family, r, a, delta, h)


def related_class(c: InvolutionClass) -> InvolutionClass:
    return load_atlas().related_class(c)


# ---------------------------------------------------------------------------
# Validation


@dataclass
class AtlasReport:
    counts: dict[str, int] = field(default_factory=dict)
    duplicates: list[str] = field(default_factory=list)
    pairing_violations: list[str] = field(default_factory=list)
    grid_violations: list[str] = field(default_factory=list)
    count_violations: list[str] = field(default_factory=list)
    range_violations: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[str]:
        return (
            self.duplicates
            + self.pairing_violations
            + self.grid_violations
            + self.count_violations
            + self.range_violations
        )

    @property
    def ok(self) -> bool:
        return not self.violations


def _expect(report_list: list[str], condition: bool, message: str) -> None:
    if not condition:
        report_list.append(message)


def validate_atlas(atlas: Atlas | None = None) -> AtlasReport:
    """Check counts, uniqueness, the pairing and the grid consistency."""
    atlas = atlas or load_atlas()
    report = AtlasReport()
    s311 = atlas.all_classes(Family.S311)
    u = atlas.all_classes(Family.U)

    report.counts["s311"] = len(s311)
    report.counts["s311 H=0"] = sum(c.h is HInvariant.ZERO for c in s311)
    report.counts["s311 H=Z2"] = sum(c.h is HInvariant.Z2 for c in s311)
    report.counts["u"] = len(u)
    report.counts["u delta=0"] = sum(c.delta == 0 for c in u)
    report.counts["u delta=1"] = sum(c.delta == 1 for c in u)

    _expect(report.count_violations, len(s311) == 102, f"expected 102 classes, found {len(s311)}")
    _expect(
        report.count_violations,
        report.counts["s311 H=0"] == 51 and report.counts["s311 H=Z2"] == 51,
        "expected a 51 + 51 split across the H invariant",
    )
    _expect(report.count_violations, len(u) == 63, f"expected 63 classes, found {len(u)}")
    _expect(
        report.count_violations,
        report.counts["u delta=0"] == 14 and report.counts["u delta=1"] == 49,
        "expected a 14 / 49 delta split",
    )

    for family, members in ((Family.S311, s311), (Family.U, u)):
        seen: dict[tuple, str] = {}
        for c in members:
            if c.key in seen:
                report.duplicates.append(
                    f"{family.value}: duplicate invariants {c.key} ({seen[c.key]} and {c.index})"
                )
            seen[c.key] = c.index

    # The pairing must be an involution of each catalog; its fixed points
    # determine the quotient counts.
    for family, members, expected_fixed in ((Family.S311, s311, 0), (Family.U, u, 11)):
        fixed = 0
        for c in members:
            try:
                partner = atlas.related_class(c)
            except NotInAtlas:
                report.pairing_violations.append(
                    f"{c.index}: related invariants {related_key(c)[:3]} missing from {family.value}"
                )
                continue
            back = atlas.related_class(partner)
            _expect(
                report.pairing_violations,
                back is c,
                f"{c.index}: pairing is not an involution",
            )
            _expect(
                report.pairing_violations,
                partner.delta == c.delta,
                f"{c.index}: pairing changed delta",
            )
            if partner is c:
                fixed += 1
            if family is Family.U and c.triple not in U_EXCLUDED_TRIPLES:
                g, k = gk_invariants(c)
                if partner.triple not in U_EXCLUDED_TRIPLES:
                    _expect(
                        report.pairing_violations,
                        gk_invariants(partner) == (k + 1, g - 1),
                        f"{c.index}: pairing does not send (g,k) to (k+1,g-1)",
                    )
            if family is Family.S311 and c.h is HInvariant.ZERO:
                _expect(
                    report.pairing_violations,
                    partner.h is HInvariant.Z2
                    and (partner.r, partner.a) == (19 - c.r, c.a + 1),
                    f"{c.index}: pairing is not (r,a) -> (19-r, a+1) with H toggled",
                )
        _expect(
            report.pairing_violations,
            fixed == expected_fixed,
            f"{family.value}: {fixed} self-related classes, expected {expected_fixed}",
        )
        quotient = (len(members) - fixed) // 2 + fixed
        report.counts[f"{family.value} quotient"] = quotient
    _expect(
        report.count_violations,
        report.counts.get("s311 quotient") == 51,
        "expected 51 classes after identifying related pairs",
    )
    _expect(
        report.count_violations,
        report.counts.get("u quotient") == 37,
        "expected 37 classes after identifying related pairs",
    )

    # Grid <-> row-list consistency, both directions.
    for h, grid in ((HInvariant.ZERO, tables.GRID_H0), (HInvariant.Z2, tables.GRID_Z2)):
        cells = {(r, a, d) for (r, a), deltas in grid.items() for d in deltas}
        rows = {c.triple for c in s311 if c.h is h}
        for missing in sorted(cells - rows):
            report.grid_violations.append(
                f"grid cell {missing} (H={h.value}) has no catalog row"
            )
        for extra in sorted(rows - cells):
            report.grid_violations.append(
                f"catalog row {extra} (H={h.value}) is not a grid cell"
            )

    # 2-rank bounds: a is a 2-rank of both the fixed and anti-fixed parts.
    # Parity: r - a and 22 - r - a are even for every class of both families.
    for members in (s311, u):
        for c in members:
            _expect(
                report.range_violations,
                c.a <= c.r and c.a <= 22 - c.r,
                f"{c.index}: a = {c.a} exceeds min(r, 22 - r)",
            )
            _expect(
                report.range_violations,
                (c.r - c.a) % 2 == 0,
                f"{c.index}: r - a is odd",
            )

    return report
