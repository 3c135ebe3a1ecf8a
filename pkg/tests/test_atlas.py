import json

import pytest

from k3atlas import tables
from k3atlas.atlas import (
    Atlas,
    Family,
    HInvariant,
    InvolutionClass,
    gk_invariants,
    load_atlas,
    related_key,
    validate_atlas,
)
from k3atlas.errors import NotInAtlas, SpecialClass


@pytest.fixture(scope="module")
def atlas():
    return load_atlas()


def test_class_counts(atlas):
    s311 = atlas.all_classes(Family.S311)
    u = atlas.all_classes(Family.U)
    assert len(s311) == 102
    assert sum(c.h is HInvariant.ZERO for c in s311) == 51
    assert sum(c.h is HInvariant.Z2 for c in s311) == 51
    assert len(u) == 63
    assert sum(c.delta == 0 for c in u) == 14
    assert sum(c.delta == 1 for c in u) == 49


def test_constructor_validation():
    with pytest.raises(ValueError):
        InvolutionClass(Family.U, 1, 1, 1, HInvariant.ZERO, "x")
    with pytest.raises(ValueError):
        InvolutionClass(Family.S311, 1, 1, 1, HInvariant.NOT_APPLICABLE, "x")
    with pytest.raises(ValueError):
        InvolutionClass(Family.S311, 1, 1, 2, HInvariant.ZERO, "x")


def test_lookup_examples(atlas):
    assert atlas.lookup(Family.S311, 10, 10, 0, HInvariant.ZERO) is None
    empty_real = atlas.lookup(Family.U, 10, 10, 0)
    assert empty_real is not None and empty_real.index == "special-(10,10,0)"
    star = atlas.lookup(Family.S311, 9, 9, 0, HInvariant.Z2)
    assert star is not None and star.index == "special-(9,9,0)"
    grid_cell = atlas.lookup(Family.S311, 10, 10, 1, HInvariant.Z2)
    assert grid_cell is not None and grid_cell.index == "No.26'"


def test_related_class_examples(atlas):
    no1 = atlas.lookup_index(Family.S311, "No.1")
    assert no1.triple == (1, 1, 1) and no1.h is HInvariant.ZERO
    partner = atlas.related_class(no1)
    assert partner.index == "No.1'" and partner.triple == (18, 2, 1)
    special = atlas.lookup(Family.S311, 10, 8, 0, HInvariant.ZERO)
    assert atlas.related_class(special).triple == (9, 9, 0)
    u11 = atlas.lookup_index(Family.U, "No.11")
    assert u11.triple == (6, 2, 0)
    assert atlas.related_class(u11).triple == (14, 2, 0)
    assert atlas.related_index(u11) == "No.11'"


def test_related_is_involution(atlas):
    for family, expected_fixed in ((Family.S311, 0), (Family.U, 11)):
        fixed = 0
        for c in atlas.all_classes(family):
            partner = atlas.related_class(c)
            assert atlas.related_class(partner) is c
            assert partner.delta == c.delta
            if partner is c:
                fixed += 1
                assert c.r == 10
        assert fixed == expected_fixed


def test_related_gk_rule(atlas):
    for c in atlas.all_classes(Family.U):
        if c.triple in tables.U_EXCLUDED_TRIPLES:
            continue
        partner = atlas.related_class(c)
        if partner.triple in tables.U_EXCLUDED_TRIPLES:
            continue
        g, k = gk_invariants(c)
        assert gk_invariants(partner) == (k + 1, g - 1)


def test_related_s311_rule(atlas):
    for c in atlas.all_classes(Family.S311):
        if c.h is not HInvariant.ZERO:
            continue
        partner = atlas.related_class(c)
        assert partner.h is HInvariant.Z2
        assert (partner.r, partner.a) == (19 - c.r, c.a + 1)


def test_gk_examples(atlas):
    assert gk_invariants(atlas.lookup_index(Family.U, "No.1")) == (10, 0)
    assert gk_invariants(atlas.lookup_index(Family.S311, "No.22")) == (6, 4)
    assert gk_invariants(atlas.lookup_index(Family.U, "No.27")) == (6, 5)
    for triple in tables.U_EXCLUDED_TRIPLES:
        with pytest.raises(SpecialClass):
            gk_invariants(atlas.lookup(Family.U, *triple))


def test_untabulated_class(atlas):
    # (10,10,1) is forced by the counts (49 classes with delta = 1 and 11
    # self-related ones) but has g = 1, k = 0: no table lists it.
    c = atlas.lookup(Family.U, 10, 10, 1)
    assert c is not None and c.index == "special-(10,10,1)"
    assert gk_invariants(c) == (1, 0)
    assert atlas.related_class(c) is c


def test_index_aliases(atlas):
    # Self-related classes answer to both labels.
    assert atlas.lookup_index(Family.U, "No.27'") is atlas.lookup_index(Family.U, "No.27")
    # A class present in both move tables answers to both of its labels.
    both = atlas.lookup_index(Family.U, "No.2'")
    assert both is atlas.lookup_index(Family.U, "No.50")
    assert both.triple == (18, 0, 0)
    assert atlas.lookup_index(Family.U, "No.999") is None


def test_two_rank_bounds(atlas):
    for family in Family:
        for c in atlas.all_classes(family):
            assert c.a <= c.r and c.a <= 22 - c.r
            assert (c.r - c.a) % 2 == 0


def test_grid_row_bijection(atlas):
    for h, grid in ((HInvariant.ZERO, tables.GRID_H0), (HInvariant.Z2, tables.GRID_Z2)):
        cells = {(r, a, d) for (r, a), deltas in grid.items() for d in deltas}
        rows = {c.triple for c in atlas.all_classes(Family.S311) if c.h is h}
        assert cells == rows
        assert len(cells) == 51


def test_validate_atlas_clean(atlas):
    report = validate_atlas(atlas)
    assert report.ok, report.violations
    assert report.counts["s311 quotient"] == 51
    assert report.counts["u quotient"] == 37


def test_validate_detects_missing_partner(atlas):
    records = [
        rec
        for rec in atlas.to_records(Family.S311) + atlas.to_records(Family.U)
        if rec["index"] != "No.17" or rec["family"] != "s311"
    ]
    report = validate_atlas(Atlas.from_records(records))
    assert not report.ok
    assert any("related invariants" in v and "No.17'" in v for v in report.pairing_violations)
    assert any("grid cell (7, 7, 1)" in v for v in report.grid_violations)


def test_validate_detects_duplicates(atlas):
    records = atlas.to_records(Family.S311) + atlas.to_records(Family.U)
    report = validate_atlas(Atlas.from_records(records + [records[0]]))
    assert not report.ok
    assert any("duplicate invariants" in v for v in report.duplicates)


def test_records_roundtrip(atlas, tmp_path):
    s311 = atlas.to_records(Family.S311)
    u = atlas.to_records(Family.U)
    rebuilt = Atlas.from_records(s311 + u)
    assert rebuilt.all_classes(Family.S311) == atlas.all_classes(Family.S311)
    assert rebuilt.all_classes(Family.U) == atlas.all_classes(Family.U)
    assert rebuilt.to_records(Family.S311) == s311
    assert rebuilt.to_records(Family.U) == u

    (tmp_path / "s311.json").write_text(json.dumps(s311))
    (tmp_path / "u.json").write_text(json.dumps(u))
    loaded = load_atlas(str(tmp_path))
    assert loaded.all_classes(Family.S311) == atlas.all_classes(Family.S311)
    assert validate_atlas(loaded).ok


def test_related_key_closed_forms():
    c = InvolutionClass(Family.S311, 1, 1, 1, HInvariant.ZERO, "No.1")
    assert related_key(c) == (18, 2, 1, HInvariant.Z2)
    back = InvolutionClass(Family.S311, 18, 2, 1, HInvariant.Z2, "No.1'")
    assert related_key(back) == (1, 1, 1, HInvariant.ZERO)
    u = InvolutionClass(Family.U, 6, 2, 0, HInvariant.NOT_APPLICABLE, "No.11")
    assert related_key(u) == (14, 2, 0, HInvariant.NOT_APPLICABLE)


def test_related_requires_membership(atlas):
    foreign = InvolutionClass(Family.U, 4, 4, 0, HInvariant.NOT_APPLICABLE, "nope")
    with pytest.raises(NotInAtlas):
        atlas.related_class(foreign)


def test_type_metadata_counts():
    # Coarse classification counts add up to both 51-class sides.
    counts = tables.TYPE_COUNTS
    assert sum(counts.values()) == 102
    assert counts["Type 0"] + counts["Type Ib (H=0)"] == 51
    assert counts["Type Ia"] + counts["Type Ib (H=Z2)"] == 51
