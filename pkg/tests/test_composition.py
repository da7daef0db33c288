from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.composition import cell_text, extract_compositions, pivot_long_to_wide, slice_categories, validate_spec
from models.errors import (
    AllZeroComposition, InvalidCompositions, MissingColumn, MissingValue, NegativeSliceValue, NonNumeric,
)
from models.plot_spec import LongSlices, PlotSpec, WideSlices
from models.table import CompositionRow, DataTable

wide_tables = st.integers(min_value=1, max_value=4).flatmap(
    lambda k: st.lists(
        st.lists(st.integers(min_value=0, max_value=20), min_size=k, max_size=k).filter(any),
        min_size=1, max_size=6,
    )
)


def _long_spec(**extra) -> PlotSpec:
    return PlotSpec(
        x_column="x",
        y_column="y",
        slice_spec=LongSlices(category="cat", value="v", group_by=["id"]),
        **extra,
    )


class TestValidateSpec:
    def test_well_formed_spec_is_renderable(self, sales_spec, sales_table):
        report = validate_spec(sales_spec, sales_table)
        assert report.ok
        assert len(report) == 0

    def test_missing_slice_column(self, sales_table):
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["NA", "EU", "Other"]))
        report = validate_spec(spec, sales_table)
        assert "MissingColumn" in report
        issue = next(iter(report))
        assert issue.column == "Other"

    def test_missing_eu_column(self):
        table = DataTable.from_records([{"x": 1, "y": 1, "NA": 3}])
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["NA", "EU"]))
        report = validate_spec(spec, table)
        assert report.codes() == ["MissingColumn"]
        assert "'EU'" in report.issues[0].message

    def test_map_without_projection(self, sales_table, tmp_path):
        geojson = tmp_path / "map.geojson"
        geojson.write_text('{"type": "FeatureCollection", "features": []}')
        spec = PlotSpec(
            x_column="x", y_column="y",
            slice_spec=WideSlices(columns=["NA", "EU", "JP"]),
            map_source=geojson,
        )
        report = validate_spec(spec, sales_table)
        assert "ProjectionRequired" in report

    def test_unsupported_projection(self, sales_table):
        spec = PlotSpec(
            x_column="x", y_column="y",
            slice_spec=WideSlices(columns=["NA", "EU", "JP"]),
            projection="robinson",
        )
        assert "UnsupportedProjection" in validate_spec(spec, sales_table)

    def test_coordinates_out_of_range(self):
        table = DataTable.from_records([{"lon": 10, "lat": 50, "a": 1}, {"lon": 200, "lat": 0, "a": 1}])
        spec = PlotSpec(
            x_column="lon", y_column="lat",
            slice_spec=WideSlices(columns=["a"]),
            projection="mercator",
        )
        report = validate_spec(spec, table)
        assert report.codes() == ["CoordinateOutOfRange"]
        assert report.issues[0].row == 1

    def test_non_numeric_position(self):
        table = DataTable.from_records([{"x": "abc", "y": 1, "a": 1}])
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["a"]))
        report = validate_spec(spec, table)
        assert report.codes() == ["NonNumericColumn"]
        assert report.issues[0].row == 0

    def test_every_problem_is_reported(self, sales_table):
        spec = PlotSpec(
            x_column="nope", y_column="y",
            slice_spec=WideSlices(columns=["NA", "missing"]),
            facet_column="genre",
        )
        report = validate_spec(spec, sales_table)
        assert report.codes().count("MissingColumn") == 3


class TestExtractCompositions:
    def test_wide_row(self):
        table = DataTable.from_records([{"x": 8.2, "y": 7.9, "NA": 4, "EU": 4, "JP": 8}])
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["NA", "EU", "JP"]))
        (row,) = extract_compositions(spec, table)
        assert (row.anchor_x, row.anchor_y) == (8.2, 7.9)
        assert row.values == (4.0, 4.0, 8.0)
        assert row.row_id == 0

    def test_long_rows_collapse_to_one_composition(self):
        table = DataTable.from_records([
            {"id": 1, "x": 0.0, "y": 0.0, "cat": "NA", "v": 4},
            {"id": 1, "x": 0.0, "y": 0.0, "cat": "EU", "v": 6},
        ])
        (row,) = extract_compositions(_long_spec(), table)
        assert row.values == (4.0, 6.0)

    def test_long_rows_fill_absent_categories_with_zero(self):
        table = DataTable.from_records([
            {"id": 1, "x": 1.0, "y": 1.0, "cat": "A", "v": 2},
            {"id": 1, "x": 1.0, "y": 1.0, "cat": "B", "v": 3},
            {"id": 2, "x": 2.0, "y": 2.0, "cat": "A", "v": 5},
        ])
        rows = extract_compositions(_long_spec(), table)
        assert [r.values for r in rows] == [(2.0, 3.0), (5.0, 0.0)]
        assert [r.anchor_x for r in rows] == [1.0, 2.0]

    def test_all_zero_row(self):
        table = DataTable.from_records([{"x": 1, "y": 1, "NA": 0, "EU": 0, "JP": 0}])
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["NA", "EU", "JP"]))
        with pytest.raises(InvalidCompositions) as info:
            extract_compositions(spec, table)
        assert isinstance(info.value.errors[0], AllZeroComposition)

    def test_errors_are_collected_across_rows(self):
        table = DataTable.from_records([
            {"x": 1, "y": 1, "a": -1, "b": 2},
            {"x": 1, "y": 1, "a": 1, "b": 2},
            {"x": 1, "y": None, "a": 0, "b": 0},
        ])
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["a", "b"]))
        with pytest.raises(InvalidCompositions) as info:
            extract_compositions(spec, table)
        kinds = [type(e) for e in info.value.errors]
        assert kinds == [NegativeSliceValue, MissingValue]
        assert [e.row for e in info.value.errors] == [0, 2]

    def test_negative_slice_diagnostic_names_row_and_column(self):
        table = DataTable.from_records([{"x": 1, "y": 1, "a": 1, "b": -2}], source=Path("d.csv"))
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["a", "b"]))
        with pytest.raises(InvalidCompositions) as info:
            extract_compositions(spec, table)
        (diagnostic,) = info.value.to_diagnostics("d.csv")
        assert diagnostic.format() == "error: d.csv:1: negative slice value -2 in column 'b'"

    def test_non_numeric_slice(self):
        table = DataTable.from_records([{"x": 1, "y": 1, "a": "lots"}])
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["a"]))
        with pytest.raises(InvalidCompositions) as info:
            extract_compositions(spec, table)
        assert isinstance(info.value.errors[0], NonNumeric)

    def test_skip_incomplete_rows_warns(self):
        table = DataTable.from_records([
            {"x": 1, "y": 1, "a": 1},
            {"x": None, "y": 1, "a": 1},
            {"x": 3, "y": 3, "a": 2},
        ], source=Path("d.csv"))
        spec = PlotSpec(
            x_column="x", y_column="y",
            slice_spec=WideSlices(columns=["a"]),
            skip_incomplete_rows=True,
        )
        diagnostics = []
        rows = extract_compositions(spec, table, diagnostics=diagnostics)
        assert [r.row_id for r in rows] == [0, 2]
        assert len(diagnostics) == 1
        assert diagnostics[0].severity == "warning"
        assert diagnostics[0].row == 2

    def test_facet_and_label_are_carried(self):
        table = DataTable.from_records([
            {"x": 1, "y": 1, "a": 1, "g": "north", "name": "p"},
            {"x": 2, "y": 2, "a": 1, "g": None, "name": None},
        ])
        spec = PlotSpec(
            x_column="x", y_column="y",
            slice_spec=WideSlices(columns=["a"]),
            facet_column="g", label_column="name",
        )
        rows = extract_compositions(spec, table)
        assert [r.facet_key for r in rows] == ["north", "(missing)"]
        assert [r.label for r in rows] == ["p", None]

    def test_long_row_ids_point_at_first_source_row(self):
        table = DataTable.from_records([
            {"id": "b", "x": 1.0, "y": 1.0, "cat": "A", "v": 1},
            {"id": "a", "x": 2.0, "y": 2.0, "cat": "A", "v": 1},
            {"id": "b", "x": 1.0, "y": 1.0, "cat": "B", "v": 1},
        ])
        rows = extract_compositions(_long_spec(), table)
        assert [r.row_id for r in rows] == [0, 1]

    def test_long_negative_value_names_source_row(self):
        table = DataTable.from_records([
            {"id": 1, "x": 1.0, "y": 1.0, "cat": "A", "v": 1},
            {"id": 1, "x": 1.0, "y": 1.0, "cat": "B", "v": -3},
        ])
        with pytest.raises(InvalidCompositions) as info:
            extract_compositions(_long_spec(), table)
        (error,) = info.value.errors
        assert error.row == 1
        assert error.column == "v"

    def test_long_category_named_like_a_column(self):
        table = DataTable.from_records([
            {"id": 1, "x": 1.0, "y": 2.0, "cat": "x", "v": 4},
            {"id": 1, "x": 1.0, "y": 2.0, "cat": "z", "v": 6},
        ])
        (row,) = extract_compositions(_long_spec(), table)
        assert (row.anchor_x, row.anchor_y) == (1.0, 2.0)
        assert row.values == (4.0, 6.0)
        assert slice_categories(_long_spec(), table) == ["x", "z"]

    def test_empty_long_table(self):
        table = DataTable.from_records([], columns=["id", "x", "y", "cat", "v"])
        assert extract_compositions(_long_spec(), table) == []
        assert slice_categories(_long_spec(), table) == []

    @given(wide_tables)
    def test_long_and_wide_forms_agree(self, table_rows):
        categories = [f"c{i}" for i in range(len(table_rows[0]))]
        wide = DataTable.from_records([
            {"x": float(i), "y": float(-i), **dict(zip(categories, values))}
            for i, values in enumerate(table_rows)
        ])
        long = DataTable.from_records([
            {"id": i, "x": float(i), "y": float(-i), "cat": category, "v": value}
            for i, values in enumerate(table_rows)
            for category, value in zip(categories, values)
        ])
        wide_spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=categories))

        from_wide = extract_compositions(wide_spec, wide)
        from_long = extract_compositions(_long_spec(), long)
        assert slice_categories(_long_spec(), long) == categories
        assert [(r.anchor_x, r.anchor_y, r.values) for r in from_long] == [
            (r.anchor_x, r.anchor_y, r.values) for r in from_wide
        ]

    @given(wide_tables, st.randoms(use_true_random=False))
    def test_repeated_extraction_is_stable(self, table_rows, rng):
        records = [
            {"id": i, "x": float(i), "y": 0.0, "cat": f"c{j}", "v": value}
            for i, values in enumerate(table_rows)
            for j, value in enumerate(values)
        ]
        rng.shuffle(records)
        table = DataTable.from_records(records)
        first = extract_compositions(_long_spec(), table)
        assert extract_compositions(_long_spec(), table) == first
        assert slice_categories(_long_spec(), table) == slice_categories(_long_spec(), table)


class TestPivot:
    def test_fill_with_zero(self):
        table = DataTable.from_records([
            {"g": "g1", "cat": "A", "v": 2},
            {"g": "g1", "cat": "B", "v": 3},
            {"g": "g2", "cat": "A", "v": 5},
        ])
        wide = pivot_long_to_wide(table, "cat", "v", ["g"])
        assert wide.columns == ["g", "A", "B"]
        assert wide.frame.to_dict("records") == [
            {"g": "g1", "A": 2.0, "B": 3.0},
            {"g": "g2", "A": 5.0, "B": 0.0},
        ]

    def test_duplicates_are_summed(self):
        table = DataTable.from_records([
            {"g": "g1", "cat": "A", "v": 2},
            {"g": "g1", "cat": "A", "v": 4},
        ])
        wide = pivot_long_to_wide(table, "cat", "v", ["g"])
        assert wide.frame.to_dict("records") == [{"g": "g1", "A": 6.0}]

    def test_empty_table(self):
        table = DataTable.from_records([], columns=["g", "cat", "v"])
        wide = pivot_long_to_wide(table, "cat", "v", ["g"])
        assert len(wide) == 0

    def test_group_order_is_first_appearance(self):
        table = DataTable.from_records([
            {"g": "z", "cat": "B", "v": 1},
            {"g": "a", "cat": "A", "v": 1},
        ])
        wide = pivot_long_to_wide(table, "cat", "v", ["g"])
        assert list(wide.column("g")) == ["z", "a"]
        assert wide.columns == ["g", "B", "A"]


def test_slice_categories_long_first_appearance():
    table = DataTable.from_records([
        {"id": 1, "x": 0, "y": 0, "cat": "young", "v": 1},
        {"id": 1, "x": 0, "y": 0, "cat": "old", "v": 1},
        {"id": 2, "x": 0, "y": 0, "cat": "young", "v": 1},
    ])
    assert slice_categories(_long_spec(), table) == ["young", "old"]


@pytest.mark.parametrize("value, expected", [(1999.0, "1999"), ("  ", None), (float("nan"), None), ("x", "x"), (2.5, "2.5")])
def test_cell_text(value, expected):
    assert cell_text(value) == expected


def test_composition_row_rejects_invalid_values():
    with pytest.raises(NegativeSliceValue):
        CompositionRow(anchor_x=0, anchor_y=0, values=(1.0, -1.0), row_id=0)
    with pytest.raises(AllZeroComposition):
        CompositionRow(anchor_x=0, anchor_y=0, values=(0.0, 0.0), row_id=0)


def test_absent_column_raises_missing_column():
    table = DataTable.from_records([{"x": 1}])
    with pytest.raises(MissingColumn) as info:
        table.numeric_column("EU")
    assert info.value.column == "EU"
