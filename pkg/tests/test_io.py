import io

import numpy as np
import pytest

from signedclust import (
    EdgeListFormatError,
    EdgeRecord,
    load_edge_list,
    load_graph,
    normalize,
    write_clustering,
    write_edge_list,
)
from signedclust.io import metrics_record


def parse(text, fmt="auto"):
    return load_edge_list(io.StringIO(text), fmt=fmt)


class TestLoadEdgeList:
    def test_single_edge(self):
        records, n, ids = parse("0 1 -1\n")
        assert records == [EdgeRecord(0, 1, -1.0)]
        assert n == 2
        assert ids == [0, 1]

    def test_comment_lines_skipped(self):
        records, n, _ = parse("# comment\n% other comment\n0 1 2\n")
        assert records == [EdgeRecord(0, 1, 2.0)]
        assert n == 2

    def test_duplicates_kept_raw(self):
        records, _, _ = parse("0 1 1\n0 1 1\n")
        assert len(records) == 2  # merging is normalize()'s job

    def test_missing_weight_defaults_to_one(self):
        records, _, _ = parse("0 1\n")
        assert records[0].w == 1.0

    def test_csv_with_timestamp_column(self):
        records, n, _ = parse("3,7,-5,1407470400\n", fmt="snap")
        assert records == [EdgeRecord(0, 1, -5.0)]
        assert n == 2

    def test_remapping_side_table(self):
        records, n, ids = parse("5 9 1\n9 12 -2\n")
        assert n == 3
        assert ids == [5, 9, 12]
        assert records == [EdgeRecord(0, 1, 1.0), EdgeRecord(1, 2, -2.0)]

    def test_header_preserves_isolated_nodes(self):
        records, n, ids = parse("p 5 1\n0 1 1\n")
        assert n == 5
        assert ids == list(range(5))

    def test_header_id_out_of_range(self):
        with pytest.raises(EdgeListFormatError, match="exceeds"):
            parse("p 2 1\n0 5 1\n")

    def test_malformed_line_reports_number(self):
        with pytest.raises(EdgeListFormatError, match="line 2"):
            parse("0 1 1\nbogus\n")

    def test_non_numeric_weight(self):
        with pytest.raises(EdgeListFormatError, match="non-numeric"):
            parse("0 1 heavy\n")

    def test_empty_input(self):
        with pytest.raises(EdgeListFormatError, match="empty"):
            parse("# nothing here\n")

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError, match="unknown edge list format"):
            parse("0 1 1\n", fmt="dimacs")


class TestRoundTrip:
    def test_write_then_load(self, g_twin, tmp_path):
        path = tmp_path / "twin.txt"
        write_edge_list(g_twin, path)
        again = load_graph(path, raw_weights=True)
        assert again.n == g_twin.n
        assert np.array_equal(again.edges_u, g_twin.edges_u)
        assert np.array_equal(again.edges_w, g_twin.edges_w)

    def test_canonical_header_contents(self, g_twin, tmp_path):
        path = tmp_path / "twin.txt"
        write_edge_list(g_twin, path)
        first, second = path.read_text().splitlines()[:2]
        assert first == "# n 4 m+ 2 m- 2 sum_neg -2"
        assert second == "p 4 4"

    def test_isolated_nodes_roundtrip(self, tmp_path):
        g = normalize([(0, 1, 1.0)], 4)
        path = tmp_path / "iso.txt"
        write_edge_list(g, path)
        again = load_graph(path)
        assert again.n == 4


class TestClusteringFile:
    def test_format_and_original_ids(self, tmp_path):
        records, n, ids = parse("5 9 -1\n")
        g = normalize(records, n, original_ids=ids)
        path = tmp_path / "out.clu"
        write_clustering(path, g, np.array([0, 1]), cut=-1.0, seed=3)
        lines = path.read_text().splitlines()
        assert lines[0] == "# edge_cut -1"
        assert lines[1] == "# z_value 0"
        assert lines[2] == "# k 2"
        assert lines[3] == "# seed 3"
        assert lines[4:] == ["5 0", "9 1"]

    def test_cluster_ids_canonicalized(self, g_twin, tmp_path):
        a = tmp_path / "a.clu"
        b = tmp_path / "b.clu"
        write_clustering(a, g_twin, np.array([9, 9, 4, 4]), cut=-2.0, seed=0)
        write_clustering(b, g_twin, np.array([1, 1, 7, 7]), cut=-2.0, seed=0)
        assert a.read_bytes() == b.read_bytes()

    def test_z_value_na_without_negative_edges(self, tmp_path):
        g = normalize([(0, 1, 1.0)], 2)
        path = tmp_path / "p.clu"
        write_clustering(path, g, np.array([0, 0]), cut=0.0)
        assert "# z_value NA" in path.read_text()


def test_metrics_record_schema(g_twin):
    rec = metrics_record("twin", "scml", 1, g_twin, np.array([0, 0, 1, 1]), -2.0, 0.01)
    assert set(rec) == {
        "instance",
        "algorithm",
        "seed",
        "edge_cut",
        "z_value",
        "k",
        "time_seconds",
    }
    assert rec["edge_cut"] == -2.0
    assert rec["z_value"] == 0.0
    assert rec["k"] == 2
