"""Coinvariant dimensions: rank-2 closed forms, the c-parameter census,
the chain pipeline, and the bundled reference table."""

import json

import pytest

from stcx.chains import build_complex
from stcx.fp import is_prime
from stcx.steinberg import (
    CoinvariantReport,
    N2Census,
    coinv_det,
    coinv_trivial,
    load_reference_table,
    n2_census_formulas,
    n2_class_census,
    st2_det_formula,
    st2_formula,
    table_csv,
    table_json,
    table_rows,
    table_text,
    top_cohomology,
)

PRIMES_37 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


class TestClosedForms:
    def test_trivial_values(self):
        assert st2_formula(2) == 1
        assert st2_formula(3) == 1
        assert st2_formula(11) == 2
        assert st2_formula(23) == 3
        assert st2_formula(37) == 3

    def test_det_values(self):
        assert st2_det_formula(2) == 0
        assert st2_det_formula(3) == 0
        assert st2_det_formula(11) == 1
        assert st2_det_formula(13) == 0
        assert st2_det_formula(37) == 2

    def test_residue_cases(self):
        # one prime from each residue class mod 12
        assert st2_formula(13) == 1
        assert st2_formula(17) == 2
        assert st2_formula(19) == 2
        assert st2_det_formula(17) == 1
        assert st2_det_formula(19) == 1
        assert st2_det_formula(23) == 2

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            st2_formula(9)


class TestCensus:
    def test_frozen_counts(self):
        assert n2_class_census(13).edge_pr == 3
        assert n2_class_census(7).face_pr == 1
        assert n2_class_census(7).face_utw == 3
        assert n2_class_census(2) == N2Census(1, 0, 0, 1)
        assert n2_class_census(3) == N2Census(1, 0, 1, 2)

    def test_census_matches_formulas(self):
        for p in PRIMES_37:
            assert n2_class_census(p) == n2_census_formulas(p), p

    def test_census_matches_basis_sizes(self):
        # chain bases must reproduce the same four counts
        for p in PRIMES_37:
            census = n2_class_census(p)
            tr = build_complex(p, 2, "augmented", "trivial")
            dt = build_complex(p, 2, "augmented", "det")
            assert len(tr.bases[1]) == census.edge_pr, p
            assert len(tr.bases[2]) == census.face_pr, p
            assert len(dt.bases[1]) == census.edge_utw, p
            assert len(dt.bases[2]) == census.face_utw, p


class TestCoinvariants:
    def test_formula_chain_agreement(self):
        for p in (2, 3, 5, 7, 11, 13):
            assert coinv_trivial(p, 2) == st2_formula(p), p
            assert coinv_det(p, 2) == st2_det_formula(p), p

    def test_exactness_bookkeeping(self):
        # trivial: edge count minus face count; det: the same plus the
        # one-dimensional degree-one correction
        for p in PRIMES_37:
            census = n2_class_census(p)
            assert coinv_trivial(p, 2) == census.edge_pr - census.face_pr
            assert coinv_det(p, 2) == 1 + census.edge_utw - census.face_utw

    def test_rank3_vanishing(self):
        for p in (2, 3, 5):
            assert coinv_trivial(p, 3) == 0, p

    def test_rank3_nonvanishing(self):
        assert coinv_trivial(11, 3) >= 1

    def test_rank3_det_zero(self):
        for p in (2, 5, 7):
            assert coinv_det(p, 3) == 0, p


class TestTopCohomology:
    def test_examples(self):
        assert top_cohomology(11, 2).dim_top_cohomology == 3
        assert top_cohomology(5, 3).dim_top_cohomology == 0
        assert top_cohomology(37, 2).dim_top_cohomology == 5

    def test_additivity_and_fields(self):
        r = top_cohomology(7, 2)
        assert isinstance(r, CoinvariantReport)
        assert r.dim_top_cohomology == r.dim_trivial + r.dim_det
        assert r.method == "chain"
        assert r.elapsed >= 0.0

    def test_formula_method(self):
        r = top_cohomology(31, 2, method="formula")
        assert (r.dim_trivial, r.dim_det) == (3, 2)
        assert r.method == "formula"
        with pytest.raises(ValueError):
            top_cohomology(5, 3, method="formula")


class TestReferenceTable:
    def test_fixture_complete(self):
        ref = load_reference_table()
        assert sorted(ref) == PRIMES_37
        assert ref[11] == (2, 1, 3)
        assert ref[37] == (3, 2, 5)

    def test_computed_rows_match_fixture(self):
        ref = load_reference_table()
        for p, dim_st, dim_det, h1 in table_rows(37):
            assert ref[p] == (dim_st, dim_det, h1), p

    def test_csv_shape(self):
        rows = table_rows(7)
        blob = table_csv(rows)
        lines = blob.strip().split("\n")
        assert lines[0] == "p,dim_st,dim_st_det,h1_top"
        assert lines[1] == "2,1,0,1"
        assert len(lines) == 1 + sum(1 for q in range(2, 8) if is_prime(q))

    def test_json_shape(self):
        data = json.loads(table_json(table_rows(5)))
        assert data[0]["p"] == 2
        assert data[0]["dim_trivial"] == 1
        assert data[0]["dim_top_cohomology"] == 1
        assert "elapsed" not in data[0]

    def test_text_shape(self):
        blob = table_text(table_rows(5))
        assert "p" in blob.splitlines()[0]
        assert any("5" in line for line in blob.splitlines())
