"""Two-rail ladder poset and its order complex."""

import pytest

from stcx.tits import QuotientTitsPoset, build_poset, order_complex_betti


class TestBuildPoset:
    def test_rank2_two_incomparable_points(self):
        poset = build_poset(2)
        assert len(poset.elements) == 2
        a, b = poset.elements
        assert not poset.leq(a, b)
        assert not poset.leq(b, a)
        assert poset.leq(a, a)

    def test_rank3_shape(self):
        poset = build_poset(3)
        assert len(poset.elements) == 4
        assert len(poset.covering_pairs()) == 3
        assert poset.leq(("U", 1), ("U", 2))
        assert poset.leq(("V", 1), ("V", 2))
        assert poset.leq(("V", 1), ("U", 2))
        assert not poset.leq(("U", 1), ("V", 2))

    def test_rank5_size(self):
        assert len(build_poset(5).elements) == 8

    def test_transitivity(self):
        poset = build_poset(4)
        assert poset.leq(("U", 1), ("U", 3))
        assert poset.leq(("V", 1), ("U", 3))
        assert poset.leq(("V", 1), ("V", 3))
        # the U rail never climbs onto the V rail
        assert not poset.leq(("U", 1), ("V", 2))
        assert not poset.leq(("U", 1), ("V", 3))
        assert not poset.leq(("U", 2), ("V", 3))

    def test_rejects_small_rank(self):
        with pytest.raises(ValueError):
            build_poset(1)

    def test_is_frozen_dataclass(self):
        poset = build_poset(3)
        assert isinstance(poset, QuotientTitsPoset)
        with pytest.raises(AttributeError):
            poset.n = 5


class TestOrderComplex:
    def test_rank2_two_points(self):
        report = order_complex_betti(build_poset(2))
        assert report.betti == {0: 1}
        assert report.basis_sizes == [2]

    def test_rank3_simplex_counts(self):
        report = order_complex_betti(build_poset(3))
        assert report.basis_sizes == [4, 3]
        assert report.betti == {0: 0, 1: 0}

    def test_rank4_simplex_counts(self):
        report = order_complex_betti(build_poset(4))
        assert report.basis_sizes == [6, 9, 4]
        assert all(v == 0 for v in report.betti.values())

    @pytest.mark.parametrize("n", range(3, 9))
    def test_acyclic_through_rank8(self, n):
        report = order_complex_betti(build_poset(n))
        assert all(v == 0 for v in report.betti.values()), (n, report.betti)

    def test_report_fields(self):
        report = order_complex_betti(build_poset(3))
        assert report.family == "tits"
        assert report.n == 3
        assert report.p == 0
        assert "tits" in report.to_json()


class TestMorseStructure:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_cone_after_deleting_top_v(self, n):
        # dropping the top V node leaves everything below the top U node
        poset = build_poset(n)
        apex = ("U", n - 1)
        rest = [e for e in poset.elements if e != ("V", n - 1)]
        assert all(poset.leq(e, apex) for e in rest)
