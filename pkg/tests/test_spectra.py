# proj/tests/test_spectra.py

import os
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.cli.reports import spectrum_from_csv, spectrum_from_json, to_csv, to_json
from src.core.exceptions import UsageError
from src.spectra.cross_checks import (
    dirac_crosscheck,
    integrality_sweep,
    rs_sphere_cross_table,
    tensor_decomposition_table,
    twistor_provenance_table,
    weyl_m1_check,
)
from src.spectra.sphere_spectra import (
    SpectrumTableBuilder,
    dirac_multiplicity,
    dirac_spectrum,
    hsd_spectrum,
    mu2_multiplicity_exact,
    rs_spectrum,
    sphere_restriction_factor,
)
from src.spectra.weights import (
    HighestWeight,
    higher_spin_weight,
    is_dominant,
    s32_dimension_check,
    spin_weight,
    tensor_decomposition_check,
    weyl_dim,
    weyl_dim_pair,
)


class TestDiracSpectrum:
    def test_row_count(self):
        rows = dirac_spectrum(3, 2)
        assert len(rows) == 6
        assert [r.sign for r in rows[:2]] == [1, -1]

    def test_lowest_level(self):
        top, bottom = dirac_spectrum(3, 0)
        assert top.eigenvalue == Fraction(3, 2)
        assert bottom.eigenvalue == Fraction(-3, 2)
        assert top.multiplicity == bottom.multiplicity == 2

    @pytest.mark.parametrize("n, l, mult", [(2, 0, 2), (3, 2, 12), (4, 1, 16), (5, 1, 20)])
    def test_multiplicity(self, n, l, mult):
        assert dirac_multiplicity(n, l) == mult

    def test_restriction_factor(self):
        assert sphere_restriction_factor(3) == 2
        assert sphere_restriction_factor(4) == 1


class TestHigherSpinSpectrum:
    def test_rs_on_four_sphere(self):
        rows = hsd_spectrum(4, 1, 1)
        assert len(rows) == 4
        mu1, mu2 = rows[0], rows[2]
        assert (mu1.series, mu1.eigenvalue_abs, mu1.multiplicity) == ("mu1", Fraction(3), 20)
        assert (mu2.series, mu2.eigenvalue_abs, mu2.multiplicity) == ("mu2", Fraction(3, 2), 16)

    @pytest.mark.parametrize("n, j", [(4, 2), (4, 0), (6, 3)])
    def test_index_range(self, n, j):
        with pytest.raises(UsageError):
            hsd_spectrum(n, j, 2)

    def test_rs_specializations_agree(self):
        assert len(rs_spectrum(6, 4)) == 16

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_mu2_matches_dirac_at_same_level(self, n):
        for l in range(1, 5):
            assert mu2_multiplicity_exact(n, 1, l) == dirac_multiplicity(n, l)

    def test_integrality_sweep(self):
        report = integrality_sweep(10, 6)
        assert report.failures == []
        assert report.specialized_agree
        assert report.passed


class TestSpectrumTables:
    def test_builder_checks_sphere_dimension(self, config):
        with pytest.raises(UsageError):
            SpectrumTableBuilder(config).process({"n": 1, "j": 0, "l_max": 2})

    def test_builder_selects_series(self, config):
        rows = SpectrumTableBuilder(config).process({"n": 5, "j": 2, "l_max": 2})
        assert {r.series for r in rows} == {"mu1", "mu2"}
        assert all(r.j == 2 for r in rows)

    def test_csv_round_trip(self):
        rows = hsd_spectrum(5, 1, 3)
        assert spectrum_from_csv(to_csv(rows)) == rows

    def test_json_round_trip(self):
        rows = dirac_spectrum(7, 3)
        assert spectrum_from_json(to_json(rows)) == rows

    def test_rationals_serialized_exactly(self):
        text = to_csv(hsd_spectrum(4, 1, 1))
        assert "eigenvalue_num,eigenvalue_den" in text.splitlines()[0]
        assert ",3,2," in text


class TestWeylDimension:
    @pytest.mark.parametrize(
        "N, entries, dim",
        [
            (3, [Fraction(3, 2)], 4),
            (5, [Fraction(1, 2), Fraction(1, 2)], 4),
            (5, [1, 0], 5),
            (5, [1, 1], 10),
            (6, [Fraction(1, 2)] * 3, 4),
            (8, [1, 0, 0, 0], 8),
        ],
    )
    def test_known_dimensions(self, N, entries, dim):
        assert weyl_dim(N, HighestWeight.of(entries)) == dim

    def test_even_pair(self):
        assert weyl_dim_pair(4, spin_weight(4, 1)) == 4
        assert weyl_dim_pair(4, HighestWeight.of([Fraction(3, 2), Fraction(3, 2)])) == 8

    @pytest.mark.parametrize(
        "N, entries",
        [(5, [Fraction(1, 2), Fraction(3, 2)]), (5, [1, Fraction(1, 2)]), (6, [1, 2, 0]), (5, [1, 0, 0])],
    )
    def test_non_dominant(self, N, entries):
        weight = HighestWeight.of(entries)
        assert not is_dominant(N, weight)
        with pytest.raises(UsageError):
            weyl_dim(N, weight)

    def test_negative_last_entry_is_dominant_in_even_rank(self):
        assert is_dominant(4, HighestWeight.of([Fraction(3, 2), Fraction(-3, 2)]))

    @pytest.mark.parametrize("m", range(3, 11))
    def test_s32_dimension(self, m):
        lhs, rhs = s32_dimension_check(m)
        assert lhs == rhs

    def test_tensor_decomposition(self):
        check = tensor_decomposition_check(7, 2)
        assert check.holds
        assert check.tensor_dim == 8 * 21
        assert len(check.summand_dims) == 3
        assert higher_spin_weight(7, 2).entries == (Fraction(3, 2), Fraction(3, 2), Fraction(1, 2))
        assert all(row.holds for row in tensor_decomposition_table(8))


class TestCrossChecks:
    def test_dirac_against_monogenics(self, config):
        rows = dirac_crosscheck(5, 2)
        assert len(rows) == 9
        assert all(row.holds for row in rows)

    def test_twistor_provenance(self):
        rows = twistor_provenance_table(4, 3)
        assert all(row.same_level for row in rows)
        assert all(row.agrees for row in rows)
        assert (rows[0].mu2_multiplicity, rows[0].dirac_multiplicity) == (16, 16)
        assert rows[0].mu2_eigenvalue == rows[0].scaled_dirac_eigenvalue == "3/2"

    def test_provenance_row_with_wrong_eigenvalue_disagrees(self):
        row = twistor_provenance_table(4, 1)[0]
        assert not row.model_copy(update={"mu2_eigenvalue": "5/2"}).agrees

    def test_m1_weyl(self, config):
        assert weyl_m1_check(4, 1).m1_dim == 8
        assert weyl_m1_check(4, 1).holds
        row = weyl_m1_check(3, 2)
        assert (row.weight, row.m1_dim, row.weyl_dim, row.holds) == ("none", 0, 0, True)

    def test_rs_sphere_table(self, config):
        rows = {(r.k, r.subspace): r for r in rs_sphere_cross_table(5, 1, 2)}
        assert rows[(1, "M1")].dimension == 20
        assert "mu1:l=1" in rows[(1, "M1")].matches
        assert rows[(1, "M2")].dimension == 40
        assert "mu2:l=2" in rows[(1, "M2")].matches

    def test_rs_sphere_rows_sit_at_predicted_levels(self, config):
        rows = {(r.k, r.subspace): r for r in rs_sphere_cross_table(4, 2, 3)}
        m1, m2 = rows[(2, "M1")], rows[(2, "M2")]
        assert (m1.expected_series, m1.expected_l, m1.eigenvalue, m1.multiplicity) == ("mu1", 2, "7/2", 10)
        assert (m2.expected_series, m2.expected_l, m2.eigenvalue, m2.multiplicity) == ("mu2", 3, "3/2", 20)
        assert all(row.agrees for row in rows.values())

    def test_rs_sphere_row_with_wrong_multiplicity_disagrees(self, config):
        row = rs_sphere_cross_table(4, 1, 2)[0]
        assert row.agrees
        assert not row.model_copy(update={"multiplicity": row.multiplicity + 1}).agrees

    def test_level_beyond_table_disagrees(self, config):
        m2 = [r for r in rs_sphere_cross_table(4, 1, 1) if r.subspace == "M2"][0]
        assert m2.eigenvalue is None
        assert not m2.agrees


if __name__ == "__main__":
    pytest.main([__file__])
