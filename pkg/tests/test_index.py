# proj/tests/test_index.py

import os
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.core.exceptions import InputFileError, UsageError
from src.index.bundles import (
    FormalBundle,
    ahat,
    ahat_by_roots,
    ahat_log_coefficients,
    ahat_root_coefficients,
    ahat_series,
    alternating_exterior_by_roots,
    alternating_exterior_sum,
    ch_cotangent,
    ch_cotangent_class,
    ch_exterior_cotangent,
    ch_exterior_power_class,
    chern_root_expansion,
    ring_for_dim,
)
from src.index.char_class import (
    TruncatedPontryaginRing,
    class_from_strings,
    monomials_of_degree,
    parse_monomial,
)
from src.index.index_calculator import (
    IndexCalculator,
    ManifoldDescriptor,
    dim8_audit,
    evaluate_index,
    hsd_index_forms,
    index_dirac,
    index_hsd,
    index_rs,
    index_twisted,
    index_twisted_cotangent,
    load_descriptor,
    symbolic_index_class,
    symbolic_integrand,
)


class TestTruncatedRing:
    def test_parse_monomial(self):
        assert parse_monomial("p1^2*p2", 2) == (2, 1)
        assert parse_monomial("p1 ** 2", 2) == (2, 0)
        assert parse_monomial("1", 2) == (0, 0)

    @pytest.mark.parametrize("text", ["q1", "p3", "p1^", "p1*"])
    def test_malformed_monomial(self, text):
        with pytest.raises(UsageError):
            parse_monomial(text, 2)

    def test_top_degree_monomials(self):
        assert monomials_of_degree(2, 8) == [(2, 0), (0, 1)]
        assert monomials_of_degree(3, 12) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]

    def test_truncation(self):
        ring = TruncatedPontryaginRing.for_manifold(4)
        p1 = ring.generator(1)
        assert (p1 * p1).is_zero()
        assert ring.generator(2).is_zero()

    def test_power_sums(self):
        ring = TruncatedPontryaginRing(3, 12)
        # P_2 = p1² − 2p2, P_3 = p1³ − 3p1p2 + 3p3
        assert ring.power_sum(2) == class_from_strings(ring, {"p1^2": 1, "p2": -2})
        assert ring.power_sum(3) == class_from_strings(ring, {"p1^3": 1, "p1*p2": -3, "p3": 3})

    def test_classes_from_different_rings(self):
        with pytest.raises(UsageError):
            ring_for_dim(4).generator(1) + ring_for_dim(8).generator(1)


class TestCharacteristicClasses:
    def test_ahat_log_coefficients(self):
        coefficients = ahat_log_coefficients(2)
        assert coefficients == {1: Fraction(-1, 24), 2: Fraction(1, 2880)}

    def test_ahat_taylor_coefficients(self):
        assert ahat_root_coefficients(4) == (1, 0, Fraction(-1, 24), 0, Fraction(7, 5760))

    def test_ahat_series(self):
        assert ahat_series(4).to_string() == "-1/24*p1 + 1"
        assert ahat_series(8).to_string() == "7/5760*p1^2 - 1/1440*p2 - 1/24*p1 + 1"

    def test_ch_cotangent(self):
        assert ch_cotangent(4).to_string() == "p1 + 4"
        top = ch_cotangent(8).component(8)
        assert top.coefficient("p1^2") == Fraction(1, 12)
        assert top.coefficient("p2") == Fraction(-1, 6)

    def test_exterior_powers(self):
        assert ch_exterior_cotangent(4, 0).to_string() == "1"
        assert ch_exterior_cotangent(4, 1) == ch_cotangent(4)
        # Λ^j and Λ^{2n−j} are dual, and Ch is even in the roots
        assert ch_exterior_cotangent(8, 1) == ch_exterior_cotangent(8, 7)
        assert ch_exterior_cotangent(8, 2).constant_term() == 28
        with pytest.raises(UsageError):
            ch_exterior_cotangent(4, 5)

    @pytest.mark.parametrize("dim", [4, 6, 8])
    def test_root_path_agrees(self, dim):
        ring = ring_for_dim(dim)
        cotangent = FormalBundle.cotangent(ring.num_roots)
        assert chern_root_expansion(ring, [ahat_by_roots(ring)]) == ahat(ring)
        assert cotangent.chern_character(ring) == ch_cotangent_class(ring)
        for j in range(2 * ring.num_roots + 1):
            assert cotangent.exterior_power(j).chern_character(ring) == ch_exterior_power_class(ring, j)

    def test_telescoping_sum_is_top_class(self):
        ring = TruncatedPontryaginRing(2, 8)
        assert alternating_exterior_sum(ring) == ring.generator(2)
        assert alternating_exterior_by_roots(ring) == ring.generator(2)

    def test_chern_character_is_a_ring_map(self):
        ring = TruncatedPontryaginRing(2, 8)
        e = FormalBundle.cotangent(2)
        f = e.exterior_power(2).direct_sum(FormalBundle.trivial(2, 1))
        assert e.tensor(f).rank == e.rank * f.rank
        assert e.tensor(f).chern_character(ring) == e.chern_character(ring) * f.chern_character(ring)
        assert e.direct_sum(f).chern_character(ring) == e.chern_character(ring) + f.chern_character(ring)


class TestIndexFormulas:
    @pytest.fixture
    def k3(self, sample_dir):
        """The K3 surface: dim 4, p1 = −48"""
        return load_descriptor(sample_dir / "k3.json")

    def test_symbolic_classes_in_dimension_four(self):
        assert symbolic_index_class(4, "D_1/2").to_string() == "-1/24*p1"
        assert symbolic_index_class(4, "D_T").to_string() == "5/6*p1"
        assert symbolic_index_class(4, "D_3/2").to_string() == "19/24*p1"
        assert symbolic_index_class(4, "D_3/2") == symbolic_index_class(4, "D_1/2") * (-19)

    def test_full_integrand_keeps_lower_degrees(self):
        assert symbolic_integrand(4, "D_1/2") == ahat(ring_for_dim(4))
        assert symbolic_integrand(4, "D_3/2").to_string() == "19/24*p1 + 5"

    def test_k3(self, k3):
        assert index_dirac(k3).index.to_fraction() == 2
        assert index_rs(k3).index.to_fraction() == -38
        assert index_twisted_cotangent(k3).index.to_fraction() == -40
        assert index_rs(k3).integral

    def test_hsd_reduces_to_rs(self, k3):
        assert index_hsd(k3, 1).index == index_rs(k3).index
        assert symbolic_index_class(8, "D_j", 1) == symbolic_index_class(8, "D_3/2")

    def test_hsd_range(self, k3):
        with pytest.raises(UsageError):
            index_hsd(k3, 2)

    def test_hsd_forms(self, k3):
        forms = hsd_index_forms(4, 1, k3)
        assert forms.sum_form == "19/24*p1"
        assert forms.difference_form == "-7/8*p1"
        assert forms.sum_index.to_fraction() == -38
        assert forms.difference_index.to_fraction() == 42

    def test_twisted_by_formal_bundles(self, k3):
        assert index_twisted(k3, FormalBundle.trivial(2, 1)).to_fraction() == 2
        assert index_twisted(k3, FormalBundle.cotangent(2)).to_fraction() == -40

    @pytest.mark.parametrize("operator", ["D_1/2", "D_T", "D_3/2"])
    def test_zero_descriptor(self, sample_dir, operator):
        descriptor = load_descriptor(sample_dir / "zero_dim8.json")
        assert evaluate_index(descriptor, operator).index.to_fraction() == 0

    def test_odd_dimension(self):
        report = evaluate_index(ManifoldDescriptor(dim=5), "D_3/2")
        assert report.index.to_fraction() == 0
        assert report.note

    def test_unsupported_dimension(self):
        with pytest.raises(UsageError):
            evaluate_index(ManifoldDescriptor(dim=14), "D_1/2")

    def test_rational_numbers_accepted(self):
        descriptor = ManifoldDescriptor(dim=8, pontryagin_numbers={"p1^2": "5760/7", "p2": {"num": 0, "den": 1}})
        assert index_dirac(descriptor).index.to_fraction() == 1


class TestDescriptors:
    def test_missing_file(self, sample_dir):
        with pytest.raises(InputFileError):
            load_descriptor(sample_dir / "absent.json")

    def test_malformed_json(self, sample_dir):
        with pytest.raises(InputFileError) as info:
            load_descriptor(sample_dir / "malformed_descriptor.json")
        assert info.value.to_dict()["error"] == "input_file"

    def test_wrong_degree(self, sample_dir):
        with pytest.raises(InputFileError):
            load_descriptor(sample_dir / "wrong_degree.json")


class TestDim8Audit:
    def test_recomputed_relation(self):
        audit = dim8_audit()
        assert audit.self_consistent
        assert [r.to_fraction() for r in audit.relation_recomputed] == [249, Fraction(-1, 4)]
        assert not audit.relation_agrees

    def test_coefficients(self):
        audit = dim8_audit()
        assert all(c.agrees_with_printed for c in audit.ahat)
        rs = {c.monomial: c for c in audit.rarita_schwinger}
        assert rs["p2"].agrees_with_printed
        assert rs["p1^2"].recomputed.to_fraction() == Fraction(303, 5760)
        assert not rs["p1^2"].agrees_with_printed


class TestIndexCalculator:
    def test_descriptor_path(self, config, sample_dir):
        report = IndexCalculator(config).process({"operator": "D_j", "j": 1, "descriptor": str(sample_dir / "k3.json")})
        assert report.index.to_fraction() == -38
        assert report.forms.difference_index.to_fraction() == 42

    def test_symbolic_only(self, config):
        report = IndexCalculator(config).process({"operator": "D_3/2", "dim": 8})
        assert report.index is None
        assert report.symbolic_class == "101/1920*p1^2 - 83/480*p2"


if __name__ == "__main__":
    pytest.main([__file__])
