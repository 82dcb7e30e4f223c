# proj/src/cli/verification.py
"""
The property suite behind ``verify``: named checks over the algebraic,
field, solution-space, spectral and index layers, at a configured scale.
"""

import random
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel
from tqdm import tqdm

from src.algebra.scalar import scalar
from src.clifford.algebraic_maps import iota, mu, project_half, project_threehalf, standard_basis
from src.clifford.spinor_space import SpinorVec, field_space
from src.core.base_processor import BaseProcessor
from src.core.exceptions import UsageError
from src.fields.forms import y_identity_defect
from src.fields.operators import (
    delta_div,
    gradient,
    iota_field,
    mu_field,
    project_half_field,
    project_threehalf_field,
    twisted_dirac_blocks,
    predicted_blocks,
    transported_dirac,
    twistor_adjoint,
    twisted_dirac,
    xi_map,
    xi_target,
)
from src.fields.sampling import (
    random_admissible_one_form,
    random_kform,
    random_one_form,
    random_scalar,
    random_spinor_field,
)
from src.index.bundles import (
    FormalBundle,
    ahat,
    ahat_by_roots,
    alternating_exterior_by_roots,
    alternating_exterior_sum,
    ch_cotangent_class,
    ch_exterior_power_class,
    chern_root_expansion,
)
from src.index.char_class import TruncatedPontryaginRing
from src.index.index_calculator import ManifoldDescriptor, dim8_audit, evaluate_index, symbolic_index_class
from src.solutions.decomposition import RSDecomposer, build_direct_sum_report
from src.solutions.solution_spaces import compute_monogenic_basis, compute_rs_basis, monogenic_dimension
from src.spectra.cross_checks import (
    dirac_crosscheck,
    integrality_sweep,
    rs_sphere_cross_table,
    tensor_decomposition_table,
    twistor_provenance_table,
    weyl_m1_check,
)

SCALES = ("quick", "default")


class CheckResult(BaseModel):
    name: str
    passed: bool
    details: Dict[str, Any] = {}


class VerificationReport(BaseModel):
    scale: str
    seed: int
    checks: List[CheckResult]
    passed: bool


CheckFn = Callable[[Dict[str, Any], random.Random], CheckResult]
CHECKS: Dict[str, CheckFn] = {}


def check(name: str) -> Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        CHECKS[name] = fn
        return fn

    return register


def _count(failures: Dict[str, int], label: str, ok: bool) -> None:
    failures.setdefault(label, 0)
    if not ok:
        failures[label] += 1


@check("algebraic-identities")
def check_algebraic_identities(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    failures: Dict[str, int] = {}
    cases = int(cfg["identity_cases"])
    max_deg, max_terms = int(cfg["max_field_degree"]), int(cfg["max_terms"])
    for m in cfg["identity_dims"]:
        space = field_space(m)
        # pointwise identities on the full basis of S ⊗ (ℝ^m)*
        for form in standard_basis(space):
            half, three = project_half(form), project_threehalf(form)
            _count(failures, "projections_sum_to_identity", (half + three - form).is_zero())
            _count(failures, "half_idempotent", (project_half(half) - half).is_zero())
            _count(failures, "threehalf_idempotent", (project_threehalf(three) - three).is_zero())
            _count(failures, "mu_kills_threehalf", mu(three).is_zero())
        for b in range(space.dim_s):
            s = SpinorVec.basis(space, b)
            _count(failures, "mu_iota_identity", (mu(iota(s)) - s).is_zero())
        for _ in range(cases):
            phi = random_spinor_field(space, max_deg, rng, max_terms)
            psi = random_one_form(space, max_deg, rng, max_terms)
            admissible = random_admissible_one_form(space, max_deg, rng, max_terms)
            _count(failures, "mu_iota_identity", (mu_field(iota_field(phi)) - phi).is_zero())
            _count(
                failures,
                "projections_sum_to_identity",
                (project_half_field(psi) + project_threehalf_field(psi) - psi).is_zero(),
            )
            _count(failures, "mu_kills_threehalf", mu_field(project_threehalf_field(psi)).is_zero())
            _count(
                failures,
                "twistor_adjoint_is_two_iota_delta",
                (twistor_adjoint(admissible) - iota_field(delta_div(admissible)).scaled(scalar(2))).is_zero(),
            )
            _count(
                failures,
                "half_gradient_is_iota_dirac",
                (project_half_field(gradient(phi)) - transported_dirac(phi)).is_zero(),
            )
    return CheckResult(name="algebraic-identities", passed=not any(failures.values()), details={"failures": failures})


@check("block-form")
def check_block_form(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    failures: Dict[str, int] = {}
    for m in cfg["identity_dims"]:
        space = field_space(m)
        for _ in range(int(cfg["block_cases"])):
            sigma = random_spinor_field(space, int(cfg["max_field_degree"]), rng, int(cfg["max_terms"]))
            psi3 = random_admissible_one_form(space, int(cfg["max_field_degree"]), rng, int(cfg["max_terms"]))
            actual = twisted_dirac_blocks(sigma, psi3)
            predicted = predicted_blocks(sigma, psi3)
            for block in ("half_from_half", "half_from_threehalf", "threehalf_from_half", "threehalf_from_threehalf"):
                _count(failures, block, (getattr(actual, block) - getattr(predicted, block)).is_zero())
            whole = twisted_dirac(iota_field(sigma) + psi3)
            summed = (
                actual.half_from_half
                + actual.half_from_threehalf
                + actual.threehalf_from_half
                + actual.threehalf_from_threehalf
            )
            _count(failures, "blocks_sum_to_twisted_dirac", (whole - summed).is_zero())
    return CheckResult(name="block-form", passed=not any(failures.values()), details={"failures": failures})


@check("y-identity")
def check_y_identity(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    failures: Dict[str, int] = {}
    for m in cfg["identity_dims"]:
        space = field_space(m)
        for degree in cfg["form_degrees"]:
            if degree >= m:
                continue
            for _ in range(int(cfg["form_cases"])):
                omega = random_kform(space, degree, int(cfg["max_field_degree"]), rng)
                _count(failures, f"m={m},degree={degree}", y_identity_defect(omega).is_zero())
    return CheckResult(name="y-identity", passed=not any(failures.values()), details={"failures": failures})


@check("monogenic-dims")
def check_monogenic_dims(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    table = {}
    ok = True
    for m in cfg["monogenic_dims"]:
        for k in cfg["monogenic_degrees"]:
            dim = compute_monogenic_basis(m, k).dim
            expected = monogenic_dimension(m, k)
            table[f"m={m},k={k}"] = [dim, expected]
            ok = ok and dim == expected
    return CheckResult(name="monogenic-dims", passed=ok, details={"dims": table})


def _random_solution(basis, rng: random.Random):
    total = basis[0].scaled(scalar(0))
    for field in basis:
        total = total + field.scaled(random_scalar(rng))
    return total


@check("rs-decomposition")
def check_rs_decomposition(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    cells = {}
    ok = True
    for m in cfg["decomposition_dims"]:
        for k in cfg["decomposition_degrees"]:
            decomposer = RSDecomposer(m, k)
            solutions = compute_rs_basis(m, k)
            report = build_direct_sum_report(decomposer, solutions, compute_monogenic_basis(m, k))
            xi_ok = all(
                (twisted_dirac(xi_map(psi0, k)) - xi_target(psi0)).is_zero()
                for psi0 in decomposer.monogenics_down.basis
            )
            resum_ok = True
            if solutions.basis:
                samples = [_random_solution(solutions.basis, rng) for _ in range(int(cfg["decompositions_per_cell"]))]
                samples = [s for s in samples if not s.is_zero()]
                for psi, parts in zip(samples, decomposer.decompose_many(samples)):
                    resum_ok = resum_ok and (parts.resum() - psi).is_zero() and parts.l_psi1_zero
                    resum_ok = resum_ok and parts.psi2_preimage_monogenic and parts.psi3_preimage_monogenic
            cell_ok = report.passed and xi_ok and resum_ok
            ok = ok and cell_ok
            cells[f"m={m},k={k}"] = {
                "passed": cell_ok,
                "xi_identity": xi_ok,
                "decompose_resum": resum_ok,
                "report": report.model_dump(mode="json"),
            }
    return CheckResult(name="rs-decomposition", passed=ok, details={"cells": cells})


@check("multiplicity-integrality")
def check_integrality(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    report = integrality_sweep(int(cfg["integrality_max_n"]), int(cfg["integrality_max_l"]))
    return CheckResult(name="multiplicity-integrality", passed=report.passed, details=report.model_dump(mode="json"))


@check("weyl")
def check_weyl(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    rows = [weyl_m1_check(m, k) for m in cfg["decomposition_dims"] for k in cfg["decomposition_degrees"]]
    return CheckResult(
        name="weyl",
        passed=all(r.holds for r in rows),
        details={"rows": [r.model_dump(mode="json") for r in rows]},
    )


@check("dirac-crosscheck")
def check_dirac_crosscheck(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    rows = dirac_crosscheck(int(cfg["dirac_crosscheck_max_m"]), int(cfg["dirac_crosscheck_max_l"]))
    return CheckResult(
        name="dirac-crosscheck",
        passed=all(r.holds for r in rows),
        details={"rows": [r.model_dump(mode="json") for r in rows]},
    )


@check("twistor-provenance")
def check_twistor_provenance(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    max_l = int(cfg["provenance_max_l"])
    rows = [r for n in range(3, int(cfg["provenance_max_n"]) + 1) for r in twistor_provenance_table(n, max_l)]
    k_max = max(cfg["decomposition_degrees"])
    cross = [
        r
        for m in cfg["decomposition_dims"]
        if m >= 4
        for r in rs_sphere_cross_table(m, k_max, k_max + 1)
    ]
    return CheckResult(
        name="twistor-provenance",
        passed=all(r.agrees for r in rows) and all(r.agrees for r in cross),
        details={
            "provenance": [r.model_dump(mode="json") for r in rows],
            "rs_sphere": [r.model_dump(mode="json") for r in cross],
        },
    )


@check("tensor-decomposition")
def check_tensor_decomposition(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    rows = tensor_decomposition_table(int(cfg["tensor_max_dim"]))
    return CheckResult(
        name="tensor-decomposition",
        passed=all(r.holds for r in rows),
        details={"rows": [r.model_dump(mode="json") for r in rows]},
    )


def _random_bundle(num_roots: int, rng: random.Random) -> FormalBundle:
    cotangent = FormalBundle.cotangent(num_roots)
    pool = [
        FormalBundle.trivial(num_roots, rng.randint(1, 3)),
        cotangent,
        cotangent.exterior_power(2),
        cotangent.direct_sum(FormalBundle.trivial(num_roots, 1)),
    ]
    return rng.choice(pool)


@check("chern-character")
def check_chern_character(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    results: Dict[str, bool] = {}
    for dim in cfg["chern_dims"]:
        n = dim // 2
        ring = TruncatedPontryaginRing(n, max(dim, 8))
        a_hat = ahat(ring)
        cot = ch_cotangent_class(ring)
        results[f"dim{dim}:ahat_printed"] = (
            a_hat.coefficient("p1") == Fraction(-1, 24)
            and a_hat.coefficient("p1^2") == Fraction(7, 5760)
            and a_hat.coefficient("p2") == Fraction(-4, 5760)
        )
        results[f"dim{dim}:ch_cotangent_printed"] = (
            cot.constant_term() == dim
            and cot.coefficient("p1") == 1
            and cot.coefficient("p1^2") == Fraction(1, 12)
            and cot.coefficient("p2") == Fraction(-2, 12)
        )
        results[f"dim{dim}:ahat_two_paths"] = a_hat == chern_root_expansion(ring, [ahat_by_roots(ring)])
        cotangent = FormalBundle.cotangent(n)
        results[f"dim{dim}:ch_cotangent_two_paths"] = cot == cotangent.chern_character(ring)
        results[f"dim{dim}:exterior_two_paths"] = all(
            ch_exterior_power_class(ring, j) == cotangent.exterior_power(j).chern_character(ring)
            for j in range(2 * n + 1)
        )
        results[f"dim{dim}:telescoping"] = alternating_exterior_sum(ring) == alternating_exterior_by_roots(ring)
        products = True
        for _ in range(3):
            e, f = _random_bundle(n, rng), _random_bundle(n, rng)
            products = products and e.tensor(f).chern_character(ring) == e.chern_character(ring) * f.chern_character(ring)
            products = products and e.direct_sum(f).chern_character(ring) == e.chern_character(ring) + f.chern_character(ring)
        results[f"dim{dim}:sum_and_product"] = products
    return CheckResult(name="chern-character", passed=all(results.values()), details={"results": results})


@check("dim4-index")
def check_dim4_index(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    dirac = symbolic_index_class(4, "D_1/2")
    rs = symbolic_index_class(4, "D_3/2")
    k3 = ManifoldDescriptor(dim=4, pontryagin_numbers={"p1": -48})
    values = {op: evaluate_index(k3, op).index for op in ("D_1/2", "D_3/2", "D_T")}
    ratio_ok = rs == dirac * (-19)
    k3_ok = (values["D_1/2"].to_fraction(), values["D_3/2"].to_fraction()) == (2, -38)
    return CheckResult(
        name="dim4-index",
        passed=ratio_ok and k3_ok,
        details={
            "dirac_class": dirac.to_string(),
            "rs_class": rs.to_string(),
            "ratio_minus_19": ratio_ok,
            "k3": {op: v.model_dump() for op, v in values.items()},
        },
    )


@check("dim8-audit")
def check_dim8_audit(cfg: Dict[str, Any], rng: random.Random) -> CheckResult:
    audit = dim8_audit()
    ahat_ok = all(c.agrees_with_printed for c in audit.ahat)
    p2 = next(c for c in audit.rarita_schwinger if c.monomial == "p2")
    return CheckResult(
        name="dim8-audit",
        passed=audit.self_consistent and ahat_ok and p2.agrees_with_printed,
        details=audit.model_dump(mode="json"),
    )


class VerificationSuite(BaseProcessor):
    """Runs the registered checks for a request {"scale", "only"}."""

    def process(self, input_data: Dict[str, Any]) -> VerificationReport:
        scale = input_data.get("scale", "default")
        if scale not in SCALES:
            raise UsageError(f"unknown scale {scale!r}; expected one of {SCALES}")
        aliases = self.config.get_config("verify", "aliases", {}) or {}
        only: Optional[List[str]] = [aliases.get(n, n) for n in input_data.get("only") or []] or None
        unknown = [name for name in only or [] if name not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; available: {sorted(CHECKS)}")

        cfg = self.config.get_config("verify", scale, {})
        if not cfg:
            raise UsageError(f"verify_config.yaml has no '{scale}' section")
        seed = int(cfg.get("seed", 0))
        selected = [name for name in CHECKS if only is None or name in only]

        results = []
        for name in tqdm(selected, desc="verify", unit="check", disable=None):
            # per-check stream, independent of --only
            rng = random.Random(f"{seed}:{name}")
            result = CHECKS[name](cfg, rng)
            (self.log_info if result.passed else self.log_error)(f"{name}: {'PASS' if result.passed else 'FAIL'}")
            results.append(result)
        return VerificationReport(scale=scale, seed=seed, checks=results, passed=all(r.passed for r in results))
