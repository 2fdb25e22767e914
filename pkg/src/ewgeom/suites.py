"""Named verification suites producing per-check records.

Each suite is a function ``(ctx) -> list[Check]``. Exact checks report the
largest entrywise deviation (as a float) and pass only on exact equality;
float checks pass when the deviation is within the tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import ewsector as ew
from . import fnforms as fn
from . import gaugealg as ga
from . import numbers as nb
from . import twospinor as ts
from .cxmulti import HermitianForm, h_contract, signature
from .poly import Poly
from .randgen import (
    random_anti_hermitian,
    random_flat_connection,
    random_linear_connection,
    random_poly,
    random_tvform,
    random_unimodular,
)
from .scales import COUPLINGS, DIMENSIONLESS, ScaleDim, to_natural_units
from .scenario import SUITES, Scenario
from .tetrad import ECMDInput, FieldJet, MassShellPoint, Tetrad, ecmd_lagrangian_point, mass_shell_projectors
from .tetrad import random_on_shell, theta_breve, theta_column_form


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    measured: object
    expected: object
    tolerance: float
    anchor: str
    backend: str

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "measured": self.measured,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "anchor": self.anchor,
            "backend": self.backend,
        }


@dataclass(frozen=True)
class RunContext:
    scenario: Scenario
    backend: str
    tol: float

    @property
    def samples(self) -> int:
        return max(1, self.scenario.samples)


def _deviation(a, b) -> float:
    d = nb.to_float(np.asarray(a) - np.asarray(b))
    return float(np.max(np.abs(d))) if d.size else 0.0


def compare(cid: str, a, b, ctx: RunContext, anchor: str, expected="equal") -> Check:
    """Exact equality on the exact backend, max deviation <= tol on the float backend."""
    a, b = np.asarray(a), np.asarray(b)
    dev = _deviation(a, b)
    if nb.backend_of(a) == nb.EXACT and nb.backend_of(b) == nb.EXACT:
        return Check(cid, nb.arrays_equal(a, b), dev, expected, 0.0, anchor, nb.EXACT)
    return Check(cid, dev <= ctx.tol, dev, expected, ctx.tol, anchor, nb.FLOAT)


def error_check(cid: str, err: float, tol: float, anchor: str, backend: str = nb.FLOAT) -> Check:
    err = float(err)
    return Check(cid, bool(err <= tol), err, 0.0, tol, anchor, backend)


def count_check(cid: str, failures: int, total: int, anchor: str) -> Check:
    """Exact identity checked on ``total`` random instances."""
    return Check(cid, failures == 0, f"{failures}/{total} failed", f"0/{total} failed", 0.0, anchor, nb.EXACT)


def value_check(cid: str, measured, expected, anchor: str, backend: str = nb.EXACT) -> Check:
    return Check(cid, measured == expected, measured, expected, 0.0, anchor, backend)


# --- Frolicher-Nijenhuis identities -----------------------------------------


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


def graded_antisymmetry_holds(phi: fn.TVForm, psi: fn.TVForm) -> bool:
    """[phi, psi] = -(-1)^{rs} [psi, phi]."""
    return fn.fn_bracket(phi, psi) == fn.fn_bracket(psi, phi).scale(-_sign(phi.r * psi.r))


def graded_jacobi_holds(phi: fn.TVForm, psi: fn.TVForm, chi: fn.TVForm) -> bool:
    """[phi, [psi, chi]] = [[phi, psi], chi] + (-1)^{rs} [psi, [phi, chi]]."""
    b = fn.fn_bracket
    lhs = b(phi, b(psi, chi))
    rhs = b(b(phi, psi), chi) + b(psi, b(phi, chi)).scale(_sign(phi.r * psi.r))
    return lhs == rhs


def lie_oracle_holds(u: fn.TVForm, v: fn.TVForm) -> bool:
    return fn.fn_bracket(u, v) == fn.lie_bracket(u, v)


def curvature_closed_form_holds(gamma: fn.LinearConnection) -> bool:
    table = fn.curvature_table_from_form(fn.curvature(gamma))
    return bool(np.all(table == fn.linear_curvature_table(gamma)))


def gauge_conjugation_holds(gamma: fn.LinearConnection, S: np.ndarray) -> bool:
    R = fn.linear_curvature_table(gamma)
    R2 = fn.linear_curvature_table(fn.gauge_transform(gamma, S))
    return bool(np.all(R2 == fn.conjugate_table(R, S)))


def alpha_decomposition_holds(gamma0: fn.LinearConnection, gamma: fn.LinearConnection) -> bool:
    """For flat gamma0: R[gamma] = -2[gamma0, alpha] - [alpha, alpha] with alpha = gamma - gamma0."""
    g0 = gamma0.to_tvform()
    if not fn.curvature(g0).is_zero():
        return False
    alpha = fn.decompose_alpha(gamma, gamma0)
    if not (alpha.is_basic() and alpha.is_vertical_valued()):
        return False
    rhs = -fn.fn_bracket(g0, alpha).scale(2) - fn.fn_bracket(alpha, alpha)
    return fn.curvature(gamma) == rhs


def _chart(rng: random.Random, max_n: int, max_k: int) -> tuple[int, int]:
    return rng.randint(1, max_n), rng.randint(1, max_k)


def fn_checks(rng: random.Random, pairs: int, triples: int, connections: int, gauges: int,
              max_n: int = 2, max_k: int = 2) -> list[Check]:
    out = []
    fails = 0
    for _ in range(pairs):
        n, k = _chart(rng, max_n, max_k)
        r, s = rng.randint(0, min(2, n + k)), rng.randint(0, min(2, n + k))
        fails += not graded_antisymmetry_holds(random_tvform(rng, n, k, r), random_tvform(rng, n, k, s))
    out.append(count_check("fn-identities.graded-antisymmetry", fails, pairs, "FN bracket graded antisymmetry"))

    fails = 0
    for _ in range(triples):
        n, k = _chart(rng, max_n, max_k)
        forms = [random_tvform(rng, n, k, rng.randint(0, min(2, n + k)), density=2) for _ in range(3)]
        fails += not graded_jacobi_holds(*forms)
    out.append(count_check("fn-identities.graded-jacobi", fails, triples, "FN bracket graded Jacobi identity"))

    fails = 0
    for _ in range(pairs):
        n, k = _chart(rng, max_n, max_k)
        names = fn.chart_names(n, k)
        u = fn.vector_field(n, k, [random_poly(rng, names) for _ in range(n + k)])
        v = fn.vector_field(n, k, [random_poly(rng, names) for _ in range(n + k)])
        fails += not lie_oracle_holds(u, v)
    out.append(count_check("fn-identities.lie-bracket", fails, pairs, "degree-0 bracket is the Lie bracket"))

    fails = 0
    for _ in range(connections):
        n, k = _chart(rng, max_n, max_k)
        fails += not curvature_closed_form_holds(random_linear_connection(rng, n, k))
    out.append(count_check("fn-identities.curvature-closed-form", fails, connections,
                           "curvature of a linear connection"))

    fails = 0
    for _ in range(gauges):
        n, k = _chart(rng, max_n, max_k)
        fails += not gauge_conjugation_holds(random_linear_connection(rng, n, k), random_unimodular(rng, n, k))
    out.append(count_check("fn-identities.gauge-conjugation", fails, gauges, "gauge-equivalent connections"))

    fails = 0
    for _ in range(gauges):
        n, k = _chart(rng, max_n, max_k)
        fails += not alpha_decomposition_holds(random_flat_connection(rng, n, k), random_linear_connection(rng, n, k))
    out.append(count_check("fn-identities.flat-decomposition", fails, gauges,
                           "curvature relative to a flat connection"))
    return out


def suite_fn_identities(ctx: RunContext) -> list[Check]:
    n = ctx.samples
    return fn_checks(random.Random(ctx.scenario.seed), n, max(1, n // 2), n, max(1, n // 2))


# --- two-spinors ------------------------------------------------------------


def clifford_deviation(gammas, backend: str) -> np.ndarray:
    """Array of gamma_l gamma_m + gamma_m gamma_l - 2 g_lm Id over all pairs."""
    eta = ts.lorentz_metric(backend)
    eye = nb.eye(4, backend)
    return np.array([[gammas[l] @ gammas[m] + gammas[m] @ gammas[l] - eye * (eta[l, m] * 2) for m in range(4)]
                     for l in range(4)], dtype=object if backend == nb.EXACT else complex)


def suite_spinor_clifford(ctx: RunContext) -> list[Check]:
    b = ctx.backend
    zero = nb.zeros((4, 4, 4, 4), b)
    out = []
    for basis, gam in (("weyl", ts.gamma_weyl(backend=b)), ("dirac", ts.gamma_dirac(backend=b))):
        out.append(compare(f"spinor-clifford.clifford-{basis}", clifford_deviation(gam, b), zero, ctx,
                           "Clifford relation", "0"))
        out.append(compare(f"spinor-clifford.gamma-{basis}-reference", np.array(gam),
                           np.array(ts.reference_gammas(basis, b)), ctx, "standard gamma representations"))
    e_low, e_up = ts.STANDARD_FRAME.eps_lower(b), ts.STANDARD_FRAME.eps_upper(b)
    out.append(compare("spinor-clifford.flat-sharp", e_low @ e_up, nb.eye(2, b) * ts.FLAT_SHARP_SIGN, ctx,
                       "symplectic raising and lowering", "-Id"))
    M = ts.charge_conjugation_matrix(backend=b)
    out.append(compare("spinor-clifford.charge-conjugation-square", M @ nb.conj(M),
                       nb.eye(4, b) * ts.CHARGE_CONJ_SQUARE, ctx, "charge conjugation", "-Id"))
    observer = ts.pauli_matrices(b)[0]
    P = ts.parity(observer)
    out.append(compare("spinor-clifford.parity-square", P @ P, nb.eye(4, b), ctx, "parity", "Id"))
    B = ts.weyl_to_dirac_matrix(b)
    out.append(compare("spinor-clifford.basis-change-orthogonal", B @ B.T, nb.eye(4, b), ctx,
                       "Weyl and Dirac bases", "Id"))
    return out


def suite_signatures(ctx: RunContext) -> list[Check]:
    b = ctx.backend
    out = [compare("signatures.pauli-orthonormal", ts.metric_table(backend=b), ts.lorentz_metric(b), ctx,
                   "Pauli basis orthonormality", "diag(1,-1,-1,-1)")]
    out.append(value_check("signatures.dirac-k", list(ts.k_signature(b)), [2, 2, 0], "Dirac Hermitian structure", b))
    out.append(value_check("signatures.lorentz-metric", list(signature(HermitianForm(ts.metric_table(backend=b)))),
                           [1, 3, 0], "Lorentzian metric on Hermitian spinors", b))
    h = ts.observer_metric(ts.pauli_matrices(b)[0])
    out.append(value_check("signatures.observer-metric", list(signature(h)), [2, 0, 0],
                           "observer-induced Hermitian metric", b))
    out.append(value_check("signatures.null-vector", bool(ts.is_null(ts.pauli_matrices(b)[0] + ts.pauli_matrices(b)[3])),
                           True, "null Hermitian spinors", b))
    return out


# --- gauge algebra ----------------------------------------------------------


def sample_charged_field(q=Fraction(2)) -> ga.ChargedField:
    """Fixed four-dimensional su(2) field whose Lagrangian reaches q^2."""
    names = fn.chart_names(4, 0)
    x = [Poly.var(names, f"x{i}") for i in range(1, 5)]
    z = Poly.zero(names)
    X = [[x[1], x[2], z], [x[2], z, x[0]], [z, x[3], z], [z, z, z]]
    return ga.ChargedField(q, X)


def charged_curvature_matches(f: ga.ChargedField, frame: ga.LieFrame, c) -> bool:
    """Frame-component curvature agrees with the curvature of gamma = q X^i l_i."""
    gamma = ga.matrix_connection(f, frame)
    lhs = ga.frame_curvature_matrices(ga.charged_curvature(f, c), frame, gamma.names)
    return bool(np.all(lhs == fn.linear_curvature_table(gamma)))


def q_grading(f: ga.ChargedField, c, g_inv) -> tuple[list[int], bool]:
    """Degrees in q of the gauge Lagrangian and whether the q^0 part is the abelian kinetic term."""
    exp = ga.lagrangian_q_expansion(f, c, g_inv)
    m = f.m
    no_c = np.full((m, m, m), 0, dtype=object)
    kinetic = ga.gauge_lagrangian(f, ga.charged_curvature(f, no_c), g_inv)
    return sorted(exp), exp.get(0) == kinetic


def suite_gauge_algebra(ctx: RunContext) -> list[Check]:
    b = ctx.backend
    out = []
    frame = ga.orthonormalize(ga.su2_generators(b))
    c = ga.structure_constants(frame)
    eps = -ga.levi_civita3()
    if b == nb.EXACT:
        ok = all(Fraction(c[idx]) == int(eps[idx]) for idx in np.ndindex(eps.shape))
        out.append(Check("gauge-algebra.su2-structure-constants", ok, _deviation(nb.exact_array(c), nb.exact_array(eps)),
                         "-epsilon", 0.0, "structure constants of su(2)", b))
    else:
        out.append(error_check("gauge-algebra.su2-structure-constants", np.max(np.abs(c - eps)), ctx.tol,
                               "structure constants of su(2)"))

    rng = np.random.default_rng(ctx.scenario.seed)
    h = HermitianForm(np.eye(2, dtype=complex))
    err = 0.0
    for _ in range(1000):
        X, Y = random_anti_hermitian(rng, 2), random_anti_hermitian(rng, 2)
        err = max(err, abs(h_contract(X, Y, h) - 0.5 * ga.killing_like(X, Y)))
    out.append(error_check("gauge-algebra.half-killing", err, ctx.tol, "Hermitian contraction of anti-Hermitian maps"))

    err = 0.0
    for _ in range(ctx.samples):
        n = int(rng.integers(1, 4))
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        B = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        kt = ga.killing_true(A, B)
        err = max(err, abs(kt - ga.killing_gl_closed_form(A, B)) / max(1.0, abs(kt)))
    out.append(error_check("gauge-algebra.killing-ad-trace", err, ctx.tol * 100, "Killing form of gl(n)"))

    names = fn.chart_names(4, 0)
    prng = random.Random(ctx.scenario.seed)
    u1 = ga.orthonormalize([nb.exact_array([[nb.I]])])
    ab = ga.ChargedField(Fraction(3), [[random_poly(prng, names, maxdeg=2)] for _ in range(4)])
    out.append(value_check("gauge-algebra.abelian-curvature",
                           charged_curvature_matches(ab, u1, np.zeros((1, 1, 1), dtype=object)), True,
                           "curvature of a U(1) gauge field"))
    su2 = ga.orthonormalize(ga.su2_generators(nb.EXACT))
    f = sample_charged_field()
    out.append(value_check("gauge-algebra.nonabelian-curvature",
                           charged_curvature_matches(f, su2, ga.structure_constants(su2)), True,
                           "curvature of a non-abelian gauge field"))
    eta = np.diag([1, -1, -1, -1]).astype(object)
    degrees, kinetic_ok = q_grading(f, ga.structure_constants(su2), eta)
    out.append(value_check("gauge-algebra.q-degrees", degrees, [0, 1, 2], "charge dependence of the gauge Lagrangian"))
    out.append(value_check("gauge-algebra.q-independent-kinetic", kinetic_ok, True,
                           "charge dependence of the gauge Lagrangian"))
    return out


# --- electroweak breaking ---------------------------------------------------


def random_gauge_fields(rng: np.random.Generator, theta_w: float) -> ew.EWGaugeFields:
    return ew.EWGaugeFields(rng.normal(size=4), rng.normal(size=4), rng.normal(size=4) + 1j * rng.normal(size=4), theta_w)


def round_trip_error(fields: ew.EWGaugeFields) -> float:
    back = ew.extract_fields(ew.assemble_W(fields), fields.theta_w)
    return float(max(np.max(np.abs(back.A - fields.A)), np.max(np.abs(back.Z - fields.Z)),
                     np.max(np.abs(back.Wp - fields.Wp))))


def polar_errors(hv: ew.HiggsValue) -> tuple[float, float]:
    """(distance of S from SU(2), reconstruction error of S (0, |phi|))."""
    f, S = ew.higgs_polar(hv)
    su = max(np.max(np.abs(S.conj().T @ S - np.eye(2))), abs(np.linalg.det(S) - 1))
    r = f.value + hv.mu
    rec = np.max(np.abs(S @ np.array([0, r]) - hv.phi))
    return float(su), float(rec)


def suite_ew_breaking(ctx: RunContext) -> list[Check]:
    sc = ctx.scenario
    b = ctx.backend
    out = [compare("ew-breaking.iota-metric", ew.iota_metric_table(b), ts.lorentz_metric(b) * 2, ctx,
                   "isospin frame metric", "2 eta")]
    angles = np.linspace(0.01, np.pi / 2 - 0.01, 100)
    err = max(float(np.max(np.abs(ew.iota_prime(t) - ew.iota_prime_projector_form(t)))) for t in angles)
    out.append(error_check("ew-breaking.iota-prime-forms", err, max(ctx.tol, 1e-14), "Weinberg-angle generator"))

    rng = np.random.default_rng(sc.seed)
    fields = ew.EWGaugeFields(sc.A, sc.Z, sc.Wp, sc.theta_w)
    err = round_trip_error(fields)
    for _ in range(500):
        err = max(err, round_trip_error(random_gauge_fields(rng, float(rng.uniform(0.05, 1.5)))))
    out.append(error_check("ew-breaking.field-round-trip", err, ctx.tol, "photon, Z and W fields"))

    hv = ew.HiggsValue(sc.phi, float(sc.mu), float(sc.lam))
    su, rec = polar_errors(hv)
    out.append(error_check("ew-breaking.higgs-polar-su2", su, ctx.tol, "polar form of the Higgs field"))
    out.append(error_check("ew-breaking.higgs-polar-reconstruction", rec, ctx.tol, "polar form of the Higgs field"))
    st = ew.potential_stationary(hv)
    out.append(error_check("ew-breaking.potential-stationary", abs(st["dV_ds"]), ctx.tol, "Higgs potential"))

    expected = sorted(["E11 = (iota0 + iota3)/2", "E22 = (iota0 - iota3)/2", "E21 = (iota1 - i iota2)/2",
                       "E12 = (iota1 + i iota2)/2"])
    true = sorted(k for k, v in ew.projector_identities().items() if v)
    out.append(value_check("ew-breaking.projector-identities", true, expected, "isospin projectors"))
    out.append(compare("ew-breaking.sector-orthogonality", ew.sector_gram(), np.eye(4, dtype=complex), ctx,
                       "charged and neutral sectors", "Id"))
    return out


# --- conformal weights and units --------------------------------------------


def format_lpow(d: ScaleDim) -> str:
    return f"L^{to_natural_units(d)}"


def suite_lagrangian_audit(ctx: RunContext) -> list[Check]:
    out = []
    for row in ew.conformal_weight_audit(overrides=ctx.scenario.dims):
        out.append(Check(f"lagrangian-audit.{row['term']}", row["ok"], format_lpow(row["dim"]), "L^0", 0.0,
                         "conformal weight of Lagrangian terms", nb.EXACT))
    for name, expected in (("e", 0), ("m", -1), ("G", 2)):
        got = to_natural_units(COUPLINGS[name])
        out.append(value_check(f"lagrangian-audit.natural-units-{name}", f"L^{got}", f"L^{expected}",
                               "natural units"))
    return out


# --- pointwise ECMD Lagrangian ----------------------------------------------


def scenario_dirac(sc: Scenario) -> np.ndarray:
    """Weyl components built from the scenario's left and right spinor values."""
    return np.concatenate([sc.psi_R, sc.psi_L[:, 0]])


def suite_ecmd_point(ctx: RunContext) -> list[Check]:
    sc = ctx.scenario
    out = []
    th = Tetrad(np.asarray(sc.tetrad, dtype=float))
    det = th.det
    four_det = theta_breve(th, theta_column_form(th), 1).value
    out.append(error_check("ecmd-point.theta-breve-normalisation", abs(four_det - 4 * det) / max(1.0, abs(det)),
                           ctx.tol * 10, "soldering form volume"))

    rng = np.random.default_rng(sc.seed)
    dY = rng.normal(size=(4, 4))
    Y = FieldJet(np.zeros(4), dY)
    eta = np.diag([1.0, -1, -1, -1])
    F_low = dY - dY.T  # F = 2 dY with dY_ab = (d_a Y_b - d_b Y_a)/2
    F_up = eta @ F_low @ eta
    res = ecmd_lagrangian_point(ECMDInput(Tetrad(np.eye(4)), Y=Y, F=F_up))
    target = -0.25 * float(np.sum(F_up * F_low))
    out.append(error_check("ecmd-point.maxwell-reduction", abs(res["l_em"].value - target), ctx.tol * 10,
                           "electromagnetic Lagrangian"))

    psi = scenario_dirac(sc)
    m = float(sc.mass)
    res = ecmd_lagrangian_point(ECMDInput(th, psi=FieldJet(psi), m=m, dims=sc.dims))
    kw = ts.k_form(ts.DiracSpinor.from_weyl(psi), ts.DiracSpinor.from_weyl(psi))
    out.append(error_check("ecmd-point.dirac-mass-term", abs(res["l_D"].value + m * np.real(kw) * det),
                           ctx.tol * 10, "Dirac Lagrangian"))
    out.append(error_check("ecmd-point.k-real", abs(np.imag(kw)), ctx.tol, "Dirac Hermitian structure"))
    for name in sorted(res):
        out.append(Check(f"ecmd-point.dimension-{name}", res[name].dim == DIMENSIONLESS, format_lpow(res[name].dim),
                         "L^0", 0.0, "conformal weight of Lagrangian terms", nb.EXACT))
    return out


# --- mass shells ------------------------------------------------------------


def projector_errors(pt: MassShellPoint) -> dict[str, float]:
    Pp, Pm = mass_shell_projectors(pt)
    eye = np.eye(4)
    return {
        "idempotent": float(max(np.max(np.abs(Pp @ Pp - Pp)), np.max(np.abs(Pm @ Pm - Pm)))),
        "complete": float(np.max(np.abs(Pp + Pm - eye))),
        "orthogonal": float(np.max(np.abs(Pp @ Pm))),
        "rank": float(max(abs(np.trace(Pp) - 2), abs(np.trace(Pm) - 2))),
    }


def suite_mass_shell(ctx: RunContext) -> list[Check]:
    sc = ctx.scenario
    m = float(sc.mass)
    rng = np.random.default_rng(sc.seed)
    worst = {"idempotent": 0.0, "complete": 0.0, "orthogonal": 0.0, "rank": 0.0}
    rank_ok = True
    tol = max(ctx.tol, 1e-10)
    for _ in range(500):
        pt = random_on_shell(rng, m)
        e = projector_errors(pt)
        for k in worst:
            worst[k] = max(worst[k], e[k] / max(1.0, float(pt.p[0]) / m))
        Pp, _ = mass_shell_projectors(pt)
        rank_ok &= int(np.linalg.matrix_rank(Pp, tol=1e-8)) == 2
    out = [error_check(f"mass-shell.{k}", worst[k], tol, "electron and positron projectors") for k in sorted(worst)]
    out.append(value_check("mass-shell.rank-two", rank_ok, True, "electron and positron projectors", nb.FLOAT))
    Pp, _ = mass_shell_projectors(MassShellPoint(np.array([m, 0, 0, 0]), m))
    out.append(compare("mass-shell.rest-frame", Pp, np.diag([1.0, 1, 0, 0]).astype(complex), ctx,
                       "rest-frame projector", "diag(1,1,0,0)"))
    return out


SUITE_FUNCS: dict[str, Callable[[RunContext], list[Check]]] = {
    "ecmd-point": suite_ecmd_point,
    "ew-breaking": suite_ew_breaking,
    "fn-identities": suite_fn_identities,
    "gauge-algebra": suite_gauge_algebra,
    "lagrangian-audit": suite_lagrangian_audit,
    "mass-shell": suite_mass_shell,
    "signatures": suite_signatures,
    "spinor-clifford": suite_spinor_clifford,
}
assert tuple(sorted(SUITE_FUNCS)) == SUITES


def run_suites(ctx: RunContext, names) -> list[Check]:
    """Run the named suites and merge their checks, ordered by id."""
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITE_FUNCS[name](ctx))
    return sorted(checks, key=lambda c: c.id)
