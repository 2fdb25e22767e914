"""Batch front end: ``verify`` runs suites, ``eval`` evaluates a scenario point, ``dump`` writes constant tables.

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import ewsector as ew
from . import gaugealg as ga
from . import numbers as nb
from . import twospinor as ts
from .errors import CheckFailure, EwgeomError, ParseError, UnknownKind, UnknownSuite
from .scales import ScaledQuantity, to_natural_units
from .scenario import SCHEMA_VERSION, SUITES, Scenario, load_scenario, parse_suites
from .suites import Check, RunContext, run_suites, scenario_dirac
from .tetrad import ECMDInput, FieldJet, Tetrad, ecmd_lagrangian_point

DUMP_KINDS = ("gamma-dirac", "gamma-weyl", "iota-frame", "structure-constants-su2")


@dataclass(frozen=True)
class Report:
    scenario: str
    backend: str
    tolerance: float
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def require_pass(self) -> None:
        if not self.ok:
            raise CheckFailure(", ".join(c.id for c in self.failed))

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "scenario": self.scenario,
            "backend": self.backend,
            "tolerance": self.tolerance,
            "summary": {"passed": len(self.checks) - len(self.failed), "failed": len(self.failed)},
            "checks": [_plain(c.to_json()) for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"scenario {self.scenario}  backend {self.backend}  tol {self.tolerance:g}"]
        for c in self.checks:
            lines.append(
                f"{c.status.upper()} {c.id}  measured={_fmt(c.measured)} expected={_fmt(c.expected)} "
                f"tol={c.tolerance:g} [{c.backend}] ({c.anchor})"
            )
        lines.append(f"{len(self.checks) - len(self.failed)} passed, {len(self.failed)} failed")
        return "\n".join(lines) + "\n"


def _plain(x):
    """JSON-safe copy: numpy scalars become Python numbers, complex becomes [re, im]."""
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return float(x) + 0.0  # folds -0.0 into 0.0
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real) + 0.0, float(x.imag) + 0.0]
    return x if isinstance(x, str) or x is None else str(x)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.3e}"
    return json.dumps(_plain(x))


def _dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def resolve(scenario: Scenario, suites: str | None, backend: str | None, tol: float | None) -> tuple[RunContext, tuple]:
    """Command-line flags override the scenario file."""
    names = parse_suites(suites) if suites else scenario.suites
    sc = replace(scenario, backend=backend or scenario.backend,
                 tolerance=scenario.tolerance if tol is None else tol)
    return RunContext(sc, sc.backend, sc.tolerance), names


def run(scenario: Scenario, suites: str | None = None, backend: str | None = None, tol: float | None = None) -> Report:
    ctx, names = resolve(scenario, suites, backend, tol)
    checks = run_suites(ctx, names)
    return Report(ctx.scenario.name, ctx.backend, ctx.tol, tuple(checks))


# --- eval -------------------------------------------------------------------


def _quantity(q: ScaledQuantity) -> dict:
    v = complex(q.value)
    return {"value": [v.real, v.imag], "dim": f"L^{to_natural_units(q.dim)}"}


def evaluate(sc: Scenario) -> dict:
    """Pointwise quantities of the scenario: Higgs data, gauge fields, Lagrangian terms."""
    hv = ew.HiggsValue(sc.phi, float(sc.mu), float(sc.lam))
    f, S = ew.higgs_polar(hv)
    fields = ew.EWGaugeFields(sc.A, sc.Z, sc.Wp, sc.theta_w)
    W = ew.assemble_W(fields)
    th = Tetrad(np.asarray(sc.tetrad, dtype=float))
    X, _ = ew.induced_connection(W, 1.0, th)
    ew_terms = ew.ew_lagrangian_point(ew.EWInput(
        th, FieldJet(sc.phi), FieldJet(sc.psi_R), FieldJet(sc.psi_L), FieldJet(X),
        m=float(sc.mu), lam=float(sc.lam), dims=sc.dims,
    ))
    ecmd = ecmd_lagrangian_point(ECMDInput(th, psi=FieldJet(scenario_dirac(sc)), m=float(sc.mass), dims=sc.dims))
    values = {
        "higgs.norm2": _quantity(hv.norm2),
        "higgs.potential": _quantity(ew.higgs_potential(hv)),
        "higgs.polar_f": _quantity(f),
        "higgs.polar_S": _plain(S.tolist()),
        "gauge.W": _plain(W.tolist()),
        "gauge.W_iota_components": _plain(ew.iota_components(W).tolist()),
    }
    for k, q in ew_terms.items():
        values[f"ew.{k}"] = _quantity(q)
    for k, q in ecmd.items():
        values[f"ecmd.{k}"] = _quantity(q)
    return {"schema": SCHEMA_VERSION, "scenario": sc.name, "values": values}


def _eval_text(data: dict) -> str:
    lines = [f"scenario {data['scenario']}"]
    for k in sorted(data["values"]):
        v = data["values"][k]
        if isinstance(v, dict):
            re, im = v["value"]
            lines.append(f"{k} = {re:.12g}{im:+.12g}j  [{v['dim']}]")
        else:
            lines.append(f"{k} = {json.dumps(v)}")
    return "\n".join(lines) + "\n"


# --- dump -------------------------------------------------------------------


def dump(kind: str, backend: str = nb.EXACT) -> dict:
    if kind == "gamma-weyl":
        data = ts.gamma_weyl(backend=backend)
    elif kind == "gamma-dirac":
        data = ts.gamma_dirac(backend=backend)
    elif kind == "iota-frame":
        data = ew.iota_frame(backend=backend)
    elif kind == "structure-constants-su2":
        c = ga.structure_constants(ga.orthonormalize(ga.su2_generators(backend)))
        data = nb.exact_array(c) if backend == nb.EXACT else c.astype(complex)
    else:
        raise UnknownKind(f"unknown dump kind {kind!r}; choose from {', '.join(DUMP_KINDS)}")
    arr = np.array(data, dtype=object if backend == nb.EXACT else complex)
    return {"schema": SCHEMA_VERSION, "kind": kind, "backend": backend, "data": _plain(nb.array_to_json(arr))}


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ewgeom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, with_suites=True):
        sp.add_argument("--scenario", help="scenario JSON file (default: built-in scenario)")
        sp.add_argument("--emit", choices=("text", "json"), default="text")
        sp.add_argument("--backend", choices=(nb.EXACT, nb.FLOAT))
        sp.add_argument("--out", help="write the output to this file instead of stdout")
        if with_suites:
            sp.add_argument("--suite", help=f"comma-separated subset of: {', '.join(SUITES)}")
            sp.add_argument("--tol", type=float, help="float tolerance (default 1e-12)")

    common(sub.add_parser("verify", help="run verification suites"))
    common(sub.add_parser("eval", help="evaluate pointwise quantities"), with_suites=False)
    d = sub.add_parser("dump", help="write a constant table as JSON")
    d.add_argument("kind", help=f"one of: {', '.join(DUMP_KINDS)}")
    d.add_argument("--backend", choices=(nb.EXACT, nb.FLOAT), default=nb.EXACT)
    d.add_argument("--out")
    return p


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "dump":
            _write(_dumps(dump(args.kind, args.backend)), args.out)
            return 0
        sc = load_scenario(args.scenario) if args.scenario else Scenario()
        if args.verb == "eval":
            if args.backend:
                sc = replace(sc, backend=args.backend)
            data = evaluate(sc)
            _write(_dumps(data) if args.emit == "json" else _eval_text(data), args.out)
            return 0
        report = run(sc, args.suite, args.backend, args.tol)
        _write(_dumps(report.to_json()) if args.emit == "json" else report.to_text(), args.out)
        report.require_pass()
        return 0
    except CheckFailure as exc:
        print(f"failed checks: {exc}", file=sys.stderr)
        return 1
    except (ParseError, UnknownSuite, UnknownKind) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except EwgeomError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
