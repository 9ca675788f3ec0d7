"""Command-line front end: scenario files in, analysis tables out.

Subcommands: dims, verify, spectrum, scatter, lattice.  One scenario file
is one run; reports go to stdout as JSON, CSV or an aligned text table.
Exit codes: 0 success / all identities pass, 1 verification failure,
2 malformed scenario or input error.
"""

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import __version__
from .errors import ScenarioError, ToyQFTError
from .fields import free_field, interaction_field, self_interaction
from .fock import OccupationState, ParticleMode, Statistics, build_space
from .ladder import annihilator, anticommutator, commutator, creator
from .scatter import (
    build_roster,
    hamiltonian,
    probability_table,
    scattering_operator,
)
from .spacetime import hyperboloid, space_volume
from .spectral import eigh

SEED_ENV = "TOYQFT_SEED"


def _sig12(value):
    """12 significant digits, the table formatting rule."""
    return f"{value:.12g}"


def _load_scenario(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ScenarioError("scenario", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            "scenario", f"{path} line {exc.lineno}: {exc.msg}"
        ) from exc


def _require(scenario, field, kind=None):
    if field not in scenario:
        raise ScenarioError(field, "required field missing")
    value = scenario[field]
    if kind is not None and not isinstance(value, kind):
        raise ScenarioError(field, f"expected {kind.__name__}")
    return value


def _parse_statistics(text, field):
    try:
        return Statistics(text)
    except ValueError:
        raise ScenarioError(field, f"unknown statistics {text!r}") from None


def _parse_roster(scenario):
    entries = _require(scenario, "roster", list)
    modes = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ScenarioError(f"roster[{i}]", "expected object")
        stats = _parse_statistics(
            entry.get("statistics", "fermion"), f"roster[{i}].statistics"
        )
        momentum = entry.get("momentum")
        try:
            modes.append(
                ParticleMode(
                    id=i,
                    label=entry.get("label", f"mode{i}"),
                    statistics=stats,
                    mass=int(entry.get("mass", 0)),
                    momentum=tuple(momentum) if momentum else None,
                )
            )
        except (ValueError, TypeError) as exc:
            raise ScenarioError(f"roster[{i}]", str(exc)) from exc
    return modes


def _parse_space(scenario):
    modes = _parse_roster(scenario)
    cutoff = _require(scenario, "cutoff_s", int)
    if cutoff < 1:
        raise ScenarioError("cutoff_s", "must be >= 1")
    try:
        return build_space(modes, cutoff)
    except ToyQFTError as exc:
        raise ScenarioError("roster", str(exc)) from exc


def _parse_field(space, terms, field_name):
    if not isinstance(terms, list):
        raise ScenarioError(field_name, "expected list of terms")
    parsed = []
    for i, term in enumerate(terms):
        if not isinstance(term, dict) or "mode" not in term:
            raise ScenarioError(f"{field_name}[{i}]", "expected {mode, alpha}")
        alpha = term.get("alpha", [1.0, 0.0])
        if not (isinstance(alpha, list) and len(alpha) == 2):
            raise ScenarioError(f"{field_name}[{i}].alpha", "expected [re, im]")
        parsed.append((int(term["mode"]), complex(alpha[0], alpha[1])))
    try:
        return free_field(space, parsed)
    except ToyQFTError as exc:
        raise ScenarioError(field_name, str(exc)) from exc


def _parse_state(space, raw, field_name):
    if not isinstance(raw, dict) or "modes" not in raw:
        raise ScenarioError(field_name, "expected {modes: [[id, count], ...]}")
    fermions = []
    bosons = []
    for pair in raw["modes"]:
        mode_id, count = int(pair[0]), int(pair[1])
        mode = space.mode(mode_id)
        if mode.statistics is Statistics.FERMION:
            if count != 1:
                raise ScenarioError(field_name, "fermion count must be 1")
            fermions.append(mode_id)
        else:
            bosons.append((mode_id, count))
    state = OccupationState(tuple(sorted(fermions)), tuple(sorted(bosons)))
    if state not in space.index:
        raise ScenarioError(field_name, "state outside the basis")
    return state


def _state_label(space, state):
    parts = [space.mode(f).label for f in state.fermions]
    parts += [
        space.mode(m).label + (f"^{c}" if c > 1 else "")
        for m, c in state.bosons
    ]
    return " ".join(parts) if parts else "|0>"


def emit_report(report, fmt):
    """Render a report as json, csv or an aligned text table."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    columns = report["columns"]
    rows = report["rows"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if v is None else v for v in row])
        return buf.getvalue()
    if fmt == "table":
        cells = [list(columns)]
        for row in rows:
            cells.append(
                [
                    _sig12(v) if isinstance(v, float) else str(v)
                    for v in row
                ]
            )
        widths = [max(len(r[c]) for r in cells) for c in range(len(columns))]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in cells
        ]
        return "\n".join(lines) + "\n"
    raise ScenarioError("format", f"unknown format {fmt!r}")


def _run_dims(scenario, fmt):
    space = _parse_space(scenario)
    report = {
        "kind": "dims",
        "columns": ["quantity", "value"],
        "rows": [["dimension", space.dimension]],
    }
    if scenario.get("dump_basis"):
        report["basis"] = space.basis_to_json()
        for i, state in enumerate(space.basis):
            report["rows"].append([f"basis[{i}]", _state_label(space, state)])
    print(emit_report(report, fmt), end="")
    return 0


def _algebra_checks(space, rng):
    """Yield (identity name, max violation) over the roster's algebra."""
    n = space.dimension
    eye = np.eye(n)
    modes = space.modes
    ann = {m.id: annihilator(space, m.id) for m in modes}
    cre = {m.id: creator(space, m.id) for m in modes}

    worst = 0.0
    for m in modes:
        diff = np.max(np.abs(cre[m.id].mat - ann[m.id].adjoint().mat))
        worst = max(worst, diff)
    yield "creator = adjoint(annihilator)", worst

    worst = 0.0
    for m in modes:
        alpha = complex(rng.normal(), rng.normal())
        eta = alpha * ann[m.id] + np.conj(alpha) * cre[m.id]
        worst = max(worst, np.max(np.abs(eta.mat - eta.mat.conj().T)))
    yield "AC-operator Hermitian", worst

    fermions = [m for m in modes if m.statistics is Statistics.FERMION]
    bosons = [m for m in modes if m.statistics is Statistics.BOSON]
    off = [
        i for i, st in enumerate(space.basis) if st.total < space.cutoff_s
    ]
    boundary = [
        i for i, st in enumerate(space.basis) if st.total == space.cutoff_s
    ]

    if fermions:
        worst = 0.0
        num_worst = 0.0
        for mi in fermions:
            for mj in fermions:
                same = mi.mass == mj.mass
                a_i, a_j = ann[mi.id], ann[mj.id]
                c_j = cre[mj.id]
                if same:
                    worst = max(
                        worst, np.max(np.abs(anticommutator(a_i, a_j).mat))
                    )
                    mixed = anticommutator(a_i, c_j).mat
                    delta = eye if mi.id == mj.id else 0.0
                else:
                    worst = max(
                        worst, np.max(np.abs(commutator(a_i, a_j).mat))
                    )
                    mixed = commutator(a_i, c_j).mat
                    delta = 0.0
                num_worst = max(
                    num_worst, np.max(np.abs((mixed - delta)[:, off]))
                )
        yield "fermion exchange relations", worst
        yield "fermion number relation (off boundary)", num_worst

    if bosons:
        worst = 0.0
        ccr_worst = 0.0
        bdry_worst = 0.0
        for mi in bosons:
            for mj in bosons:
                a_i, a_j = ann[mi.id], ann[mj.id]
                worst = max(worst, np.max(np.abs(commutator(a_i, a_j).mat)))
                worst = max(
                    worst,
                    np.max(
                        np.abs(commutator(cre[mi.id], cre[mj.id]).mat)
                    ),
                )
                mixed = commutator(a_i, cre[mj.id]).mat
                delta = eye if mi.id == mj.id else 0.0
                ccr_worst = max(
                    ccr_worst, np.max(np.abs((mixed - delta)[:, off]))
                )
            diag = commutator(ann[mi.id], cre[mi.id]).mat
            for col in boundary:
                state = space.state_at(col)
                expected = -state.count_of(mi.id) * _unit(n, col)
                bdry_worst = max(
                    bdry_worst, np.max(np.abs(diag[:, col] - expected))
                )
        yield "boson commutators", worst
        yield "boson CCR (off boundary)", ccr_worst
        yield "boson boundary rule [a, a*] = -N", bdry_worst


def _unit(n, k):
    v = np.zeros(n, dtype=complex)
    v[k] = 1.0
    return v


def _run_verify(scenario, fmt, tol):
    space = _parse_space(scenario)
    seed = int(os.environ.get(SEED_ENV, "0"))
    rng = np.random.default_rng(seed)
    rows = []
    failed = False
    for name, violation in _algebra_checks(space, rng):
        ok = violation <= tol
        failed = failed or not ok
        rows.append([name, float(violation), "pass" if ok else "FAIL"])
    report = {
        "kind": "verify",
        "tolerance": tol,
        "columns": ["identity", "max_violation", "status"],
        "rows": rows,
    }
    print(emit_report(report, fmt), end="")
    return 1 if failed else 0


def _run_spectrum(scenario, fmt, tol):
    space = _parse_space(scenario)
    phi = _parse_field(space, _require(scenario, "field"), "field")
    if "field2" in scenario:
        op = interaction_field(
            phi, _parse_field(space, scenario["field2"], "field2")
        )
    elif scenario.get("self_interaction"):
        op = self_interaction(phi)
    else:
        op = phi
    decomp = eigh(op, group_tol=tol if tol else 1e-8)
    report = {
        "kind": "spectrum",
        "columns": ["lambda", "multiplicity"],
        "rows": [[g.value, g.multiplicity] for g in decomp.groups],
    }
    print(emit_report(report, fmt), end="")
    return 0


def _run_scatter(scenario, fmt, enforce, coupling):
    mass1 = _require(scenario, "mass1", int)
    mass2 = _require(scenario, "mass2", int)
    r = _require(scenario, "r", int)
    cutoff = _require(scenario, "cutoff_s", int)
    x0 = _require(scenario, "x0", int)
    stats = scenario.get("statistics", ["boson", "boson"])
    if not (isinstance(stats, list) and len(stats) == 2):
        raise ScenarioError("statistics", "expected a list of two entries")
    s1 = _parse_statistics(stats[0], "statistics[0]")
    s2 = _parse_statistics(stats[1], "statistics[1]")
    try:
        roster = build_roster(mass1, mass2, r, s1, s2)
        space = build_space(roster, cutoff)
        h = hamiltonian(space, x0, r, mass1, mass2)
        s_op = scattering_operator(h, coupling=coupling)
    except ToyQFTError as exc:
        raise ScenarioError("scatter", str(exc)) from exc
    in_state = _parse_state(space, _require(scenario, "in_state"), "in_state")
    threshold = float(scenario.get("threshold", 0.0))
    rows = probability_table(
        s_op, in_state, threshold, enforce_conservation=enforce
    )
    report = {
        "kind": "scatter",
        "in_state": _state_label(space, in_state),
        "coupling": coupling,
        "columns": ["out_state", "probability", "conserves_p"],
        "rows": [
            [
                _state_label(space, row.out_state),
                float(row.probability),
                row.conserves_momentum,
            ]
            for row in rows
        ],
    }
    print(emit_report(report, fmt), end="")
    return 0


def _run_lattice(scenario, fmt, args):
    if scenario is not None:
        mass = _require(scenario, "mass", int)
        r = _require(scenario, "r", int)
        x0 = scenario.get("x0")
    else:
        if args.mass is None or args.max_energy is None:
            raise ScenarioError(
                "lattice", "--mass and --max-energy (or --scenario) required"
            )
        mass, r, x0 = args.mass, args.max_energy, args.x0
    points = hyperboloid(mass, r)
    report = {
        "kind": "lattice",
        "mass": mass,
        "max_energy": r,
        "hyperboloid": [list(p.as_tuple()) for p in points],
        "columns": ["p0", "p1", "p2", "p3"],
        "rows": [list(p.as_tuple()) for p in points],
    }
    if x0 is not None:
        report["space_volume"] = {"x0": x0, "volume": space_volume(x0)}
    print(emit_report(report, fmt), end="")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="toyqft",
        description="Toy quantum fields: dimensions, algebra checks, "
        "spectra and scattering probabilities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scenario_required=True):
        p.add_argument(
            "--scenario", required=scenario_required, help="scenario JSON file"
        )
        p.add_argument(
            "--format",
            choices=["json", "csv", "table"],
            default="json",
            dest="fmt",
        )

    common(sub.add_parser("dims", help="space dimension report"))
    p = sub.add_parser("verify", help="operator algebra identity checks")
    common(p)
    p.add_argument("--tol", type=float, default=1e-12)
    p = sub.add_parser("spectrum", help="eigenvalue/multiplicity table")
    common(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p = sub.add_parser("scatter", help="scattering probability table")
    common(p)
    p.add_argument("--enforce-conservation", action="store_true")
    p.add_argument(
        "--coupling",
        type=float,
        default=1.0,
        help="dimensionless factor on H (extension; 1 is the bare model)",
    )
    p = sub.add_parser("lattice", help="mass hyperboloid dump")
    common(p, scenario_required=False)
    p.add_argument("--mass", type=int)
    p.add_argument("--max-energy", type=int)
    p.add_argument("--x0", type=int)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "lattice":
            scenario = (
                _load_scenario(args.scenario) if args.scenario else None
            )
            return _run_lattice(scenario, args.fmt, args)
        scenario = _load_scenario(args.scenario)
        if args.command == "dims":
            return _run_dims(scenario, args.fmt)
        if args.command == "verify":
            return _run_verify(scenario, args.fmt, args.tol)
        if args.command == "spectrum":
            return _run_spectrum(scenario, args.fmt, args.tol)
        if args.command == "scatter":
            return _run_scatter(
                scenario, args.fmt, args.enforce_conservation, args.coupling
            )
        raise ScenarioError("command", f"unknown command {args.command!r}")
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2
    except ToyQFTError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
