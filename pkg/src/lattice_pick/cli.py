"""Batch command-line front end.

All reports go to stdout as CSV behind a version comment line; diagnostics
go to stderr. Exit codes: 0 success, 1 a mathematical check failed, 2 bad
input or a violated precondition.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .ehrhart import ehrhart_fit, lattice_count
from .fourier import default_epsilon, polygon_ft, truncated_regularized_sum
from .geometry import GeometryError, IntegerPolygon2, Polytope, PreconditionError
from .phenomena import (
    SURVEY_HEADER,
    check_multitiling_sampling,
    conjecture_survey,
    is_concrete,
    reeve_tetrahedron,
    zonotope_from_generators,
)
from .pick import PICK_CSV_HEADER, verify_pick
from .polyfile import parse_generators, parse_polytopes, serialize_polytope
from .solid_angle import discrete_volume

VERSION_COMMENT = "# lattice-pick v1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


@dataclass
class CommandConfig:
    """Numeric knobs shared across subcommands."""

    tol: float = 1e-6
    eps: float | None = None  # None: half the safe mollifier threshold
    radius: int = 40
    samples: int = 1000
    seed: int = 0
    max_t: int | None = None

    def validate(self) -> None:
        if not self.tol > 0:
            raise PreconditionError("--tol must be positive")
        if self.eps is not None and not self.eps > 0:
            raise PreconditionError("--eps must be positive")
        if self.radius < 1:
            raise PreconditionError("--radius must be >= 1")
        if self.samples < 1:
            raise PreconditionError("--samples must be >= 1")
        if self.seed < 0:
            raise PreconditionError("--seed must be >= 0")
        if self.max_t is not None and self.max_t < 1:
            raise PreconditionError("--max-t must be >= 1")


def _config_from_args(args: argparse.Namespace) -> CommandConfig:
    cfg = CommandConfig()
    for field in ("tol", "eps", "radius", "samples", "seed", "max_t"):
        if hasattr(args, field) and getattr(args, field) is not None:
            setattr(cfg, field, getattr(args, field))
    cfg.validate()
    return cfg


def _load_bodies(path: str) -> list[Polytope]:
    text = Path(path).read_text(encoding="utf-8")
    return parse_polytopes(text)


def _load_polygons(path: str) -> list[IntegerPolygon2]:
    bodies = _load_bodies(path)
    for i, body in enumerate(bodies):
        if not isinstance(body, IntegerPolygon2):
            raise PreconditionError(f"body {i} in {path} is not 2D; this command needs polygons")
    return bodies


def _emit(lines: list[str]) -> None:
    print(VERSION_COMMENT)
    for line in lines:
        print(line)


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_pick_verify(args) -> int:
    cfg = _config_from_args(args)
    polygons = _load_polygons(args.file)
    lines = [PICK_CSV_HEADER]
    ok = True
    for i, P in enumerate(polygons):
        report = verify_pick(P, tol=cfg.tol, eps=cfg.eps, M=cfg.radius)
        lines.append(report.to_csv_row(str(i)))
        ok = ok and report.classical_ok and report.analytic_ok
    _emit(lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_pick_discrete_volume(args) -> int:
    _config_from_args(args)
    bodies = _load_bodies(args.file)
    lines = []
    for i, P in enumerate(bodies):
        header = "x,y,location,weight" if P.dim == 2 else "x,y,z,location,weight"
        if len(bodies) > 1:
            lines.append(f"# body {i}")
        lines.append(header)
        lines.append(discrete_volume(P).to_csv())
    _emit(lines)
    return EXIT_OK


def _cmd_fourier_sum(args) -> int:
    cfg = _config_from_args(args)
    polygons = _load_polygons(args.file)
    lines = ["id,epsilon,radius,value,residual,term_count,max_offending_term"]
    ok = True
    for i, P in enumerate(polygons):
        eps = cfg.eps if cfg.eps is not None else default_epsilon(P)
        report = truncated_regularized_sum(P, eps, cfg.radius)
        lines.append(f"{i},{report.to_csv_row()}")
        ok = ok and abs(report.residual) <= cfg.tol
    _emit(lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _parse_frequency(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise PreconditionError("--m expects 'mx,my'")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise PreconditionError(f"--m components must be numbers, got {text!r}") from None


def _cmd_fourier_coeff(args) -> int:
    _config_from_args(args)
    xi = _parse_frequency(args.m)
    polygons = _load_polygons(args.file)
    lines = ["id,re,im"]
    for i, P in enumerate(polygons):
        value = polygon_ft(P, xi)
        lines.append(f"{i},{value.real:.15g},{value.imag:.15g}")
    _emit(lines)
    return EXIT_OK


def _cmd_concrete_check(args) -> int:
    cfg = _config_from_args(args)
    bodies = _load_bodies(args.file)
    lines = ["id,volume,discrete_volume,delta,concrete"]
    ok = True
    for i, P in enumerate(bodies):
        verdict = is_concrete(P, cfg.tol)
        lines.append(
            f"{i},{verdict.continuous_volume},{verdict.discrete_volume:.12g},"
            f"{verdict.delta:.12g},{str(verdict.concrete).lower()}"
        )
        ok = ok and verdict.concrete
    _emit(lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_reeve(args) -> int:
    sys.stdout.write(serialize_polytope(reeve_tetrahedron(args.n)))
    return EXIT_OK


def _cmd_zonotope(args) -> int:
    gens = parse_generators(Path(args.gens).read_text(encoding="utf-8"))
    sys.stdout.write(serialize_polytope(zonotope_from_generators(gens)))
    return EXIT_OK


def _cmd_multitile(args) -> int:
    cfg = _config_from_args(args)
    bodies = _load_bodies(args.file)
    lines = ["id,samples,k,failures"]
    ok = True
    for i, P in enumerate(bodies):
        result = check_multitiling_sampling(P, cfg.samples, cfg.seed)
        k_col = str(result.k) if result.k is not None else "FAIL"
        lines.append(f"{i},{result.samples},{k_col},{len(result.failures)}")
        ok = ok and result.k is not None
    _emit(lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_ehrhart(args) -> int:
    cfg = _config_from_args(args)
    bodies = _load_bodies(args.file)
    lines = ["id,c0,c1,c2,c3"]
    ok = True
    for i, P in enumerate(bodies):
        poly = ehrhart_fit(P)
        cols = [str(c) for c in poly.coefficients] + [""] * (4 - len(poly.coefficients))
        lines.append(f"{i}," + ",".join(cols))
        max_t = cfg.max_t if cfg.max_t is not None else P.dim + 2
        for t in range(1, max_t + 1):
            if poly(t) != lattice_count(P, t):
                ok = False
    _emit(lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_survey(args) -> int:
    cfg = _config_from_args(args)
    directory = Path(args.dir)
    if not directory.is_dir():
        raise PreconditionError(f"{args.dir} is not a directory")
    corpus = []
    for path in sorted(directory.glob("*.poly")):
        for i, body in enumerate(parse_polytopes(path.read_text(encoding="utf-8"))):
            corpus.append((f"{path.name}:{i}", body))
    table = conjecture_survey(corpus, tol=cfg.tol, samples=cfg.samples, seed=cfg.seed)
    _emit(table.splitlines() if corpus else [SURVEY_HEADER])
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-pick",
        description="Exact lattice-point geometry checks: area formulas, "
        "regularized frequency sums, concreteness, multi-tiling, Ehrhart fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, tol=False, eps=False, radius=False, samples=False, seed=False):
        if tol:
            p.add_argument("--tol", type=float, default=None, help="tolerance (default 1e-6)")
        if eps:
            p.add_argument("--eps", type=float, default=None,
                           help="mollifier scale (default: half the safe threshold)")
        if radius:
            p.add_argument("--radius", type=int, default=None,
                           help="frequency ball radius (default 40)")
        if samples:
            p.add_argument("--samples", type=int, default=None,
                           help="sample count (default 1000)")
        if seed:
            p.add_argument("--seed", type=int, default=None, help="RNG seed (default 0)")

    pick = sub.add_parser("pick", help="area formula checks")
    pick_sub = pick.add_subparsers(dest="pick_command", required=True)
    pv = pick_sub.add_parser("verify", help="classical and analytic verification")
    pv.add_argument("file")
    add_common(pv, tol=True, eps=True, radius=True)
    pv.set_defaults(func=_cmd_pick_verify)
    pdv = pick_sub.add_parser("discrete-volume", help="per-point weight breakdown")
    pdv.add_argument("file")
    pdv.set_defaults(func=_cmd_pick_discrete_volume)

    fourier = sub.add_parser("fourier", help="frequency-side computations")
    fourier_sub = fourier.add_subparsers(dest="fourier_command", required=True)
    fs = fourier_sub.add_parser("sum", help="truncated regularized frequency sum")
    fs.add_argument("file")
    add_common(fs, tol=True, eps=True, radius=True)
    fs.set_defaults(func=_cmd_fourier_sum)
    fc = fourier_sub.add_parser("coeff", help="polygon Fourier coefficient")
    fc.add_argument("file")
    fc.add_argument("--m", required=True, help="frequency 'mx,my'")
    fc.set_defaults(func=_cmd_fourier_coeff)

    concrete = sub.add_parser("concrete", help="discrete vs continuous volume")
    concrete_sub = concrete.add_subparsers(dest="concrete_command", required=True)
    cc = concrete_sub.add_parser("check", help="concreteness verdicts")
    cc.add_argument("file")
    add_common(cc, tol=True)
    cc.set_defaults(func=_cmd_concrete_check)

    reeve = sub.add_parser("reeve", help="emit a Reeve tetrahedron body")
    reeve.add_argument("--n", type=int, required=True, help="height parameter N")
    reeve.set_defaults(func=_cmd_reeve)

    zono = sub.add_parser("zonotope", help="emit a zonotope body from generators")
    zono.add_argument("--gens", required=True, help="generator file")
    zono.set_defaults(func=_cmd_zonotope)

    multi = sub.add_parser("multitile", help="sampled covering multiplicity")
    multi.add_argument("file")
    add_common(multi, samples=True, seed=True)
    multi.set_defaults(func=_cmd_multitile)

    ehr = sub.add_parser("ehrhart", help="exact dilation polynomial fit")
    ehr.add_argument("file")
    ehr.add_argument("--max-t", dest="max_t", type=int, default=None,
                     help="verify counts up to this dilation (default dim+2)")
    ehr.set_defaults(func=_cmd_ehrhart)

    survey = sub.add_parser("survey", help="evidence table over a directory of .poly files")
    survey.add_argument("dir")
    add_common(survey, tol=True, samples=True, seed=True)
    survey.set_defaults(func=_cmd_survey)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
