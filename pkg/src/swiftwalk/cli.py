"""
swiftwalk command line.

    swiftwalk synthesize --family cone:petersen --out runs/petersen
    swiftwalk simulate --family wheel:6 --phases runs/wheel/phases.json --generator chiral-adjacency
    swiftwalk verify --graph g.txt --phases phases.json --from 0
    swiftwalk bound --family wheel:100 --generator chiral-laplacian --draws 200 --t-max 20
"""
import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .const import PROFILE_TOL
from .graph import Graph, cone, generate_family, read_graph
from .chiral import (
    ChiralMatrix,
    GaugeTransform,
    build_chiral,
    classical,
    gauge_fix_cone,
    gauge_transform,
    read_phases,
    verify_spectral_bounds,
    write_phases,
)
from .swift import ROUTES, SolverConfig, cone_residual, cone_walk_report, synthesize, write_report
from .dynamics import (
    Propagator,
    closed_form_swift,
    grover_oracle_laplacian,
    nogo_bound,
    qsl,
    return_series,
    sweep_random_laplacian,
    time_grid,
)


logger = logging.getLogger(__name__)

GENERATORS = ("adjacency", "laplacian", "chiral-adjacency", "chiral-laplacian", "grover-oracle")
COMMANDS = ("simulate", "synthesize", "verify", "bound")
# `cone` builds the swift walk leaving --from rather than a whole-graph configuration
METHODS = ROUTES + ("cone",)


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    family: Optional[str] = None
    phases: Optional[str] = None
    generator: str = "adjacency"
    source: int = 0
    t_max: float = 10.0
    steps: int = 1000
    tol: float = 1e-10
    seed: int = 0
    out: str = "."
    method: str = "auto"
    draws: int = 20
    progress: bool = False

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError(f"--steps must be >= 2, got {self.steps}")
        if not self.tol > 0:
            raise ValueError(f"--tol must be positive, got {self.tol}")
        if not self.t_max > 0:
            raise ValueError(f"--t-max must be positive, got {self.t_max}")
        if self.draws < 0:
            raise ValueError(f"--draws must be >= 0, got {self.draws}")
        if (self.graph is None) == (self.family is None):
            raise ValueError("give exactly one of --graph or --family")

    @property
    def solver(self) -> SolverConfig:
        return SolverConfig(tol=self.tol, seed=self.seed, progress=self.progress)


def parse_family(spec: str) -> Graph:
    """`name[:p1,p2,...]`, with any number of leading `cone:` wrappers (`cone:cycle:8`)."""
    if spec.startswith("cone:"):
        return cone(parse_family(spec[len("cone:"):]))
    name, _, params = spec.partition(":")
    try:
        values = [int(p) for p in params.split(",")] if params else []
    except ValueError as e:
        raise ValueError(f"family parameters must be integers, got {params!r}") from e
    return generate_family(name, *values)


def load_graph(cfg: RunConfig) -> Graph:
    return read_graph(cfg.graph) if cfg.graph is not None else parse_family(cfg.family)


def load_generator(cfg: RunConfig, g: Graph) -> ChiralMatrix:
    if cfg.generator == "grover-oracle":
        return grover_oracle_laplacian(g, cfg.source)
    kind = cfg.generator.replace("chiral-", "")
    if not cfg.generator.startswith("chiral-"):
        return classical(g, kind)
    if cfg.phases is None:
        raise ValueError(f"--generator {cfg.generator} needs --phases")
    return build_chiral(g, read_phases(cfg.phases, g), kind)


def _check_source(cfg: RunConfig, g: Graph):
    if not 0 <= cfg.source < g.n:
        raise ValueError(f"--from {cfg.source} outside [0, {g.n})")


def _envelope(cfg: RunConfig) -> dict:
    from . import __version__

    return {"config": asdict(cfg), "version": __version__}


def _dump(payload: dict, fpath: Path):
    fpath.write_text(json.dumps(payload, sort_keys=True, indent=2), encoding="utf-8")


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_simulate(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    _check_source(cfg, g)
    H = load_generator(cfg, g)
    out = _out_dir(cfg)

    series = return_series(H, cfg.source, cfg.t_max, cfg.steps)
    series.to_csv(out / "series.csv")
    first_zero = series.first_zero()
    summary = {
        **_envelope(cfg),
        "generator": H.kind,
        "min_return": series.minimum(),
        "argmin_time": series.argmin_time(),
        "first_zero": first_zero,
        "qsl": qsl(H, cfg.source).to_dict(),
    }
    _dump(summary, out / "summary.json")

    zero = "none" if first_zero is None else f"{first_zero:.5f}"
    print(f"[swiftwalk] simulate: min p={series.minimum():.6g}, first zero t={zero} -> {out}")
    return 0


def cmd_synthesize(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    out = _out_dir(cfg)

    if cfg.method == "cone":
        _check_source(cfg, g)
        report = cone_walk_report(g, cfg.source, cfg.solver)
    else:
        report = synthesize(g, cfg.method, cfg.solver)
    write_report(report, out / "report.json", _envelope(cfg))
    if report.feasible:
        write_phases(report.phases, out / "phases.json")

    print(f"[swiftwalk] synthesize: {report.verdict} via {report.method} (residual {report.residual:.3g}) -> {out}")
    return 0


def _check(residual: float, tol: float) -> dict:
    return {"residual": float(residual), "tol": tol, "passed": bool(residual <= tol)}


def cmd_verify(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    _check_source(cfg, g)
    if cfg.phases is None:
        raise ValueError("verify needs --phases")
    phases = read_phases(cfg.phases, g)
    H = build_chiral(g, phases)
    out = _out_dir(cfg)
    N = int(g.degrees[cfg.source])

    checks = {}
    # neighbour rows must sum to zero once the source row is gauged to ones
    fixed, _ = gauge_fix_cone(H, cfg.source)
    checks["row_sums"] = _check(cone_residual(fixed, cfg.source), cfg.tol)

    series = return_series(H, cfg.source, cfg.t_max, cfg.steps)
    deviation = np.abs(series.values - closed_form_swift(N, series.times)).max()
    checks["swift_profile"] = _check(deviation, PROFILE_TOL)

    for kind in ("adjacency", "laplacian"):
        bound = verify_spectral_bounds(build_chiral(g, phases, kind))
        checks[f"spectral_bound_{kind}"] = bound.to_dict()

    rng = np.random.default_rng(cfg.seed)
    H_gauged = gauge_transform(H, GaugeTransform.random(g.n, rng))
    times = time_grid(cfg.t_max, cfg.steps)
    before = np.abs(Propagator(H).columns(cfg.source, times)) ** 2
    after = np.abs(Propagator(H_gauged).columns(cfg.source, times)) ** 2
    checks["gauge_invariance"] = _check(np.abs(before - after).max(), cfg.tol)

    passed = all(c["passed"] for c in checks.values())
    _dump({**_envelope(cfg), "checks": checks, "passed": passed}, out / "verify.json")

    failed = [name for name, c in checks.items() if not c["passed"]]
    status = "all checks pass" if passed else f"FAILED {', '.join(failed)}"
    print(f"[swiftwalk] verify: {status} -> {out}")
    return 0


def cmd_bound(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    _check_source(cfg, g)
    H = load_generator(cfg, g)
    out = _out_dir(cfg)

    speed = qsl(H, cfg.source)
    nogo = None
    if cfg.generator in ("laplacian", "chiral-laplacian"):
        rng = np.random.default_rng(cfg.seed)
        reports = sweep_random_laplacian(g, cfg.source, cfg.draws, rng, cfg.t_max, cfg.steps, cfg.progress)
        bound, d_sup = nogo_bound(g, cfg.source)
        nogo = {
            "bound": None if bound is None else float(bound),
            "d_sup": d_sup,
            "degree": int(g.degrees[cfg.source]),
            "draws": cfg.draws,
            "observed_min": min((r.min_return for r in reports), default=None),
            "violations": sum(r.violated for r in reports),
        }
        if bound is None:
            nogo["flag"] = "2 d> >= N, bound omitted"
    _dump({**_envelope(cfg), "qsl": speed.to_dict(), "nogo": nogo}, out / "bound.json")

    msg = f"tau_qsl={speed.tau_qsl:.6g}, tau_s={speed.tau_s:.6g}, dH={speed.delta_h:.6g}"
    if nogo is not None:
        msg += f", no-go bound={nogo['bound']}, observed min={nogo['observed_min']}"
    print(f"[swiftwalk] bound: {msg} -> {out}")
    return 0


COMMAND_FNS = {
    "simulate": cmd_simulate,
    "synthesize": cmd_synthesize,
    "verify": cmd_verify,
    "bound": cmd_bound,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swiftwalk", description="Swift chiral quantum walks on graphs")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph", help="edge list (`n m` header) or .json graph file")
        src.add_argument("--family", help="named family, e.g. wheel:6, complete_bipartite:3,4, cone:petersen")
        p.add_argument("--phases", help="phases JSON as written by `synthesize`")
        p.add_argument("--generator", choices=GENERATORS, default="adjacency")
        p.add_argument("--from", dest="source", type=int, default=0, help="start vertex")
        p.add_argument("--t-max", dest="t_max", type=float, default=10.0)
        p.add_argument("--steps", type=int, default=1000)
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--draws", type=int, default=20, help="random phase draws for `bound`")
        p.add_argument("--progress", action="store_true")
        p.add_argument("--verbose", "-v", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    opts = vars(args)
    opts.pop("verbose")
    try:
        cfg = RunConfig(**opts)
        return COMMAND_FNS[cfg.command](cfg)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as e:
        print(f"[swiftwalk] Error: {e}", file=sys.stderr)
        return 1
    except (np.linalg.LinAlgError, FloatingPointError, RuntimeError) as e:
        logger.exception("numerical failure")
        print(f"[swiftwalk] Numerical failure: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
