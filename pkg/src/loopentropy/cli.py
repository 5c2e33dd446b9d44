"""Command-line front end.

Subcommands
-----------
figure2      entropy curves of the first-order two-point state vs bare mass
figure3      vacuum-entropy finite coefficient vs bare mass, one curve per mu
entropy      one quantity as a JSON breakdown on stdout
tau          the closed-form contour-ratio constant
trace-check  the trace-relation ratio report as JSON
check        the full invariant suite; exit 1 on any failure

Floats are printed with 17 significant digits so that CSV values round-trip
binary doubles exactly; CSV rows are comma separated with LF endings and a
leading '#' comment recording the grid.  An optional JSON config file
supplies defaults; explicit flags override it.  Exit codes: 0 success,
1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import checks as checks_mod
from . import contour as ct
from . import entropy as en
from .errors import LoopEntropyError, UnknownQuantityError
from .loops import SchemeParams
from .svg import render_line_chart
from .traces import ratio_checks


def fmt(x: float) -> str:
    return format(float(x), ".17g")


@dataclass
class SweepConfig:
    """Grid and output options for the figure commands."""

    m0_min: float = 1.0
    m0_max: float = 10.0
    steps: int = 200
    log_grid: bool = False
    mu: tuple = (0.5, 1.0, 2.0)
    lambda0: float = 1.0
    tv: float = 1.0
    order: int = 4
    out: str | None = None
    svg: str | None = None
    convention: str = "figure"

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError("steps must be >= 2")
        if not self.m0_min < self.m0_max:
            raise ValueError("m0-min must be below m0-max")
        if self.m0_min <= 0:
            raise ValueError("m0 grid must be positive")
        if not self.mu:
            raise ValueError("mu list must be nonempty")

    def grid(self) -> np.ndarray:
        if self.log_grid:
            return np.geomspace(self.m0_min, self.m0_max, self.steps)
        return np.linspace(self.m0_min, self.m0_max, self.steps)


def _write_csv(path: str | None, comment: str, header: list[str],
               rows: list[list[float]]) -> str:
    lines = [f"# {comment}", ",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text


def figure2_rows(cfg: SweepConfig) -> list[list[float]]:
    """Finite parts of total/external/internal entropy, mutual information
    and the external+internal sum over the m0 grid."""
    rows = []
    for m0 in cfg.grid():
        p = SchemeParams.from_tv(m0=float(m0), mu=cfg.mu[0], lambda0=cfg.lambda0,
                                 tv=cfg.tv, order=cfg.order)
        s_tot = en.s_total_21(p).finite
        s_ext = en.s_ext_21(p).finite
        s_int = en.s_int_21(p).finite
        mutual = en.mutual_information_21(p).finite
        rows.append([float(m0), s_tot, s_ext, s_int, mutual, s_ext + s_int])
    return rows


def cmd_figure2(cfg: SweepConfig) -> str:
    rows = figure2_rows(cfg)
    comment = (f"first-order two-point entropies; m0 grid [{fmt(cfg.m0_min)}, "
               f"{fmt(cfg.m0_max)}] x {cfg.steps} "
               f"({'log' if cfg.log_grid else 'linear'}), TV={fmt(cfg.tv)}, "
               f"lambda0={fmt(cfg.lambda0)}")
    header = ["m0", "S_total", "S_ext", "S_int", "I", "S_ext_plus_S_int"]
    text = _write_csv(cfg.out, comment, header, rows)
    if cfg.svg:
        xs = [r[0] for r in rows]
        curves = [(lbl, [r[i] for r in rows])
                  for i, lbl in ((1, "S_total"), (2, "S_ext"), (3, "S_int"),
                                 (4, "I"), (5, "S_ext+S_int"))]
        render_line_chart(cfg.svg, xs, curves, title="Two-point entropies",
                          xlabel="m0", ylabel="finite part")
    return text


def figure3_rows(cfg: SweepConfig) -> list[list[float]]:
    """Vacuum-entropy finite coefficient per mu over the m0 grid."""
    rows = []
    for m0 in cfg.grid():
        row = [float(m0)]
        for mu in cfg.mu:
            row.append(en.vacuum_finite_coefficient(
                float(m0), float(mu), cfg.lambda0, cfg.tv,
                convention=cfg.convention))
        rows.append(row)
    return rows


def cmd_figure3(cfg: SweepConfig) -> str:
    rows = figure3_rows(cfg)
    comment = (f"vacuum-entropy finite coefficient ({cfg.convention} convention); "
               f"m0 grid [{fmt(cfg.m0_min)}, {fmt(cfg.m0_max)}] x {cfg.steps} "
               f"({'log' if cfg.log_grid else 'linear'}), TV={fmt(cfg.tv)}, "
               f"lambda0={fmt(cfg.lambda0)}")
    header = ["m0"] + [f"finite_mu_{fmt(mu)}" for mu in cfg.mu]
    text = _write_csv(cfg.out, comment, header, rows)
    if cfg.svg:
        xs = [r[0] for r in rows]
        curves = [(f"mu={mu:g}", [r[i + 1] for r in rows])
                  for i, mu in enumerate(cfg.mu)]
        render_line_chart(cfg.svg, xs, curves, title="Vacuum entropy coefficient",
                          xlabel="m0", ylabel="finite coefficient")
    return text


def _parse_mu_list(text: str) -> tuple:
    try:
        values = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad mu list {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("mu list must be nonempty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopentropy",
        description="Regularized one-loop entropies of real and virtual states",
    )
    parser.add_argument("--config", help="JSON file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scheme(p):
        p.add_argument("--m0", type=float, default=1.0)
        p.add_argument("--mu", type=float, default=1.0)
        p.add_argument("--lambda0", type=float, default=1.0)
        p.add_argument("--tv", type=float, default=1.0)
        p.add_argument("--order", type=int, default=4)
        p.add_argument("--delta-cut", type=float, default=0.05,
                       help="endpoint regulator for contour quadratures")

    def add_grid(p, m0_min, m0_max, steps):
        p.add_argument("--m0-min", type=float, default=m0_min)
        p.add_argument("--m0-max", type=float, default=m0_max)
        p.add_argument("--steps", type=int, default=steps)
        p.add_argument("--log-grid", action="store_true")
        p.add_argument("--lambda0", type=float, default=1.0)
        p.add_argument("--tv", type=float, default=1.0)
        p.add_argument("--order", type=int, default=4)
        p.add_argument("--out", help="CSV output path (stdout if omitted)")
        p.add_argument("--svg", help="optional SVG chart path")

    p2 = sub.add_parser("figure2", help="two-point entropy curves vs m0")
    add_grid(p2, 1.0, 10.0, 200)
    p2.add_argument("--mu", type=_parse_mu_list, default=(1.0,),
                    help="comma-separated scale list (first entry used)")

    p3 = sub.add_parser("figure3", help="vacuum entropy coefficient vs m0")
    add_grid(p3, 0.2, 6.0, 300)
    p3.add_argument("--mu", type=_parse_mu_list, default=(0.5, 1.0, 2.0),
                    help="comma-separated scale list, one curve per value")
    p3.add_argument("--convention", choices=("figure", "closed_form"),
                    default="figure",
                    help="finite-coefficient convention (see docs)")

    pe = sub.add_parser("entropy", help="one quantity as JSON")
    pe.add_argument("--q", required=True, help="quantity name")
    add_scheme(pe)
    pe.add_argument("--quad-ratio", action="store_true",
                    help="use the regulated contour ratio instead of tau")
    pe.add_argument("--m-phys", type=float, default=None,
                    help="physical mass for the spectral quantity")
    pe.add_argument("--z", type=float, default=1.0,
                    help="field strength for the spectral quantity")

    pt = sub.add_parser("tau", help="closed-form contour-ratio constant")
    pt.add_argument("--json", action="store_true")
    pt.add_argument("--delta-cut", type=float, default=None,
                    help="also report the regulated a/b at this endpoint cut")

    pr = sub.add_parser("trace-check", help="trace-relation ratio report")
    add_scheme(pr)

    pc = sub.add_parser("check", help="run the invariant suite")
    pc.add_argument("--seed", type=int, default=20240817)

    parser._command_parsers = {"figure2": p2, "figure3": p3, "entropy": pe,
                               "tau": pt, "trace-check": pr, "check": pc}
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    try:
        path = argv[idx + 1]
    except IndexError:
        parser.error("--config needs a path")
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        parser.error("config file must hold a JSON object")
    defaults = {k.replace("-", "_"): v for k, v in cfg.items()}
    parser.set_defaults(**defaults)
    # subparsers re-apply their own defaults, so they need the overrides too
    for sp in parser._command_parsers.values():
        sp.set_defaults(**defaults)
    return argv


def _series_json(series) -> dict:
    return series.to_json_dict()


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    argv = _apply_config(parser, argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        if args.command in ("figure2", "figure3"):
            cfg = SweepConfig(
                m0_min=args.m0_min, m0_max=args.m0_max, steps=args.steps,
                log_grid=args.log_grid, mu=tuple(args.mu),
                lambda0=args.lambda0, tv=args.tv, order=args.order,
                out=args.out, svg=args.svg,
                convention=getattr(args, "convention", "figure"),
            )
            text = cmd_figure2(cfg) if args.command == "figure2" else cmd_figure3(cfg)
            if not cfg.out:
                sys.stdout.write(text)
            return 0

        if args.command == "entropy":
            params = SchemeParams.from_tv(m0=args.m0, mu=args.mu,
                                          lambda0=args.lambda0, tv=args.tv,
                                          order=args.order)
            cfg = ct.ContourConfig(endpoint_cut=args.delta_cut)
            sd = None
            if args.m_phys is not None:
                sd = en.SpectralDensity(Z=args.z, m_phys=args.m_phys)
            bd = en.compute_quantity(args.q, params, use_tau=not args.quad_ratio,
                                     cfg=cfg, sd=sd)
            print(json.dumps(bd.to_json_dict(), indent=2, sort_keys=True))
            return 0

        if args.command == "tau":
            value = ct.tau()
            if args.json or args.delta_cut is not None:
                payload = {"tau": value}
                if args.delta_cut is not None:
                    reg = ct.ratio_ab_regulated(ct.ContourConfig(endpoint_cut=args.delta_cut))
                    payload["regulated_ratio"] = {"re": reg.real, "im": reg.imag,
                                                  "endpoint_cut": args.delta_cut}
                print(json.dumps(payload, indent=2, sort_keys=True))
            else:
                print(fmt(value))
            return 0

        if args.command == "trace-check":
            params = SchemeParams.from_tv(m0=args.m0, mu=args.mu,
                                          lambda0=args.lambda0, tv=args.tv,
                                          order=args.order)
            report = ratio_checks(params)
            payload = {
                "lambda0": report["lambda0"],
                "tadpole_pair": {
                    "normalized": _series_json(report["tadpole_pair"]["normalized"]),
                    "note": report["tadpole_pair"]["normalization_note"],
                },
                "fully_contracted": {
                    "normalized": _series_json(report["fully_contracted"]["normalized"]),
                    "normalization_constant": _series_json(
                        report["fully_contracted"]["normalization_constant"]),
                    "note": report["fully_contracted"]["normalization_note"],
                },
            }
            print(json.dumps(payload, indent=2, sort_keys=True))
            return 0

        if args.command == "check":
            results = checks_mod.run_all(seed=args.seed)
            for r in results:
                print(f"[{r.status}] {r.name}: {r.detail}")
            code = checks_mod.exit_code(results)
            print("all checks passed" if code == 0 else "CHECK FAILURES PRESENT")
            return code

    except UnknownQuantityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LoopEntropyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
