"""Command-line surface.

One subcommand per result family: clusters, portfolio, project, sweep,
offset, score, serve. Exit code 0 iff no validation or computation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import api, report
from .loaders import DataBundle, ENV_DATA_DIR, RunConfig, ValidationError, load_and_validate


def _parse_range(text: str) -> List[float]:
    """Parse lo:hi:step into an inclusive list of values."""
    try:
        lo, hi, step = (float(part) for part in text.split(":"))
    except ValueError:
        raise ValidationError(f"bad range {text!r}, expected lo:hi:step", "range")
    if step <= 0 or hi < lo:
        raise ValidationError(f"bad range {text!r}: need step > 0 and hi >= lo", "range")
    values = []
    value = lo
    while value <= hi + 1e-12:
        values.append(round(value, 12))
        value += step
    return values


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--factors", type=Path, help="emission factor table (JSON)")
    parser.add_argument("--portfolio", type=Path, help="portfolio spec (JSON)")
    parser.add_argument("--models", type=Path, help="model/workload library (JSON)")
    parser.add_argument("--scenarios", type=Path, help="scenario presets (JSON)")
    parser.add_argument("--data-dir", type=Path,
                        help=f"data directory (default: ${ENV_DATA_DIR} or packaged data)")
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--out", type=Path, help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aifootprint",
        description="Environmental footprint simulator for corporate AI portfolios",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clusters", help="per-inference energy/impact matrix for all 192 clusters")
    _add_common(p)

    p = sub.add_parser("portfolio", help="annual footprint of the portfolio")
    _add_common(p)

    p = sub.add_parser("project", help="project the portfolio to 2030 under a scenario")
    _add_common(p)
    p.add_argument("--scenario", default=None,
                   help="preset name or path to a scenario JSON (default: all presets)")

    p = sub.add_parser("sweep", help="sensitivity sweep around a scenario")
    _add_common(p)
    p.add_argument("--scenario", default="intermediate")
    p.add_argument("--param", required=True,
                   choices=("model_size_factor", "output_token_factor", "agents_cagr"))
    p.add_argument("--range", required=True, help="lo:hi:step")

    p = sub.add_parser("offset", help="hardware efficiency needed for a GHG reduction target")
    _add_common(p)
    p.add_argument("--scenario", default="intermediate")
    p.add_argument("--target", type=float, default=0.9, help="GHG reduction fraction (0..1)")
    p.add_argument("--pue", type=float, default=1.04)
    p.add_argument("--grid-factor", type=float, default=0.55)

    p = sub.add_parser("score", help="eco-score grade for an energy-per-task value")
    p.add_argument("kwh", type=float)

    p = sub.add_parser("serve", help="start the HTTP service")
    _add_common(p)
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", type=Path, default=None,
                   help="static assets to serve at / (scenario explorer build)")

    return parser


def _emit(text: str, out: Optional[Path]):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _bundle_from_args(args) -> DataBundle:
    config = RunConfig(
        factors_path=getattr(args, "factors", None),
        portfolio_path=getattr(args, "portfolio", None),
        models_path=getattr(args, "models", None),
        scenarios_path=getattr(args, "scenarios", None),
        data_dir=getattr(args, "data_dir", None),
        output_format=getattr(args, "format", "table"),
        output_path=getattr(args, "out", None),
    )
    return load_and_validate(config)


def _scenario_argument(bundle, name: Optional[str]):
    if name is None:
        return None
    path = Path(name)
    if path.suffix == ".json" and path.exists():
        import json

        return api.resolve_scenario(bundle, json.loads(path.read_text()))
    return api.resolve_scenario(bundle, name)


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "score":
            result = api.score_energy(args.kwh)
            sys.stdout.write(result["grade"] + (" (beyond scale)\n" if result["beyond_scale"] else "\n"))
            return 0

        bundle = _bundle_from_args(args)

        if args.command == "clusters":
            rows = api.cluster_matrix(bundle)
            if args.format == "json":
                text = report.render_json({"clusters": rows})
            elif args.format == "csv":
                text = report.render_cluster_csv(rows)
            else:
                text = report.render_cluster_table(rows)
            _emit(text, args.out)

        elif args.command == "portfolio":
            footprint = api.portfolio_footprint(bundle)
            if args.format == "json":
                text = report.render_json(report.footprint_payload(footprint))
            elif args.format == "csv":
                text = report.render_footprint_csv(footprint)
            else:
                text = report.render_footprint_table(footprint)
            _emit(text, args.out)

        elif args.command == "project":
            scenario = _scenario_argument(bundle, args.scenario)
            if scenario is None:
                results = api.preset_results(bundle)
                ordered = [results[name] for name in bundle.scenario_order]
            else:
                ordered = [api.project_scenario(bundle, scenario)]
            if args.format == "json":
                text = report.render_json(
                    {r.scenario.name: r.as_dict() for r in ordered})
            elif args.format == "csv":
                text = report.render_scenario_csv(ordered)
            else:
                text = report.render_scenario_table(ordered)
            _emit(text, args.out)

        elif args.command == "sweep":
            scenario = _scenario_argument(bundle, args.scenario)
            values = _parse_range(args.range)
            sweep = api.run_sweep(bundle, scenario, args.param, values)
            if args.format == "json":
                text = report.render_json(report.sweep_payload(sweep))
            else:
                text = report.render_sweep_csv(sweep)
            _emit(text, args.out)

        elif args.command == "offset":
            scenario = _scenario_argument(bundle, args.scenario)
            result = api.run_offset(bundle, scenario, args.target,
                                    pue_override=args.pue,
                                    grid_factor_override=args.grid_factor)
            if args.format == "json":
                text = report.render_json(result)
            else:
                text = (
                    f"scenario: {result['scenario']}\n"
                    f"hardware efficiency factor: {result['hardware_efficiency_factor']:.1f}\n"
                    f"achieved GHG index: {result['achieved_ghg_index']:.2f} "
                    f"(target {100 * (1 - result['ghg_target_fraction']):.1f})\n"
                )
            _emit(text, args.out)

        elif args.command == "serve":
            from .service import serve

            serve(bundle, host=args.host, port=args.port, ui_dir=args.ui_dir)

        return 0
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
