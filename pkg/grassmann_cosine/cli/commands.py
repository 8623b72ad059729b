"""
CLI commands: spectrum, transform, limit and check
"""
import argparse
import json
import logging
import os
import sys
import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

import pandas as pd

from ..config.settings import reload_settings
from ..domain.models import OutputFormat, QuadratureConfig, QuadratureScheme, RunConfig
from ..domain.value_objects import HighestWeight
from ..spectrum.eigenvalues import ac_gamma_eta, eta, f1_image_member
from ..spectrum.weights import enumerate_weights
from ..transform.continuation import ac_gamma_C_report, check_pole
from ..transform.cosine import continued_transform_with_error
from ..transform.factory import profile_factory
from ..transform.funk import partial_funk
from ..transform.montecarlo import cosine_montecarlo
from .checks import SUITE_ALIASES, SUITES, CheckContext, run_suite

CSV_FLOAT_FORMAT = "%.17g"


class BaseCommand(ABC):
    """A subcommand: registers its parser, builds a RunConfig and emits one table"""

    name: str = ""
    help: str = ""
    needs_spec: bool = True

    def __init__(self):
        self.logger = logging.getLogger(f"cli.{self.name}")

    def register_parser(self, subparsers) -> None:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        spec_group = parser.add_argument_group("grassmannian")
        spec_group.add_argument("--p", type=int, required=self.needs_spec, help="Subspace dimension p")
        spec_group.add_argument("--q", type=int, required=self.needs_spec, help="Codimension q (p <= q)")
        spec_group.add_argument("--field", default="R", help="Scalar field R, C or H (default: R)")

        run_group = parser.add_argument_group("run")
        run_group.add_argument("--seed", type=int, default=0, help="Seed for every random stream (default: 0)")
        run_group.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                               default=OutputFormat.CSV.value, help="Output format (default: csv)")
        run_group.add_argument("--out", type=str, help="Write the table to this file instead of stdout")
        run_group.add_argument("--threads", type=int, help="Worker cap (overrides GCT_THREADS)")

        quad_group = parser.add_argument_group("quadrature")
        quad_group.add_argument("--nodes", type=int, help="Nodes per dimension (overrides GCT_NODES_PER_DIM)")
        quad_group.add_argument("--scheme", choices=[s.value for s in QuadratureScheme],
                                help="1-D rule along the radial coordinates")
        quad_group.add_argument("--rel-tol", type=float, help="Refinement tolerance (overrides GCT_REL_TOL)")

        self.add_arguments(parser)

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Command-specific arguments"""
        pass

    @abstractmethod
    def params(self, args: argparse.Namespace) -> dict:
        """Command-specific parameters echoed into the RunConfig"""
        pass

    @abstractmethod
    def build_table(self, config: RunConfig) -> pd.DataFrame:
        """Compute the output table"""
        pass

    def exit_code(self, table: pd.DataFrame) -> int:
        return 0

    def build_config(self, args: argparse.Namespace) -> RunConfig:
        if args.threads is not None:
            os.environ["GCT_THREADS"] = str(args.threads)
            reload_settings()
        quadrature = QuadratureConfig.from_settings(
            nodes_per_dim=args.nodes,
            rel_tol=args.rel_tol,
            scheme=QuadratureScheme(args.scheme) if args.scheme else None,
        )
        return RunConfig(
            command=self.name,
            p=args.p,
            q=args.q,
            field=args.field,
            seed=args.seed,
            output_format=OutputFormat(args.output_format),
            quadrature=quadrature,
            params=self.params(args),
            threads=args.threads,
        )

    def execute(self, args: argparse.Namespace) -> int:
        config = self.build_config(args)
        self.logger.info(f"Running {self.name} with {config.params}")
        started = time.perf_counter()
        table = self.build_table(config)
        runtime = time.perf_counter() - started
        self.logger.info(f"{self.name} finished in {runtime:.2f}s")
        write_output(render_table(table, config, runtime), args.out)
        if args.out:
            self.logger.info(f"Wrote {len(table)} rows to {args.out}")
        return self.exit_code(table)


def render_table(table: pd.DataFrame, config: RunConfig, runtime: Optional[float] = None) -> str:
    """CSV with round-trip floats, or JSON with the resolved config embedded.

    The runtime goes into JSON only; CSV output depends on nothing but the inputs.
    """
    if config.output_format is OutputFormat.JSON:
        document = {
            "config": config.model_dump(mode="json"),
            "runtime_seconds": runtime,
            "rows": json.loads(table.to_json(orient="records", double_precision=15)),
        }
        return json.dumps(document, indent=2) + "\n"
    return table.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


class SpectrumCommand(BaseCommand):
    name = "spectrum"
    help = "Closed-form eigenvalues eta_mu(lam) of the cosine transform"

    def add_arguments(self, parser):
        parser.add_argument("--max-degree", type=int, default=4, help="Largest m_1 to enumerate (default: 4)")
        parser.add_argument("--lambda", dest="lam", type=float, nargs="+", default=[1.0],
                            help="One or more lam values (default: 1)")

    def params(self, args):
        return {"max_degree": args.max_degree, "lambda": list(args.lam)}

    def build_table(self, config):
        spec = config.spec()
        weights = enumerate_weights(spec, config.params["max_degree"])
        zero = HighestWeight.zero(spec.p)
        rows = []
        for w in weights:
            at_minus1 = ac_gamma_eta(spec, w, -1.0).reported()
            member = f1_image_member(w)
            for lam in config.params["lambda"]:
                value = eta(spec, w, lam)
                row = {f"m{i + 1}": m for i, m in enumerate(w.m)}
                row.update({
                    "lambda": lam,
                    "eta": value.evaluate(),
                    "pole_order": max(value.pole_order, 0),
                    "ac_at_minus1": at_minus1,
                    "in_f1_image": member,
                })
                rows.append(row)
        self.logger.debug(f"{len(weights)} weights on {spec}, eta_0(0) = {eta(spec, zero, 0.0)}")
        columns = [f"m{i + 1}" for i in range(spec.p)] + ["lambda", "eta", "pole_order", "ac_at_minus1", "in_f1_image"]
        return pd.DataFrame(rows, columns=columns)


class TransformCommand(BaseCommand):
    name = "transform"
    help = "C^lam f(beta) by quadrature and/or Monte Carlo"

    def add_arguments(self, parser):
        parser.add_argument("--f", dest="profile", default="one",
                            help=f"Builtin profile ({', '.join(profile_factory.get_available_profiles())}) "
                                 "or a polynomial in c1..cp")
        parser.add_argument("--lambda", dest="lam", type=float, default=1.0, help="lam (default: 1)")
        parser.add_argument("--method", choices=["quad", "mc", "both"], default="quad",
                            help="quad: continued radial quadrature, mc: Monte Carlo (default: quad)")
        parser.add_argument("--samples", type=int, default=100_000, help="Monte Carlo sample count")

    def params(self, args):
        return {"profile": args.profile, "lambda": args.lam, "method": args.method, "samples": args.samples}

    def build_table(self, config):
        spec = config.spec()
        params = config.params
        f = profile_factory.create(params["profile"], spec.p)
        lam = params["lambda"]
        rows = []
        if params["method"] in ("quad", "both"):
            value, error = continued_transform_with_error(spec, f, lam, config.quadrature)
            rows.append({"profile": f.name, "lambda": lam, "method": "quad", "value": value, "error": error,
                         "samples": 0})
        if params["method"] in ("mc", "both"):
            mean, stderr = cosine_montecarlo(spec, f, lam, None, params["samples"], config.seed)
            rows.append({"profile": f.name, "lambda": lam, "method": "mc", "value": mean, "error": stderr,
                         "samples": params["samples"]})
        if len(rows) == 2:
            gap = abs(rows[0]["value"] - rows[1]["value"])
            self.logger.info(f"quad vs mc: |difference| = {gap:.3e}, {gap / rows[1]['error']:.2f} stderr")
        return pd.DataFrame(rows, columns=["profile", "lambda", "method", "value", "error", "samples"])


class LimitCommand(BaseCommand):
    name = "limit"
    help = "Continuation of gamma(lam) C^lam f(beta) to a pole lam0 in {-1, ..., -p}"

    def add_arguments(self, parser):
        parser.add_argument("--f", dest="profile", default="one", help="Builtin profile or polynomial in c1..cp")
        parser.add_argument("--pole", type=float, default=-1.0, help="lam0 (default: -1)")

    def params(self, args):
        return {"profile": args.profile, "pole": args.pole}

    def build_table(self, config):
        spec = config.spec()
        lam0 = config.params["pole"]
        m = check_pole(spec, lam0)
        f = profile_factory.create(config.params["profile"], spec.p)
        report = ac_gamma_C_report(spec, f, lam0, config.quadrature)
        ladder = report.extrapolation

        rows = [{"kind": "sample", "eps": eps, "value": value, "error": float("nan")}
                for eps, value in zip(ladder.epsilons, ladder.samples)]
        rows += [{"kind": "window", "eps": ladder.epsilons[i], "value": value, "error": float("nan")}
                 for i, value in enumerate(ladder.window_limits)]
        rows.append({"kind": "limit", "eps": 0.0, "value": report.value, "error": report.error})

        constant = ac_gamma_eta(spec, HighestWeight.zero(spec.p), lam0).reported()
        rows.append({"kind": "constant_closed_form", "eps": 0.0, "value": constant, "error": 0.0})
        rows.append({"kind": "normalized", "eps": 0.0, "value": report.value / constant,
                     "error": report.error / abs(constant)})
        rows.append({"kind": "partial_funk", "eps": 0.0, "value": partial_funk(spec, f, m, config.quadrature),
                     "error": float("nan")})
        return pd.DataFrame(rows, columns=["kind", "eps", "value", "error"])


class CheckCommand(BaseCommand):
    name = "check"
    help = "Run a verification suite; exit code 0 iff every check passes"
    needs_spec = False

    def add_arguments(self, parser):
        parser.add_argument("--suite", required=True, choices=sorted(SUITES) + sorted(SUITE_ALIASES) + ["all"],
                            help="Suite to run (product_law is an alias of lemma58)")
        parser.add_argument("--samples", type=int, default=100_000, help="Monte Carlo samples for the haar suite")

    def params(self, args):
        return {"suite": args.suite, "samples": args.samples}

    def build_table(self, config):
        ctx = CheckContext(seed=config.seed, samples=config.params["samples"], cfg=config.quadrature)
        names: List[str] = list(SUITES) if config.params["suite"] == "all" else [config.params["suite"]]
        rows = [r.as_row() for name in names for r in run_suite(name, ctx)]
        return pd.DataFrame(rows, columns=["suite", "check", "residual", "tolerance", "passed"])

    def exit_code(self, table):
        failed = int((~table["passed"]).sum())
        if failed:
            self.logger.error(f"{failed} of {len(table)} checks failed")
            return 1
        return 0
