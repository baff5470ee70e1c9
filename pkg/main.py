from __future__ import annotations
from abstract.factory.concrete_factory_json import JsonAppComponents
from abstract.factory.concrete_factory_csv import CsvAppComponents
from abstract.factory.abstract_factory import AppComponents
from abstract.product.abstract_product import Settings, ConfigReader
from photon_fusion.axion_bridge import AxionParams, SCALING_COLUMNS, oscillation_scaling_report, to_model_params
from photon_fusion.constants import qed_reference_birefringence
from photon_fusion.dynamics import FieldRegion, ModelParams, observables
from photon_fusion.errors import ConfigError, PhotonFusionError, UsageError
from photon_fusion.exclusion import ObservedRotation, RotationLimit, grid_scan, limit_curve, signal_curve
from photon_fusion.run_config import OUTPUT_FORMATS, RunConfig
from photon_fusion.spin_algebra import Axis, PolarizationSpec
from typing import Callable, List, Optional, Sequence, TextIO
from pathlib import Path
from utils.logger import Logger
import numpy as np
import argparse
import tempfile
import sys
import os

SCAN_COLUMNS = ("delta_ev", "beta", "rotation_rad", "ellipticity_rad", "birefringence")
CURVE_COLUMNS = ("delta_ev", "beta", "node_flag")


def parse_grid(text: str, flag: str, log_spaced: bool = True) -> np.ndarray:
    """'min,max,n' -> n points from min to max (log spaced unless log_spaced is False)."""
    try:
        lo, hi, n = text.split(",")
        lo, hi, count = float(lo), float(hi), int(n)
    except ValueError:
        raise UsageError(f"{flag} expects min,max,n, got {text!r}") from None
    if count < 1:
        raise UsageError(f"{flag}: point count must be >= 1, got {count}")
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo >= hi:
        raise UsageError(f"{flag}: need finite min < max, got {lo}, {hi}")
    if log_spaced and lo <= 0:
        raise UsageError(f"{flag}: log-spaced grid needs min > 0, got {lo}")
    if not log_spaced and lo < 0:
        raise UsageError(f"{flag}: need min >= 0, got {lo}")
    if count == 1:
        return np.array([lo])
    if log_spaced:
        return np.logspace(np.log10(lo), np.log10(hi), count)
    return np.linspace(lo, hi, count)


def choose_factory(fmt: str) -> AppComponents:
    if fmt == "csv":
        return CsvAppComponents()
    elif fmt == "json":
        return JsonAppComponents()
    else:
        raise UsageError(f"output format {fmt!r} not supported, expected one of {OUTPUT_FORMATS}")


class FusionPhotonApp:
    def __init__(self, settings: Settings, reader: ConfigReader) -> None:
        self.__settings = settings
        self.__reader   = reader

    def run(self, args: argparse.Namespace) -> int:
        commands = {
            "predict": self.cmd_predict,
            "scan": self.cmd_scan,
            "curve": self.cmd_curve,
            "compare": self.cmd_compare,
        }
        return commands[args.command](args)

    # ── Subcommands ───────────────────────────────────────────
    def cmd_predict(self, args: argparse.Namespace) -> int:
        cfg = self.__reader.load_run_config(args.config)
        e = cfg.experiment
        params = self.__fusion_params(cfg)
        geometry = PolarizationSpec(Axis.Z, Axis.X) if args.propagation == "z" else e.polarization_angle
        region = FieldRegion(b=e.b, l=e.l, passes=e.passes, geometry=geometry)
        obs = observables(params, region, e.wavelength)
        record = {
            "p_conversion": obs.p_conversion,
            "rotation_rad": obs.rotation,
            "phase_diff_rad": obs.phase_diff,
            "ellipticity_rad": obs.ellipticity,
            "birefringence": obs.birefringence,
            "qed_birefringence": qed_reference_birefringence(e.b),
        }
        digits = self.__settings.significant_digits()

        def write(stream: TextIO, components: AppComponents) -> int:
            components.create_record_writer(stream, digits).write_record(record)
            return 1

        self.__emit(args, cfg, write)
        return 0

    def cmd_scan(self, args: argparse.Namespace) -> int:
        cfg = self.__reader.load_run_config(args.config)
        deltas = parse_grid(args.delta, "--delta")
        betas = parse_grid(args.beta, "--beta")
        rows = grid_scan(cfg.experiment, deltas, betas, workers=self.__settings.scan_workers())
        table = [(r.delta, r.beta, r.rotation, r.ellipticity, r.birefringence) for r in rows]
        self.__emit_table(args, cfg, SCAN_COLUMNS, table)
        return 0

    def cmd_curve(self, args: argparse.Namespace) -> int:
        cfg = self.__reader.load_run_config(args.config)
        e = cfg.experiment
        expected = ObservedRotation if args.kind == "signal" else RotationLimit
        if not isinstance(e.measurement, expected):
            raise ConfigError("--kind", f"{args.kind} curve needs "
                              f"{'observed_rotation_rad' if args.kind == 'signal' else 'limit_rotation_2sigma_rad'}"
                              f" in {args.config}")
        deltas = parse_grid(args.delta, "--delta")
        solve = signal_curve if args.kind == "signal" else limit_curve
        points = solve(e, deltas, self.__settings.solver_settings())
        table = [(p.delta, p.beta, p.node_flag) for p in points]
        self.__emit_table(args, cfg, CURVE_COLUMNS, table)
        return 0

    def cmd_compare(self, args: argparse.Namespace) -> int:
        fusion = self.__reader.load_run_config(args.fusion)
        axion = self.__reader.load_run_config(args.axion)
        if not isinstance(fusion.model, ModelParams):
            raise ConfigError(f"{args.fusion}:model", "expected fusion fields delta_ev, beta")
        if not isinstance(axion.model, AxionParams):
            raise ConfigError(f"{args.axion}:model", "expected axion fields m_a_ev, g_per_gev, omega_ev")
        b = fusion.experiment.b
        if axion.experiment.b != b:
            Logger().warning("Field differs between configs (%.6g T vs %.6g T), using %.6g T",
                             b, axion.experiment.b, b)
        lengths = parse_grid(args.length, "--length", log_spaced=False)
        report = oscillation_scaling_report(axion.model, fusion.model, b, lengths, omega_ratio=args.omega_ratio)
        table = [tuple(row[c] for c in SCALING_COLUMNS) for row in report]
        self.__emit_table(args, fusion, SCALING_COLUMNS, table)
        return 0

    # ── Helpers ───────────────────────────────────────────────
    def __fusion_params(self, cfg: RunConfig) -> ModelParams:
        if cfg.model is None:
            raise ConfigError("model", "predict needs a model block")
        if isinstance(cfg.model, AxionParams):
            Logger().info("Mapping ALP (m_a=%.3e eV, g=%.3e GeV^-1) to fusion parameters",
                          cfg.model.m_a, cfg.model.g)
            return to_model_params(cfg.model, cfg.experiment.b)
        return cfg.model

    def __emit_table(self, args: argparse.Namespace, cfg: RunConfig,
                     columns: Sequence[str], table: List[tuple]) -> None:
        digits = self.__settings.significant_digits()
        self.__emit(args, cfg, lambda stream, components:
                    components.create_table_writer(stream, digits).write_table(columns, table))

    def __emit(self, args: argparse.Namespace, cfg: RunConfig,
               write: Callable[[TextIO, AppComponents], int]) -> None:
        fmt = args.format or cfg.output_format or self.__settings.default_format()
        components = choose_factory(fmt)
        output = args.output or cfg.output_path
        if output is None:
            write(sys.stdout, components)
            sys.stdout.flush()
            return

        # Temporary sibling, renamed only after a complete write.
        target = Path(output)
        fd, tmp = tempfile.mkstemp(dir=target.parent if str(target.parent) else ".",
                                   prefix=f".{target.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as stream:
                count = write(stream, components)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
        Logger().info("Wrote %d %s row(s) to %s", count, fmt, target)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photon-fusion",
        description="Magnetically induced vacuum dichroism and birefringence in the photon fusion model.",
    )
    parser.add_argument("--settings", type=Path, default=None, help="application settings (YAML)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", default=None, help="output file (default: standard output)")
        p.add_argument("--format", choices=OUTPUT_FORMATS, default=None)

    p = sub.add_parser("predict", help="observables for one configuration")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--propagation", choices=("y", "z"), default="y",
                   help="beam direction; z is along the field")
    common(p)

    p = sub.add_parser("scan", help="observables over a log-spaced (Delta, beta) grid")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--delta", required=True, metavar="MIN,MAX,N")
    p.add_argument("--beta", required=True, metavar="MIN,MAX,N")
    common(p)

    p = sub.add_parser("curve", help="signal or limit curve in the (Delta, beta) plane")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--kind", choices=("signal", "limit"), required=True)
    p.add_argument("--delta", required=True, metavar="MIN,MAX,N")
    common(p)

    p = sub.add_parser("compare", help="P(L) of the fusion model and an ALP at two photon energies")
    p.add_argument("--fusion", type=Path, required=True)
    p.add_argument("--axion", type=Path, required=True)
    p.add_argument("--length", required=True, metavar="MIN,MAX,N")
    p.add_argument("--omega-ratio", type=float, default=2.0, dest="omega_ratio")
    common(p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = choose_factory(args.format or "csv").create_settings(args.settings)
        Logger.drop_instance()
        Logger(**settings.logger_options())
        if settings.source() is None:
            Logger().warning("No settings file, using built-in defaults")
        app = FusionPhotonApp(settings, JsonAppComponents().create_config_reader())
        return app.run(args)
    except PhotonFusionError as e:
        Logger().error("%s", e)
        return 1
    except Exception as e:
        Logger().critical("Fatal error: %s", e, exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
