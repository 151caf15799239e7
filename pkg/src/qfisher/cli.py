"""Command-line interface: sweep, qfi, validate-channel, report.

Exit codes: 0 success, 1 invalid arguments, 2 I/O failure, 3 empty result,
4 channel validation failure. QFI_EPSILON in the environment overrides the
default support tolerance; an explicit --epsilon flag wins over both.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .channels import CompletenessError, apply_uniform, validate_channel
from .qfi import DEFAULT_EPSILON, max_mean_qfi, qcrb
from .states import density_from_pure
from .sweep import (
    EmptyResultError,
    SweepConfig,
    discrepancy_report,
    emit_svg,
    make_channel_factory,
    make_state,
    modes_for,
    render_csv,
    run_sweep,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_EMPTY = 3
EXIT_CHANNEL = 4

_SWEEP_DEFAULTS = {
    "state": "w",
    "n_qubits": 3,
    "channel": "adc",
    "p_start": 0.0,
    "p_end": 1.0,
    "steps": 101,
    "mode": "paper",
    "epsilon": None,
    "n_m": 1,
    "workers": 1,
    "csv": None,
    "svg": None,
}

_CONFIG_COERCERS = {
    "n_qubits": int,
    "steps": int,
    "n_m": int,
    "workers": int,
    "p_start": float,
    "p_end": float,
    "epsilon": float,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; 2 is reserved for I/O here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(sub, *, grid: bool):
    sub.add_argument("--state", help="w | ghz | zero | dicke:K")
    sub.add_argument("--n", "--n-qubits", dest="n_qubits", type=int, help="number of qubits")
    sub.add_argument("--channel", help="dpc | adc | pdc | custom:PATH" + (" | comma list | all" if grid else ""))
    sub.add_argument("--epsilon", type=float, help="support tolerance (default 1e-10)")
    sub.add_argument("--n-m", dest="n_m", type=int, help="experiment count for the QCRB column")
    if grid:
        sub.add_argument("--p-start", dest="p_start", type=float)
        sub.add_argument("--p-end", dest="p_end", type=float)
        sub.add_argument("--steps", type=int)
        sub.add_argument("--workers", type=int, help="parallel grid workers")
        sub.add_argument("--config", help="key=value file supplying any of the flags above")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qfisher", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sweep = subs.add_parser("sweep", help="sweep decoherence strength, emit CSV/SVG")
    _add_common(sweep, grid=True)
    sweep.add_argument("--mode", choices=("paper", "full", "both"))
    sweep.add_argument("--csv", help="CSV output path")
    sweep.add_argument("--svg", help="SVG output path")

    single = subs.add_parser("qfi", help="evaluate one state/channel/strength point")
    _add_common(single, grid=False)
    single.add_argument("--p", type=float, default=0.0, help="channel strength")
    single.add_argument("--mode", choices=("paper", "full", "both"), default="paper")

    check = subs.add_parser("validate-channel", help="check the Kraus completeness relation")
    check.add_argument("--channel", required=True, help="dpc | adc | pdc | custom:PATH")
    check.add_argument("--p", type=float, default=0.5, help="strength for builtin channels")

    report = subs.add_parser("report", help="tabulate the gap between summation conventions")
    _add_common(report, grid=True)
    report.add_argument("--out", help="write the report here instead of stdout")

    return parser


def _parse_config_file(path) -> dict:
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        if key == "n":
            key = "n_qubits"
        if key not in _SWEEP_DEFAULTS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        coerce = _CONFIG_COERCERS.get(key, str)
        try:
            values[key] = coerce(value.strip())
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad value for {key!r}: {value.strip()!r}") from None
    return values


def _resolve_epsilon(explicit) -> float:
    if explicit is not None:
        return float(explicit)
    env = os.environ.get("QFI_EPSILON")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise ValueError(f"QFI_EPSILON is not a number: {env!r}") from None
    return DEFAULT_EPSILON


def _effective_settings(args) -> dict:
    settings = dict(_SWEEP_DEFAULTS)
    if getattr(args, "config", None):
        settings.update(_parse_config_file(args.config))
    for key in _SWEEP_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    settings["epsilon"] = _resolve_epsilon(settings["epsilon"])
    return settings


def _sweep_config(settings) -> SweepConfig:
    return SweepConfig(
        state=settings["state"],
        n_qubits=settings["n_qubits"],
        channel=settings["channel"],
        p_start=settings["p_start"],
        p_end=settings["p_end"],
        steps=settings["steps"],
        mode=settings["mode"],
        epsilon=settings["epsilon"],
        n_m=settings["n_m"],
        workers=settings["workers"],
        csv_path=settings["csv"],
        svg_path=settings["svg"],
    )


def _csv_target(path: str, label: str, multi: bool) -> Path:
    p = Path(path)
    return p.with_name(f"{p.stem}.{label}{p.suffix}") if multi else p


def _cmd_sweep(args) -> int:
    settings = _effective_settings(args)
    cfg = _sweep_config(settings)
    rows = run_sweep(cfg)
    labels = []
    for row in rows:
        if row.channel not in labels:
            labels.append(row.channel)
    wrote = False
    if cfg.csv_path:
        multi = len(labels) > 1
        for label in labels:
            subset = [r for r in rows if r.channel == label]
            target = _csv_target(cfg.csv_path, label, multi)
            target.write_text(render_csv(subset), encoding="utf-8")
        wrote = True
    if cfg.svg_path:
        emit_svg(rows, cfg.svg_path)
        wrote = True
    if not wrote:
        sys.stdout.write(render_csv(rows))
    return EXIT_OK


def _print_result(channel_label, p, result, n_m) -> None:
    bound = qcrb(result.f_max, n_m) if result.f_max > result.epsilon else float("inf")
    diag = result.c_matrix.diagonal()
    print(f"channel = {channel_label}")
    print(f"p = {p:.12g}")
    print(f"mode = {result.mode.value}")
    print(f"epsilon = {result.epsilon:.12g}")
    for name, value in (
        ("c_xx", diag[0]),
        ("c_yy", diag[1]),
        ("c_zz", diag[2]),
        ("c_max", result.c_max),
        ("f_max", result.f_max),
        ("mean_f", result.mean_f),
        ("qcrb", bound),
    ):
        print(f"{name} = {value:.12g}")
    print(f"classification = {result.classification}")


def _cmd_qfi(args) -> int:
    state = args.state if args.state is not None else "w"
    n_qubits = args.n_qubits if args.n_qubits is not None else 3
    channel = args.channel if args.channel is not None else "adc"
    n_m = args.n_m if args.n_m is not None else 1
    epsilon = _resolve_epsilon(args.epsilon)
    label, factory = make_channel_factory(channel)
    rho = apply_uniform(density_from_pure(make_state(state, n_qubits)), factory(args.p))
    first = True
    for mode in modes_for(args.mode):
        if not first:
            print()
        _print_result(label, args.p, max_mean_qfi(rho, mode, epsilon), n_m)
        first = False
    return EXIT_OK


def _cmd_validate_channel(args) -> int:
    label, factory = make_channel_factory(args.channel)
    defect = validate_channel(factory(args.p))
    print(f"ok: channel {label} (p = {args.p:g}) max completeness deviation = {defect:.3e}")
    return EXIT_OK


def _cmd_report(args) -> int:
    settings = _effective_settings(args)
    settings["mode"] = "both"  # the gap needs both conventions
    cfg = _sweep_config(settings)
    text = discrepancy_report(run_sweep(cfg))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


_COMMANDS = {
    "sweep": _cmd_sweep,
    "qfi": _cmd_qfi,
    "validate-channel": _cmd_validate_channel,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CompletenessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHANNEL
    except EmptyResultError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
