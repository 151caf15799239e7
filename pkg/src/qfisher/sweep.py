"""Decoherence-strength sweeps with CSV, SVG and convention-gap reporting."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .channels import (
    KrausChannel,
    amplitude_damping,
    apply_uniform,
    custom_channel,
    depolarizing,
    phase_damping,
)
from .qfi import DEFAULT_EPSILON, SummationMode, max_mean_qfi, qcrb
from .states import density_from_pure, dicke_state, ghz_state, w_state, zero_state

CSV_HEADER = "p,mode,c_xx,c_yy,c_zz,c_max,f_max,mean_f,qcrb,classification"
CHANNEL_COLORS = {"dpc": "green", "adc": "blue", "pdc": "red", "custom": "dimgray"}
BUILTIN_CHANNELS = ("dpc", "adc", "pdc")
PURE_W3_MARKER = 7.0 / 3.0


class EmptyResultError(ValueError):
    """A sweep produced no rows; nothing to emit."""


@dataclass(frozen=True)
class SweepRow:
    channel: str
    p: float
    mode: SummationMode
    c_xx: float
    c_yy: float
    c_zz: float
    c_max: float
    f_max: float
    mean_f: float
    qcrb: float
    classification: str


@dataclass(frozen=True)
class SweepConfig:
    state: str = "w"
    n_qubits: int = 3
    channel: str = "adc"  # dpc | adc | pdc | custom:PATH | comma list | all
    p_start: float = 0.0
    p_end: float = 1.0
    steps: int = 101
    mode: str = "paper"  # paper | full | both
    epsilon: float = DEFAULT_EPSILON
    n_m: int = 1
    workers: int = 1
    csv_path: str | None = None
    svg_path: str | None = None


def make_state(spec: str, n_qubits: int) -> np.ndarray:
    """Build a pure state from a CLI spec: w | ghz | zero | dicke:K."""
    s = spec.strip().lower()
    if s == "w":
        return w_state(n_qubits)
    if s == "ghz":
        return ghz_state(n_qubits)
    if s == "zero":
        return zero_state(n_qubits)
    if s.startswith("dicke:"):
        text = s.split(":", 1)[1]
        try:
            k = int(text)
        except ValueError:
            raise ValueError(f"bad excitation count in state spec {spec!r}") from None
        return dicke_state(n_qubits, k)
    raise ValueError(f"unknown state spec {spec!r} (expected w, ghz, zero or dicke:K)")


def load_channel_file(path) -> KrausChannel:
    """Parse a custom channel file.

    Format: operator blocks separated by blank lines; each block is one 2x2
    operator given as two rows of two whitespace-separated "re,im" entries.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    blocks: list[list[str]] = []
    current: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if current:
                blocks.append(current)
                current = []
            continue
        current.append(line)
    if current:
        blocks.append(current)
    if not blocks:
        raise ValueError(f"{path}: no operator blocks found")
    ops = []
    for index, block in enumerate(blocks, start=1):
        if len(block) != 2:
            raise ValueError(
                f"{path}: operator block {index} must have 2 rows, got {len(block)}"
            )
        rows = []
        for line in block:
            cells = line.split()
            if len(cells) != 2:
                raise ValueError(
                    f"{path}: block {index} row {line!r} must have 2 entries"
                )
            row = []
            for cell in cells:
                parts = cell.split(",")
                if len(parts) != 2:
                    raise ValueError(
                        f"{path}: entry {cell!r} in block {index} is not 're,im'"
                    )
                try:
                    row.append(float(parts[0]) + 1j * float(parts[1]))
                except ValueError:
                    raise ValueError(
                        f"{path}: bad number in entry {cell!r} of block {index}"
                    ) from None
            rows.append(row)
        ops.append(np.array(rows))
    return custom_channel(ops)


def expand_channel_specs(spec: str) -> list[str]:
    """Split a channel argument into individual specs; 'all' means the builtins."""
    s = spec.strip()
    if s.lower() == "all":
        return list(BUILTIN_CHANNELS)
    parts = [part.strip() for part in s.split(",") if part.strip()]
    if not parts:
        raise ValueError(f"empty channel spec {spec!r}")
    return parts


def make_channel_factory(spec: str):
    """Return (label, p -> KrausChannel) for one channel spec."""
    s = spec.strip()
    low = s.lower()
    if low == "dpc":
        return "dpc", depolarizing
    if low == "adc":
        return "adc", amplitude_damping
    if low == "pdc":
        return "pdc", phase_damping
    if low.startswith("custom:"):
        fixed = load_channel_file(s.split(":", 1)[1])
        return "custom", lambda p: fixed
    raise ValueError(
        f"unknown channel spec {spec!r} (expected dpc, adc, pdc or custom:PATH)"
    )


def modes_for(mode: str) -> list[SummationMode]:
    m = mode.strip().lower()
    if m == "paper":
        return [SummationMode.SUPPORT_ONLY]
    if m == "full":
        return [SummationMode.FULL_SPECTRUM]
    if m == "both":
        return [SummationMode.SUPPORT_ONLY, SummationMode.FULL_SPECTRUM]
    raise ValueError(f"unknown mode {mode!r} (expected paper, full or both)")


def p_grid(cfg: SweepConfig) -> list[float]:
    if cfg.steps < 2:
        raise ValueError(f"steps must be >= 2, got {cfg.steps}")
    if not 0.0 <= cfg.p_start <= cfg.p_end <= 1.0:
        raise ValueError(
            f"need 0 <= p_start <= p_end <= 1, got [{cfg.p_start}, {cfg.p_end}]"
        )
    span = cfg.p_end - cfg.p_start
    return [cfg.p_start + k * span / (cfg.steps - 1) for k in range(cfg.steps)]


def _evaluate_point(rho0, label, factory, p, modes, epsilon, n_m) -> list[SweepRow]:
    rho = apply_uniform(rho0, factory(p))
    rows = []
    for mode in modes:
        res = max_mean_qfi(rho, mode, epsilon)
        diag = np.diag(res.c_matrix)
        # QCRB diverges as information vanishes; report inf below the
        # support tolerance instead of a meaningless huge number.
        bound = qcrb(res.f_max, n_m) if res.f_max > epsilon else float("inf")
        rows.append(
            SweepRow(
                channel=label,
                p=p,
                mode=mode,
                c_xx=float(diag[0]),
                c_yy=float(diag[1]),
                c_zz=float(diag[2]),
                c_max=res.c_max,
                f_max=res.f_max,
                mean_f=res.mean_f,
                qcrb=bound,
                classification=res.classification,
            )
        )
    return rows


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """Evaluate the QFI over the p-grid for every requested channel and mode.

    Rows are ordered channel-by-channel, p ascending, paper before full.
    A worker pool over grid points produces exactly the serial rows.
    """
    psi = make_state(cfg.state, cfg.n_qubits)
    rho0 = density_from_pure(psi)
    modes = modes_for(cfg.mode)
    grid = p_grid(cfg)
    if cfg.n_m < 1:
        raise ValueError(f"n_m must be >= 1, got {cfg.n_m}")
    rows: list[SweepRow] = []
    for spec in expand_channel_specs(cfg.channel):
        label, factory = make_channel_factory(spec)

        def job(p, label=label, factory=factory):
            return _evaluate_point(rho0, label, factory, p, modes, cfg.epsilon, cfg.n_m)

        if cfg.workers > 1:
            with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
                chunks = list(pool.map(job, grid))
        else:
            chunks = [job(p) for p in grid]
        for chunk in chunks:
            rows.extend(chunk)
    if not rows:
        raise EmptyResultError("sweep produced no rows")
    return rows


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def render_csv(rows) -> str:
    if not rows:
        raise EmptyResultError("refusing to render an empty sweep")
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    _fmt(r.p),
                    r.mode.value,
                    _fmt(r.c_xx),
                    _fmt(r.c_yy),
                    _fmt(r.c_zz),
                    _fmt(r.c_max),
                    _fmt(r.f_max),
                    _fmt(r.mean_f),
                    _fmt(r.qcrb),
                    r.classification,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def emit_csv(rows, path) -> None:
    """Write rows as CSV, 12 significant digits, newline-terminated UTF-8."""
    Path(path).write_text(render_csv(rows), encoding="utf-8")


_SVG_SIZE = (640, 480)
_SVG_MARGINS = (62, 18, 18, 52)  # left, right, top, bottom


def render_svg(rows, *, y_max: float = 2.5) -> str:
    """Self-contained SVG: mean QFI vs p, one polyline per (channel, mode).

    The x-axis spans p in [0, 1] and the y-axis mean QFI in [0, y_max];
    curves are clipped to the plot area. Channel colors: green dpc,
    blue adc, red pdc. Full-spectrum curves are dashed. A black dot marks
    the pure three-qubit W value (0, 7/3).
    """
    if not rows:
        raise EmptyResultError("refusing to render an empty sweep")
    width, height = _SVG_SIZE
    ml, mr, mt, mb = _SVG_MARGINS
    pw, ph = width - ml - mr, height - mt - mb

    def x(p: float) -> float:
        return ml + p * pw

    def y(f: float) -> float:
        return mt + (1 - f / y_max) * ph

    groups: dict[tuple, list] = {}
    for r in rows:
        groups.setdefault((r.channel, r.mode), []).append(r)
    single_mode = len({mode for _, mode in groups}) == 1

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        "<defs>"
        f'<clipPath id="plotarea"><rect x="{ml}" y="{mt}" width="{pw}" height="{ph}"/></clipPath>'
        "</defs>",
    ]
    # frame and ticks
    parts.append(
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="black"/>'
    )
    for i in range(6):
        p = i / 5
        parts.append(
            f'<line x1="{x(p):.2f}" y1="{mt + ph}" x2="{x(p):.2f}" y2="{mt + ph + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x(p):.2f}" y="{mt + ph + 18}" font-size="11" text-anchor="middle">{p:g}</text>'
        )
    for i in range(6):
        f = y_max * i / 5
        parts.append(
            f'<line x1="{ml - 5}" y1="{y(f):.2f}" x2="{ml}" y2="{y(f):.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{ml - 8}" y="{y(f) + 4:.2f}" font-size="11" text-anchor="end">{f:g}</text>'
        )
    parts.append(
        f'<text x="{ml + pw / 2:.2f}" y="{height - 14}" font-size="13" '
        'text-anchor="middle">decoherence strength p</text>'
    )
    parts.append(
        f'<text x="16" y="{mt + ph / 2:.2f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {mt + ph / 2:.2f})">mean QFI</text>'
    )

    parts.append('<g clip-path="url(#plotarea)">')
    legend = []
    for (channel, mode), group in groups.items():
        color = CHANNEL_COLORS.get(channel, "black")
        dash = ' stroke-dasharray="6 4"' if mode is SummationMode.FULL_SPECTRUM else ""
        points = " ".join(f"{x(r.p):.3f},{y(r.mean_f):.3f}" for r in group)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} '
            f'points="{points}"/>'
        )
        label = channel if single_mode else f"{channel} ({mode.value})"
        legend.append((label, color, dash))
    parts.append(f'<circle cx="{x(0):.3f}" cy="{y(PURE_W3_MARKER):.3f}" r="4" fill="black"/>')
    parts.append("</g>")

    lx, ly = ml + pw - 150, mt + 12
    for i, (label, color, dash) in enumerate(legend):
        yy = ly + 16 * i
        parts.append(
            f'<line x1="{lx}" y1="{yy}" x2="{lx + 26}" y2="{yy}" '
            f'stroke="{color}" stroke-width="1.5"{dash}/>'
        )
        parts.append(f'<text x="{lx + 32}" y="{yy + 4}" font-size="11">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg(rows, path, *, y_max: float = 2.5) -> None:
    Path(path).write_text(render_svg(rows, y_max=y_max), encoding="utf-8")


@dataclass(frozen=True)
class ModeGap:
    channel: str
    grid: list[float]
    mean_paper: list[float]
    mean_full: list[float]
    gaps: list[float]
    # largest |mean(p_{k+1}) - mean(p_k)| per convention, with its interval
    paper_jump: tuple[float, float, float]
    full_jump: tuple[float, float, float]


def _largest_jump(grid, means) -> tuple[float, float, float]:
    best = (0.0, grid[0], grid[0])
    for k in range(len(grid) - 1):
        jump = abs(means[k + 1] - means[k])
        if jump > best[0]:
            best = (jump, grid[k], grid[k + 1])
    return best


def gap_summary(rows) -> list[ModeGap]:
    """Per-channel gap between the two conventions; needs a both-mode sweep."""
    per_channel: dict[str, dict[float, dict[SummationMode, float]]] = {}
    order: list[str] = []
    for r in rows:
        if r.channel not in per_channel:
            order.append(r.channel)
        per_channel.setdefault(r.channel, {}).setdefault(r.p, {})[r.mode] = r.mean_f
    out = []
    for channel in order:
        by_p = per_channel[channel]
        grid = sorted(by_p)
        paper, full = [], []
        for p in grid:
            modes = by_p[p]
            if (
                SummationMode.SUPPORT_ONLY not in modes
                or SummationMode.FULL_SPECTRUM not in modes
            ):
                raise ValueError(
                    "gap summary requires rows from a mode='both' sweep; "
                    f"channel {channel!r} lacks one convention at p={p:g}"
                )
            paper.append(modes[SummationMode.SUPPORT_ONLY])
            full.append(modes[SummationMode.FULL_SPECTRUM])
        gaps = [abs(f - s) for f, s in zip(full, paper)]
        out.append(
            ModeGap(
                channel=channel,
                grid=grid,
                mean_paper=paper,
                mean_full=full,
                gaps=gaps,
                paper_jump=_largest_jump(grid, paper),
                full_jump=_largest_jump(grid, full),
            )
        )
    return out


def discrepancy_report(rows) -> str:
    """Text table of |mean_f(full) - mean_f(paper)| per grid point per channel."""
    sections = []
    for gap in gap_summary(rows):
        lines = [
            f"channel {gap.channel}: convention gap per grid point",
            f"{'p':>12} {'mean_paper':>14} {'mean_full':>14} {'|gap|':>14}",
        ]
        for p, s, f, g in zip(gap.grid, gap.mean_paper, gap.mean_full, gap.gaps):
            lines.append(f"{p:>12.6g} {s:>14.6g} {f:>14.6g} {g:>14.6g}")
        jump, a, b = gap.paper_jump
        lines.append(
            f"largest adjacent-step jump (paper): {jump:.6g} between p={a:.6g} and p={b:.6g}"
        )
        jump, a, b = gap.full_jump
        lines.append(
            f"largest adjacent-step jump (full):  {jump:.6g} between p={a:.6g} and p={b:.6g}"
        )
        worst = max(range(len(gap.gaps)), key=gap.gaps.__getitem__)
        lines.append(
            f"largest convention gap: {gap.gaps[worst]:.6g} at p={gap.grid[worst]:.6g}"
        )
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"
