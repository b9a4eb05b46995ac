"""CSV and SVG output."""

from __future__ import annotations

import csv
from typing import TextIO

import numpy as np

from .bdl import GeometricRepresentation, ScanReport, block_maxima, deviation_series


def write_scan_csv(report: ScanReport, fh: TextIO) -> None:
    w = csv.writer(fh)
    w.writerow(["n", "f_dot_psi"])
    for n, v in zip(report.ns, report.values):
        w.writerow([int(n), int(v) if report.exact else repr(float(v))])


def read_scan_csv(fh: TextIO) -> tuple[np.ndarray, np.ndarray]:
    r = csv.reader(fh)
    header = next(r)
    if header != ["n", "f_dot_psi"]:
        raise ValueError(f"unexpected header {header!r}")
    ns, vals = [], []
    exact = True
    for n, v in r:
        ns.append(int(n))
        try:
            vals.append(int(v))
        except ValueError:
            exact = False
            vals.append(float(v))
    return np.array(ns), np.array(vals, dtype=np.int64 if exact else float)


def rescan_csv(fh: TextIO):
    """(initial, block maxima) recomputed from a scan CSV."""
    ns, vals = read_scan_csv(fh)
    return block_maxima(ns, vals)


def write_representation_csv(rep: GeometricRepresentation, fh: TextIO) -> None:
    w = csv.writer(fh)
    w.writerow(["n", "x_n", "deviation"])
    dev = deviation_series(rep)
    for n, x, e in zip(rep.indices, rep.positions, dev):
        w.writerow([int(n), str(x), str(e)])


def representation_svg(rep: GeometricRepresentation, letters: str, first: int,
                       width: int = 900, height: int = 240, margin: int = 30) -> str:
    """Single axis: labelled gaps for u_first..., lattice ticks at eta*Z below,
    and the deviation |x_n - eta n| as a polyline underneath.

    ``letters`` are u_first, u_first+1, ... (one per drawn gap).
    """
    count = len(letters)
    ns = np.arange(first, first + count + 1)
    xs = np.array([float(rep.x(int(n))) for n in ns])
    eta = float(rep.eta)
    lo, hi = min(xs.min(), eta * ns[0]), max(xs.max(), eta * ns[-1])
    span = hi - lo or 1.0
    sx = lambda x: margin + (x - lo) / span * (width - 2 * margin)
    axis_y = 70
    out = [f'<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect width="{width}" height="{height}" fill="white"/>',
           f'<line x1="{sx(lo):.2f}" y1="{axis_y}" x2="{sx(hi):.2f}" y2="{axis_y}" stroke="black"/>']
    for n, x in zip(ns, xs):
        out.append(f'<line x1="{sx(x):.2f}" y1="{axis_y - 8}" x2="{sx(x):.2f}" y2="{axis_y + 8}" stroke="black"/>')
        if n == 0:
            out.append(f'<text x="{sx(x):.2f}" y="{axis_y + 24}" font-size="12" text-anchor="middle">0</text>')
    for a, x0, x1 in zip(letters, xs[:-1], xs[1:]):
        out.append(f'<text x="{(sx(x0) + sx(x1)) / 2:.2f}" y="{axis_y - 14}" font-size="14" '
                   f'text-anchor="middle">{a}</text>')
    lat_y = axis_y + 40
    out.append(f'<text x="4" y="{lat_y + 4}" font-size="10">eta Z</text>')
    out.append(f'<line x1="{sx(lo):.2f}" y1="{lat_y}" x2="{sx(hi):.2f}" y2="{lat_y}" stroke="#888"/>')
    for n in ns:
        x = sx(eta * n)
        out.append(f'<line x1="{x:.2f}" y1="{lat_y - 5}" x2="{x:.2f}" y2="{lat_y + 5}" stroke="#c33"/>')
    dev = np.abs(xs - eta * ns)
    top, bottom = lat_y + 25, height - 10
    dmax = dev.max() or 1.0
    pts = " ".join(f"{sx(eta * n):.2f},{bottom - d / dmax * (bottom - top):.2f}" for n, d in zip(ns, dev))
    out.append(f'<polyline points="{pts}" fill="none" stroke="#36c"/>')
    out.append(f'<text x="4" y="{top + 4}" font-size="10">|x_n - eta n| (max {dmax:.3g})</text>')
    out.append("</svg>")
    return "\n".join(out)
