"""Deterministic file emission: CSV, JSON, SVG and run manifests.

Outputs are byte-stable for identical inputs: floats are written with
repr (shortest round-trip), JSON keys are sorted, and the SVG renderer
uses no timestamps or generated ids.  Every file embeds the sha256 of
the run manifest, and the manifest itself is a valid key=value config
file, so a run can be reproduced byte-for-byte from it.
"""

import hashlib
import json
import math
from pathlib import Path

from . import __version__
from .errors import DomainError
from .tables import DataTable


def format_cell(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def manifest_text(params: dict) -> str:
    """Flat key=value rendering of a run configuration, sorted, one per line."""
    lines = [f"# zenolab {__version__} run manifest", "# rerun with: zenolab --config <this file>"]
    for key in sorted(params):
        value = params[key]
        if value is None:
            continue
        lines.append(f"{key}={format_cell(value)}")
    return "\n".join(lines) + "\n"


def manifest_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def render_csv(table: DataTable, manifest_sha: str = "") -> str:
    lines = []
    if manifest_sha:
        lines.append(f"# manifest_sha256={manifest_sha}")
    for key in sorted(table.metadata):
        lines.append(f"# {key}={format_cell(table.metadata[key])}")
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(format_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(table: DataTable, manifest_sha: str = "") -> str:
    by_column = {name: table.column(name) for name in table.columns}
    doc = {
        "columns": list(table.columns),
        "data": by_column,
        "metadata": dict(table.metadata),
    }
    if manifest_sha:
        doc["manifest_sha256"] = manifest_sha
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      allow_nan=True) + "\n"


def _svg_header(width: int, height: int, manifest_sha: str) -> list[str]:
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    if manifest_sha:
        lines.append(f"<!-- manifest_sha256={manifest_sha} -->")
    lines.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    return lines


def render_svg_line(table: DataTable, x_col: str, y_col: str,
                    manifest_sha: str = "", width: int = 640, height: int = 400) -> str:
    """A single polyline of y against x with linear axes."""
    xs = [float(v) for v in table.column(x_col)]
    ys = [float(v) for v in table.column(y_col)]
    if not xs:
        raise DomainError("cannot plot an empty table")
    pad = 40
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(x):
        return pad + (width - 2 * pad) * (x - x0) / (x1 - x0)

    def sy(y):
        return height - pad - (height - 2 * pad) * (y - y0) / (y1 - y0)

    pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    lines = _svg_header(width, height, manifest_sha)
    lines.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>')
    lines.append(f'<text x="{width // 2}" y="{height - 8}" text-anchor="middle" '
                 f'font-size="12">{x_col}</text>')
    lines.append(f'<text x="12" y="{height // 2}" text-anchor="middle" font-size="12" '
                 f'transform="rotate(-90 12 {height // 2})">{y_col}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg_grid(table: DataTable, x_col: str, y_col: str, z_col: str,
                    manifest_sha: str = "", width: int = 640, height: int = 480) -> str:
    """A colored-cell rendering of z over an (x, y) grid."""
    xs = sorted(set(float(v) for v in table.column(x_col)))
    ys = sorted(set(float(v) for v in table.column(y_col)))
    zmap = {(float(r[0]), float(r[1])): float(r[2])
            for r in (row for row in table.rows)}
    zvals = [z for z in zmap.values() if math.isfinite(z)]
    if not zvals:
        raise DomainError("cannot plot an empty grid")
    zmin, zmax = min(zvals), max(zvals)
    if zmax == zmin:
        zmax = zmin + 1.0
    pad = 40
    cw = (width - 2 * pad) / len(xs)
    ch = (height - 2 * pad) / len(ys)
    xi = {x: i for i, x in enumerate(xs)}
    yi = {y: i for i, y in enumerate(ys)}
    lines = _svg_header(width, height, manifest_sha)
    for (x, y), z in sorted(zmap.items()):
        u = (z - zmin) / (zmax - zmin) if math.isfinite(z) else 0.0
        # blue (low) to red (high)
        rch = int(255 * u)
        bch = int(255 * (1.0 - u))
        px = pad + xi[x] * cw
        py = height - pad - (yi[y] + 1) * ch
        lines.append(f'<rect x="{px:.2f}" y="{py:.2f}" width="{cw:.2f}" height="{ch:.2f}" '
                     f'fill="rgb({rch},64,{bch})"/>')
    lines.append(f'<text x="{width // 2}" y="{height - 8}" text-anchor="middle" '
                 f'font-size="12">{x_col}</text>')
    lines.append(f'<text x="12" y="{height // 2}" text-anchor="middle" font-size="12" '
                 f'transform="rotate(-90 12 {height // 2})">{y_col}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit(table: DataTable, out_dir, stem: str, formats, params: dict,
         plot: tuple | None = None) -> dict:
    """Write the table in the requested formats plus the run manifest.

    ``plot`` selects the SVG rendering: ("line", x, y) or
    ("grid", x, y, z).  Returns {format: path} for everything written.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    text = manifest_text(params)
    sha = manifest_hash(text)
    written = {}
    mpath = out / f"{stem}_manifest.txt"
    mpath.write_text(text)
    written["manifest"] = mpath
    for fmt in formats:
        if fmt == "csv":
            path = out / f"{stem}.csv"
            path.write_text(render_csv(table, sha))
        elif fmt == "json":
            path = out / f"{stem}.json"
            path.write_text(render_json(table, sha))
        elif fmt == "svg":
            path = out / f"{stem}.svg"
            if plot is None:
                raise DomainError("svg requested but no plot layout given")
            if plot[0] == "line":
                path.write_text(render_svg_line(table, plot[1], plot[2], sha))
            elif plot[0] == "grid":
                path.write_text(render_svg_grid(table, plot[1], plot[2], plot[3], sha))
            else:
                raise DomainError(f"unknown plot kind {plot[0]!r}")
        else:
            raise DomainError(f"unknown output format {fmt!r}")
        written[fmt] = path
    return written
