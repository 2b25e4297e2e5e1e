"""Editor-independent logic of the Blender companion add-on.

Everything here runs without ``bpy``: exact snapping of edited vertices,
the four-leg mirror construction used to preview the closed curve, the
canonical quarter-arc file writer (byte-compatible with the core
toolkit's), and invocation of the core CLI for crossing counts.  The
add-on layer in ``__init__`` is a thin shell over these functions, so the
behavior is testable headless.
"""

from __future__ import annotations

import json
import subprocess
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

DEFAULT_SNAP_TOLERANCE = 1e-6
LATTICE_DENOMINATOR = 5
DEFAULT_DELTA_TEXT = "1/5"


class QuarterShapeError(ValueError):
    """The drawn polyline cannot be a quarter arc (shown to the user)."""


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def snap_to_lattice(value: float, denominator: int = LATTICE_DENOMINATOR) -> Fraction:
    """Nearest fraction with the given denominator."""
    return Fraction(round(value * denominator), denominator)


def vertex_strings(
    scene_coords,
    stored: dict[int, tuple[str, str, str]] | None = None,
    lattice_snap: bool = True,
    tolerance: float = DEFAULT_SNAP_TOLERANCE,
) -> list[tuple[str, str, str]]:
    """Exact coordinate strings for scene vertices.

    A vertex keeps its stored exact strings as long as its float position
    still matches them within the tolerance, so unedited vertices survive
    float round trips without drift.  Edited vertices are snapped to the
    fifth-integer lattice when lattice_snap is on, else converted from
    the float via the lattice of power-of-two denominators.
    """
    stored = stored or {}
    out = []
    for i, coords in enumerate(scene_coords):
        kept = stored.get(i)
        if kept is not None:
            exact = tuple(Fraction(s) for s in kept)
            if all(abs(float(e) - c) <= tolerance for e, c in zip(exact, coords)):
                out.append(tuple(kept))
                continue
        if lattice_snap:
            triple = tuple(snap_to_lattice(c) for c in coords)
        else:
            triple = tuple(Fraction(c).limit_denominator(10**6) for c in coords)
        out.append(tuple(format_fraction(c) for c in triple))
    return out


def _axis_of(triple, tolerance: float):
    x, y, z = (float(Fraction(c)) for c in triple)
    if abs(y) <= tolerance and abs(z) <= tolerance and abs(x) > tolerance:
        return "x"
    if abs(x) <= tolerance and abs(z) <= tolerance and abs(y) > tolerance:
        return "y"
    return None


def snap_endpoints_onto_axes(
    strings: list[tuple[str, str, str]], tolerance: float = DEFAULT_SNAP_TOLERANCE
) -> list[tuple[str, str, str]]:
    """Force the first and last vertices exactly onto their axes.

    Raises QuarterShapeError unless the endpoints sit on the x- and
    y-axes (in either order) within the tolerance.
    """
    if len(strings) < 2:
        raise QuarterShapeError("a quarter needs at least two vertices")
    first_axis = _axis_of(strings[0], tolerance)
    last_axis = _axis_of(strings[-1], tolerance)
    if first_axis is None or last_axis is None or first_axis == last_axis:
        raise QuarterShapeError(
            "endpoints must lie on the x- and y-axes (one on each)"
        )
    out = list(strings)

    def onto(triple, axis):
        x, y, z = triple
        if axis == "x":
            return (x, "0", "0")
        return ("0", y, "0")

    out[0] = onto(out[0], first_axis)
    out[-1] = onto(out[-1], last_axis)
    return out


def quarter_file_text(name: str, delta_text: str, strings) -> str:
    """Canonical quarter-arc file bytes (same layout as the core writer)."""
    rows = ",\n".join(
        "    [" + ", ".join(json.dumps(c) for c in triple) + "]" for triple in strings
    )
    return (
        "{\n"
        f'  "name": {json.dumps(name)},\n'
        f'  "delta": {json.dumps(delta_text)},\n'
        '  "vertices": [\n'
        f"{rows}\n"
        "  ]\n"
        "}\n"
    )


def parse_quarter_text(text: str) -> tuple[str, str, list[tuple[str, str, str]]]:
    """(name, delta string, exact vertex strings) of an interchange file."""
    doc = json.loads(text)
    name = doc["name"]
    delta = doc.get("delta", DEFAULT_DELTA_TEXT)
    strings = [tuple(triple) for triple in doc["vertices"]]
    for triple in strings:
        if len(triple) != 3:
            raise QuarterShapeError("each vertex needs three coordinates")
        for c in triple:
            Fraction(c)  # validates
    return name, delta, strings


def full_polygon(strings) -> list[tuple[Fraction, Fraction, Fraction]]:
    """The closed 4q-4 vertex curve obtained by mirroring a quarter.

    Same leg construction as the core: the quarter, its end-axis mirror
    reversed, its z-half-turn image, and its start-axis mirror reversed,
    dropping glued duplicates.
    """
    pts = [tuple(Fraction(c) for c in triple) for triple in strings]
    start_axis = _axis_of(strings[0], 1e-12)
    end_axis = _axis_of(strings[-1], 1e-12)
    if start_axis is None or end_axis is None or start_axis == end_axis:
        raise QuarterShapeError("endpoints must lie on distinct horizontal axes")

    def turn(p, axis):
        x, y, z = p
        if axis == "x":
            return (x, -y, -z)
        if axis == "y":
            return (-x, y, -z)
        return (-x, -y, z)

    leg1 = pts
    leg2 = [turn(p, end_axis) for p in pts[-2::-1]]
    leg3 = [turn(p, "z") for p in pts[1:]]
    leg4 = [turn(p, start_axis) for p in pts[-2:0:-1]]
    return leg1 + leg2 + leg3 + leg4


@dataclass
class CountResult:
    ok: bool
    counts: tuple[int, int, int, int] | None = None
    message: str = ""


def parse_count_output(stdout: str) -> tuple[int, int, int, int]:
    line = stdout.strip().splitlines()[-1]
    parts = line.split()
    if len(parts) != 4:
        raise ValueError(f"unexpected count output: {line!r}")
    p_x, p_y, p_z, total = (int(p) for p in parts)
    if total != p_x + p_y + p_z:
        raise ValueError(f"inconsistent count line: {line!r}")
    return p_x, p_y, p_z, total


def run_count(cli_command: list[str], quarter_text: str, timeout: float = 30.0) -> CountResult:
    """Write the quarter to a temp file and ask the core CLI for counts.

    Failures never raise: the result carries the core's reason verbatim
    so the panel can show it.
    """
    tmp = tempfile.NamedTemporaryFile(
        "w", suffix=".json", prefix="simknot_", delete=False, encoding="utf-8"
    )
    try:
        tmp.write(quarter_text)
        tmp.close()
        try:
            proc = subprocess.run(
                [*cli_command, "count", tmp.name],
                capture_output=True,
                text=True,
                timeout=timeout,
            )
        except FileNotFoundError:
            return CountResult(False, message=f"core CLI not found: {cli_command[0]}")
        except subprocess.TimeoutExpired:
            return CountResult(False, message="core CLI timed out")
        if proc.returncode != 0:
            reason = proc.stderr.strip() or f"exit code {proc.returncode}"
            return CountResult(False, message=reason)
        try:
            return CountResult(True, counts=parse_count_output(proc.stdout))
        except ValueError as exc:
            return CountResult(False, message=str(exc))
    finally:
        Path(tmp.name).unlink(missing_ok=True)


def format_counts(counts: tuple[int, int, int, int]) -> str:
    p_x, p_y, p_z, total = counts
    return f"{p_x} {p_y} {p_z} | sum {total}"


class CountScheduler:
    """Sequence numbers for debounced count requests.

    Only the most recently issued token may publish its result; replies
    from superseded edits are discarded.
    """

    def __init__(self):
        self._latest = 0

    def begin(self) -> int:
        self._latest += 1
        return self._latest

    def is_current(self, token: int) -> bool:
        return token == self._latest


@dataclass
class AddonSession:
    """Panel state: CLI location plus the last published counts."""

    cli_command: list[str] = field(default_factory=lambda: ["simknot"])
    last_counts: tuple[int, int, int, int] | None = None
    stale: bool = True
    message: str = ""
    scheduler: CountScheduler = field(default_factory=CountScheduler)

    def publish(self, token: int, result: CountResult) -> bool:
        if not self.scheduler.is_current(token):
            return False
        if result.ok:
            self.last_counts = result.counts
            self.stale = False
            self.message = ""
        else:
            self.stale = True
            self.message = result.message
        return True

    def panel_text(self) -> str:
        if self.last_counts is not None and not self.stale:
            return format_counts(self.last_counts)
        if self.message:
            return self.message
        return "counts not available"
