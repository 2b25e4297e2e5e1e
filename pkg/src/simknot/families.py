"""Built-in quarter-arc generators and the twist-family consistency check.

The twist knots C(2k, 2*rho) come in four sub-families (parity of k times
the sign rho); each has its own vertex recipe, and a unified recipe covers
all four.  The two recipes must agree vertex for vertex, which is used as
a transcription check.  Also provides the trivial-knot and T(4,5) quarters
and the parity lower bound for the three-projection crossing sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import TripleCount, parity_check, project_and_count, triple_count
from .geometry import Axis, Point3
from .polygon import DEFAULT_DELTA, KnotEmbedding, QuarterArc, symmetrize, validate_embedding


@dataclass(frozen=True)
class TwistSpec:
    """Twist knot C(2k, 2*rho); rho=+1 gives crossing number 2k+2, rho=-1 gives 2k+1."""

    k: int
    rho: int
    delta: Fraction = DEFAULT_DELTA

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.rho not in (1, -1):
            raise ValueError("rho must be +1 or -1")
        if not (0 < self.delta < Fraction(1, 2)):
            raise ValueError("delta must lie strictly between 0 and 1/2")

    @property
    def crossing_number(self) -> int:
        return 2 * self.k + 2 if self.rho == 1 else 2 * self.k + 1


def _pts(raw, name, delta) -> QuarterArc:
    return QuarterArc(
        name=name,
        vertices=tuple(Point3(Fraction(x), Fraction(y), Fraction(z)) for x, y, z in raw),
        delta=delta,
    )


def twist_quarter_case(case: int, m: int, delta: Fraction = DEFAULT_DELTA) -> QuarterArc:
    """One of the four per-sub-family twist recipes.

    Case 1: C(2k,2), k=2m+1, m>=0.   Case 2: C(2k,2), k=2m, m>=1.
    Case 3: C(2k,-2), k=2m+1, m>=0.  Case 4: C(2k,-2), k=2m, m>=1.
    """
    d = Fraction(delta)
    if case in (1, 3):
        if m < 0:
            raise ValueError("cases 1 and 3 need m >= 0")
        k = 2 * m + 1
    elif case in (2, 4):
        if m < 1:
            raise ValueError("cases 2 and 4 need m >= 1")
        k = 2 * m
    else:
        raise ValueError("case must be 1..4")

    pts = [(0, 2, 0), (1, -d, -2)]
    if case in (1, 3):
        for i in range(m):
            pts.append((4 * i + 2, -(2 * i + 3), d))
            pts.append((4 * i + 3, d, 2 * i + 3))
            pts.append((4 * i + 4, 2 * i + 4, -d))
            pts.append((4 * i + 5, -d, -(2 * i + 4)))
    else:
        pts.append((2, -3, d))
        pts.append((3, d, 3))
        for i in range(m - 1):
            pts.append((4 * i + 4, 2 * i + 4, -d))
            pts.append((4 * i + 5, -d, -(2 * i + 4)))
            pts.append((4 * i + 6, -(2 * i + 5), d))
            pts.append((4 * i + 7, d, 2 * i + 5))

    if case == 1:
        pts += [
            (2 * k, -k - 2, d),
            (2 * k + 1, -k - 5, k + 4),
            (-2 * k - 2, -k - 6, k + 6),
        ]
    elif case == 2:
        pts += [
            (2 * k, k + 2, -d),
            (2 * k + 1, k + 5, -k - 4),
            (-2 * k - 2, k + 6, -k - 6),
        ]
    elif case == 3:
        pts += [
            (2 * k, -k - 4, -k - 5),
            (-2 * k - 2, -k - 6, -k - 6),
        ]
    else:
        pts += [
            (2 * k, k + 4, k + 5),
            (-2 * k - 2, k + 6, k + 6),
        ]
    pts.append((-2 * k - 2, 0, 0))
    rho = 1 if case in (1, 2) else -1
    return _pts(pts, f"C({2 * k},{2 * rho})", d)


def twist_quarter_unified(spec: TwistSpec) -> QuarterArc:
    """The unified twist recipe, valid for all k >= 1 and rho = +-1."""
    k, rho, d = spec.k, spec.rho, Fraction(spec.delta)
    pts = [(0, 2, 0), (1, -d, -2)]
    x, y, z = 1, -d, -2
    e = -1
    while x < 2 * k - 1:
        e = -e
        x += 1
        y = z - e
        z = e * d
        pts.append((x, y, z))
        x += 1
        z = -y
        y = e * d
        pts.append((x, y, z))
    if rho == 1:
        pts.append((2 * k, e * (k + 2), -e * d))
        pts.append((2 * k + 1, e * (k + 5), -e * (k + 4)))
    else:
        pts.append((2 * k, e * (k + 4), e * (k + 5)))
    pts.append((-2 * k - 2, e * (k + 6), -e * rho * (k + 6)))
    pts.append((-2 * k - 2, 0, 0))
    return _pts(pts, f"C({2 * k},{2 * rho})", d)


def builtin_quarter(name: str, delta: Fraction = DEFAULT_DELTA) -> QuarterArc:
    """Named non-twist quarters: the trivial knot and the (4,5) torus knot."""
    d = Fraction(delta)
    if name == "unknot":
        return _pts([(4, 0, 0), (3, 3, -1), (0, 4, 0)], "unknot", d)
    if name == "T45":
        raw = [
            (-12, 0, 0),
            (-d, 6, -5),
            (3, d, Fraction(-3, 4)),
            (-d, -3, 1),
            (-6, d, 2),
            (0, 12, 0),
        ]
        return _pts(raw, "T45", d)
    raise ValueError(f"unknown built-in quarter: {name!r}")


def sim_lower_bound(cr: int) -> int:
    """Parity lower bound for the three-projection crossing sum of a knot
    with crossing number cr: 3*cr+1 for odd cr, 3*cr+2 for even cr."""
    if cr < 0:
        raise ValueError("crossing number must be non-negative")
    return 3 * cr + 1 if cr % 2 == 1 else 3 * cr + 2


@dataclass(frozen=True)
class BoundRecord:
    cr: int
    lower: int
    witness_sum: int | None = None

    def __post_init__(self):
        if self.witness_sum is not None and self.witness_sum < self.lower:
            raise ValueError("witness sum below the parity lower bound")


@dataclass(frozen=True)
class TwistRow:
    k: int
    rho: int
    n: int
    counts: TripleCount


@dataclass(frozen=True)
class TwistTableReport:
    rows: tuple[TwistRow, ...]
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def twist_embedding(spec: TwistSpec) -> KnotEmbedding:
    return symmetrize(twist_quarter_unified(spec))


def verify_twist_table(max_k: int, delta: Fraction = DEFAULT_DELTA) -> TwistTableReport:
    """Generate, validate and count every C(2k, +-2) for k <= max_k and
    compare against the closed forms: transvergent count 2k+2, intravergent
    counts {2n+1-(2k+2), 6n-11}, sum 8n-10, and +4/+4/+24 increments from
    k to k+2 within each sub-family."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    rows = []
    problems = []
    for k in range(1, max_k + 1):
        for rho in (1, -1):
            spec = TwistSpec(k, rho, delta)
            n = spec.crossing_number
            embedding = twist_embedding(spec)
            report = validate_embedding(embedding)
            if not report.valid:
                problems.append(f"k={k} rho={rho}: invalid embedding {report.violations}")
                continue
            counts = triple_count(embedding)
            rows.append(TwistRow(k, rho, n, counts))
            expected_sum = 8 * n - 10
            trans = 2 * k + 2
            intr = {2 * n + 1 - trans, 6 * n - 11}
            if counts.p_z != trans:
                problems.append(
                    f"k={k} rho={rho}: transvergent count {counts.p_z}, expected {trans}"
                )
            if {counts.p_x, counts.p_y} != intr:
                problems.append(
                    f"k={k} rho={rho}: intravergent counts {{{counts.p_x},{counts.p_y}}}, expected {sorted(intr)}"
                )
            if counts.total != expected_sum:
                problems.append(
                    f"k={k} rho={rho}: sum {counts.total}, expected {expected_sum}"
                )
            for axis in (Axis.X, Axis.Y, Axis.Z):
                if not parity_check(project_and_count(embedding, axis)):
                    problems.append(f"k={k} rho={rho}: parity failure along {axis.value}")
    by_key = {(r.k, r.rho): r.counts for r in rows}
    for (k, rho), counts in sorted(by_key.items()):
        nxt = by_key.get((k + 2, rho))
        if nxt is None:
            continue
        if nxt.p_z - counts.p_z != 4:
            problems.append(f"k={k}->{k + 2} rho={rho}: transvergent increment != 4")
        deltas = sorted((nxt.p_x - counts.p_x, nxt.p_y - counts.p_y))
        if deltas != [4, 24]:
            problems.append(
                f"k={k}->{k + 2} rho={rho}: intravergent increments {deltas}, expected [4, 24]"
            )
    return TwistTableReport(tuple(rows), tuple(problems))
