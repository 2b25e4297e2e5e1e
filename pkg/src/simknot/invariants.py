"""Diagram-level knot invariants over planar-diagram codes.

A planar-diagram code is a list of 4-tuples of arc labels.  Arcs are
numbered 1..2c along the oriented knot and each tuple lists the arcs
counterclockwise around a crossing starting at the incoming under-arc.
With sequential labels the two over-strand positions are consecutive
arcs, which encodes the crossing sign: the second tuple entry is the
outgoing over-arc at a positive crossing and the incoming one at a
negative crossing.

Provided invariants: Reidemeister I/II simplification, the Kauffman
bracket / Jones polynomial (state-sum, capped after simplification), the
Alexander polynomial via the Wirtinger presentation with fraction-free
elimination, and a (determinant, Alexander) fingerprint with a bundled
lookup table for identification up to mirror image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

JONES_CROSSING_CAP = 18


class MalformedCodeError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


# --------------------------------------------------------------------------
# integer Laurent polynomials in one variable
# --------------------------------------------------------------------------


class LaurentPoly:
    """Finitely supported integer Laurent polynomial; immutable by convention."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def from_coeffs(cls, coeffs, lowest_exp: int = 0) -> "LaurentPoly":
        return cls({lowest_exp + i: c for i, c in enumerate(coeffs)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def shifted(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def mirrored(self) -> "LaurentPoly":
        """Substitute the variable by its inverse."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def evaluate(self, x):
        return sum(c * Fraction(x) ** e for e, c in self.coeffs.items())

    @property
    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def coeffs_lowest_first(self) -> tuple[int, ...]:
        if not self.coeffs:
            return (0,)
        lo, hi = self.min_exp, self.max_exp
        return tuple(self.coeffs.get(e, 0) for e in range(lo, hi + 1))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            term = f"{c}" if e == 0 else (f"{c}*t^{e}" if c not in (1, -1) else f"{'-' if c < 0 else ''}t^{e}")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


# --------------------------------------------------------------------------
# PD-code structure
# --------------------------------------------------------------------------


def validate_code(code) -> int:
    """Validate a sequential planar-diagram code; return the crossing count."""
    code = list(code)
    c = len(code)
    if c == 0:
        return 0
    two_c = 2 * c
    counts = {}
    for tup in code:
        if len(tup) != 4:
            raise MalformedCodeError(f"crossing {tup!r} is not a 4-tuple")
        for lab in tup:
            if not isinstance(lab, int) or not (1 <= lab <= two_c):
                raise MalformedCodeError(f"arc label {lab!r} out of range 1..{two_c}")
            counts[lab] = counts.get(lab, 0) + 1
    bad = [lab for lab in range(1, two_c + 1) if counts.get(lab, 0) != 2]
    if bad:
        raise MalformedCodeError(f"arc labels not used exactly twice: {bad}")
    for tup in code:
        tuple_sign(tup, two_c)  # raises if inconsistent
    return c


def _cyc_next(x: int, two_c: int) -> int:
    return x % two_c + 1


def tuple_sign(tup, two_c: int) -> int:
    """Crossing sign encoded by a sequential-label 4-tuple."""
    a, b, _, d = tup
    if two_c == 2:
        # lone kink: both cyclic relations hold, so compare with the
        # incoming under-arc instead (positive iff it doubles as over-out)
        if b == a:
            return 1
        if d == a:
            return -1
        raise MalformedCodeError(f"one-crossing code {tup} is not a kink")
    if b == _cyc_next(d, two_c):
        return 1
    if d == _cyc_next(b, two_c):
        return -1
    raise MalformedCodeError(f"over arcs of {tup} are not consecutive")


def code_writhe(code) -> int:
    c = len(code)
    if c == 0:
        return 0
    return sum(tuple_sign(t, 2 * c) for t in code)


def _roles(tup, two_c: int):
    """(under_in, under_out, over_in, over_out) of a sequential tuple."""
    a, b, c, d = tup
    if tuple_sign(tup, two_c) > 0:
        return a, c, d, b
    return a, c, b, d


# --------------------------------------------------------------------------
# faces of the underlying 4-valent planar graph
# --------------------------------------------------------------------------


def pd_faces(code):
    """Faces as tuples of (crossing index, port) corners, via the rotation
    system given by the counterclockwise tuples."""
    occurrences = {}
    for ci, tup in enumerate(code):
        for pi, lab in enumerate(tup):
            occurrences.setdefault(lab, []).append((ci, pi))
    for lab, occ in occurrences.items():
        if len(occ) != 2:
            raise MalformedCodeError(f"arc {lab} has {len(occ)} endpoints")

    def partner(port):
        ci, pi = port
        occ = occurrences[code[ci][pi]]
        return occ[1] if occ[0] == port else occ[0]

    visited = set()
    faces = []
    for ci in range(len(code)):
        for pi in range(4):
            start = (ci, pi)
            if start in visited:
                continue
            face = []
            port = start
            while True:
                face.append(port)
                visited.add(port)
                cj, pj = partner(port)
                port = (cj, (pj + 1) % 4)
                if port == start:
                    break
            faces.append(tuple(face))
    return faces


# --------------------------------------------------------------------------
# Reidemeister I/II simplification
# --------------------------------------------------------------------------


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[x] = p
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _find_kink(work):
    # a crossing with one arc occupying two cyclically adjacent ports
    for ci, rec in enumerate(work):
        tup = rec["tup"]
        for p in range(4):
            if tup[p] == tup[(p + 1) % 4]:
                return ci, p
    return None


def _find_poke(work):
    code = [rec["tup"] for rec in work]
    best = None
    for face in pd_faces(code):
        if len(face) != 2:
            continue
        (c1, p1), (c2, p2) = face
        if c1 == c2:
            continue
        u = code[c1][p1]
        v = code[c2][p2]
        if u == v:
            continue

        def over_at(ci, lab):
            # the over strand occupies the odd tuple positions
            return any(code[ci][p] == lab for p in (1, 3)) and not any(
                code[ci][p] == lab for p in (0, 2)
            )

        def under_at(ci, lab):
            return any(code[ci][p] == lab for p in (0, 2)) and not any(
                code[ci][p] == lab for p in (1, 3)
            )

        poke = (over_at(c1, u) and over_at(c2, u) and under_at(c1, v) and under_at(c2, v)) or (
            over_at(c1, v) and over_at(c2, v) and under_at(c1, u) and under_at(c2, u)
        )
        if not poke:
            continue
        key = (min(c1, c2), max(c1, c2))
        if best is None or key < best[0]:
            best = (key, (c1, c2, u, v))
    return best[1] if best else None


def _apply_relabel(work, dsu):
    for rec in work:
        rec["tup"] = tuple(dsu.find(x) for x in rec["tup"])


def simplify(code):
    """Remove Reidemeister I kinks and II pokes until none remain.

    Deterministic: at each step the applicable site with the lowest
    crossing index is reduced (kinks before pokes).  The result encodes
    the same knot, with arcs renumbered sequentially.
    """
    c = validate_code(code)
    two_c = 2 * c
    work = [{"tup": tuple(t), "sign": tuple_sign(t, two_c)} for t in code]

    while work:
        kink = _find_kink(work)
        if kink is not None:
            ci, p = kink
            tup = work[ci]["tup"]
            e, f = tup[(p + 2) % 4], tup[(p + 3) % 4]
            dsu = _DSU()
            dsu.union(e, f)
            del work[ci]
            _apply_relabel(work, dsu)
            continue
        poke = _find_poke(work)
        if poke is not None:
            c1, c2, u, v = poke
            dsu = _DSU()
            for lab in (u, v):
                for ci in (c1, c2):
                    tup = work[ci]["tup"]
                    q = tup.index(lab)
                    dsu.union(lab, tup[(q + 2) % 4])
            for ci in sorted((c1, c2), reverse=True):
                del work[ci]
            _apply_relabel(work, dsu)
            continue
        break

    if not work:
        return []
    return _renumber(work)


def _renumber(work):
    """Relabel arcs sequentially along the knot, crossings in
    first-encounter order, starting from the lowest current arc label."""
    entry_of = {}  # arc -> (crossing it enters, passage kind)
    leaves = {}  # (kind, crossing) -> outgoing arc
    for ci, rec in enumerate(work):
        a, b, c, d = rec["tup"]
        if rec["sign"] > 0:
            o_in, o_out = d, b
        else:
            o_in, o_out = b, d
        for lab, kind in ((a, "under"), (o_in, "over")):
            if lab in entry_of:
                raise MalformedCodeError(f"arc {lab} enters two crossings")
            entry_of[lab] = (ci, kind)
        leaves[("under", ci)] = c
        leaves[("over", ci)] = o_out

    start = min(entry_of)
    arc = start
    new_label = {}
    first_seen = {}
    for step in range(1, 2 * len(work) + 1):
        if arc in new_label:
            raise MalformedCodeError("code does not traverse a single knot")
        new_label[arc] = step
        ci, kind = entry_of[arc]
        first_seen.setdefault(ci, len(first_seen))
        arc = leaves[(kind, ci)]
    if arc != start or len(new_label) != 2 * len(work):
        raise MalformedCodeError("code does not traverse a single knot")

    out = [None] * len(work)
    for ci, rec in enumerate(work):
        out[first_seen[ci]] = tuple(new_label[x] for x in rec["tup"])
    result = [t for t in out if t is not None]
    validate_code(result)
    return result


# --------------------------------------------------------------------------
# Kauffman bracket / Jones polynomial
# --------------------------------------------------------------------------

_DELTA = LaurentPoly({2: -1, -2: -1})


def _laurent_divexact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    if not den:
        raise ZeroDivisionError
    if not num:
        return LaurentPoly()
    n_lo, d_lo = num.min_exp, den.min_exp
    n = [num.coeffs.get(e, 0) for e in range(n_lo, num.max_exp + 1)]
    d = [den.coeffs.get(e, 0) for e in range(d_lo, den.max_exp + 1)]
    q = [0] * (len(n) - len(d) + 1)
    rem = list(n)
    for i in range(len(q) - 1, -1, -1):
        coef, check = divmod(rem[i + len(d) - 1], d[-1])
        if check:
            raise ArithmeticError("inexact Laurent division")
        q[i] = coef
        for j, dc in enumerate(d):
            rem[i + j] -= coef * dc
    if any(rem):
        raise ArithmeticError("inexact Laurent division")
    return LaurentPoly({n_lo - d_lo + i: c for i, c in enumerate(q)})


def kauffman_bracket(code) -> LaurentPoly:
    """Bracket polynomial in the smoothing variable, by planar contraction."""
    c = validate_code(code)
    if c == 0:
        return LaurentPoly.const(1)

    occurrences = {}
    for ci, tup in enumerate(code):
        for pi, lab in enumerate(tup):
            occurrences.setdefault(lab, []).append((ci, pi))

    # greedy processing order keeping the open boundary small
    remaining = set(range(c))
    order = []
    boundary: set[int] = set()
    while remaining:
        def gain(ci):
            labs = set(code[ci])
            return (len(labs & boundary), -ci)

        nxt = max(remaining, key=gain) if order else min(remaining)
        order.append(nxt)
        remaining.discard(nxt)
        for lab in code[nxt]:
            boundary.symmetric_difference_update({lab})

    processed = set()
    states = {frozenset(): LaurentPoly.const(1)}
    for ci in order:
        tup = code[ci]
        ports = [(ci, p) for p in range(4)]
        processed.add(ci)
        joins = []
        seen_lab = set()
        for p, lab in enumerate(tup):
            if lab in seen_lab:
                continue
            seen_lab.add(lab)
            occ = occurrences[lab]
            if all(o[0] in processed for o in occ):
                joins.append((occ[0], occ[1]))
        smoothings = (
            (1, ((ports[0], ports[1]), (ports[2], ports[3]))),
            (-1, ((ports[0], ports[3]), (ports[1], ports[2]))),
        )
        new_states: dict = {}
        for chains, coeff in states.items():
            ends = {}
            for pair in chains:
                x, y = tuple(pair)
                ends[x] = y
                ends[y] = x
            for aexp, pairs in smoothings:
                e2 = dict(ends)
                loops = 0
                for x, y in pairs:
                    e2[x] = y
                    e2[y] = x
                for x, y in joins:
                    if e2[x] == y:
                        loops += 1
                        del e2[x]
                        del e2[y]
                    else:
                        px, py = e2.pop(x), e2.pop(y)
                        e2[px] = py
                        e2[py] = px
                key = frozenset(frozenset((x, e)) for x, e in e2.items())
                term = coeff.shifted(aexp)
                for _ in range(loops):
                    term = term * _DELTA
                if key in new_states:
                    new_states[key] = new_states[key] + term
                else:
                    new_states[key] = term
        states = new_states

    total = states.get(frozenset(), LaurentPoly())
    return _laurent_divexact(total, _DELTA)


def jones(code, writhe: int | None = None) -> LaurentPoly:
    """Jones polynomial from the writhe-normalized bracket.

    The code is simplified first; diagrams still larger than
    ``JONES_CROSSING_CAP`` crossings are rejected rather than attempted.
    """
    c = validate_code(code)
    if writhe is not None and writhe != code_writhe(code):
        raise MalformedCodeError("declared writhe does not match the code")
    reduced = simplify(code)
    if len(reduced) > JONES_CROSSING_CAP:
        raise TooLargeError(
            f"{len(reduced)} crossings after simplification exceeds the cap of {JONES_CROSSING_CAP}"
        )
    w = code_writhe(reduced)
    bracket = kauffman_bracket(reduced)
    sign = 1 if w % 2 == 0 else -1
    normalized = bracket.shifted(-3 * w)
    out = {}
    for e, coef in normalized.coeffs.items():
        if e % 4 != 0:
            raise ArithmeticError("bracket exponent not divisible by 4 for a knot")
        out[-e // 4] = sign * coef
    return LaurentPoly(out)


# --------------------------------------------------------------------------
# Alexander polynomial (Wirtinger presentation, fraction-free elimination)
# --------------------------------------------------------------------------


def _pstrip(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _pstrip(out)


def _psub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _pstrip(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _pstrip(out)


def _pdivexact(a, b):
    if not b:
        raise ZeroDivisionError
    if not a:
        return []
    q = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(q) - 1, -1, -1):
        coef, check = divmod(rem[i + len(b) - 1], b[-1])
        if check:
            raise ArithmeticError("inexact polynomial division")
        q[i] = coef
        for j, cb in enumerate(b):
            rem[i + j] -= coef * cb
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _pstrip(q)


def _poly_det_bareiss(matrix):
    """Determinant of a square matrix of dense integer polynomials."""
    n = len(matrix)
    if n == 0:
        return [1]
    m = [[list(e) for e in row] for row in matrix]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(m[k][k], m[i][j]), _pmul(m[i][k], m[k][j]))
                m[i][j] = _pdivexact(num, prev)
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else [-c for c in det]


def alexander(code) -> LaurentPoly:
    """Alexander polynomial, normalized to lowest exponent 0 and value +1 at 1."""
    c = validate_code(code)
    if c == 0:
        return LaurentPoly.const(1)
    two_c = 2 * c

    dsu = _DSU()
    for tup in code:
        _, _, o_in, o_out = _roles(tup, two_c)
        dsu.union(o_in, o_out)
    classes = sorted({dsu.find(lab) for lab in range(1, two_c + 1)})
    if len(classes) != c:
        raise MalformedCodeError("code is not a knot diagram (wrong generator count)")
    col = {root: i for i, root in enumerate(classes)}

    t = [0, 1]
    one = [1]
    rows = []
    for tup in code:
        u_in, u_out, o_in, _ = _roles(tup, two_c)
        sign = tuple_sign(tup, two_c)
        row = [[] for _ in range(c)]

        def add(lab, poly):
            j = col[dsu.find(lab)]
            row[j] = _padd(row[j], poly)

        if sign > 0:
            add(u_in, t)
            add(o_in, _psub(one, t))
            add(u_out, [-1])
        else:
            add(u_in, [-1])
            add(o_in, _psub(one, t))
            add(u_out, t)
        rows.append(row)

    minor = [row[: c - 1] for row in rows[: c - 1]]
    det = _poly_det_bareiss(minor)
    if not det:
        raise MalformedCodeError("vanishing Alexander determinant: not a knot code")
    lowest = next(i for i, coef in enumerate(det) if coef)
    det = det[lowest:]
    total = sum(det)
    if total == -1:
        det = [-coef for coef in det]
    elif total != 1:
        raise MalformedCodeError("Alexander value at 1 is not a unit: not a knot code")
    return LaurentPoly.from_coeffs(det)


# --------------------------------------------------------------------------
# fingerprints and identification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    determinant: int
    alexander: LaurentPoly

    def key(self):
        return (self.determinant, self.alexander.coeffs_lowest_first())


def fingerprint(code) -> Fingerprint:
    """(determinant, normalized Alexander) of a diagram, mirror-insensitive."""
    reduced = simplify(code)
    alex = alexander(reduced)
    det = abs(alex.evaluate(-1))
    assert det.denominator == 1
    return Fingerprint(determinant=int(det), alexander=alex)


_TABLE_CACHE: list[tuple[str, int, tuple[int, ...]]] | None = None


def load_fingerprint_table():
    """Bundled (name, determinant, alexander coefficients) rows."""
    global _TABLE_CACHE
    if _TABLE_CACHE is None:
        rows = []
        text = resources.files("simknot.data").joinpath("fingerprints.tsv").read_text()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, det, coeffs = line.split("\t")
            rows.append((name, int(det), tuple(int(x) for x in coeffs.split(","))))
        _TABLE_CACHE = rows
    return _TABLE_CACHE


def identify(fp: Fingerprint) -> list[str]:
    """Names in the bundled table matching a fingerprint, up to mirror image.

    An empty list means unidentified; a match is a candidate, not a proof
    (distinct knots can share a fingerprint).
    """
    det, coeffs = fp.determinant, fp.alexander.coeffs_lowest_first()
    return [name for name, d, cs in load_fingerprint_table() if d == det and cs == coeffs]


def name_crossing_number(name: str) -> int | None:
    """Crossing number implied by a table name, if any."""
    if name == "unknot":
        return 0
    if name.startswith("T("):
        try:
            p, q = name[2:-1].split(",")
            p, q = int(p), int(q)
        except ValueError:
            return None
        return min(p * (q - 1), q * (p - 1))
    head = name.split("_")[0]
    return int(head) if head.isdigit() else None
