"""Reference diagrams built combinatorially: rational (2-bridge) knots from
continued-fraction twist sequences and torus knots from braid closures.

These diagrams feed the bundled fingerprint table.  Each entry is checked
at generation time against an independent determinant: the continued
fraction numerator for rational knots, the classical Alexander formula
for torus knots.  Chirality conventions are irrelevant here because the
fingerprint (determinant plus Alexander polynomial) is mirror-insensitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import (
    LaurentPoly,
    MalformedCodeError,
    _pdivexact,
    _pmul,
    fingerprint,
)


@dataclass(frozen=True)
class UCrossing:
    """A crossing with arcs at its four ports in counterclockwise order.

    over_pair selects which diagonal carries the over strand: 0 for the
    strand through ports (0, 2), 1 for ports (1, 3).
    """

    ports: tuple[int, int, int, int]
    over_pair: int


def oriented_pd(crossings: list[UCrossing]) -> list[tuple[int, int, int, int]]:
    """Traverse an unoriented crossing list and emit a sequential PD code.

    Raises MalformedCodeError unless the arcs close up into a single knot.
    """
    if not crossings:
        return []
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, cr in enumerate(crossings):
        for pi, arc in enumerate(cr.ports):
            occurrences.setdefault(arc, []).append((ci, pi))
    for arc, occ in occurrences.items():
        if len(occ) != 2:
            raise MalformedCodeError(f"arc {arc} has {len(occ)} endpoints")

    def is_over(ci, pi):
        return (pi % 2 == 0) == (crossings[ci].over_pair == 0)

    start_arc = min(occurrences)
    enter = occurrences[start_arc][0]
    arc = start_arc
    new_label: dict[int, int] = {}
    entered_at: dict[tuple[int, int], int] = {}
    first_seen: dict[int, int] = {}
    total = 2 * len(crossings)
    for step in range(1, total + 1):
        if arc in new_label:
            raise MalformedCodeError("crossings do not close into a single knot")
        new_label[arc] = step
        ci, pi = enter
        entered_at[(ci, pi)] = step
        first_seen.setdefault(ci, len(first_seen))
        exit_port = (pi + 2) % 4
        arc = crossings[ci].ports[exit_port]
        occ = occurrences[arc]
        enter = occ[1] if occ[0] == (ci, exit_port) else occ[0]
    if arc != start_arc or len(new_label) != total:
        raise MalformedCodeError("crossings do not close into a single knot")

    out: list = [None] * len(crossings)
    for ci, cr in enumerate(crossings):
        entries = [pi for pi in range(4) if (ci, pi) in entered_at]
        under_ports = [pi for pi in entries if not is_over(ci, pi)]
        if len(entries) != 2 or len(under_ports) != 1:
            raise MalformedCodeError("crossing traversed inconsistently")
        pu = under_ports[0]
        tup = tuple(new_label[cr.ports[(pu + k) % 4]] for k in range(4))
        out[first_seen[ci]] = tup
    return out


class _Arcs:
    def __init__(self):
        self.next_id = 0

    def fresh(self) -> int:
        self.next_id += 1
        return self.next_id


class _DSU(dict):
    def find(self, x):
        root = x
        while self.setdefault(root, root) != root:
            root = self[root]
        while self[x] != root:
            self[x], x = root, self[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self[max(rx, ry)] = min(rx, ry)


def rational_pd(twists: list[int]) -> list[tuple[int, int, int, int]]:
    """PD code of the numerator closure of the rational tangle with
    continued-fraction value a1 + 1/(a2 + 1/(... + 1/ar)).

    Twist blocks are assembled innermost (ar) first, alternating vertical
    and horizontal so that the a1 block is horizontal; the seed is the
    0-tangle for odd-length sequences and the infinity tangle otherwise.
    """
    if not twists or any(a == 0 for a in twists):
        raise ValueError("twist sequence must be nonempty with nonzero entries")
    arcs = _Arcs()
    crossings: list[UCrossing] = []
    if len(twists) % 2 == 1:
        top = arcs.fresh()
        bottom = arcs.fresh()
        nw = ne = top
        sw = se = bottom
        horizontal = True
    else:
        left = arcs.fresh()
        right = arcs.fresh()
        nw = sw = left
        ne = se = right
        horizontal = False
    for count in reversed(twists):
        sign = 1 if count > 0 else -1
        for _ in range(abs(count)):
            n1, n2 = arcs.fresh(), arcs.fresh()
            if horizontal:
                # new crossing to the right of the (ne, se) ends
                crossings.append(UCrossing((n1, ne, se, n2), 0 if sign > 0 else 1))
                ne, se = n1, n2
            else:
                # new crossing below the (sw, se) ends
                crossings.append(UCrossing((se, sw, n1, n2), 0 if sign > 0 else 1))
                sw, se = n1, n2
        horizontal = not horizontal
    dsu = _DSU()
    dsu.union(nw, ne)
    dsu.union(sw, se)
    fused = [
        UCrossing(tuple(dsu.find(a) for a in cr.ports), cr.over_pair)
        for cr in crossings
    ]
    return oriented_pd(fused)


def braid_pd(word: list[int], strands: int) -> list[tuple[int, int, int, int]]:
    """PD code of the closure of a braid word (generators +-1..+-(strands-1))."""
    arcs = _Arcs()
    start = [arcs.fresh() for _ in range(strands)]
    cur = list(start)
    crossings: list[UCrossing] = []
    for g in word:
        i = abs(g)
        if not (1 <= i < strands):
            raise ValueError(f"braid generator {g} out of range")
        a, b = cur[i - 1], cur[i]
        n_ne, n_nw = arcs.fresh(), arcs.fresh()
        # ports counterclockwise: (NE, NW, SW, SE); strands run upward
        crossings.append(UCrossing((n_ne, n_nw, a, b), 0 if g > 0 else 1))
        cur[i - 1], cur[i] = n_nw, n_ne
    dsu = _DSU()
    for j in range(strands):
        dsu.union(cur[j], start[j])
    fused = [
        UCrossing(tuple(dsu.find(a) for a in cr.ports), cr.over_pair)
        for cr in crossings
    ]
    return oriented_pd(fused)


def torus_pd(p: int, q: int) -> list[tuple[int, int, int, int]]:
    """Standard diagram of the (p, q) torus knot as a p-strand braid closure."""
    if p < 2 or q < 2:
        raise ValueError("torus parameters must be at least 2")
    word = [i for _ in range(q) for i in range(1, p)]
    return braid_pd(word, p)


def continued_fraction_value(twists) -> Fraction:
    """Value of a1 + 1/(a2 + 1/(... + 1/ar)) for a twist sequence."""
    value = Fraction(twists[-1])
    for a in reversed(twists[:-1]):
        if value == 0:
            raise ZeroDivisionError("continued fraction hits zero")
        value = a + 1 / value
    return value


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of T(p, q): (t^{pq}-1)(t-1)/((t^p-1)(t^q-1))."""

    def cyclo(n):
        return [-1] + [0] * (n - 1) + [1]  # t^n - 1

    num = _pmul(cyclo(p * q), cyclo(1))
    den = _pmul(cyclo(p), cyclo(q))
    return LaurentPoly.from_coeffs(_pdivexact(num, den))


# name -> construction; each row's determinant is independently verified
TABLE_SPEC: list[tuple[str, tuple]] = [
    ("unknot", ("unknot",)),
    ("3_1", ("rational", (3,))),
    ("4_1", ("rational", (2, 2))),
    ("5_1", ("torus", (2, 5))),
    ("5_2", ("rational", (3, 2))),
    ("6_1", ("rational", (4, 2))),
    ("6_2", ("rational", (3, 1, 2))),
    ("6_3", ("rational", (2, 1, 1, 2))),
    ("7_1", ("torus", (2, 7))),
    ("7_2", ("rational", (5, 2))),
    ("7_3", ("rational", (3, 4))),
    ("7_4", ("rational", (3, 1, 3))),
    ("7_5", ("rational", (3, 2, 2))),
    ("7_6", ("rational", (2, 2, 1, 2))),
    ("7_7", ("rational", (2, 1, 1, 1, 2))),
    ("8_1", ("rational", (6, 2))),
    ("8_19", ("torus", (3, 4))),
    ("9_1", ("torus", (2, 9))),
    ("9_2", ("rational", (7, 2))),
    ("9_10", ("rational", (4, -2, 2, -4))),
    ("10_124", ("torus", (3, 5))),
    ("T(4,5)", ("torus", (4, 5))),
]


def reference_pd(source: tuple):
    kind = source[0]
    if kind == "unknot":
        return []
    if kind == "rational":
        return rational_pd(list(source[1]))
    if kind == "torus":
        return torus_pd(*source[1])
    raise ValueError(f"unknown construction {source!r}")


def expected_determinant(source: tuple) -> int:
    kind = source[0]
    if kind == "unknot":
        return 1
    if kind == "rational":
        return abs(continued_fraction_value(source[1]).numerator)
    p, q = source[1]
    det = torus_alexander(p, q).evaluate(-1)
    return abs(int(det))


def build_fingerprint_table() -> list[tuple[str, int, tuple[int, ...]]]:
    """Compute all table rows, verifying each determinant independently."""
    rows = []
    for name, source in TABLE_SPEC:
        fp = fingerprint(reference_pd(source))
        want = expected_determinant(source)
        if fp.determinant != want:
            raise AssertionError(
                f"{name}: determinant {fp.determinant} != expected {want}"
            )
        rows.append((name, fp.determinant, fp.alexander.coeffs_lowest_first()))
    return rows


def format_fingerprint_table(rows) -> str:
    lines = ["# name\tdeterminant\talexander coefficients (lowest degree first)"]
    for name, det, coeffs in rows:
        lines.append(f"{name}\t{det}\t{','.join(str(c) for c in coeffs)}")
    return "\n".join(lines) + "\n"


def main():
    import pathlib

    target = pathlib.Path(__file__).parent / "data" / "fingerprints.tsv"
    target.parent.mkdir(exist_ok=True)
    target.write_text(format_fingerprint_table(build_fingerprint_table()))
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
