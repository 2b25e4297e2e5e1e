"""Independent oracles used to cross-check the library.

Everything here is deliberately written against different mathematics (or
a different library) than the code under test: sympy for exact segment
intersection, the Goeritz matrix for knot determinants, a brute-force
state sum for the bracket polynomial, and continued fractions for
two-bridge determinants.
"""

from __future__ import annotations

from fractions import Fraction


# --------------------------------------------------------------------------
# sympy-based exact geometry oracles
# --------------------------------------------------------------------------


def classify_oracle(s1, s2) -> tuple:
    """Classify two 2D segments with sympy: kind plus intersection point."""
    import sympy

    def pt(p):
        return sympy.Point2D(sympy.Rational(p[0]), sympy.Rational(p[1]))

    seg1 = sympy.Segment2D(pt(s1[0]), pt(s1[1]))
    seg2 = sympy.Segment2D(pt(s2[0]), pt(s2[1]))
    inter = seg1.intersection(seg2)
    if not inter:
        return ("disjoint", None)
    obj = inter[0]
    if isinstance(obj, sympy.Segment2D):
        return ("overlap", None)
    point = (Fraction(str(obj.x)), Fraction(str(obj.y)))
    ends = [pt(s1[0]), pt(s1[1]), pt(s2[0]), pt(s2[1])]
    if any(obj == e for e in ends):
        return ("endpoint", point)
    return ("interior", point)


def segments_intersect_3d_oracle(p, q, r, s) -> bool:
    import sympy

    def pt(v):
        return sympy.Point3D(*(sympy.Rational(c) for c in v))

    seg1 = sympy.Segment3D(pt(p), pt(q))
    seg2 = sympy.Segment3D(pt(r), pt(s))
    return bool(seg1.intersection(seg2))


# --------------------------------------------------------------------------
# Goeritz matrix determinant (checkerboard coloring of the shadow)
# --------------------------------------------------------------------------


def _faces(code):
    occurrences = {}
    for ci, tup in enumerate(code):
        for pi, lab in enumerate(tup):
            occurrences.setdefault(lab, []).append((ci, pi))

    def partner(port):
        ci, pi = port
        occ = occurrences[code[ci][pi]]
        return occ[1] if occ[0] == port else occ[0]

    faces = []
    face_of_port = {}
    for ci in range(len(code)):
        for pi in range(4):
            start = (ci, pi)
            if start in face_of_port:
                continue
            orbit = []
            port = start
            while True:
                orbit.append(port)
                face_of_port[port] = len(faces)
                cj, pj = partner(port)
                port = (cj, (pj + 1) % 4)
                if port == start:
                    break
            faces.append(tuple(orbit))
    return faces, face_of_port, occurrences


def _int_det(matrix) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def goeritz_determinant(code) -> int:
    """|det| of the knot via the Goeritz matrix of a checkerboard coloring."""
    c = len(code)
    if c == 0:
        return 1
    faces, face_of_port, _ = _faces(code)
    assert len(faces) == c + 2, "shadow is not planar"

    # two-color faces: adjacent across every arc
    adjacency = {i: set() for i in range(len(faces))}
    occurrences = {}
    for ci, tup in enumerate(code):
        for pi, lab in enumerate(tup):
            occurrences.setdefault(lab, []).append((ci, pi))
    for lab, (o1, o2) in occurrences.items():
        f1, f2 = face_of_port[o1], face_of_port[o2]
        adjacency[f1].add(f2)
        adjacency[f2].add(f1)
    color = {0: 0}
    queue = [0]
    while queue:
        f = queue.pop()
        for g in adjacency[f]:
            if g not in color:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise AssertionError("shadow is not checkerboard colorable")

    # corner k of a crossing (between ports k and k+1) belongs to the face
    # containing port k+1
    def corner_face(ci, k):
        return face_of_port[(ci, (k + 1) % 4)]

    white = sorted(f for f in range(len(faces)) if color[f] == 0)
    windex = {f: i for i, f in enumerate(white)}
    size = len(white)
    g = [[0] * size for _ in range(size)]
    for ci in range(c):
        corner_colors = [color[corner_face(ci, k)] for k in range(4)]
        assert corner_colors[0] == corner_colors[2] != corner_colors[1], (
            "corners not checkerboard"
        )
        shaded_pair = (1, 3) if corner_colors[1] == 1 else (0, 2)
        eta = 1 if shaded_pair == (1, 3) else -1
        white_pair = (0, 2) if shaded_pair == (1, 3) else (1, 3)
        f1 = windex[corner_face(ci, white_pair[0])]
        f2 = windex[corner_face(ci, white_pair[1])]
        if f1 != f2:
            g[f1][f2] -= eta
            g[f2][f1] -= eta
    for i in range(size):
        g[i][i] = -sum(g[i][j] for j in range(size) if j != i)
    minor = [row[:-1] for row in g[:-1]]
    return abs(_int_det(minor))


# --------------------------------------------------------------------------
# brute-force Kauffman bracket over all smoothing states
# --------------------------------------------------------------------------


def _poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


_DELTA = {2: -1, -2: -1}


def bracket_oracle(code) -> dict:
    """Bracket polynomial as {exponent: coefficient} by enumerating all
    2^c smoothing states and counting loops."""
    c = len(code)
    if c == 0:
        return {0: 1}
    occurrences = {}
    for ci, tup in enumerate(code):
        for pi, lab in enumerate(tup):
            occurrences.setdefault(lab, []).append((ci, pi))
    arc_edges = [tuple(occ) for occ in occurrences.values()]

    delta_powers = [{0: 1}]
    for _ in range(c + 1):
        delta_powers.append(_poly_mul(delta_powers[-1], _DELTA))

    total: dict = {}
    for state in range(2 ** c):
        neighbors = {}

        def connect(u, v):
            neighbors.setdefault(u, []).append(v)
            neighbors.setdefault(v, []).append(u)

        a_count = 0
        for ci in range(c):
            ports = [(ci, p) for p in range(4)]
            if (state >> ci) & 1 == 0:
                a_count += 1
                connect(ports[0], ports[1])
                connect(ports[2], ports[3])
            else:
                connect(ports[0], ports[3])
                connect(ports[1], ports[2])
        for u, v in arc_edges:
            connect(u, v)
        seen = set()
        loops = 0
        for start in neighbors:
            if start in seen:
                continue
            loops += 1
            stack = [start]
            while stack:
                node = stack.pop()
                if node in seen:
                    continue
                seen.add(node)
                stack.extend(neighbors[node])
        exponent = a_count - (c - a_count)
        term = _poly_mul({exponent: 1}, delta_powers[loops - 1])
        total = _poly_add(total, term)
    return total


def jones_oracle(code) -> dict:
    """Jones polynomial as {exponent: coefficient} from the brute bracket."""
    from simknot.invariants import code_writhe

    w = code_writhe(code)
    bracket = bracket_oracle(code)
    sign = 1 if w % 2 == 0 else -1
    out = {}
    for e, coef in bracket.items():
        shifted = e - 3 * w
        assert shifted % 4 == 0
        out[-shifted // 4] = sign * coef
    return {e: c for e, c in out.items() if c}


# --------------------------------------------------------------------------
# two-bridge determinants from continued fractions
# --------------------------------------------------------------------------


def two_bridge_determinant(twists) -> int:
    value = Fraction(twists[-1])
    for a in reversed(twists[:-1]):
        value = a + 1 / value
    return abs(value.numerator)
