"""Seifert's algorithm on a PD diagram and the Seifert form of the result.

The surface is the usual disk-and-band surface: every Seifert circle bounds a
horizontal disk stacked by nesting depth, and every crossing contributes a
half-twisted band.  Homology classes are fundamental cycles of the circle-band
graph.  The Seifert pairing lk(a, b+) is evaluated as half the signed count of
projection crossings between a curve ``a`` and a push-off of ``b``; all such
crossings are local to a band, so the count is assembled crossing by crossing.

Local picture at a band foot on circle C ("port" chart): ``u`` runs along C,
``v`` points into the disk of C and the third axis is the surface normal, which
makes (u, v, normal) right handed.  Curve ``a`` travels on the lane v = 2, curve
``b`` on the lane v = 1, both moving in +u between ports.  A band leaving C
towards a nested circle folds back over the disk, at height ``+h`` (C counter-
clockwise) or ``-h`` in normal coordinates.  Inside the band the two curves
cross once more because of the half twist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .codec import KnotDiagram
from .errors import DiagramError, InputError
from .linalg import IntMatrix, det_int, transpose

__all__ = [
    "SeifertCircle",
    "SeifertSurface",
    "SeifertMatrix",
    "seifert_circles",
    "seifert_matrix",
    "seifert_matrix_of",
    "matrix_from_literal",
]

_LANE = {"a": 2, "b": 1}
_REACH = 10
_TWIST_OFFSET = {1: Fraction(1, 2), 2: Fraction(-1, 2)}


@dataclass(frozen=True)
class SeifertCircle:
    """One Seifert circle: the crossings it visits, in orientation order.

    ``band_left[k]`` says whether the band at the k-th visited crossing lies on
    the left of the circle.  ``ccw`` is the rotation sense in the plane once the
    outer face has been fixed.
    """

    crossings: tuple[int, ...]
    band_left: tuple[bool, ...]
    ccw: bool

    def port(self, crossing: int) -> int:
        return self.crossings.index(crossing)

    def inward(self, k: int) -> bool:
        # the disk lies on the left of a counterclockwise circle
        return self.band_left[k] == self.ccw


@dataclass(frozen=True)
class SeifertSurface:
    circles: tuple[SeifertCircle, ...]
    bands: tuple[tuple[int, int, int], ...]  # (end-1 circle, end-2 circle, crossing sign)
    basis: tuple[tuple[tuple[int, int], ...], ...]  # each cycle: ((band, direction), ...)
    basis_circles: tuple[tuple[int, ...], ...]  # circle sequence of each cycle
    diagram: str = ""

    @property
    def genus(self) -> int:
        return (1 + len(self.bands) - len(self.circles)) // 2


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix of the Seifert pairing plus where it came from."""

    rows: IntMatrix
    provenance: str = ""

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise InputError("Seifert matrix must be square")
        if n % 2:
            raise InputError("Seifert matrix of a knot has even size")
        skew = [[self.rows[i][j] - self.rows[j][i] for j in range(n)] for i in range(n)]
        if det_int(skew) != 1:
            raise InputError("not a knot Seifert matrix: det(V - V^T) != 1")

    @property
    def size(self) -> int:
        return len(self.rows)

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(transpose(self.rows), self.provenance + " (transposed)")


def matrix_from_literal(text: str) -> SeifertMatrix:
    """Parse ``"-1,1;0,-1"`` (rows comma separated, semicolon between rows).

    A JSON list of rows is accepted too; ``"[]"`` or ``""`` give the 0x0 matrix
    of the unknot.
    """
    body = text.strip()
    if body.startswith("[["):
        try:
            data = json.loads(body)
            rows = tuple(tuple(int(x) for x in r) for r in data)
        except (ValueError, TypeError) as exc:
            raise InputError(f"bad matrix literal {text!r}") from exc
        return SeifertMatrix(rows, "literal")
    body = body.strip("[]").strip()
    if not body:
        return SeifertMatrix((), "literal")
    rows = []
    for chunk in body.split(";"):
        chunk = chunk.strip().strip("[]")
        try:
            rows.append(tuple(int(x) for x in chunk.replace(" ", "").split(",") if x != ""))
        except ValueError as exc:
            raise InputError(f"bad matrix entry in {chunk!r}") from exc
    return SeifertMatrix(tuple(rows), "literal")


# ---------------------------------------------------------------------------
# circles, regions, nesting


# smoothing: entering position -> leaving position
_SMOOTH = {1: {0: 1, 3: 2}, -1: {0: 3, 1: 2}}
# corners (sector p..p+1) merged by the smoothing of a crossing
_MIDDLE = {1: (1, 3), -1: (0, 2)}


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _occurrence_map(d: KnotDiagram) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for p, label in enumerate(c.arcs):
            occ.setdefault(label, []).append((ci, p))
    return occ


def _faces(d: KnotDiagram, occ) -> dict[tuple[int, int], int]:
    face_of: dict[tuple[int, int], int] = {}
    for ci in range(d.num_crossings):
        for p in range(4):
            if (ci, p) in face_of:
                continue
            fid = len(set(face_of.values()))
            corner = (ci, p)
            while corner not in face_of:
                face_of[corner] = fid
                x, q = corner
                label = d.crossings[x].arcs[(q + 1) % 4]
                a, b = occ[label]
                corner = b if a == (x, (q + 1) % 4) else a
    return face_of


def _trace_circles(d: KnotDiagram, occ):
    """Return raw circles as lists of (crossing, entering position, leaving position, arriving label)."""
    heads = {}
    for ci, c in enumerate(d.crossings):
        heads[c.arcs[0]] = (ci, 0)
        heads[c.arcs[c.over_in]] = (ci, c.over_in)
    used: set[tuple[int, int]] = set()
    circles = []
    for ci, c in enumerate(d.crossings):
        for p in (0, c.over_in):
            if (ci, p) in used:
                continue
            visits = []
            x, q = ci, p
            while (x, q) not in used:
                used.add((x, q))
                out = _SMOOTH[d.crossings[x].sign][q]
                visits.append((x, q, out, d.crossings[x].arcs[q]))
                x, q = heads[d.crossings[x].arcs[out]]
            circles.append(visits)
    return circles


def seifert_circles(d: KnotDiagram) -> SeifertSurface:
    """Smooth every crossing along the orientation and assemble the surface data."""
    if not d.is_knot():
        raise DiagramError("Seifert's algorithm is run on 1-component diagrams only")
    if not d.crossings:
        return SeifertSurface((SeifertCircle((), (), True),), (), (), (), d.to_pd() or "U")
    occ = _occurrence_map(d)
    face_of = _faces(d, occ)
    raw = _trace_circles(d, occ)

    regions = _UnionFind()
    for ci, c in enumerate(d.crossings):
        m1, m2 = _MIDDLE[c.sign]
        regions.union(face_of[(ci, m1)], face_of[(ci, m2)])

    # left/right region of each circle, read off the arc arriving at each visit
    sides = []
    for visits in raw:
        lefts, rights = set(), set()
        for x, q, _, _ in visits:
            lefts.add(regions.find(face_of[(x, (q - 1) % 4)]))
            rights.add(regions.find(face_of[(x, q)]))
        if len(lefts) != 1 or len(rights) != 1 or lefts == rights:
            raise DiagramError("Seifert circles do not separate the sphere; diagram is not planar")
        sides.append((lefts.pop(), rights.pop()))

    face_sizes: dict[int, int] = {}
    for fid in face_of.values():
        face_sizes[fid] = face_sizes.get(fid, 0) + 1
    outer = min(face_sizes, key=lambda f: (-face_sizes[f], f))
    root = regions.find(outer)

    adjacency: dict[int, list[tuple[int, int]]] = {}
    for k, (left, right) in enumerate(sides):
        adjacency.setdefault(left, []).append((right, k))
        adjacency.setdefault(right, []).append((left, k))

    circles = []
    for k, (left, right) in enumerate(sides):
        # is the root region reachable from the left side without crossing circle k?
        stack, seen = [left], {left}
        while stack:
            r = stack.pop()
            for nxt, via in adjacency.get(r, []):
                if via != k and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        root_on_left = root in seen
        visits = raw[k]
        circles.append(
            SeifertCircle(
                crossings=tuple(x for x, _, _, _ in visits),
                band_left=tuple(out == (q + 1) % 4 for _, q, out, _ in visits),
                ccw=not root_on_left,
            )
        )
    if len({r for pair in sides for r in pair}) != len(circles) + 1:
        raise DiagramError("region structure of the Seifert circles is not a tree")

    owner: dict[int, dict[bool, int]] = {}
    for k, circ in enumerate(circles):
        for x, left in zip(circ.crossings, circ.band_left):
            owner.setdefault(x, {})[left] = k
    bands = []
    for ci, c in enumerate(d.crossings):
        ends = owner[ci]
        bands.append((ends[True], ends[False], c.sign))

    basis, basis_circles = _cycle_basis(len(circles), bands)
    return SeifertSurface(tuple(circles), tuple(bands), basis, basis_circles, d.to_pd())


def _cycle_basis(n_circles: int, bands):
    """Fundamental cycles of a BFS spanning tree, edges taken in crossing order."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n_circles)}
    for e, (u, v, _) in enumerate(bands):
        adj[u].append((e, v))
        adj[v].append((e, u))
    parent: dict[int, tuple[int, int] | None] = {0: None}
    order = [0]
    tree_edges: set[int] = set()
    for v in order:
        for e, w in sorted(adj[v]):
            if w not in parent:
                parent[w] = (v, e)
                tree_edges.add(e)
                order.append(w)
    if len(parent) != n_circles:
        raise DiagramError("Seifert graph is disconnected")

    def path_to_root(v):
        out = [v]
        while parent[v] is not None:
            v = parent[v][0]
            out.append(v)
        return out

    basis, circ_seqs = [], []
    for e, (u, v, _) in enumerate(bands):
        if e in tree_edges:
            continue
        # walk u --e--> v, then back to u along the tree
        pv, pu = path_to_root(v), path_to_root(u)
        common = next(x for x in pv if x in set(pu))
        up = pv[: pv.index(common) + 1]
        down = list(reversed(pu[1 : pu.index(common)]))
        vertices = [u] + up + down  # closed: last vertex steps back to u
        if vertices[-1] == u:
            vertices.pop()
        steps = []
        for a, b in zip(vertices, vertices[1:] + [vertices[0]]):
            if (a, b) == (u, v) and not steps:
                band = e
            else:
                band = parent[a][1] if parent[a] is not None and parent[a][0] == b else parent[b][1]
            end1, end2, _ = bands[band]
            if (a, b) == (end1, end2):
                steps.append((band, 1))
            elif (a, b) == (end2, end1):
                steps.append((band, -1))
            else:
                raise AssertionError("cycle walk left the Seifert graph")
        basis.append(tuple(steps))
        circ_seqs.append(tuple(vertices))
    return tuple(basis), tuple(circ_seqs)


# ---------------------------------------------------------------------------
# the Seifert pairing


def _cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _intersect(s1, s2):
    """Proper intersection of two axis-aligned segments (None if disjoint)."""
    (a, b), (c, d) = s1, s2
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    den = _cross(r, s)
    if den == 0:
        return None
    qp = (c[0] - a[0], c[1] - a[1])
    t = Fraction(_cross(qp, s), den)
    w = Fraction(_cross(qp, r), den)
    if 0 < t < 1 and 0 < w < 1:
        return t
    return None


def _chart_segments(state: str, lane: int, t, inward: bool):
    """Disk and band segments of one curve in a port chart: list of (segment, layer)."""
    L = _REACH
    segs = []
    if state == "pass":
        segs.append((((-L, lane), (L, lane)), "disk"))
    elif state == "exit":
        segs.append((((-L, lane), (t, lane)), "disk"))
        segs.append((((t, lane), (t, 0)), "disk"))
        if inward:
            segs.append((((t, 0), (t, L)), "band"))
    elif state == "enter":
        if inward:
            segs.append((((t, L), (t, 0)), "band"))
        segs.append((((t, 0), (t, lane)), "disk"))
        segs.append((((t, lane), (L, lane)), "disk"))
    return segs


def _chart_count(state_a, t_a, state_b, t_b, inward: bool, ccw: bool) -> int:
    band_height = 2 if ccw else -2
    height = {("a", "disk"): 0, ("b", "disk"): 1, ("a", "band"): band_height, ("b", "band"): band_height}
    total = 0
    segs_a = _chart_segments(state_a, _LANE["a"], t_a, inward)
    segs_b = _chart_segments(state_b, _LANE["b"], t_b, inward)
    for sa, la in segs_a:
        for sb, lb in segs_b:
            if _intersect(sa, sb) is None:
                continue
            ha, hb = height[("a", la)], height[("b", lb)]
            if ha == hb:
                raise AssertionError("coplanar crossing in chart")
            over, under = (sa, sb) if ha > hb else (sb, sa)
            do = (over[1][0] - over[0][0], over[1][1] - over[0][1])
            du = (under[1][0] - under[0][0], under[1][1] - under[0][1])
            total += 1 if _cross(do, du) > 0 else -1
    return total


def _curve_on_circles(surface: SeifertSurface, cycle_index: int):
    """For each visited circle: (entry port, exit port) plus per-band traversal."""
    steps = surface.basis[cycle_index]
    verts = surface.basis_circles[cycle_index]
    circles = surface.circles
    n = len(steps)
    visits = {}
    for k in range(n):
        band_in, _ = steps[k - 1]
        band_out, _ = steps[k]
        c = verts[k]
        circ = circles[c]
        visits[c] = (circ.port(band_in), circ.port(band_out))
    bands = {band: direction for band, direction in steps}
    return visits, bands


def _port_state(visit, k: int, size: int):
    if visit is None:
        return "none"
    entry, exit_ = visit
    if k == entry:
        return "enter"
    if k == exit_:
        return "exit"
    # ports strictly between entry and exit going forward along the circle
    if 0 < (k - entry) % size < (exit_ - entry) % size:
        return "pass"
    return "none"


def seifert_pairing(surface: SeifertSurface, i: int, j: int) -> int:
    """lk(a_i, a_j^+) for basis cycles i and j."""
    va, ba = _curve_on_circles(surface, i)
    vb, bb = _curve_on_circles(surface, j)
    total = 0
    for band, da in ba.items():
        if band in bb:
            total += -surface.bands[band][2] * da * bb[band]
    for c, circ in enumerate(surface.circles):
        if c not in va or c not in vb:
            continue
        size = len(circ.crossings)
        for k, x in enumerate(circ.crossings):
            sa = _port_state(va.get(c), k, size)
            sb = _port_state(vb.get(c), k, size)
            if sa == "none" or sb == "none":
                continue
            end = 1 if surface.bands[x][0] == c else 2
            t_b = _TWIST_OFFSET[end] if sa in ("enter", "exit") and sb in ("enter", "exit") else 0
            total += _chart_count(sa, 0, sb, t_b, circ.inward(k), circ.ccw)
    if total % 2:
        raise AssertionError("odd crossing count for a Seifert pairing")
    return total // 2


def seifert_matrix(surface: SeifertSurface) -> SeifertMatrix:
    m = len(surface.basis)
    rows = tuple(tuple(seifert_pairing(surface, i, j) for j in range(m)) for i in range(m))
    return SeifertMatrix(rows, f"Seifert's algorithm on {surface.diagram}; fundamental-cycle basis")


def seifert_matrix_of(d: KnotDiagram) -> SeifertMatrix:
    return seifert_matrix(seifert_circles(d))
