"""Knot and link notations: PD codes, signed Gauss codes and braid words.

Everything is funnelled into :class:`KnotDiagram`, an oriented planar diagram
stored as a PD code.  A crossing ``X(a, b, c, d)`` lists the four arc labels
counterclockwise starting from the incoming under-strand, so the under-strand
runs ``a -> c`` and the over-strand runs ``d -> b`` (positive crossing) or
``b -> d`` (negative crossing).  Arc labels are canonicalized to ``1..2n`` on
ingest, numbered consecutively along each component.

Zero-crossing unknotted components cannot be written in PD notation; they are
kept as a count (``free_loops``) and serialized with the token ``U``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DiagramError

__all__ = [
    "Crossing",
    "KnotDiagram",
    "BraidWord",
    "parse_pd",
    "parse_gauss",
    "parse_braid",
    "braid_closure",
    "mirror",
    "reverse",
    "connected_sum",
    "unknot",
]


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    @property
    def over_in(self) -> int:
        """Position (1 or 3) at which the over-strand enters."""
        return 3 if self.sign > 0 else 1

    def __str__(self) -> str:
        return "X(%d,%d,%d,%d)" % self.arcs


@dataclass(frozen=True)
class KnotDiagram:
    """Validated oriented diagram.

    ``components`` holds, for each component with crossings, its arc labels in
    the order they are traversed.  ``labels`` names every component, free loops
    included (free loops come last).
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    free_loops: int = 0
    labels: tuple[str, ...] = ()

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def num_components(self) -> int:
        return len(self.components) + self.free_loops

    def is_knot(self) -> bool:
        return self.num_components == 1

    def arc_component(self) -> dict[int, int]:
        return {arc: k for k, path in enumerate(self.components) for arc in path}

    def signs(self) -> tuple[int, ...]:
        return tuple(c.sign for c in self.crossings)

    def writhe(self) -> int:
        return sum(self.signs())

    def crossing_components(self, index: int) -> tuple[int, int]:
        """(under component, over component) of a crossing."""
        comp = self.arc_component()
        a, b, _, _ = self.crossings[index].arcs
        return comp[a], comp[b]

    def linking_number(self, i: int, j: int) -> int:
        """Half the signed count of crossings between components i and j."""
        if i == j:
            raise ValueError("linking number needs two distinct components")
        n_real = len(self.components)
        if i >= n_real or j >= n_real:
            return 0  # free loops are split from everything
        total = 0
        for k, c in enumerate(self.crossings):
            under, over = self.crossing_components(k)
            if {under, over} == {i, j}:
                total += c.sign
        if total % 2:
            raise DiagramError("odd inter-component crossing count; diagram is inconsistent")
        return total // 2

    def to_pd(self) -> str:
        tokens = [str(c) for c in self.crossings] + ["U"] * self.free_loops
        return " ".join(tokens)

    def __str__(self) -> str:
        return self.to_pd()


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]  # +i for s_i, -i for s_i^-1

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise DiagramError("braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise DiagramError(f"generator index {abs(g)} out of range for {self.strands} strands")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """Position where the strand starting at position i ends up."""
        pos = list(range(self.strands))
        for g in self.letters:
            i = abs(g) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        end = [0] * self.strands
        for p, strand in enumerate(pos):
            end[strand] = p
        return tuple(end)

    def __str__(self) -> str:
        body = " ".join(f"s{g}" if g > 0 else f"s{-g}^-1" for g in self.letters)
        return f"{self.strands}: {body}".rstrip()


def unknot() -> KnotDiagram:
    return KnotDiagram(crossings=(), components=(), free_loops=1, labels=("K1",))


# ---------------------------------------------------------------------------
# construction and validation


def _occurrences(raw: Sequence[Sequence[int]]) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, arcs in enumerate(raw):
        for p, label in enumerate(arcs):
            occ.setdefault(label, []).append((ci, p))
    for label, where in occ.items():
        if len(where) != 2:
            raise DiagramError(f"arc label {label} appears {len(where)} times (expected exactly 2)")
    return occ


def _other(occ, label: int, here: tuple[int, int]) -> tuple[int, int]:
    a, b = occ[label]
    return b if a == here else a


def _walk(raw, occ, start_label: int, entering: tuple[int, int]) -> tuple[list[int], list[tuple[int, int]]]:
    """Follow a strand straight through crossings starting with ``start_label``
    whose head is ``entering``.  Returns (labels in order, entering occurrences)."""
    labels = [start_label]
    heads = [entering]
    ci, p = entering
    while True:
        out_label = raw[ci][(p + 2) % 4]
        nxt = _other(occ, out_label, (ci, (p + 2) % 4))
        if out_label == start_label:
            if nxt != entering:
                raise DiagramError("inconsistent circuit structure")
            return labels, heads
        if out_label in labels:
            raise DiagramError("inconsistent circuit structure")
        labels.append(out_label)
        heads.append(nxt)
        ci, p = nxt


def _orient_components(raw, occ, hint=None) -> tuple[list[list[int]], set[tuple[int, int]]]:
    """Trace components and orient them from the under-strand convention.

    Components that never pass under take their direction from ``hint`` (a set
    of known arc heads) when given, else from arc-label succession.
    Returns the arc paths and the set of entering occurrences (arc heads)."""
    seen: set[int] = set()
    paths: list[list[int]] = []
    all_heads: set[tuple[int, int]] = set()
    for label in sorted(occ):
        if label in seen:
            continue
        o1, o2 = occ[label]
        labels, heads = _walk(raw, occ, label, o2)
        under_ok = any(p == 0 for _, p in heads)
        under_bad = any(p == 2 for _, p in heads)
        if under_ok and under_bad:
            raise DiagramError("under-strands disagree on the orientation of a component")
        if under_bad:
            labels, heads = _walk(raw, occ, label, o1)
        elif not under_ok and hint is not None:
            if not set(heads) <= hint:
                labels, heads = _walk(raw, occ, label, o1)
        elif not under_ok:
            n = len(labels)
            up = sum(1 for k in range(n) if labels[(k + 1) % n] == labels[k] + 1)
            down = sum(1 for k in range(n) if labels[(k + 1) % n] == labels[k] - 1)
            # a 2-arc loop reads the same both ways: its first label enters at its first occurrence
            if down > up or (down == up and heads[0] != o1):
                labels, heads = _walk(raw, occ, label, o1)
        seen.update(labels)
        paths.append(labels)
        all_heads.update(heads)
    return paths, all_heads


def _count_faces(raw, occ) -> int:
    corners = {(ci, p) for ci in range(len(raw)) for p in range(4)}
    faces = 0
    while corners:
        start = corner = min(corners)
        faces += 1
        while True:
            corners.discard(corner)
            ci, p = corner
            corner = _other(occ, raw[ci][(p + 1) % 4], (ci, (p + 1) % 4))
            if corner == start:
                break
            if corner not in corners:
                raise DiagramError("face tracing failed; code is not a planar diagram")
    return faces


def _graph_pieces(raw, occ) -> int:
    parent = list(range(len(raw)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, _), (b, _) in occ.values():
        parent[find(a)] = find(b)
    return len({find(x) for x in range(len(raw))})


def _build(
    raw: Sequence[Sequence[int]],
    free_loops: int = 0,
    labels: Sequence[str] | None = None,
    heads: set[tuple[int, int]] | None = None,
) -> KnotDiagram:
    raw = [tuple(int(v) for v in arcs) for arcs in raw]
    for arcs in raw:
        if len(arcs) != 4:
            raise DiagramError("every crossing needs exactly four arc labels")
        if any(v <= 0 for v in arcs):
            raise DiagramError("arc labels must be positive integers")
    if not raw and not free_loops:
        raise DiagramError('empty diagram (write the unknot as "U")')
    occ = _occurrences(raw)
    if raw:
        faces = _count_faces(raw, occ)
        pieces = _graph_pieces(raw, occ)
        # Euler characteristic of the sphere, once per connected piece
        if len(raw) - 2 * len(raw) + faces != 2 * pieces:
            raise DiagramError("code is not realizable as a planar diagram")
    paths, heads = _orient_components(raw, occ, heads)
    crossings = []
    for ci in range(len(raw)):
        if (ci, 0) not in heads or (ci, 2) in heads:
            raise DiagramError("orientation inconsistent with under-strand a -> c")
        over_in = [p for p in (1, 3) if (ci, p) in heads]
        if len(over_in) != 1:
            raise DiagramError("over-strand does not pass straight through crossing")
        crossings.append(1 if over_in[0] == 3 else -1)
    # canonical order: components by smallest original label, each rotated to start there
    canon_paths = []
    for path in paths:
        k = path.index(min(path))
        canon_paths.append(path[k:] + path[:k])
    canon_paths.sort(key=min)
    relabel: dict[int, int] = {}
    for path in canon_paths:
        for label in path:
            relabel[label] = len(relabel) + 1
    for path in canon_paths:
        # keep 2-arc over-only loops readable from the labels alone (see _orient_components)
        if len(path) == 2 and not any(p in (0, 2) for _, p in occ[path[0]] + occ[path[1]]):
            first = min(occ[path[0]])
            if first not in heads:
                relabel[path[0]], relabel[path[1]] = relabel[path[1]], relabel[path[0]]
    new_paths = tuple(tuple(sorted(relabel[x] for x in path)) if len(path) == 2 else tuple(relabel[x] for x in path) for path in canon_paths)
    xs = tuple(
        Crossing(tuple(relabel[x] for x in arcs), sign)  # type: ignore[arg-type]
        for arcs, sign in zip(raw, crossings)
    )
    n_comp = len(new_paths) + free_loops
    if labels is None:
        labels = tuple(f"K{i + 1}" for i in range(n_comp))
    labels = tuple(labels)
    if len(labels) != n_comp:
        raise DiagramError("component label count does not match component count")
    return KnotDiagram(xs, new_paths, free_loops, labels)


# ---------------------------------------------------------------------------
# parsers

_PD_TOKEN = re.compile(r"X\s*[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]|U\b")


def parse_pd(text: str) -> KnotDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` tokens and ``U`` unknot tokens."""
    body = text.strip()
    if body.startswith("PD"):
        body = body[2:].strip()
        if body[:1] + body[-1:] in ("[]", "()"):
            body = body[1:-1]
    if not body:
        raise DiagramError('empty diagram (write the unknot as "U")')
    raw: list[tuple[int, ...]] = []
    free = 0
    pos = 0
    for m in _PD_TOKEN.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip(" \t\r\n,"):
            raise DiagramError(f"unexpected text in PD code: {gap.strip()!r}")
        pos = m.end()
        if m.group(0) == "U":
            free += 1
        else:
            raw.append(tuple(int(g) for g in m.groups()))
    if body[pos:].strip(" \t\r\n,"):
        raise DiagramError(f"unexpected text in PD code: {body[pos:].strip()!r}")
    return _build(raw, free)


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+\-−])")


def parse_gauss(text: str) -> KnotDiagram:
    """Parse a signed Gauss code such as ``O1+ U2+ O3+ U1+ O2+ U3+``.

    Planarity is only checked through the Euler characteristic of the PD code
    reconstructed from the signs; no embedding search is attempted.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise DiagramError("empty Gauss code")
    seq = []
    for tok in tokens:
        m = _GAUSS_TOKEN.fullmatch(tok)
        if not m:
            raise DiagramError(f"bad Gauss token {tok!r}")
        kind, label, sgn = m.groups()
        seq.append((kind, int(label), 1 if sgn == "+" else -1))
    where: dict[int, dict[str, int]] = {}
    signs: dict[int, int] = {}
    for idx, (kind, label, sgn) in enumerate(seq):
        slot = where.setdefault(label, {})
        if kind in slot:
            raise DiagramError(f"label {label} appears twice as {'over' if kind == 'O' else 'under'}")
        slot[kind] = idx
        if signs.setdefault(label, sgn) != sgn:
            raise DiagramError(f"label {label} has inconsistent signs")
    for label, slot in where.items():
        if len(slot) != 2:
            raise DiagramError(f"label {label} appears {len(slot)} times (expected 2)")
    n = len(seq)

    def arriving(idx):
        return (idx - 1) % n + 1

    def leaving(idx):
        return idx + 1

    raw, hint = [], set()
    for ci, label in enumerate(sorted(where)):
        u, o = where[label]["U"], where[label]["O"]
        if signs[label] > 0:
            raw.append((arriving(u), leaving(o), leaving(u), arriving(o)))
        else:
            raw.append((arriving(u), arriving(o), leaving(u), leaving(o)))
        hint |= {(ci, 0), (ci, 3 if signs[label] > 0 else 1)}
    return _build(raw, heads=hint)


_BRAID_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"s1 s2^-1 s1"``; an optional ``"<n>:"`` header gives the strand count."""
    body = text.strip()
    m = re.match(r"^(\d+)\s*:", body)
    if m:
        header = int(m.group(1))
        if strands is not None and strands != header:
            raise DiagramError("strand count given twice with different values")
        strands = header
        body = body[m.end():]
    letters: list[int] = []
    for tok in body.replace(",", " ").split():
        tm = _BRAID_TOKEN.fullmatch(tok)
        if not tm:
            raise DiagramError(f"bad braid token {tok!r}")
        i = int(tm.group(1))
        power = int(tm.group(2)) if tm.group(2) is not None else 1
        if i < 1:
            raise DiagramError("braid generator indices start at 1")
        letters.extend([i if power > 0 else -i] * abs(power))
    if strands is None:
        strands = max((abs(g) for g in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def braid_closure(b: BraidWord) -> KnotDiagram:
    """Standard closure; one crossing per letter, positive letters are positive crossings."""
    next_id = b.strands
    current = list(range(b.strands))
    touched = [False] * b.strands
    raw = []
    for g in b.letters:
        i = abs(g) - 1
        old_l, old_r = current[i], current[i + 1]
        new_l, new_r = next_id, next_id + 1
        next_id += 2
        if g > 0:
            raw.append([old_r, new_r, new_l, old_l])
        else:
            raw.append([old_l, old_r, new_r, new_l])
        current[i], current[i + 1] = new_l, new_r
        touched[i] = touched[i + 1] = True
    closing = {current[i]: i for i in range(b.strands) if touched[i]}
    raw = [[closing.get(x, x) + 1 for x in arcs] for arcs in raw]
    free = touched.count(False)
    if not raw:
        return KnotDiagram((), (), free, tuple(f"K{i + 1}" for i in range(free)))
    hint = {(ci, p) for ci, g in enumerate(b.letters) for p in (0, 3 if g > 0 else 1)}
    return _build(raw, free, heads=hint)


# ---------------------------------------------------------------------------
# diagram operations


def _heads_of(d: KnotDiagram) -> set[tuple[int, int]]:
    return {(ci, p) for ci, c in enumerate(d.crossings) for p in (0, c.over_in)}


def mirror(d: KnotDiagram) -> KnotDiagram:
    """Switch every crossing; orientation is kept."""
    raw, hint = [], set()
    for ci, c in enumerate(d.crossings):
        a, b, cc, dd = c.arcs
        raw.append((dd, a, b, cc) if c.sign > 0 else (b, cc, dd, a))
        shift = 1 if c.sign > 0 else -1
        hint |= {(ci, (p + shift) % 4) for p in (0, c.over_in)}
    if not raw:
        return d
    return _build(raw, d.free_loops, d.labels, hint)


def reverse(d: KnotDiagram) -> KnotDiagram:
    """Reverse the orientation of every component."""
    if not d.crossings:
        return d
    # renumber each component backwards from its first arc so labels follow the new direction
    flip = {}
    for path in d.components:
        for k, x in enumerate(path):
            flip[x] = path[-k % len(path)]
    raw = [tuple(flip[x] for x in (c.arcs[2], c.arcs[3], c.arcs[0], c.arcs[1])) for c in d.crossings]
    # old tails become heads; position p moves to p + 2
    hint = {(ci, p) for ci, c in enumerate(d.crossings) for p in (0, 4 - c.over_in)}
    return _build(raw, d.free_loops, d.labels, hint)


def _head(d: KnotDiagram, label: int) -> tuple[int, int]:
    for ci, c in enumerate(d.crossings):
        for p in (0, c.over_in):
            if c.arcs[p] == label:
                return ci, p
    raise DiagramError(f"arc {label} has no head")


def connected_sum(d1: KnotDiagram, d2: KnotDiagram) -> KnotDiagram:
    """Splice two knot diagrams along their first arcs."""
    if not (d1.is_knot() and d2.is_knot()):
        raise DiagramError("connected sum is only defined here for 1-component diagrams")
    if not d1.crossings:
        return d2
    if not d2.crossings:
        return d1
    shift = 2 * d1.num_crossings
    raw1 = [list(c.arcs) for c in d1.crossings]
    raw2 = [[x + shift for x in c.arcs] for c in d2.crossings]
    e1 = d1.components[0][0]
    e2 = d2.components[0][0]
    h1 = _head(d1, e1)
    h2 = _head(d2, e2)
    # e1 now ends where e2 used to end, and vice versa
    raw1[h1[0]][h1[1]] = e2 + shift
    raw2[h2[0]][h2[1]] = e1
    n1 = d1.num_crossings
    hint = _heads_of(d1) | {(ci + n1, p) for ci, p in _heads_of(d2)}
    return _build(raw1 + raw2, heads=hint)


def crossings_from(items: Iterable[Sequence[int]]) -> KnotDiagram:
    """Build a diagram straight from PD 4-tuples."""
    return _build([tuple(x) for x in items])
