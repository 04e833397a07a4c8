"""2-handlebodies on framed links, read through their linking matrix."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from .codec import KnotDiagram, parse_pd
from .errors import InputError
from .linalg import IntMatrix, det_int, is_symmetric, signature, smith_normal_form

__all__ = [
    "FramedComponent",
    "FramedLink",
    "HandlebodySummary",
    "MeridianClass",
    "linking_matrix",
    "form_signature",
    "boundary_homology",
    "meridian_class",
    "summarize",
    "parse_framed_link",
    "parse_int_matrix",
]


@dataclass(frozen=True)
class FramedComponent:
    framing: int
    diagram_ref: int | None = None  # 1-based component of the link diagram


@dataclass(frozen=True)
class FramedLink:
    components: tuple[FramedComponent, ...]
    diagram: KnotDiagram | None = None
    # explicit linking numbers, keyed by 1-based (i, j) with i < j
    linking: tuple[tuple[int, int, int], ...] = ()
    matrix: IntMatrix | None = None

    @classmethod
    def from_matrix(cls, q: Sequence[Sequence[int]]) -> "FramedLink":
        q = _check_matrix(q)
        return cls(tuple(FramedComponent(q[i][i]) for i in range(len(q))), matrix=q)

    @property
    def n(self) -> int:
        return len(self.components)


def _check_matrix(q) -> IntMatrix:
    try:
        rows = tuple(tuple(int(x) for x in r) for r in q)
    except (TypeError, ValueError) as exc:
        raise InputError("linking matrix entries must be integers") from exc
    if any(isinstance(x, bool) or not isinstance(x, int) for r in q for x in r):
        raise InputError("linking matrix entries must be integers")
    if any(len(r) != len(rows) for r in rows):
        raise InputError("linking matrix must be square")
    if not is_symmetric(rows):
        raise InputError("linking matrix must be symmetric")
    return rows


def linking_matrix(link: FramedLink) -> IntMatrix:
    if link.matrix is not None:
        return link.matrix
    n = link.n
    if n == 0:
        raise InputError("framed link has no components")
    q = [[0] * n for _ in range(n)]
    explicit = {}
    for i, j, lk in link.linking:
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise InputError(f"linking number for bad component pair ({i}, {j})")
        key = (min(i, j), max(i, j))
        if key in explicit and explicit[key] != lk:
            raise InputError(f"conflicting linking numbers for pair {key}")
        explicit[key] = lk
    for i, comp in enumerate(link.components):
        q[i][i] = comp.framing
    for i in range(n):
        for j in range(i + 1, n):
            key = (i + 1, j + 1)
            if key in explicit:
                lk = explicit[key]
            else:
                ci, cj = link.components[i], link.components[j]
                if link.diagram is None or ci.diagram_ref is None or cj.diagram_ref is None:
                    raise InputError(f"missing linking number for components {key}")
                lk = link.diagram.linking_number(ci.diagram_ref - 1, cj.diagram_ref - 1)
            q[i][j] = q[j][i] = lk
    return tuple(map(tuple, q))


def form_signature(q: Sequence[Sequence[int]]) -> int:
    if not is_symmetric(q):
        raise InputError("form must be symmetric")
    return signature(q)


def boundary_homology(q: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors of coker Q with the units dropped; () means H_1 = 0."""
    diag, _, _ = smith_normal_form(q)
    return tuple(d for d in diag if d != 1)


@dataclass(frozen=True)
class MeridianClass:
    index: int  # 1-based
    factors: tuple[int, ...]  # invariant factors != 1 (0 means a Z summand)
    coordinates: tuple[int, ...]  # in Z/factors, reduced
    order: int  # 0 for infinite order

    @property
    def nontrivial(self) -> bool:
        return any(self.coordinates)

    def record(self) -> dict:
        return {
            "meridian": self.index,
            "group": list(self.factors),
            "coordinates": list(self.coordinates),
            "order": self.order,
            "nontrivial": self.nontrivial,
        }


def meridian_class(q: Sequence[Sequence[int]], i: int) -> MeridianClass:
    """Image of e_i in coker Q, in Smith coordinates.

    With U Q W = D, the map x -> U x identifies coker Q with coker D.
    """
    n = len(q)
    if not 1 <= i <= n:
        raise InputError(f"meridian index {i} out of range 1..{n}")
    diag, u, _ = smith_normal_form(q)
    factors, coords = [], []
    for k, d in enumerate(diag):
        if d == 1:
            continue
        x = u[k][i - 1]
        factors.append(d)
        coords.append(x % d if d else x)
    order = 1
    for d, x in zip(factors, coords):
        if x == 0:
            continue
        if d == 0:
            order = 0
            break
        step = d // gcd(d, x)
        order = order * step // gcd(order, step)
    return MeridianClass(i, tuple(factors), tuple(coords), order)


@dataclass(frozen=True)
class HandlebodySummary:
    q: IntMatrix
    n: int
    signature: int
    chi: int
    chi_closed: int
    b2_closed: int
    h1_boundary: tuple[int, ...]
    det: int

    @property
    def cappable(self) -> bool:
        return abs(self.det) == 1

    def record(self) -> dict:
        return {
            "Q": [list(r) for r in self.q],
            "n": self.n,
            "signature": self.signature,
            "chi_X": self.chi,
            "chi_Xhat": self.chi_closed,
            "b2_Xhat": self.b2_closed,
            "H1_boundary": list(self.h1_boundary),
            "det": self.det,
            "homology_sphere_boundary": self.cappable,
        }


def summarize(q: Sequence[Sequence[int]]) -> HandlebodySummary:
    q = _check_matrix(q)
    n = len(q)
    if n == 0:
        raise InputError("a 2-handlebody needs at least one 2-handle")
    h1 = boundary_homology(q)
    det = det_int(q)
    if prod(h1) != abs(det):
        raise AssertionError("Smith form disagrees with determinant")
    return HandlebodySummary(q, n, signature(q), 1 + n, 2 + n, n, h1, det)


# ---------------------------------------------------------------------------
# text formats


def parse_int_matrix(text: str) -> IntMatrix:
    """Accept ``[[0,1],[1,0]]``, ``[1]``, or ``0,1;1,0``."""
    body = text.strip()
    if not body:
        raise InputError("empty matrix")
    if body.startswith("["):
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad matrix literal {text!r}") from exc
        if data and all(isinstance(x, int) for x in data):
            data = [data] if len(data) == 1 else None
            if data is None:
                raise InputError("a flat list is only accepted for a 1x1 matrix")
    else:
        try:
            data = [[int(x) for x in row.split(",")] for row in body.split(";")]
        except ValueError as exc:
            raise InputError(f"bad matrix literal {text!r}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix must be a list of rows")
    return _check_matrix(data)


_TOP_KEYS = {"matrix", "diagram", "components", "linking"}
_COMPONENT_KEYS = {"diagram_ref", "framing"}


def _load_document(text: str) -> dict:
    text = text.strip()
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"framed-link file is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise InputError("framed-link document must be an object")
        return doc
    doc = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise InputError(f"line {lineno}: expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        if key in doc:
            raise InputError(f"line {lineno}: duplicate key {key!r}")
        if key == "diagram":
            doc[key] = value
        else:
            try:
                doc[key] = json.loads(value)
            except json.JSONDecodeError as exc:
                raise InputError(f"line {lineno}: bad value for {key!r}") from exc
    return doc


def parse_framed_link(text: str) -> FramedLink:
    """Read a framed link.

    Two shapes are accepted, either as JSON or as ``key: value`` lines::

        matrix: [[0,1],[1,0]]

        diagram: X(1,3,2,4) X(3,1,4,2)
        components: [{"diagram_ref": 1, "framing": 0}, {"diagram_ref": 2, "framing": 0}]
        linking: [[1, 2, 1]]          # optional overrides (i, j, lk)
    """
    doc = _load_document(text)
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}")
    if "matrix" in doc:
        if set(doc) != {"matrix"}:
            raise InputError("'matrix' cannot be combined with other keys")
        m = doc["matrix"]
        if isinstance(m, str):
            return FramedLink.from_matrix(parse_int_matrix(m))
        if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
            raise InputError("'matrix' must be a list of rows")
        return FramedLink.from_matrix(m)
    comps = doc.get("components")
    if not isinstance(comps, list) or not comps:
        raise InputError("'components' must be a nonempty list")
    diagram = None
    if "diagram" in doc:
        if not isinstance(doc["diagram"], str):
            raise InputError("'diagram' must be a PD string")
        diagram = parse_pd(doc["diagram"])
    parsed = []
    seen_refs = set()
    for k, rec in enumerate(comps, 1):
        if not isinstance(rec, dict):
            raise InputError(f"component {k} must be an object")
        extra = set(rec) - _COMPONENT_KEYS
        if extra:
            raise InputError(f"component {k}: unknown keys {sorted(extra)}")
        if "framing" not in rec:
            raise InputError(f"component {k}: missing framing")
        framing, ref = rec["framing"], rec.get("diagram_ref")
        if isinstance(framing, bool) or not isinstance(framing, int):
            raise InputError(f"component {k}: framing must be an integer")
        if ref is not None:
            if diagram is None:
                raise InputError(f"component {k}: diagram_ref given but no diagram")
            if isinstance(ref, bool) or not isinstance(ref, int) or not 1 <= ref <= diagram.num_components:
                raise InputError(f"component {k}: diagram_ref out of range")
            if ref in seen_refs:
                raise InputError(f"component {k}: diagram_ref {ref} used twice")
            seen_refs.add(ref)
        parsed.append(FramedComponent(framing, ref))
    overrides = []
    for entry in doc.get("linking", []):
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise InputError("'linking' entries must be [i, j, lk] integer triples")
        overrides.append(tuple(entry))
    link = FramedLink(tuple(parsed), diagram, tuple(overrides))
    linking_matrix(link)  # fail early on missing or conflicting data
    return link
