"""Arithmetic in Z[F] / (g ~ g^-1, 1 ~ 0) for a free group F, and Wall's mu.

Words are tuples of nonzero ints: ``k`` is the generator x_k, ``-k`` its inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

__all__ = [
    "FreeWord",
    "LambdaElement",
    "normalize",
    "add",
    "negate",
    "is_zero",
    "mu_from_double_points",
    "parse_word",
    "parse_terms",
]


def _letter_key(x: int) -> tuple[int, int]:
    # x1 < x1^-1 < x2 < x2^-1 < ...
    return (abs(x), 0 if x > 0 else 1)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise InputError(f"generator x{abs(x)} not among x1..x{self.rank}")
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        object.__setattr__(self, "letters", tuple(out))

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-x for x in reversed(self.letters)), self.rank)

    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self):
        return tuple(_letter_key(x) for x in self.letters)

    def canonical(self) -> "FreeWord":
        inv = self.inverse()
        return self if self.sort_key() <= inv.sort_key() else inv

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in self.letters)


@dataclass(frozen=True)
class LambdaElement:
    rank: int
    terms: tuple[tuple[int, FreeWord], ...]  # (coefficient, canonical word), sorted

    def __post_init__(self):
        for c, w in self.terms:
            if c == 0 or w.is_identity() or w != w.canonical() or w.rank != self.rank:
                raise ValueError("LambdaElement terms must be normalized; use normalize()")

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for k, (c, w) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"({w})" if mag == 1 else f"{mag}*({w})"
            out += (("-" if c < 0 else "") + body) if k == 0 else f" {sign} {body}"
        return out

    def record(self) -> list:
        return [[c, str(w)] for c, w in self.terms]


def normalize(raw: Iterable[tuple[int, FreeWord | Iterable[int]]], rank: int) -> LambdaElement:
    totals: dict[tuple[int, ...], int] = {}
    for coeff, word in raw:
        if not isinstance(word, FreeWord):
            word = FreeWord(tuple(word), rank)
        elif word.rank != rank:
            raise InputError("word over a different generator set")
        if word.is_identity():
            continue
        canon = word.canonical()
        totals[canon.letters] = totals.get(canon.letters, 0) + int(coeff)
    words = sorted((FreeWord(k, rank) for k, c in totals.items() if c), key=lambda w: (len(w.letters), w.sort_key()))
    return LambdaElement(rank, tuple((totals[w.letters], w) for w in words))


def _same_rank(a: LambdaElement, b: LambdaElement) -> None:
    if a.rank != b.rank:
        raise InputError("elements live over different free groups")


def add(a: LambdaElement, b: LambdaElement) -> LambdaElement:
    _same_rank(a, b)
    return normalize(list(a.terms) + list(b.terms), a.rank)


def negate(a: LambdaElement) -> LambdaElement:
    return LambdaElement(a.rank, tuple((-c, w) for c, w in a.terms))


def is_zero(a: LambdaElement) -> bool:
    return a.is_zero()


def mu_from_double_points(points: Iterable[tuple[int, FreeWord | Iterable[int]]], rank: int) -> LambdaElement:
    """sum of sign(p) * g_p over the double points."""
    pts = list(points)
    for s, _ in pts:
        if s not in (1, -1):
            raise InputError("double point signs must be +1 or -1")
    return normalize(pts, rank)


_TOKEN = re.compile(r"^x(\d+)(\^(-?\d+))?$")


def parse_word(text: str, rank: int) -> FreeWord:
    """``"x1 x2^-1 x1^2"``; ``"1"`` or empty is the identity."""
    letters: list[int] = []
    text = text.replace("*", " ").strip()
    if text in ("", "1", "e"):
        return FreeWord((), rank)
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise InputError(f"bad word token {tok!r}")
        gen = int(m.group(1))
        power = int(m.group(3)) if m.group(3) else 1
        letters.extend([gen if power > 0 else -gen] * abs(power))
    return FreeWord(tuple(letters), rank)


def parse_terms(text: str) -> tuple[int, list[tuple[int, FreeWord]]]:
    """Read a wall-calc input.

    The first non-comment line declares the generators (``generators: x1 x2 x3`` or
    ``rank: 3``); each further line is ``<sign or integer> <word>``.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty wall-calc input")
    head = lines[0]
    key, _, value = head.partition(":")
    key = key.strip().lower()
    if key == "rank":
        try:
            rank = int(value)
        except ValueError as exc:
            raise InputError("rank must be an integer") from exc
    elif key == "generators":
        names = value.split()
        expected = [f"x{i}" for i in range(1, len(names) + 1)]
        if names != expected:
            raise InputError("generators must be declared as x1 x2 ... xr")
        rank = len(names)
    else:
        raise InputError("first line must declare 'generators:' or 'rank:'")
    if rank < 0:
        raise InputError("rank must be nonnegative")
    terms = []
    for ln in lines[1:]:
        coeff_text, _, word_text = ln.partition(" ")
        try:
            coeff = int(coeff_text)
        except ValueError as exc:
            raise InputError(f"bad coefficient in {ln!r}") from exc
        terms.append((coeff, parse_word(word_text, rank)))
    return rank, terms
