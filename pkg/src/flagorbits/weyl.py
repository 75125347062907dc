"""Weyl group elements, words, lengths, Bruhat order, and the exchange map.

An element is stored by its images of the simple roots, which makes equality
and hashing canonical and keeps every product exact.  Words are tuples of
1-based simple indices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DatumMismatch, NotADescent, NotARoot, NotPositiveRoot, NotReduced, ParseError
from .root_datum import (
    Root,
    RootDatum,
    coroot_pairing,
    is_root,
    positive_roots,
    simple_root,
    twist_root,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class WeylElt:
    """A Weyl group element, canonically the tuple of simple-root images."""

    datum: RootDatum
    images: tuple[Root, ...]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"WeylElt({format_word(reduced_word(self))})"


def identity(datum: RootDatum) -> WeylElt:
    return WeylElt(datum, tuple(simple_root(datum, i) for i in range(1, datum.rank + 1)))


def simple_reflection(datum: RootDatum, i: int) -> WeylElt:
    from .root_datum import reflect

    return WeylElt(datum, tuple(reflect(datum, i, simple_root(datum, j)) for j in range(1, datum.rank + 1)))


def _apply(w: WeylElt, beta: Sequence[int]) -> Root:
    """Linear extension of the simple-root images; no membership check."""
    n = w.datum.rank
    out = [0] * n
    for j, c in enumerate(beta):
        if c:
            img = w.images[j]
            for k in range(n):
                out[k] += c * img[k]
    return tuple(out)


def act_on_root(w: WeylElt, beta: Root) -> Root:
    if not is_root(w.datum, beta):
        raise NotARoot(f"{beta} is not a root")
    return _apply(w, beta)


def mul(u: WeylElt, v: WeylElt) -> WeylElt:
    if u.datum != v.datum:
        raise DatumMismatch("cannot multiply elements of different root data")
    return WeylElt(u.datum, tuple(_apply(u, img) for img in v.images))


def from_word(datum: RootDatum, word: Iterable[int]) -> WeylElt:
    w = identity(datum)
    for i in word:
        w = mul(w, simple_reflection(datum, i))
    return w


@lru_cache(maxsize=None)
def length(w: WeylElt) -> int:
    """Number of positive roots sent negative."""
    return sum(1 for beta in positive_roots(w.datum) if any(c < 0 for c in _apply(w, beta)))


@lru_cache(maxsize=None)
def reduced_word(w: WeylElt) -> Word:
    """The lexicographically smallest reduced word, built by always taking
    the smallest simple reflection that shortens on the left."""
    word: list[int] = []
    x = w
    e = identity(w.datum)
    while x != e:
        for i in range(1, w.datum.rank + 1):
            y = mul(simple_reflection(w.datum, i), x)
            if length(y) < length(x):
                word.append(i)
                x = y
                break
        else:  # pragma: no cover - impossible for a genuine group element
            raise AssertionError("no left descent found")
    return tuple(word)


@lru_cache(maxsize=None)
def inv(w: WeylElt) -> WeylElt:
    return from_word(w.datum, tuple(reversed(reduced_word(w))))


def is_reduced(datum: RootDatum, word: Iterable[int]) -> bool:
    """Prefix criterion: each prefix must keep the next simple root positive."""
    w = identity(datum)
    for i in word:
        beta = w.images[i - 1]
        if any(c < 0 for c in beta):
            return False
        w = mul(w, simple_reflection(datum, i))
    return True


class Direction(enum.Enum):
    UP = "up"
    DOWN = "down"


def descent_direction(w: WeylElt, alpha: Root) -> Direction:
    """Whether right multiplication by the reflection in the positive root
    alpha lengthens (UP) or shortens (DOWN) the element."""
    if not is_root(w.datum, alpha):
        raise NotARoot(f"{alpha} is not a root")
    if any(c < 0 for c in alpha):
        raise NotPositiveRoot(f"{alpha} is not positive")
    return Direction.UP if all(c >= 0 for c in _apply(w, alpha)) else Direction.DOWN


def exchange(datum: RootDatum, word: Sequence[int], alpha: int) -> int:
    """Strong exchange at a simple descent: the 1-based position whose removal
    from the reduced word yields a reduced word for w*s_alpha."""
    word = tuple(word)
    if not is_reduced(datum, word):
        raise NotReduced(f"{word} is not reduced")
    w = from_word(datum, word)
    s = simple_reflection(datum, alpha)
    if descent_direction(w, simple_root(datum, alpha)) is Direction.UP:
        raise NotADescent(f"simple root {alpha} is not a descent")
    target = mul(w, s)
    for j in range(len(word)):
        if from_word(datum, word[:j] + word[j + 1 :]) == target:
            return j + 1
    raise AssertionError("exchange position must exist at a descent")  # pragma: no cover


@lru_cache(maxsize=None)
def bruhat_leq(u: WeylElt, v: WeylElt) -> bool:
    """Bruhat order by downward lifting through a shared simple descent of v."""
    if u.datum != v.datum:
        raise DatumMismatch("cannot compare elements of different root data")
    if u == v:
        return True
    if length(u) >= length(v):
        return False
    datum = u.datum
    for i in range(1, datum.rank + 1):
        if any(c < 0 for c in v.images[i - 1]):
            s = simple_reflection(datum, i)
            v2 = mul(v, s)
            if any(c < 0 for c in u.images[i - 1]):
                return bruhat_leq(mul(u, s), v2)
            return bruhat_leq(u, v2)
    return False  # pragma: no cover - v != e always has a descent


def bruhat_leq_subword(u: WeylElt, v: WeylElt, base_word: Sequence[int] | None = None) -> bool:
    """Independent subword oracle: scan a fixed reduced word of v and collect
    every element admitting a reduced word as a subsequence."""
    if u.datum != v.datum:
        raise DatumMismatch("cannot compare elements of different root data")
    word = tuple(base_word) if base_word is not None else reduced_word(v)
    if base_word is not None and (not is_reduced(u.datum, word) or from_word(u.datum, word) != v):
        raise NotReduced(f"{word} is not a reduced word for the right-hand element")
    reachable = {identity(u.datum)}
    for i in word:
        s = simple_reflection(u.datum, i)
        grown = set()
        for x in reachable:
            y = mul(x, s)
            if length(y) > length(x):
                grown.add(y)
        reachable |= grown
    return u in reachable


@lru_cache(maxsize=None)
def enumerate_elements(datum: RootDatum) -> tuple[WeylElt, ...]:
    """All elements, sorted by length then by canonical reduced word."""
    e = identity(datum)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, datum.rank + 1):
                y = mul(w, simple_reflection(datum, i))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (length(w), reduced_word(w))))


def reflection_word(datum: RootDatum, beta: Root) -> Word:
    """A palindromic reduced word for the reflection in a positive root,
    found by descending the root to a simple one."""
    if not is_root(datum, beta):
        raise NotARoot(f"{beta} is not a root")
    if any(c < 0 for c in beta):
        raise NotPositiveRoot(f"{beta} is not positive")
    for i in range(1, datum.rank + 1):
        if beta == simple_root(datum, i):
            return (i,)
    for i in range(1, datum.rank + 1):
        if coroot_pairing(datum, beta, i) > 0:
            from .root_datum import reflect

            inner = reflection_word(datum, reflect(datum, i, beta))
            return (i,) + inner + (i,)
    raise AssertionError("positive root with no positive coroot pairing")  # pragma: no cover


def reflection_element(datum: RootDatum, beta: Root) -> WeylElt:
    return from_word(datum, reflection_word(datum, beta))


def apply_twist(w: WeylElt) -> WeylElt:
    """The diagram twist acting as a group automorphism."""
    datum = w.datum
    out: list[Root] = [()] * datum.rank
    for i in range(datum.rank):
        out[datum.twist[i] - 1] = twist_root(datum, w.images[i])
    return WeylElt(datum, tuple(out))


# --- word strings ----------------------------------------------------------


def format_word(word: Word) -> str:
    return ",".join(str(i) for i in word) if word else "e"


def parse_word(datum: RootDatum, text: str) -> Word:
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        word = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse word {text!r}") from None
    for i in word:
        if not 1 <= i <= datum.rank:
            raise ParseError(f"letter {i} out of range 1..{datum.rank}")
    return word
