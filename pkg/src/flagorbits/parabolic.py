"""Left cosets of a Levi-generated parabolic subgroup acting on the Weyl group.

A coset is held by its minimal and maximal length representatives.  The
quotient carries a length, a reduced-word theory relative to the nilradical,
an exchange map, and the Bruhat order induced from the full group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotADescent, NotDownward, NotPositiveRoot, NotPReduced, ParabolicMismatch
from .root_datum import (
    Root,
    RootDatum,
    RootPosition,
    classify_wrt_parabolic,
    is_root,
    normalize_levi,
    positive_roots,
    simple_root,
)
from .weyl import (
    WeylElt,
    Word,
    bruhat_leq,
    enumerate_elements,
    from_word,
    identity,
    inv,
    is_reduced,
    length,
    mul,
    reduced_word,
    simple_reflection,
)

Levi = tuple[int, ...]


class StepType(enum.Enum):
    """Effect of a simple reflection on a coset, read off the root image."""

    LEVI_TYPE = "LeviType"
    COMPLEX_UPWARD = "ComplexUpward"
    COMPLEX_DOWNWARD = "ComplexDownward"


@dataclass(frozen=True)
class ParabolicCoset:
    levi: Levi
    min_rep: WeylElt
    max_rep: WeylElt

    @property
    def datum(self) -> RootDatum:
        return self.min_rep.datum


@lru_cache(maxsize=None)
def levi_subgroup_elements(datum: RootDatum, levi: Levi) -> tuple[WeylElt, ...]:
    """The subgroup generated by the chosen simple reflections."""
    levi = normalize_levi(datum, levi)
    e = identity(datum)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in levi:
                y = mul(w, simple_reflection(datum, i))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (length(w), reduced_word(w))))


@lru_cache(maxsize=None)
def longest_levi_element(datum: RootDatum, levi: Levi) -> WeylElt:
    members = levi_subgroup_elements(datum, normalize_levi(datum, levi))
    return members[-1]


def is_p_minimal(w: WeylElt, levi: Levi) -> bool:
    """Minimal in its coset: the inverse sends the chosen simple roots into
    the positive roots, so no reflection from the subgroup shortens on the left."""
    levi = normalize_levi(w.datum, levi)
    winv = inv(w)
    return all(all(c >= 0 for c in winv.images[i - 1]) for i in levi)


def is_p_maximal(w: WeylElt, levi: Levi) -> bool:
    levi = normalize_levi(w.datum, levi)
    winv = inv(w)
    return all(all(c <= 0 for c in winv.images[i - 1]) for i in levi)


def coset_of(w: WeylElt, levi: Levi) -> ParabolicCoset:
    levi = normalize_levi(w.datum, levi)
    x = w
    changed = True
    while changed:
        changed = False
        for i in levi:
            y = mul(simple_reflection(w.datum, i), x)
            if length(y) < length(x):
                x = y
                changed = True
                break
    return ParabolicCoset(levi, x, mul(longest_levi_element(w.datum, levi), x))


def coset_elements(coset: ParabolicCoset) -> tuple[WeylElt, ...]:
    return tuple(
        sorted(
            (mul(l, coset.min_rep) for l in levi_subgroup_elements(coset.datum, coset.levi)),
            key=lambda w: (length(w), reduced_word(w)),
        )
    )


def p_length(coset: ParabolicCoset) -> int:
    return length(coset.min_rep)


def is_p_reduced(datum: RootDatum, word: Word, levi: Levi) -> bool:
    """Every prefix must send the next simple root into the nilradical."""
    levi = normalize_levi(datum, levi)
    w = identity(datum)
    for i in word:
        beta = w.images[i - 1]
        if classify_wrt_parabolic(datum, beta, levi) is not RootPosition.NILRADICAL:
            return False
        w = mul(w, simple_reflection(datum, i))
    return True


def classify_step(w: WeylElt, alpha: Root, levi: Levi) -> StepType:
    """How right multiplication by the reflection in the positive root alpha
    moves the coset of w: fixed, up one, or down one."""
    levi = normalize_levi(w.datum, levi)
    if not is_root(w.datum, alpha):
        raise NotPositiveRoot(f"{alpha} is not a root")
    if any(c < 0 for c in alpha):
        raise NotPositiveRoot(f"{alpha} is not positive")
    from .weyl import _apply

    pos = classify_wrt_parabolic(w.datum, _apply(w, alpha), levi)
    if pos is RootPosition.LEVI:
        return StepType.LEVI_TYPE
    if pos is RootPosition.NILRADICAL:
        return StepType.COMPLEX_UPWARD
    return StepType.COMPLEX_DOWNWARD


def step_coset(coset: ParabolicCoset, alpha: int) -> ParabolicCoset:
    """The coset of min_rep * s_alpha for a simple index alpha."""
    return coset_of(mul(coset.min_rep, simple_reflection(coset.datum, alpha)), coset.levi)


def coset_bruhat_leq(c1: ParabolicCoset, c2: ParabolicCoset) -> bool:
    if c1.levi != c2.levi or c1.datum != c2.datum:
        raise ParabolicMismatch("cosets live in different quotients")
    return bruhat_leq(c1.min_rep, c2.min_rep)


def coset_bruhat_leq_induced(c1: ParabolicCoset, c2: ParabolicCoset) -> bool:
    """Brute-force induced order: some representative of the first coset lies
    below some representative of the second.  Oracle for coset_bruhat_leq."""
    if c1.levi != c2.levi or c1.datum != c2.datum:
        raise ParabolicMismatch("cosets live in different quotients")
    from .weyl import bruhat_leq_subword

    return any(
        bruhat_leq_subword(x, y) for x in coset_elements(c1) for y in coset_elements(c2)
    )


@lru_cache(maxsize=None)
def enumerate_cosets(datum: RootDatum, levi: Levi) -> tuple[ParabolicCoset, ...]:
    levi = normalize_levi(datum, levi)
    seen: dict[WeylElt, ParabolicCoset] = {}
    for w in enumerate_elements(datum):
        c = coset_of(w, levi)
        seen.setdefault(c.min_rep, c)
    return tuple(sorted(seen.values(), key=lambda c: (p_length(c), reduced_word(c.min_rep))))


def _lifted_coset_leq(c1: ParabolicCoset, c2: ParabolicCoset) -> bool:
    """Order re-derived purely from downward lifting through shared descents;
    used to certify that the induced order is the unique one with property Z."""
    if c1 == c2:
        return True
    if p_length(c1) >= p_length(c2):
        return False
    datum = c1.datum
    for i in range(1, datum.rank + 1):
        if classify_step(c2.min_rep, simple_root(datum, i), c2.levi) is StepType.COMPLEX_DOWNWARD:
            c2s = step_coset(c2, i)
            if classify_step(c1.min_rep, simple_root(datum, i), c1.levi) is StepType.COMPLEX_DOWNWARD:
                return _lifted_coset_leq(step_coset(c1, i), c2s)
            return _lifted_coset_leq(c1, c2s)
    return False  # pragma: no cover - positive p-length forces a downward step


def quotient_property_z_check(datum: RootDatum, levi: Levi) -> list[str]:
    """Exhaustively certify the lifting property on the quotient and that the
    order is recovered from it.  Returns human-readable violations."""
    levi = normalize_levi(datum, levi)
    violations: list[str] = []
    cosets = enumerate_cosets(datum, levi)
    for s in range(1, datum.rank + 1):
        alpha = simple_root(datum, s)
        for cu in cosets:
            if classify_step(cu.min_rep, alpha, levi) is StepType.COMPLEX_UPWARD:
                continue
            cus = step_coset(cu, s)
            for cv in cosets:
                if classify_step(cv.min_rep, alpha, levi) is StepType.COMPLEX_UPWARD:
                    continue
                cvs = step_coset(cv, s)
                a = coset_bruhat_leq(cu, cv)
                b = coset_bruhat_leq(cus, cv)
                c = coset_bruhat_leq(cus, cvs)
                if not (a == b == c):
                    violations.append(
                        f"lifting failed at s={s}, u={reduced_word(cu.min_rep)}, "
                        f"v={reduced_word(cv.min_rep)}: {a}, {b}, {c}"
                    )
    for c1 in cosets:
        for c2 in cosets:
            if _lifted_coset_leq(c1, c2) != coset_bruhat_leq(c1, c2):
                violations.append(
                    f"re-derived order disagrees at u={reduced_word(c1.min_rep)}, "
                    f"v={reduced_word(c2.min_rep)}"
                )
    return sorted(violations)


def quotient_exchange(datum: RootDatum, word: Word, alpha: int, levi: Levi) -> int:
    """Exchange in the quotient: the 1-based letter whose removal leaves a
    reduced-relative-to-the-quotient word for the lowered coset."""
    levi = normalize_levi(datum, levi)
    word = tuple(word)
    if not is_p_reduced(datum, word, levi):
        raise NotPReduced(f"{word} is not reduced relative to the quotient")
    w = from_word(datum, word)
    if classify_step(w, simple_root(datum, alpha), levi) is not StepType.COMPLEX_DOWNWARD:
        raise NotDownward(f"simple root {alpha} does not lower the coset of {word}")
    target = mul(w, simple_reflection(datum, alpha))
    for j in range(len(word)):
        shorter = word[:j] + word[j + 1 :]
        if from_word(datum, shorter) == target and is_p_reduced(datum, shorter, levi):
            return j + 1
    raise AssertionError("exchange position must exist at a downward step")  # pragma: no cover
