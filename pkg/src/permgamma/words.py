"""Words, permutations and their descent, peak and valley statistics.

Permutations and words are plain tuples of positive integers in one-line
notation.  Positions and letters are 1-based everywhere in the public API.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

Word = tuple[int, ...]
Permutation = tuple[int, ...]


class Position(str, Enum):
    PEAK = "peak"
    VALLEY = "valley"
    FREE_UP = "free_up"
    FREE_DOWN = "free_down"

    @property
    def is_free(self) -> bool:
        return self in (Position.FREE_UP, Position.FREE_DOWN)


def as_word(letters: Iterable[int]) -> Word:
    word = tuple(int(x) for x in letters)
    if any(x < 1 for x in word):
        raise ValueError(f"words use positive letters only, got {word}")
    return word


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_permutation(letters: Iterable[int]) -> Permutation:
    perm = tuple(int(x) for x in letters)
    if not is_permutation(perm):
        raise ValueError(f"{perm} is not a permutation of [{len(perm)}]")
    return perm


def parse_word(text: str) -> Word:
    """Parse ``"6 7 2 8"`` (or ``"6728"`` when every letter is a digit)."""
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text) or "," in text:
        return as_word(tok for tok in text.replace(",", " ").split())
    if text.isdigit():
        return as_word(int(ch) for ch in text)
    raise ValueError(f"cannot parse word {text!r}")


def parse_permutation(text: str) -> Permutation:
    return as_permutation(parse_word(text))


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def inverse(w: Sequence[int]) -> Permutation:
    """Return w^{-1}, i.e. the 1-based position of each letter."""
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[x - 1] = i
    return tuple(inv)


def multiplicities(v: Sequence[int]) -> tuple[int, ...]:
    """m_i(v) for i = 1..max(v)."""
    counts = [0] * (max(v) if v else 0)
    for x in v:
        counts[x - 1] += 1
    return tuple(counts)


def descent_set(v: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(v)) if v[i - 1] > v[i])


def des(v: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(v)) if v[i - 1] > v[i])


def descent_flags(v: Sequence[int]) -> tuple[bool, bool, bool]:
    """(has double descent, has initial descent, has final descent)."""
    d = descent_set(v)
    n = len(v)
    double = any(i in d and i + 1 in d for i in range(1, n - 1))
    return double, 1 in d, (n - 1) in d


def is_tilde(v: Sequence[int]) -> bool:
    """No double descent and no initial descent."""
    double, initial, _ = descent_flags(v)
    return not (double or initial)


def is_hat(v: Sequence[int]) -> bool:
    """No double descent and no final descent."""
    double, _, final = descent_flags(v)
    return not (double or final)


def classify_positions(w: Sequence[int]) -> tuple[Position, ...]:
    """Label each position of ``w`` as a peak, valley or free letter.

    The values just outside the word are taken to be +infinity, so the
    first and last letters are never peaks.
    """
    n = len(w)
    labels = []
    for i in range(n):
        left_higher = i == 0 or w[i - 1] > w[i]
        right_higher = i == n - 1 or w[i + 1] > w[i]
        if left_higher and right_higher:
            labels.append(Position.VALLEY)
        elif not left_higher and not right_higher:
            labels.append(Position.PEAK)
        elif left_higher:
            labels.append(Position.FREE_DOWN)
        else:
            labels.append(Position.FREE_UP)
    return tuple(labels)


def _letters_with(w: Sequence[int], *kinds: Position) -> frozenset[int]:
    return frozenset(x for x, lab in zip(w, classify_positions(w)) if lab in kinds)


def peaks(w: Sequence[int]) -> frozenset[int]:
    return _letters_with(w, Position.PEAK)


def valleys(w: Sequence[int]) -> frozenset[int]:
    return _letters_with(w, Position.VALLEY)


def free_letters(w: Sequence[int]) -> frozenset[int]:
    return _letters_with(w, Position.FREE_UP, Position.FREE_DOWN)


def pk(w: Sequence[int]) -> int:
    return sum(1 for lab in classify_positions(w) if lab is Position.PEAK)


def star(w: Sequence[int]) -> Permutation:
    """w*(i) = n + 1 - w(n + 1 - i)."""
    n = len(w)
    return tuple(n + 1 - x for x in reversed(w))


def coxeter_length(w: Sequence[int]) -> int:
    """Number of inversions of ``w``."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
