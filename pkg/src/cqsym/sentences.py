"""Colors, words, sentences and the combinatorics on them.

A word is a plain ``str`` of color letters.  A sentence is a tuple of
non-empty words; a weak sentence is a tuple of words where ``""`` marks an
empty word.  The empty sentence is ``()``.  All functions here are pure and
every value is immutable, so results can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, Optional

Word = str
Sentence = tuple  # tuple[Word, ...]


class Alphabet:
    """An ordered set of single-letter lowercase colors.

    The position of a letter defines the total order used everywhere (it is
    not the ASCII order unless the letters happen to be sorted).
    """

    __slots__ = ("colors", "index")

    def __init__(self, colors: Iterable[str]):
        colors = tuple(colors)
        if not colors:
            raise ValueError("alphabet must be non-empty")
        for c in colors:
            if len(c) != 1 or not ("a" <= c <= "z"):
                raise ValueError(f"color {c!r} is not a lowercase ASCII letter")
        if len(set(colors)) != len(colors):
            raise ValueError(f"duplicate colors in alphabet {''.join(colors)!r}")
        self.colors = colors
        self.index = {c: i for i, c in enumerate(colors)}

    def __contains__(self, c: str) -> bool:
        return c in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.colors == other.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.colors)!r})"

    def word_key(self, w: Word) -> tuple:
        return tuple(self.index[c] for c in w)

    def check_word(self, w: Word, allow_empty: bool = False) -> Word:
        if not w and not allow_empty:
            raise ValueError("empty word not allowed here")
        for c in w:
            if c not in self.index:
                raise ValueError(f"letter {c!r} is not in alphabet {''.join(self.colors)!r}")
        return w

    def check_sentence(self, s: Sentence, weak: bool = False) -> Sentence:
        for w in s:
            self.check_word(w, allow_empty=weak)
        return s


# ---------------------------------------------------------------------------
# text format: words joined by ",", empty sentence "()", empty word "-"

def sentence_str(s: Sentence) -> str:
    if not s:
        return "()"
    return ",".join(w if w else "-" for w in s)


def parse_sentence(text: str, alphabet: Alphabet) -> Sentence:
    return _parse(text, alphabet, weak=False)


def parse_weak_sentence(text: str, alphabet: Alphabet) -> Sentence:
    return _parse(text, alphabet, weak=True)


def _parse(text: str, alphabet: Alphabet, weak: bool) -> Sentence:
    if text == "":
        raise ValueError("empty sentence text; use '()' for the empty sentence")
    if text == "()":
        return ()
    words = []
    for part in text.split(","):
        if part == "-":
            if not weak:
                raise ValueError("empty word '-' only allowed in weak sentences")
            words.append("")
            continue
        if part == "":
            raise ValueError(f"empty word in {text!r}")
        for c in part:
            if not ("a" <= c <= "z"):
                raise ValueError(f"invalid letter {c!r} in {text!r}")
            if c not in alphabet:
                raise ValueError(f"letter {c!r} not in alphabet {''.join(alphabet.colors)!r}")
        words.append(part)
    return tuple(words)


# ---------------------------------------------------------------------------
# basic statistics

def size(s: Sentence) -> int:
    return sum(len(w) for w in s)


def maximal_word(s: Sentence) -> Word:
    return "".join(s)


def word_lengths(s: Sentence) -> tuple:
    return tuple(len(w) for w in s)


def flatten(s: Sentence) -> Sentence:
    """Drop empty words from a weak sentence."""
    return tuple(w for w in s if w)


def split_positions(s: Sentence) -> frozenset:
    """Positions i in 1..size-1 after which the sentence splits."""
    out, acc = [], 0
    for w in s[:-1]:
        acc += len(w)
        out.append(acc)
    return frozenset(out)


def from_splits(word: Word, positions: Iterable[int]) -> Sentence:
    if not word:
        return ()
    cuts = [0] + sorted(positions) + [len(word)]
    return tuple(word[a:b] for a, b in zip(cuts, cuts[1:]))


# ---------------------------------------------------------------------------
# refinement order

def is_refinement(i: Sentence, j: Sentence) -> bool:
    """True iff j can be obtained by merging adjacent words of i."""
    return maximal_word(i) == maximal_word(j) and split_positions(j) <= split_positions(i)


def coarsenings(i: Sentence) -> list:
    """All sentences obtained by merging adjacent words of i, i included."""
    w = maximal_word(i)
    base = sorted(split_positions(i))
    out = []
    for r in range(len(base) + 1):
        for keep in itertools.combinations(base, r):
            out.append(from_splits(w, keep))
    out.sort(key=_wl_key)
    return out


def refinements(i: Sentence) -> list:
    """All sentences obtained by splitting words of i further, i included."""
    w = maximal_word(i)
    base = split_positions(i)
    free = [p for p in range(1, len(w)) if p not in base]
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            out.append(from_splits(w, base.union(extra)))
    out.sort(key=_wl_key)
    return out


def mobius(j: Sentence, i: Sentence) -> int:
    """Mobius function of the refinement order, (-1)^(l(j)-l(i)) for j <= i."""
    if not is_refinement(j, i):
        raise ValueError(
            f"{sentence_str(j)} is not a refinement of {sentence_str(i)}"
        )
    return -1 if (len(j) - len(i)) % 2 else 1


# ---------------------------------------------------------------------------
# involutions

def complement(i: Sentence) -> Sentence:
    """Same maximal word, splits exactly where i does not."""
    w = maximal_word(i)
    here = split_positions(i)
    return from_splits(w, [p for p in range(1, len(w)) if p not in here])


def reversal(i: Sentence) -> Sentence:
    return tuple(reversed(i))


def concat(i: Sentence, j: Sentence) -> Sentence:
    return i + j


def near_concat(i: Sentence, j: Sentence) -> Sentence:
    """Concatenation with the touching pair of words merged."""
    if not i:
        return j
    if not j:
        return i
    return i[:-1] + (i[-1] + j[0],) + j[1:]


# ---------------------------------------------------------------------------
# quasishuffle

def quasishuffle(i: Sentence, j: Sentence) -> Counter:
    """Multiset of shuffles of the word sequences of i and j, where any set of
    consecutive pairs (word of i immediately followed by word of j) may be
    concatenated."""
    out = Counter()

    def rec(a: int, b: int, prefix: tuple):
        if a == len(i) and b == len(j):
            out[prefix] += 1
            return
        if a < len(i):
            rec(a + 1, b, prefix + (i[a],))
            if b < len(j):
                rec(a + 1, b + 1, prefix + (i[a] + j[b],))
        if b < len(j):
            rec(a, b + 1, prefix + (j[b],))

    rec(0, 0, ())
    return out


# ---------------------------------------------------------------------------
# containment and quotients

def containment(j: Sentence, i: Sentence, side: str) -> Optional[Sentence]:
    """Left or right quotient of i by the weak sentence j, or None.

    j is padded with trailing empty words to the length of i; the quotient is
    returned unflattened (one word per row of i).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if len(j) > len(i):
        return None
    padded = j + ("",) * (len(i) - len(j))
    quotient = []
    for w, v in zip(i, padded):
        if side == "right":
            if not w.endswith(v):
                return None
            quotient.append(w[: len(w) - len(v)])
        else:
            if not w.startswith(v):
                return None
            quotient.append(w[len(v):])
    return tuple(quotient)


def suffix_removals(j: Sentence) -> Iterator[tuple]:
    """All (k, rest) with k a weak sentence of per-row suffixes of j and rest
    the weak quotient, so that row r of j is rest[r] + k[r]."""
    choices = [range(len(w) + 1) for w in j]
    for cut in itertools.product(*choices):
        k = tuple(w[len(w) - c:] for w, c in zip(j, cut))
        rest = tuple(w[: len(w) - c] for w, c in zip(j, cut))
        yield k, rest


# ---------------------------------------------------------------------------
# Pieri extensions

def pieri_extensions(j: Sentence, w: Word) -> list:
    """All sentences obtained by appending boxes to row ends of j (plus at
    most one new bottom row) so that the appended letters, read bottom row
    first, spell w.  A sentence appears once per distinct decomposition."""
    if not w:
        return [j]
    out = []
    h = len(j)
    for g in (h, h + 1):
        if g == 0:
            continue
        # split w left to right into parts q_g, q_{g-1}, ..., q_1 (may be empty)
        for parts in weak_splits(w, g):
            qs = tuple(reversed(parts))  # qs[r] extends row r+1
            if g == h + 1 and not qs[h]:
                continue
            rows = tuple((j[r] if r < h else "") + qs[r] for r in range(g))
            out.append(rows)
    return out


def weak_splits(word: Word, parts: int) -> Iterator[tuple]:
    """All ways to write word as a concatenation of `parts` possibly empty
    pieces, left to right."""
    n = len(word)
    for cuts in itertools.combinations_with_replacement(range(n + 1), parts - 1):
        cuts = (0,) + cuts + (n,)
        yield tuple(word[a:b] for a, b in zip(cuts, cuts[1:]))


# ---------------------------------------------------------------------------
# canonical order: grade by size, reverse-lex on word lengths, then the
# alphabet's lexicographic order on maximal words, then split sets

def _wl_key(s: Sentence) -> tuple:
    return (size(s), tuple(-len(w) for w in s))


def canonical_key(s: Sentence, alphabet: Alphabet):
    return (
        size(s),
        tuple(-len(w) for w in s),
        alphabet.word_key(maximal_word(s)),
        tuple(sorted(split_positions(s))),
    )


def canonical_compare(i: Sentence, j: Sentence, alphabet: Alphabet) -> int:
    """-1, 0 or 1; a strict total order, equality only for equal sentences."""
    ki, kj = canonical_key(i, alphabet), canonical_key(j, alphabet)
    return -1 if ki < kj else (1 if ki > kj else 0)


def sort_sentences(seq: Iterable[Sentence], alphabet: Alphabet) -> list:
    return sorted(seq, key=lambda s: canonical_key(s, alphabet))


# ---------------------------------------------------------------------------
# enumeration

def all_compositions(n: int) -> list:
    """Compositions of n, in canonical (reverse-lex) order."""
    if n == 0:
        return [()]
    out = []
    for r in range(n):
        for cuts in itertools.combinations(range(1, n), r):
            cuts = (0,) + cuts + (n,)
            out.append(tuple(b - a for a, b in zip(cuts, cuts[1:])))
    out.sort(key=lambda c: tuple(-p for p in c))
    return out


def all_words(alphabet: Alphabet, n: int) -> list:
    return ["".join(t) for t in itertools.product(alphabet.colors, repeat=n)]


def all_sentences(alphabet: Alphabet, n: int) -> list:
    """All sentences of size n over the alphabet, in canonical order."""
    if n == 0:
        return [()]
    out = []
    for word in itertools.product(alphabet.colors, repeat=n):
        word = "".join(word)
        for r in range(n):
            for cuts in itertools.combinations(range(1, n), r):
                out.append(from_splits(word, cuts))
    return sort_sentences(out, alphabet)


def sentence_count(alphabet: Alphabet, n: int) -> int:
    """|A|^n * 2^(n-1) for n >= 1; used for resource guards."""
    if n == 0:
        return 1
    return len(alphabet.colors) ** n * 2 ** (n - 1)
