"""Colored immaculate and row-strict immaculate tableaux.

A tableau of shape J fills the colored diagram of J (row i carries the
letters of word i) with positive integers.  The two variants differ in where
strictness lives:

* immaculate: rows weakly increase left to right, first column strictly
  increases top to bottom; the type reads the boxes of each value left to
  right, bottom row first.
* row-strict: rows strictly increase, first column weakly increases; the
  type reads left to right, top row first.

Standard tableaux (each of 1..n once) have the same integer fillings in both
variants, but different descent data: value t is an immaculate descent when
t+1 sits in a strictly lower row, and a row-strict descent when t+1 sits in a
weakly higher row.  The colored descent composition splits the reading word
(colors in value order) after each descent.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .sentences import (
    Alphabet,
    Sentence,
    all_sentences,
    flatten,
    refinements,
    sentence_str,
    size,
    word_lengths,
)

IMMACULATE = "immaculate"
ROW_STRICT = "row-strict"
VARIANTS = (IMMACULATE, ROW_STRICT)


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


class Tableau:
    """A filled colored diagram.  rows[i][j] is the entry of box (i, j)."""

    __slots__ = ("shape", "rows", "variant")

    def __init__(self, shape: Sentence, rows, variant: str = IMMACULATE):
        self.shape = tuple(shape)
        self.rows = tuple(tuple(r) for r in rows)
        self.variant = _check_variant(variant)
        if word_lengths(self.shape) != tuple(len(r) for r in self.rows):
            raise ValueError("filling does not match the shape")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self.rows == other.rows
            and self.variant == other.variant
        )

    def __hash__(self):
        return hash((self.shape, self.rows, self.variant))

    def __repr__(self):
        return f"<Tableau {sentence_str(self.shape)} {self.rows} {self.variant}>"

    def size(self) -> int:
        return size(self.shape)

    def is_valid(self) -> bool:
        strict_rows = self.variant == ROW_STRICT
        for r in self.rows:
            for a, b in zip(r, r[1:]):
                if (b <= a) if strict_rows else (b < a):
                    return False
        first = [r[0] for r in self.rows if r]
        for a, b in zip(first, first[1:]):
            if (b <= a) if not strict_rows else (b < a):
                return False
        return all(v >= 1 for r in self.rows for v in r)

    def is_standard(self) -> bool:
        values = [v for r in self.rows for v in r]
        return sorted(values) == list(range(1, len(values) + 1))

    def boxes_of_value(self, v: int) -> list:
        """(row, col) boxes holding v, in the variant's type-reading order."""
        out = [
            (i, j)
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
            if x == v
        ]
        if self.variant == IMMACULATE:
            out.sort(key=lambda rc: (-rc[0], rc[1]))
        else:
            out.sort(key=lambda rc: (rc[0], rc[1]))
        return out

    def type_(self) -> Sentence:
        """Weak sentence of color words per value, trailing empties trimmed."""
        top = max((v for r in self.rows for v in r), default=0)
        words = []
        for v in range(1, top + 1):
            words.append("".join(self.shape[i][j] for i, j in self.boxes_of_value(v)))
        while words and not words[-1]:
            words.pop()
        return tuple(words)

    def flat_type(self) -> Sentence:
        return flatten(self.type_())

    def standardize(self) -> "Tableau":
        """Renumber the boxes 1..n in the order they appear in the type."""
        top = max((v for r in self.rows for v in r), default=0)
        order = []
        for v in range(1, top + 1):
            order.extend(self.boxes_of_value(v))
        relabel = {box: t + 1 for t, box in enumerate(order)}
        rows = tuple(
            tuple(relabel[(i, j)] for j in range(len(r))) for i, r in enumerate(self.rows)
        )
        return Tableau(self.shape, rows, self.variant)

    # standard-only statistics -----------------------------------------

    def _positions(self) -> dict:
        return {
            v: (i, j)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
        }

    def descent_set(self) -> set:
        if not self.is_standard():
            raise ValueError("descents are only defined for standard tableaux")
        pos = self._positions()
        n = self.size()
        out = set()
        for t in range(1, n):
            here, nxt = pos[t][0], pos[t + 1][0]
            if self.variant == IMMACULATE:
                if nxt > here:
                    out.add(t)
            else:
                if nxt <= here:
                    out.add(t)
        return out

    def reading_word(self) -> str:
        pos = self._positions()
        return "".join(self.shape[pos[t][0]][pos[t][1]] for t in range(1, self.size() + 1))

    def descent_composition(self) -> Sentence:
        """Split the reading word after each descent of the variant."""
        word = self.reading_word()
        des = sorted(self.descent_set())
        cuts = [0] + des + [len(word)]
        return tuple(word[a:b] for a, b in zip(cuts, cuts[1:]))

    def with_variant(self, variant: str) -> "Tableau":
        return Tableau(self.shape, self.rows, variant)

    def render_block(self) -> str:
        """CLI block: rows of "color,entry" cells separated by '|'."""
        lines = []
        for i, row in enumerate(self.rows):
            lines.append("|".join(f"{self.shape[i][j]},{v}" for j, v in enumerate(row)))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# standard enumeration
#
# A standard filling is determined by the sequence of rows receiving the
# values 1, 2, ..., n: rows fill left to right, and the first-column rule
# says exactly that row i+1 must not open before row i.

def _row_sequences(lengths: tuple):
    k = len(lengths)
    n = sum(lengths)
    seq = []
    remaining = list(lengths)

    def rec(opened: int):
        if len(seq) == n:
            yield tuple(seq)
            return
        limit = min(opened + 1, k)
        for r in range(limit):
            if remaining[r] == 0:
                continue
            remaining[r] -= 1
            seq.append(r)
            yield from rec(max(opened, r + 1))
            seq.pop()
            remaining[r] += 1

    yield from rec(0)


def _tableau_from_row_sequence(shape: Sentence, seq: tuple, variant: str) -> Tableau:
    rows = [[] for _ in shape]
    for t, r in enumerate(seq, start=1):
        rows[r].append(t)
    return Tableau(shape, rows, variant)


def enumerate_standard(shape: Sentence, variant: str = IMMACULATE) -> list:
    """All standard tableaux of the shape.  The integer fillings coincide for
    the two variants; only the recorded variant (hence descent data) differs."""
    _check_variant(variant)
    return [
        _tableau_from_row_sequence(shape, seq, variant)
        for seq in _row_sequences(word_lengths(shape))
    ]


def _descent_compositions_of_shape(shape: Sentence):
    """Yield (immaculate co, row-strict co) for every standard filling."""
    lengths = word_lengths(shape)
    for seq in _row_sequences(lengths):
        cols = []
        seen = [0] * len(shape)
        for r in seq:
            cols.append(seen[r])
            seen[r] += 1
        word = "".join(shape[r][c] for r, c in zip(seq, cols))
        des = [t for t in range(1, len(seq)) if seq[t] > seq[t - 1]]
        cuts = [0] + des + [len(word)]
        co = tuple(word[a:b] for a, b in zip(cuts, cuts[1:]))
        des_rs = [t for t in range(1, len(seq)) if seq[t] <= seq[t - 1]]
        cuts = [0] + des_rs + [len(word)]
        co_rs = tuple(word[a:b] for a, b in zip(cuts, cuts[1:]))
        yield co, co_rs


# ---------------------------------------------------------------------------
# general enumeration by shape and (weak) type

def enumerate_tableaux(shape: Sentence, type_: Sentence, variant: str = IMMACULATE) -> list:
    """All tableaux of the given shape whose type equals the given weak
    sentence, in a deterministic order."""
    _check_variant(variant)
    if size(shape) != sum(len(w) for w in type_):
        return []
    k = len(shape)
    filled = [0] * k  # boxes already used at the start of each row
    grid = [[0] * len(w) for w in shape]
    results = []

    def place_value(v: int):
        if v > len(type_):
            if all(filled[r] == len(shape[r]) for r in range(k)):
                results.append(Tableau(shape, [row[:] for row in grid], variant))
            return
        word = type_[v - 1]
        if variant == IMMACULATE:
            for counts in _immaculate_placements(word, filled):
                _apply(counts, v)
                place_value(v + 1)
                _unapply(counts, v)
        else:
            for rows_used in _row_strict_placements(word, filled):
                counts = [1 if r in rows_used else 0 for r in range(k)]
                _apply(counts, v)
                place_value(v + 1)
                _unapply(counts, v)

    def _apply(counts, v):
        for r, c in enumerate(counts):
            for t in range(c):
                grid[r][filled[r] + t] = v
            filled[r] += c

    def _unapply(counts, v):
        for r, c in enumerate(counts):
            filled[r] -= c

    def _immaculate_placements(word, filled_now):
        """Count vectors per row whose boxes, read bottom row first, spell the
        word.  At most one row may open (strict first column), and only below
        every already-open row."""
        opened = sum(1 for f in filled_now if f > 0)
        out = []

        def rec(r, pos, counts, started):
            # r runs bottom row to top; the bottom row reads first, so pos
            # consumes the word from its left end
            if r < 0:
                if pos == len(word):
                    out.append(list(reversed(counts)))
                return
            cap = len(shape[r]) - filled_now[r]
            for c in range(0, min(cap, len(word) - pos) + 1):
                if c > 0:
                    piece = word[pos : pos + c]
                    if filled_now[r] == 0:
                        if started or r != opened:
                            continue  # only the next unopened row may start
                        if shape[r][:c] != piece:
                            continue
                        counts.append(c)
                        rec(r - 1, pos + c, counts, True)
                        counts.pop()
                        continue
                    if shape[r][filled_now[r] : filled_now[r] + c] != piece:
                        continue
                counts.append(c)
                rec(r - 1, pos + c, counts, started)
                counts.pop()

        rec(k - 1, 0, [], False)
        return out

    def _row_strict_placements(word, filled_now):
        """Row subsets (one box each) whose colors, read top row first, spell
        the word.  Opening rows must extend the open prefix contiguously
        (weak first column)."""
        opened = sum(1 for f in filled_now if f > 0)
        out = []

        def rec(r, pos, used, next_open):
            if r == k:
                if pos == len(word):
                    out.append(list(used))
                return
            # skip row r
            rec(r + 1, pos, used, next_open)
            if pos == len(word):
                return
            if filled_now[r] >= len(shape[r]):
                return
            if filled_now[r] == 0:
                if r != next_open:
                    return
                new_open = next_open + 1
            else:
                new_open = next_open
            if shape[r][filled_now[r]] != word[pos]:
                return
            used.append(r)
            rec(r + 1, pos + 1, used, new_open)
            used.pop()

        rec(0, 0, [], opened)
        return out

    place_value(1)
    return results


def kostka(shape: Sentence, type_: Sentence, variant: str = IMMACULATE) -> int:
    """Number of tableaux of the shape with the given (weak) type."""
    return len(enumerate_tableaux(shape, type_, variant))


def ell_coeff(shape: Sentence, comp: Sentence, variant: str = IMMACULATE) -> int:
    """Number of standard tableaux of the shape whose colored descent
    composition (of the variant) equals comp."""
    _check_variant(variant)
    index = 0 if variant == IMMACULATE else 1
    return sum(1 for pair in _descent_compositions_of_shape(shape) if pair[index] == comp)


# ---------------------------------------------------------------------------
# per-degree transition tables, cached
#
# standard_data(alphabet, n)[shape] is a pair of Counters over descent
# compositions: index 0 immaculate, index 1 row-strict.  The Kostka rows are
# accumulated from them: K[J][B] counts standard fillings whose descent
# composition coarsens B.

@lru_cache(maxsize=None)
def standard_data(alphabet: Alphabet, n: int) -> dict:
    out = {}
    for shape in all_sentences(alphabet, n):
        imm = Counter()
        rs = Counter()
        for co, co_rs in _descent_compositions_of_shape(shape):
            imm[co] += 1
            rs[co_rs] += 1
        out[shape] = (imm, rs)
    return out


def ell_table(alphabet: Alphabet, n: int, variant: str = IMMACULATE) -> dict:
    """L rows: ell_table[J][C] = number of standard tableaux of shape J with
    descent composition C (diagonal included for the immaculate variant)."""
    _check_variant(variant)
    index = 0 if variant == IMMACULATE else 1
    return {shape: pair[index] for shape, pair in standard_data(alphabet, n).items()}


@lru_cache(maxsize=None)
def kostka_table(alphabet: Alphabet, n: int, variant: str = IMMACULATE) -> dict:
    _check_variant(variant)
    index = 0 if variant == IMMACULATE else 1
    out = {}
    for shape, pair in standard_data(alphabet, n).items():
        row = Counter()
        for co, mult in pair[index].items():
            for b in refinements(co):
                row[b] += mult
        out[shape] = row
    return out


@lru_cache(maxsize=None)
def kostka_columns(alphabet: Alphabet, n: int, variant: str = IMMACULATE) -> dict:
    cols = {}
    for shape, row in kostka_table(alphabet, n, variant).items():
        for b, count in row.items():
            cols.setdefault(b, {})[shape] = count
    return cols


@lru_cache(maxsize=None)
def ell_columns(alphabet: Alphabet, n: int, variant: str = IMMACULATE) -> dict:
    _check_variant(variant)
    index = 0 if variant == IMMACULATE else 1
    cols = {}
    for shape, pair in standard_data(alphabet, n).items():
        for co, mult in pair[index].items():
            cols.setdefault(co, {})[shape] = mult
    return cols
