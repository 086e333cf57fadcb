"""The poset of colored diagrams, skew tableaux, skew dual immaculate
functions, immaculate structure constants, and the coproducts of the dual
immaculate and row-strict dual immaculate bases.

Sentences are ordered by adding one colored box at a time, either to the
right end of an existing row or as a new bottom row.  Saturated chains from
the empty sentence are exactly the standard tableaux; chains from a non-empty
sentence J are the standard skew tableaux of shape I/J.  The poset itself is
infinite and never materialized beyond the requested intervals.
"""

from __future__ import annotations

from collections import namedtuple

from . import nsym, qsym
from .exprs import Expr, TensorExpr
from .sentences import (
    Alphabet,
    Sentence,
    all_sentences,
    containment,
    sentence_str,
    size,
    word_lengths,
)
from .tableaux import IMMACULATE, _check_variant

CoverEdge = namedtuple("CoverEdge", ["lower", "upper", "row", "color"])


def covers(j: Sentence, alphabet: Alphabet) -> list:
    """The (l(j)+1) * |A| cover edges above j: append one box of each color
    to each row end or as a new bottom row.  Rows are 1-based."""
    out = []
    for row in range(1, len(j) + 2):
        for color in alphabet.colors:
            if row <= len(j):
                upper = j[: row - 1] + (j[row - 1] + color,) + j[row:]
            else:
                upper = j + (color,)
            out.append(CoverEdge(j, upper, row, color))
    return out


def left_contained(j: Sentence, i: Sentence) -> bool:
    return containment(j, i, "left") is not None


def inner_sentences(i: Sentence) -> list:
    """All sentences left-contained in i: each takes a non-empty prefix of
    every one of the first h rows, for h = 0 .. l(i)."""
    out = [()]
    layer = [()]
    for w in i:
        layer = [base + (w[:cut],) for base in layer for cut in range(1, len(w) + 1)]
        out.extend(layer)
    return out


def chains(j: Sentence, i: Sentence) -> list:
    """All saturated chains from j to i in the poset, as lists of cover
    edges.  Chains stay inside the interval: every step extends a row of j
    toward the corresponding row of i or opens the next row of i."""
    if not left_contained(j, i):
        raise ValueError(
            f"{sentence_str(j)} is not left-contained in {sentence_str(i)}"
        )
    total = size(i) - size(j)
    out = []
    chain = []

    def rec(current: Sentence):
        if len(chain) == total:
            out.append(list(chain))
            return
        k = len(current)
        for row in range(1, k + 2):
            if row <= k:
                have = len(current[row - 1])
                if have >= len(i[row - 1]):
                    continue
                color = i[row - 1][have]
                upper = current[: row - 1] + (current[row - 1] + color,) + current[row:]
            else:
                if k >= len(i):
                    continue
                color = i[k][0]
                upper = current + (color,)
            chain.append(CoverEdge(current, upper, row, color))
            rec(upper)
            chain.pop()

    rec(j)
    return out


class SkewTableau:
    """A filling of the active boxes of a skew colored shape.  rows[i][j] is
    None on the inactive prefix (the first |inner_i| boxes of row i)."""

    __slots__ = ("outer", "inner", "rows", "variant")

    def __init__(self, outer: Sentence, inner: Sentence, rows, variant: str = IMMACULATE):
        if not left_contained(inner, outer):
            raise ValueError(
                f"{sentence_str(inner)} is not left-contained in {sentence_str(outer)}"
            )
        self.outer = tuple(outer)
        self.inner = tuple(inner)
        self.rows = tuple(tuple(r) for r in rows)
        self.variant = _check_variant(variant)
        if word_lengths(self.outer) != tuple(len(r) for r in self.rows):
            raise ValueError("filling does not match the outer shape")
        for idx, r in enumerate(self.rows):
            inactive = len(self.inner[idx]) if idx < len(self.inner) else 0
            if any(v is not None for v in r[:inactive]) or any(
                v is None for v in r[inactive:]
            ):
                raise ValueError("inactive boxes are exactly the inner prefix")

    def __eq__(self, other):
        return (
            isinstance(other, SkewTableau)
            and (self.outer, self.inner, self.rows, self.variant)
            == (other.outer, other.inner, other.rows, other.variant)
        )

    def __hash__(self):
        return hash((self.outer, self.inner, self.rows, self.variant))

    def __repr__(self):
        return (
            f"<SkewTableau {sentence_str(self.outer)}/{sentence_str(self.inner)} "
            f"{self.rows} {self.variant}>"
        )

    def boxes_of_value(self, v: int) -> list:
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
        top = max((v for r in self.rows for v in r if v is not None), default=0)
        words = []
        for v in range(1, top + 1):
            words.append("".join(self.outer[i][j] for i, j in self.boxes_of_value(v)))
        while words and not words[-1]:
            words.pop()
        return tuple(words)

    def is_standard(self) -> bool:
        values = [v for r in self.rows for v in r if v is not None]
        return sorted(values) == list(range(1, len(values) + 1))

    def render_block(self) -> str:
        lines = []
        for i, row in enumerate(self.rows):
            cells = []
            for j, v in enumerate(row):
                cells.append(f"{self.outer[i][j]},{'-' if v is None else v}")
            lines.append("|".join(cells))
        return "\n".join(lines)


def chain_to_tableau(chain: list, outer: Sentence = None, inner: Sentence = None) -> SkewTableau:
    """Number the boxes added along a saturated chain 1, 2, ... in order.
    With an empty inner sentence the result is a standard straight tableau."""
    if chain:
        inner = chain[0].lower if inner is None else inner
        outer = chain[-1].upper if outer is None else outer
    if outer is None or inner is None:
        raise ValueError("an empty chain needs explicit outer and inner shapes")
    grid = []
    for idx, w in enumerate(outer):
        inactive = len(inner[idx]) if idx < len(inner) else 0
        grid.append([None] * len(w))
        for j in range(inactive, len(w)):
            grid[idx][j] = 0
    fill = [len(inner[idx]) if idx < len(inner) else 0 for idx in range(len(outer))]
    for t, edge in enumerate(chain, start=1):
        r = edge.row - 1
        grid[r][fill[r]] = t
        fill[r] += 1
    return SkewTableau(outer, inner, grid, IMMACULATE)


# ---------------------------------------------------------------------------
# skew tableau enumeration

def enumerate_skew_tableaux(outer: Sentence, inner: Sentence, variant: str = IMMACULATE) -> list:
    """All skew tableaux of shape outer/inner whose values form 1..g for some
    g (every value used at least once)."""
    _check_variant(variant)
    if not left_contained(inner, outer):
        raise ValueError(
            f"{sentence_str(inner)} is not left-contained in {sentence_str(outer)}"
        )
    k = len(outer)
    offsets = [len(inner[i]) if i < len(inner) else 0 for i in range(k)]
    total = size(outer) - size(inner)
    filled = list(offsets)
    grid = [
        [None if j < offsets[i] else 0 for j in range(len(outer[i]))] for i in range(k)
    ]
    first_col_rows = [i for i in range(k) if offsets[i] == 0 and len(outer[i]) > 0]
    results = []

    def placements_imm():
        # count per row; at most one first-column row may open, in order
        opened = sum(1 for i in first_col_rows if filled[i] > 0)
        out = []

        def rec(ridx, counts, started):
            if ridx < 0:
                if any(counts):
                    out.append(list(reversed(counts)))
                return
            cap = len(outer[ridx]) - filled[ridx]
            for c in range(cap + 1):
                if c > 0 and ridx in first_col_rows and filled[ridx] == offsets[ridx]:
                    if started or first_col_rows.index(ridx) != opened:
                        continue
                    counts.append(c)
                    rec(ridx - 1, counts, True)
                    counts.pop()
                    continue
                counts.append(c)
                rec(ridx - 1, counts, started)
                counts.pop()

        rec(k - 1, [], False)
        return out

    def placements_rs():
        opened = sum(1 for i in first_col_rows if filled[i] > 0)
        out = []

        def rec(ridx, used, next_open):
            if ridx == k:
                if used:
                    out.append(list(used))
                return
            rec(ridx + 1, used, next_open)
            if filled[ridx] >= len(outer[ridx]):
                return
            new_open = next_open
            if ridx in first_col_rows and filled[ridx] == offsets[ridx]:
                if first_col_rows.index(ridx) != next_open:
                    return
                new_open = next_open + 1
            used.append(ridx)
            rec(ridx + 1, used, new_open)
            used.pop()

        rec(0, [], opened)
        return out

    def place(v, remaining):
        if remaining == 0:
            results.append(
                SkewTableau(outer, inner, [row[:] for row in grid], variant)
            )
            return
        if variant == IMMACULATE:
            for counts in placements_imm():
                if sum(counts) > remaining:
                    continue
                for r, c in enumerate(counts):
                    for t in range(c):
                        grid[r][filled[r] + t] = v
                    filled[r] += c
                place(v + 1, remaining - sum(counts))
                for r, c in enumerate(counts):
                    filled[r] -= c
                    for t in range(c):
                        grid[r][filled[r] + t] = 0
        else:
            for rows_used in placements_rs():
                if len(rows_used) > remaining:
                    continue
                for r in rows_used:
                    grid[r][filled[r]] = v
                    filled[r] += 1
                place(v + 1, remaining - len(rows_used))
                for r in rows_used:
                    filled[r] -= 1
                    grid[r][filled[r]] = 0

    if total == 0:
        return [SkewTableau(outer, inner, grid, variant)]
    place(1, total)
    return results


# ---------------------------------------------------------------------------
# skew expansions, structure constants, coproduct

def _imm_expr(j: Sentence, alphabet: Alphabet, variant: str) -> Expr:
    """The (row-strict) immaculate function of j in the H basis."""
    if variant == IMMACULATE:
        return nsym.convert(Expr.basis("IM", j, alphabet), "H")
    return nsym.convert(Expr.basis("RSIM", j, alphabet), "H")


def skew_expand(i: Sentence, j: Sentence, target: str, alphabet: Alphabet, variant: str = IMMACULATE) -> Expr:
    """The skew (row-strict) dual immaculate function of shape i/j in the M,
    F, DI or RSDI basis.  M coefficients count skew tableaux by type; F and
    dual-immaculate coefficients come from the duality pairing."""
    _check_variant(variant)
    if not left_contained(j, i):
        raise ValueError(
            f"{sentence_str(j)} is not left-contained in {sentence_str(i)}"
        )
    dual_tag = "DI" if variant == IMMACULATE else "RSDI"
    if target not in ("M", "F", dual_tag):
        raise ValueError(
            f"skew target must be M, F or {dual_tag} for the {variant} variant"
        )
    m = size(i) - size(j)
    if target == "M":
        out = Expr("M", alphabet)
        for t in enumerate_skew_tableaux(i, j, variant):
            out.add_term(t.type_(), 1)
        return out
    # pairing routes: sum over K of <S_J X_K, S*_I> for X = R or the
    # immaculate family itself, all restricted to |K| = |I| - |J|
    s_j = _imm_expr(j, alphabet, variant)
    dual_m = qsym.convert(Expr.basis(dual_tag, i, alphabet), "M").terms
    out = Expr(target, alphabet)
    for k in all_sentences(alphabet, m):
        if target == "F":
            right = nsym.convert(Expr.basis("R", k, alphabet), "H")
        else:
            right = _imm_expr(k, alphabet, variant)
        coef = 0
        for p, cp in s_j.terms.items():
            for q, cq in right.terms.items():
                c = dual_m.get(p + q)
                if c:
                    coef += cp * cq * c
        out.add_term(k, coef)
    return out


def structure_constants(j: Sentence, k: Sentence, alphabet: Alphabet) -> dict:
    """Coefficients of the immaculate expansion of the product of the
    immaculate functions of j and k, computed through the H basis."""
    prod = nsym.product(
        nsym.convert(Expr.basis("IM", j, alphabet), "H"),
        nsym.convert(Expr.basis("IM", k, alphabet), "H"),
        target="IM",
    )
    return dict(prod.terms)


def coproduct_di(i: Sentence, alphabet: Alphabet, variant: str = IMMACULATE) -> TensorExpr:
    """Coproduct of a (row-strict) dual immaculate basis element: the sum
    over inner shapes j of (dual of j) tensor (skew expansion of i/j)."""
    _check_variant(variant)
    tag = "DI" if variant == IMMACULATE else "RSDI"
    out = TensorExpr((tag, tag), alphabet)
    for j in inner_sentences(i):
        skew = skew_expand(i, j, tag, alphabet, variant)
        for k, c in skew.terms.items():
            out.add_term((j, k), c)
    return out
