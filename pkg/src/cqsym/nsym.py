"""The noncommutative side: H, E, R, IM (immaculate) and RSIM (row-strict
immaculate) bases, the right perp operator, creation operators, the right
Pieri rule, Hopf operations, psi, the duality pairing and uncoloring.

The immaculate function of a sentence (v_1, ..., v_h) is built by applying
the creation operator of v_1 to the immaculate function of (v_2, ..., v_h),
starting from the unit.  A creation operator acts on a single H term by
removing a suffix from each row (possibly empty), refining the removed
sentence, and gluing the reversed refinement onto the new first word with an
alternating sign.  This enumeration is finite term by term, unlike the
defining sum over all words.
"""

from __future__ import annotations

from functools import lru_cache

from . import descent_graph as dg
from . import qsym
from .exprs import Expr, TensorExpr, UncoloredExpr, side
from .sentences import (
    Alphabet,
    Sentence,
    Word,
    coarsenings,
    complement,
    concat,
    flatten,
    maximal_word,
    pieri_extensions,
    refinements,
    reversal,
    size,
    suffix_removals,
    word_lengths,
)
from .tableaux import IMMACULATE, ROW_STRICT, ell_columns, kostka_columns


def _require_side(e: Expr, which: str):
    if side(e.tag) != which:
        raise ValueError(f"expected a {which} expression, got tag {e.tag}")


# ---------------------------------------------------------------------------
# perp and creation operators

def mrperp(s: Sentence, e: Expr) -> Expr:
    """Right perp by the monomial function of s: from each H index remove,
    per row, a suffix, so that the removed rows read s in row order."""
    if e.tag != "H":
        raise ValueError("mrperp acts on H-tagged expressions")
    out = Expr("H", e.alphabet)
    for j, c in e.terms.items():
        for k, rest in suffix_removals(j):
            if flatten(k) == s:
                out.add_term(flatten(rest), c)
    return out


def bernstein(v: Word, e: Expr) -> Expr:
    """Colored creation operator indexed by the non-empty word v."""
    if not v:
        raise ValueError("creation operators are indexed by non-empty words")
    if e.tag != "H":
        raise ValueError("bernstein acts on H-tagged expressions")
    e.alphabet.check_word(v)
    out = Expr("H", e.alphabet)
    for j, c in e.terms.items():
        for s, coef in _bernstein_terms(v, j).items():
            out.add_term(s, c * coef)
    return out


@lru_cache(maxsize=None)
def _bernstein_terms(v: Word, j: Sentence) -> dict:
    out = {}
    for k, rest in suffix_removals(j):
        removed = flatten(k)
        remainder = flatten(rest)
        for q in refinements(removed):
            sign = -1 if len(q) % 2 else 1
            term = (v + maximal_word(reversal(q)),) + remainder
            new = out.get(term, 0) + sign
            if new:
                out[term] = new
            else:
                del out[term]
    return out


@lru_cache(maxsize=None)
def _imm_h_terms(j: Sentence) -> dict:
    """H expansion of the immaculate function of j, by creation operators."""
    if not j:
        return {(): 1}
    out = {}
    for tail, c in _imm_h_terms(j[1:]).items():
        for s, coef in _bernstein_terms(j[0], tail).items():
            new = out.get(s, 0) + c * coef
            if new:
                out[s] = new
            else:
                del out[s]
    return out


def immaculate_in_h(j: Sentence, alphabet: Alphabet) -> Expr:
    """The immaculate function of j as an H-tagged expression."""
    alphabet.check_sentence(j)
    return Expr("H", alphabet, dict(_imm_h_terms(j)))


def single_letter_immaculate_in_h(j: Sentence, alphabet: Alphabet) -> Expr:
    """Closed form when every word of j is a single letter: the signed sum of
    H over the coarsenings of j."""
    if any(len(w) != 1 for w in j):
        raise ValueError("closed form only applies to single-letter-word sentences")
    out = Expr("H", alphabet)
    k = len(j)
    for c in coarsenings(j):
        out.add_term(c, -1 if (k - len(c)) % 2 else 1)
    return out


# ---------------------------------------------------------------------------
# conversions

def convert(e: Expr, target: str) -> Expr:
    """Rewrite e in the target basis of NSym_A."""
    _require_side(e, "nsym")
    if side(target) != "nsym":
        raise ValueError(f"cannot convert NSym_A expression to {target} (wrong side)")
    if e.tag == target:
        return e
    route = _ROUTES.get((e.tag, target))
    if route is not None:
        return route(e)
    return convert(convert(e, "H"), target)


def _r_to_h(e: Expr) -> Expr:
    out = Expr("H", e.alphabet)
    for i, c in e.terms.items():
        li = len(i)
        for j in coarsenings(i):
            out.add_term(j, -c if (li - len(j)) % 2 else c)
    return out


def _h_to_r(e: Expr) -> Expr:
    out = Expr("R", e.alphabet)
    for i, c in e.terms.items():
        for j in coarsenings(i):
            out.add_term(j, c)
    return out


def _signed_refinement_sum(e: Expr, out_tag: str) -> Expr:
    # elementary <-> complete: same signs both ways; the matrix squares to
    # the identity, which the test suite asserts per degree
    out = Expr(out_tag, e.alphabet)
    for i, c in e.terms.items():
        n = size(i)
        for j in refinements(i):
            out.add_term(j, -c if (n - len(j)) % 2 else c)
    return out


def _e_to_h(e: Expr) -> Expr:
    return _signed_refinement_sum(e, "H")


def _h_to_e(e: Expr) -> Expr:
    return _signed_refinement_sum(e, "E")


def _column_route(columns_fn, variant, out_tag):
    def route(e: Expr) -> Expr:
        out = Expr(out_tag, e.alphabet)
        for c_index, c in e.terms.items():
            if not c_index:
                out.add_term((), c)
                continue
            col = columns_fn(e.alphabet, size(c_index), variant).get(c_index, {})
            for j, count in col.items():
                out.add_term(j, c * count)
        return out

    return route


_h_to_im = _column_route(kostka_columns, IMMACULATE, "IM")
_e_to_rsim = _column_route(kostka_columns, IMMACULATE, "RSIM")
_h_to_rsim = _column_route(kostka_columns, ROW_STRICT, "RSIM")
_e_to_im = _column_route(kostka_columns, ROW_STRICT, "IM")
_r_to_im = _column_route(ell_columns, IMMACULATE, "IM")
_r_to_rsim = _column_route(ell_columns, ROW_STRICT, "RSIM")


def _im_to_h(e: Expr) -> Expr:
    out = Expr("H", e.alphabet)
    for j, c in e.terms.items():
        if j and all(len(w) == 1 for w in j):
            part = single_letter_immaculate_in_h(j, e.alphabet)
        else:
            part = immaculate_in_h(j, e.alphabet)
        for s, coef in part.terms.items():
            out.add_term(s, c * coef)
    return out


def _rsim_to_h(e: Expr) -> Expr:
    # psi swaps H and E and sends IM to RSIM, so the row-strict immaculate
    # of j is the immaculate H expansion of j with H relabelled E
    swapped = Expr("E", e.alphabet)
    for j, c in e.terms.items():
        for s, coef in _imm_h_terms(j).items():
            swapped.add_term(s, c * coef)
    return _e_to_h(swapped)


def _im_to_r(e: Expr) -> Expr:
    out = Expr("R", e.alphabet)
    for j, c in e.terms.items():
        if not j:
            out.add_term((), c)
            continue
        g = dg.cached_graph(e.alphabet, size(j))
        for i, coef in dg.inverse_column(g, j).items():
            out.add_term(i, c * coef)
    return out


def _rsim_to_r(e: Expr) -> Expr:
    out = Expr("R", e.alphabet)
    for j, c in e.terms.items():
        if not j:
            out.add_term((), c)
            continue
        g = dg.cached_graph(e.alphabet, size(j))
        for i, coef in dg.inverse_column(g, j).items():
            out.add_term(complement(i), c * coef)
    return out


_ROUTES = {
    ("R", "H"): _r_to_h,
    ("H", "R"): _h_to_r,
    ("E", "H"): _e_to_h,
    ("H", "E"): _h_to_e,
    ("H", "IM"): _h_to_im,
    ("E", "IM"): _e_to_im,
    ("R", "IM"): _r_to_im,
    ("H", "RSIM"): _h_to_rsim,
    ("E", "RSIM"): _e_to_rsim,
    ("R", "RSIM"): _r_to_rsim,
    ("IM", "H"): _im_to_h,
    ("RSIM", "H"): _rsim_to_h,
    ("IM", "R"): _im_to_r,
    ("RSIM", "R"): _rsim_to_r,
}


# ---------------------------------------------------------------------------
# Hopf operations on the H basis

def product(e1: Expr, e2: Expr, target: str = None) -> Expr:
    """Multiply in NSym_A: concatenation on the H basis; the result comes
    back in the basis of the first factor unless a target tag is given."""
    _require_side(e1, "nsym")
    _require_side(e2, "nsym")
    if e1.alphabet != e2.alphabet:
        raise ValueError("mixed alphabets")
    h1, h2 = convert(e1, "H"), convert(e2, "H")
    out = Expr("H", e1.alphabet)
    for i, c1 in h1.terms.items():
        for j, c2 in h2.terms.items():
            out.add_term(concat(i, j), c1 * c2)
    return convert(out, target if target is not None else e1.tag)


def coproduct_h(e: Expr) -> TensorExpr:
    """Deconcatenation dual: sum over per-row suffix removals."""
    if e.tag != "H":
        raise ValueError("coproduct_h expects an H-tagged expression")
    out = TensorExpr(("H", "H"), e.alphabet)
    for i, c in e.terms.items():
        for k, rest in suffix_removals(i):
            out.add_term((flatten(rest), flatten(k)), c)
    return out


def antipode_h(e: Expr) -> Expr:
    """S(H_I) = sum over refinements J of the reversal of I of (-1)^l(J) H_J."""
    if e.tag != "H":
        raise ValueError("antipode_h expects an H-tagged expression")
    out = Expr("H", e.alphabet)
    for i, c in e.terms.items():
        for j in refinements(reversal(i)):
            out.add_term(j, -c if len(j) % 2 else c)
    return out


_PSI_TAG = {"H": "E", "E": "H", "R": "R", "IM": "RSIM", "RSIM": "IM"}


def psi(e: Expr) -> Expr:
    """The involution complementing R indices; swaps H with E and the
    immaculate with the row-strict immaculate basis."""
    _require_side(e, "nsym")
    r = convert(e, "R")
    out = Expr("R", e.alphabet)
    for i, c in r.terms.items():
        out.add_term(complement(i), c)
    return convert(out, _PSI_TAG[e.tag])


# ---------------------------------------------------------------------------
# Pieri rule, pairing, uncoloring

def pieri(j: Sentence, w: Word, alphabet: Alphabet) -> Expr:
    """Right multiplication of the immaculate function of j by H of the word
    w, as an IM-tagged sum with decomposition multiplicities."""
    alphabet.check_sentence(j)
    alphabet.check_word(w, allow_empty=True)
    out = Expr("IM", alphabet)
    for k in pieri_extensions(j, w):
        out.add_term(k, 1)
    return out


def pair(n: Expr, q: Expr):
    """Duality pairing of NSym_A with QSym_A: <H_I, M_J> = delta."""
    _require_side(n, "nsym")
    qsym._require_side(q, "qsym")
    if n.alphabet != q.alphabet:
        raise ValueError("mixed alphabets")
    h = convert(n, "H")
    m = qsym.convert(q, "M")
    small, large = (h.terms, m.terms) if len(h.terms) <= len(m.terms) else (m.terms, h.terms)
    total = 0
    for s, c in small.items():
        other = large.get(s)
        if other:
            total += c * other
    return total


def uncolor(e: Expr) -> UncoloredExpr:
    """Replace each index by its word lengths and merge coefficients."""
    _require_side(e, "nsym")
    out = UncoloredExpr(e.tag)
    for i, c in e.terms.items():
        out.add_term(word_lengths(i), c)
    return out
