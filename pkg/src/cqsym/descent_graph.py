"""Descent graphs on sentences of a fixed size.

Vertices are all sentences of size n; there is an edge I -> J (J != I)
weighted by the number of standard tableaux of shape I whose colored descent
composition is J.  For the immaculate variant every edge strictly decreases
the word-length composition in lexicographic order, so the graph is acyclic
and signed path sums invert the L matrix.  The row-strict variant is NOT
acyclic in general (already at n = 2 the shapes (aa) and (a,a) form a
2-cycle), so inverse coefficients for it are obtained through the complement
involution on the immaculate graph; see the qsym/nsym conversion routes.
"""

from __future__ import annotations

import csv
import io
from functools import lru_cache

from .sentences import Alphabet, Sentence, sentence_count, sentence_str, sort_sentences, word_lengths
from .tableaux import IMMACULATE, _check_variant, ell_table

DEFAULT_VERTEX_CAP = 10**6


class DescentGraph:
    __slots__ = (
        "degree",
        "alphabet",
        "variant",
        "vertices",
        "edges",
        "is_acyclic",
        "_inverse_memo",
        "_rev",
    )

    def __init__(self, degree, alphabet, variant, vertices, edges, is_acyclic):
        self.degree = degree
        self.alphabet = alphabet
        self.variant = variant
        self.vertices = vertices
        self.edges = edges  # vertex -> {target: weight}, no self-loops
        self.is_acyclic = is_acyclic
        self._inverse_memo = {}
        self._rev = None

    def out_edges(self, i: Sentence) -> dict:
        return self.edges.get(i, {})

    def in_neighbors(self, j: Sentence) -> list:
        if self._rev is None:
            rev = {}
            for v, targets in self.edges.items():
                for t in targets:
                    rev.setdefault(t, []).append(v)
            self._rev = rev
        return self._rev.get(j, [])

    def __repr__(self):
        return f"<DescentGraph n={self.degree} {self.variant} |V|={len(self.vertices)}>"


def build(n: int, alphabet: Alphabet, variant: str = IMMACULATE, cap: int = DEFAULT_VERTEX_CAP) -> DescentGraph:
    """Build the degree-n descent graph.  Aborts when the vertex count would
    exceed the cap, and (immaculate variant) when an edge fails the
    lexicographic-descent certificate that guarantees acyclicity."""
    _check_variant(variant)
    if n < 1:
        raise ValueError("degree must be >= 1")
    count = sentence_count(alphabet, n)
    if count > cap:
        raise ValueError(
            f"descent graph at degree {n} over {''.join(alphabet.colors)} has "
            f"{count} vertices, above the cap {cap}"
        )
    rows = ell_table(alphabet, n, variant)
    vertices = sort_sentences(rows.keys(), alphabet)
    edges = {}
    acyclic = True
    for i, counter in rows.items():
        out = {j: w for j, w in counter.items() if j != i}
        if out:
            edges[i] = out
        for j in out:
            if not word_lengths(j) < word_lengths(i):
                acyclic = False
                if variant == IMMACULATE:
                    raise ValueError(
                        "descent graph cycle certificate failed on edge "
                        f"{sentence_str(i)} -> {sentence_str(j)}"
                    )
    return DescentGraph(n, alphabet, variant, vertices, edges, acyclic)


@lru_cache(maxsize=None)
def cached_graph(alphabet: Alphabet, n: int, variant: str = IMMACULATE) -> DescentGraph:
    return build(n, alphabet, variant)


def inverse_coeff(g: DescentGraph, i: Sentence, k: Sentence) -> int:
    """Signed sum over directed paths from i to k of the product of edge
    weights, via the memoized recurrence inv(i, k) = delta - sum over edges
    i -> j of weight * inv(j, k)."""
    if not g.is_acyclic:
        raise ValueError(
            f"{g.variant} descent graph at degree {g.degree} is cyclic; "
            "path sums diverge (use the complement route instead)"
        )
    memo = g._inverse_memo
    key = (i, k)
    if key in memo:
        return memo[key]
    total = 1 if i == k else 0
    for j, w in g.out_edges(i).items():
        sub = inverse_coeff(g, j, k)
        if sub:
            total -= w * sub
    memo[key] = total
    return total


def inverse_row(g: DescentGraph, i: Sentence) -> dict:
    """All nonzero inverse coefficients from i, over its reachable set."""
    out = {}
    for k in reachable(g, i):
        c = inverse_coeff(g, i, k)
        if c:
            out[k] = c
    return out


def inverse_column(g: DescentGraph, k: Sentence) -> dict:
    """All nonzero inverse coefficients into k, indexed by the source."""
    sources = {k}
    stack = [k]
    while stack:
        v = stack.pop()
        for i in g.in_neighbors(v):
            if i not in sources:
                sources.add(i)
                stack.append(i)
    out = {}
    for i in sources:
        c = inverse_coeff(g, i, k)
        if c:
            out[i] = c
    return out


def reachable(g: DescentGraph, root: Sentence) -> list:
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for j in g.out_edges(v):
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return sort_sentences(seen, g.alphabet)


def path_inverse_coeff(g: DescentGraph, i: Sentence, k: Sentence) -> int:
    """Literal path enumeration; exponential, debug use only."""
    if not g.is_acyclic:
        raise ValueError("path enumeration requires an acyclic graph")
    total = 0

    def walk(v, sign, weight):
        nonlocal total
        if v == k:
            total += sign * weight
        for j, w in g.out_edges(v).items():
            walk(j, -sign, weight * w)

    walk(i, 1, 1)
    return total


def uncolored_coeffs(n: int, variant: str = IMMACULATE) -> dict:
    """Inverse-coefficient table over compositions: run the one-letter graph
    and relabel sentences by their word lengths.  Row alpha, column beta holds
    the coefficient of the dual immaculate function beta in the fundamental
    function alpha (equally: of the ribbon alpha in the immaculate beta)."""
    g = cached_graph(Alphabet("a"), n, variant)
    out = {}
    for i in g.vertices:
        row = inverse_row(g, i)
        out[word_lengths(i)] = {word_lengths(k): c for k, c in row.items()}
    return out


def export_dot(g: DescentGraph, root: Sentence = None) -> str:
    """DOT digraph; vertex labels are sentence strings, edge labels weights.
    With a root, restricts to the subgraph reachable from it."""
    nodes = g.vertices if root is None else reachable(g, root)
    node_set = set(nodes)
    lines = ["digraph descent_graph {"]
    for v in nodes:
        lines.append(f'  "{sentence_str(v)}";')
    for v in nodes:
        targets = [j for j in g.out_edges(v) if j in node_set]
        for j in sort_sentences(targets, g.alphabet):
            w = g.out_edges(v)[j]
            lines.append(f'  "{sentence_str(v)}" -> "{sentence_str(j)}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines)


def export_csv(g: DescentGraph, root: Sentence = None) -> str:
    """Edge list as CSV rows from,to,weight (fields quoted as needed)."""
    nodes = g.vertices if root is None else reachable(g, root)
    node_set = set(nodes)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["from", "to", "weight"])
    for v in nodes:
        targets = [j for j in g.out_edges(v) if j in node_set]
        for j in sort_sentences(targets, g.alphabet):
            writer.writerow([sentence_str(v), sentence_str(j), g.out_edges(v)[j]])
    return buf.getvalue()
