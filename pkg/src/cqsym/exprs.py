"""Formal linear combinations with exact rational coefficients.

An Expr is a finite sum of (coefficient, sentence) terms in a single basis,
tagged M/F/DI/RSDI on the quasisymmetric side or H/E/R/IM/RSIM on the
noncommutative side.  Coefficients are ints or Fractions, never floats, and
zero terms are never stored.  Conversion between tags is explicit (see the
qsym and nsym modules); adding mixed tags raises.
"""

from __future__ import annotations

from fractions import Fraction

from .sentences import Alphabet, Sentence, canonical_key, parse_sentence, sentence_str

QSYM_TAGS = ("M", "F", "DI", "RSDI")
NSYM_TAGS = ("H", "E", "R", "IM", "RSIM")
ALL_TAGS = QSYM_TAGS + NSYM_TAGS


def side(tag: str) -> str:
    if tag in QSYM_TAGS:
        return "qsym"
    if tag in NSYM_TAGS:
        return "nsym"
    raise ValueError(f"unknown basis tag {tag!r}")


def _norm_coef(c):
    """Keep integral values as int; Fractions stay exact."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class ParseError(ValueError):
    """Syntax error in an expression, with the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class Expr:
    __slots__ = ("tag", "alphabet", "terms")

    def __init__(self, tag: str, alphabet: Alphabet, terms=None):
        side(tag)  # validates
        self.tag = tag
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for s, c in terms.items() if isinstance(terms, dict) else terms:
                self.add_term(s, c)

    # construction -----------------------------------------------------

    @classmethod
    def basis(cls, tag: str, s: Sentence, alphabet: Alphabet, coef=1) -> "Expr":
        alphabet.check_sentence(s)
        e = cls(tag, alphabet)
        e.add_term(s, coef)
        return e

    @classmethod
    def zero(cls, tag: str, alphabet: Alphabet) -> "Expr":
        return cls(tag, alphabet)

    def add_term(self, s: Sentence, c) -> None:
        """In-place accumulate; only used while building a fresh Expr."""
        c = _norm_coef(c)
        if not c:
            return
        new = self.terms.get(s, 0) + c
        if new:
            self.terms[s] = _norm_coef(new)
        else:
            del self.terms[s]

    # algebra ----------------------------------------------------------

    def _check_compatible(self, other: "Expr") -> None:
        if not isinstance(other, Expr):
            raise TypeError(f"cannot combine Expr with {type(other).__name__}")
        if self.tag != other.tag:
            raise ValueError(
                f"cannot add {self.tag}-tagged and {other.tag}-tagged expressions;"
                " convert explicitly first"
            )
        if self.alphabet != other.alphabet:
            raise ValueError("mixed alphabets")

    def __add__(self, other: "Expr") -> "Expr":
        self._check_compatible(other)
        out = Expr(self.tag, self.alphabet, dict(self.terms))
        for s, c in other.terms.items():
            out.add_term(s, c)
        return out

    def __sub__(self, other: "Expr") -> "Expr":
        return self + (-1) * other

    def __neg__(self) -> "Expr":
        return (-1) * self

    def __rmul__(self, c) -> "Expr":
        c = _norm_coef(c)
        if not c:
            return Expr(self.tag, self.alphabet)
        return Expr(self.tag, self.alphabet, {s: c * v for s, v in self.terms.items()})

    def scale(self, c) -> "Expr":
        return c * self

    def coefficient(self, s: Sentence):
        return self.terms.get(s, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Expr)
            and self.tag == other.tag
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.tag, self.alphabet, frozenset(self.terms.items())))

    def degrees(self) -> dict:
        """Split into homogeneous parts, degree -> {sentence: coef}."""
        out = {}
        for s, c in self.terms.items():
            out.setdefault(sum(len(w) for w in s), {})[s] = c
        return out

    # rendering ----------------------------------------------------------

    def items(self):
        """Terms in canonical order (graded by size, then canonical key)."""
        key = lambda s: canonical_key(s, self.alphabet)
        return [(s, self.terms[s]) for s in sorted(self.terms, key=key)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for s, c in self.items():
            body = f"{self.tag}[{sentence_str(s)}]"
            mag = c if c > 0 else -c
            head = "" if mag == 1 else f"{mag}*"
            if not pieces:
                sign = "" if c > 0 else "-"
                pieces.append(f"{sign}{head}{body}")
            else:
                sign = "+" if c > 0 else "-"
                pieces.append(f" {sign} {head}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<Expr {self}>"

    def to_json_dict(self) -> dict:
        return {
            "tag": self.tag,
            "terms": [
                {"sentence": sentence_str(s), "coef": str(c)} for s, c in self.items()
            ],
        }


class TensorExpr:
    """Output-only tensor of two expressions of the same side: a finite sum
    of coef * (left sentence (x) right sentence) terms."""

    __slots__ = ("tags", "alphabet", "terms")

    def __init__(self, tags: tuple, alphabet: Alphabet, terms=None):
        side(tags[0]), side(tags[1])
        self.tags = tags
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for pair, c in terms.items() if isinstance(terms, dict) else terms:
                self.add_term(pair, c)

    def add_term(self, pair: tuple, c) -> None:
        c = _norm_coef(c)
        if not c:
            return
        new = self.terms.get(pair, 0) + c
        if new:
            self.terms[pair] = _norm_coef(new)
        else:
            del self.terms[pair]

    def coefficient(self, pair: tuple):
        return self.terms.get(pair, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorExpr)
            and self.tags == other.tags
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        key = lambda p: (
            canonical_key(p[0], self.alphabet),
            canonical_key(p[1], self.alphabet),
        )
        return [(p, self.terms[p]) for p in sorted(self.terms, key=key)]

    def __str__(self) -> str:
        if not self.terms:
            return ""
        pieces = []
        for (a, b), c in self.items():
            body = f"{self.tags[0]}[{sentence_str(a)}] @ {self.tags[1]}[{sentence_str(b)}]"
            mag = c if c > 0 else -c
            head = "" if mag == 1 else f"{mag}*"
            if not pieces:
                sign = "" if c > 0 else "-"
                pieces.append(f"{sign}{head}{body}")
            else:
                sign = "+" if c > 0 else "-"
                pieces.append(f" {sign} {head}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<TensorExpr {self}>"

    def to_json_dict(self) -> dict:
        return {
            "tags": list(self.tags),
            "terms": [
                {"left": sentence_str(a), "right": sentence_str(b), "coef": str(c)}
                for (a, b), c in self.items()
            ],
        }


def tensor_render(t: TensorExpr) -> str:
    return str(t)


class UncoloredExpr:
    """A composition-indexed linear combination, the image of an Expr under
    the uncoloring map.  Output-only apart from addition and equality."""

    __slots__ = ("tag", "terms")

    def __init__(self, tag: str, terms=None):
        side(tag)
        self.tag = tag
        self.terms = {}
        if terms:
            for comp, c in terms.items() if isinstance(terms, dict) else terms:
                self.add_term(comp, c)

    def add_term(self, comp: tuple, c) -> None:
        c = _norm_coef(c)
        if not c:
            return
        new = self.terms.get(comp, 0) + c
        if new:
            self.terms[comp] = _norm_coef(new)
        else:
            del self.terms[comp]

    def coefficient(self, comp: tuple):
        return self.terms.get(comp, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UncoloredExpr)
            and self.tag == other.tag
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        key = lambda comp: (sum(comp), tuple(-p for p in comp))
        return [(comp, self.terms[comp]) for comp in sorted(self.terms, key=key)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for comp, c in self.items():
            inside = ",".join(str(p) for p in comp) if comp else "()"
            body = f"{self.tag}[{inside}]"
            mag = c if c > 0 else -c
            head = "" if mag == 1 else f"{mag}*"
            if not pieces:
                sign = "" if c > 0 else "-"
                pieces.append(f"{sign}{head}{body}")
            else:
                sign = "+" if c > 0 else "-"
                pieces.append(f" {sign} {head}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<UncoloredExpr {self}>"

    def to_json_dict(self) -> dict:
        return {
            "tag": self.tag,
            "terms": [
                {
                    "sentence": ",".join(str(p) for p in comp) if comp else "()",
                    "coef": str(c),
                }
                for comp, c in self.items()
            ],
        }


# ---------------------------------------------------------------------------
# parsing
#
# expr   := ['+'|'-'] term (('+'|'-') term)*
# term   := [coef '*'] tag '[' sentence ']'
# coef   := integer | integer '/' integer
# tag    := M|F|DI|RSDI|H|E|R|IM|RSIM
# sentence inside brackets follows the sentence text format, '()' for empty.

def parse(text: str, alphabet: Alphabet) -> Expr:
    p = _Parser(text, alphabet)
    return p.parse_expr()


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_expr(self) -> Expr:
        self.skip_ws()
        if self.pos == len(self.text):
            self.error("empty expression")
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        expr = None
        while True:
            coef, s, tag = self.parse_term()
            term = Expr(tag, self.alphabet, {s: sign * coef})
            if expr is None:
                expr = Expr(tag, self.alphabet)
            if tag != expr.tag:
                self.error(f"mixed tags {expr.tag} and {tag} in one expression")
            expr = expr + term
            self.skip_ws()
            if self.pos == len(self.text):
                return expr
            if self.peek() not in "+-":
                self.error(f"expected '+' or '-', found {self.peek()!r}")
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1

    def parse_term(self):
        self.skip_ws()
        coef = 1
        if self.peek().isdigit():
            coef = self.parse_coef()
            self.skip_ws()
            if self.peek() != "*":
                self.error("expected '*' after coefficient")
            self.pos += 1
            self.skip_ws()
        tag = self.parse_tag()
        if self.peek() != "[":
            self.error(f"expected '[' after tag {tag}")
        self.pos += 1
        close = self.text.find("]", self.pos)
        if close < 0:
            self.error("missing closing ']'")
        inside = self.text[self.pos : close]
        try:
            s = parse_sentence(inside, self.alphabet)
        except ValueError as exc:
            self.error(str(exc))
        self.pos = close + 1
        return coef, s, tag

    def parse_coef(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        num = int(self.text[start : self.pos])
        if self.peek() == "/":
            self.pos += 1
            dstart = self.pos
            while self.peek().isdigit():
                self.pos += 1
            if dstart == self.pos:
                self.error("missing denominator")
            den = int(self.text[dstart : self.pos])
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return num

    def parse_tag(self) -> str:
        # longest match first so DI/RSDI/IM/RSIM win over single letters
        for tag in ("RSDI", "RSIM", "DI", "IM", "M", "F", "H", "E", "R"):
            if self.text.startswith(tag, self.pos):
                self.pos += len(tag)
                return tag
        self.error(f"unknown basis tag at {self.text[self.pos:self.pos+4]!r}")
