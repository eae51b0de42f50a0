"""Propositional formulas over a finite vocabulary, compiled to atom bit vectors.

A vocabulary of k variables spans 2**k atoms (complete truth assignments).
An event is the set of atoms on which a formula holds, stored as an int
bitmask with atom j at bit j; atom j assigns variable i the value of bit i
of j.  Events form a Boolean ring: & is multiplication, ^ is addition
(symmetric difference), and the order x <= y holds iff x & y == x.

Grammar accepted by parse_formula (precedence high to low):

    ~  (not, prefix)
    &  (and)
    ^  (xor)
    |  (or)
    -> (implies, right-associative; all other binaries left-associative)

plus the constants 0 and 1, identifiers, and parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

MAX_VARIABLES = 20

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class FormulaSyntaxError(ValueError):
    """Malformed formula text; carries the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnknownVariableError(ValueError):
    """Identifier not declared in the governing vocabulary."""

    def __init__(self, name: str):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


class VocabularyMismatchError(ValueError):
    """Events from different vocabularies were combined."""


@dataclass(frozen=True)
class Vocabulary:
    """Ordered, distinct variable names spanning a 2**k atom space."""

    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("vocabulary needs at least one variable")
        if len(self.variables) > MAX_VARIABLES:
            raise ValueError(
                f"vocabulary has {len(self.variables)} variables; "
                f"at most {MAX_VARIABLES} are supported (2**{MAX_VARIABLES} atoms)"
            )
        for name in self.variables:
            if not _IDENT_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def size(self) -> int:
        return len(self.variables)

    @property
    def atom_count(self) -> int:
        return 1 << self.size

    @property
    def full_mask(self) -> int:
        return (1 << self.atom_count) - 1

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def event(self, bits: int) -> "Event":
        return Event(self, bits)

    def zero(self) -> "Event":
        return Event(self, 0)

    def one(self) -> "Event":
        return Event(self, self.full_mask)

    def atom(self, j: int) -> "Event":
        if not 0 <= j < self.atom_count:
            raise ValueError(f"atom index {j} out of range")
        return Event(self, 1 << j)

    def variable(self, name: str) -> "Event":
        return Event(self, _variable_mask(self.size, self.index(name)))


@lru_cache(maxsize=None)
def _variable_mask(k: int, i: int) -> int:
    # Atoms where bit i of the atom index is set: blocks of 2**i ones with
    # period 2**(i+1), replicated by doubling up to 2**k bits.
    block = 1 << i
    mask = ((1 << block) - 1) << block
    span = block << 1
    width = 1 << k
    while span < width:
        mask |= mask << span
        span <<= 1
    return mask


@dataclass(frozen=True)
class Event:
    """A subset of the atom space; element of the Boolean ring of events."""

    vocab: Vocabulary
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.vocab.full_mask:
            raise ValueError("event bits exceed the vocabulary's atom space")

    def _require_same_vocab(self, other: "Event") -> None:
        if self.vocab != other.vocab:
            raise VocabularyMismatchError(
                "events belong to different vocabularies"
            )

    def __and__(self, other: "Event") -> "Event":
        self._require_same_vocab(other)
        return Event(self.vocab, self.bits & other.bits)

    def __or__(self, other: "Event") -> "Event":
        self._require_same_vocab(other)
        return Event(self.vocab, self.bits | other.bits)

    def __xor__(self, other: "Event") -> "Event":
        self._require_same_vocab(other)
        return Event(self.vocab, self.bits ^ other.bits)

    def __invert__(self) -> "Event":
        return Event(self.vocab, self.bits ^ self.vocab.full_mask)

    def leq(self, other: "Event") -> bool:
        """The ring order: self <= other iff self & other == self."""
        self._require_same_vocab(other)
        return self.bits & other.bits == self.bits

    __le__ = leq

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def is_one(self) -> bool:
        return self.bits == self.vocab.full_mask

    def atoms(self) -> Iterator[int]:
        """Indices of contained atoms, ascending."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def bit_string(self) -> str:
        """Debug form: binary string with atom 0 rightmost."""
        return format(self.bits, f"0{self.vocab.atom_count}b")

    def __repr__(self):
        return f"Event({self.bit_string()})"


# --- formula AST ---------------------------------------------------------


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Xor(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if text.startswith("->", i):
            tokens.append(("->", "->", i))
            i += 2
            continue
        if c in "()~&^|01":
            tokens.append((c, c, i))
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(("ident", m.group(), i))
            i = m.end()
            continue
        raise FormulaSyntaxError(f"unexpected character {c!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], vocab: Vocabulary, length: int):
        self.tokens = tokens
        self.vocab = vocab
        self.pos = 0
        self.length = length

    def _peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _offset(self) -> int:
        return self.tokens[self.pos][2] if self.pos < len(self.tokens) else self.length

    def _take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self._implies()
        if self.pos < len(self.tokens):
            raise FormulaSyntaxError("trailing input after formula", self._offset())
        return f

    def _implies(self) -> Formula:
        left = self._or()
        if self._peek() == "->":
            self._take()
            return Implies(left, self._implies())
        return left

    def _or(self) -> Formula:
        left = self._xor()
        while self._peek() == "|":
            self._take()
            left = Or(left, self._xor())
        return left

    def _xor(self) -> Formula:
        left = self._and()
        while self._peek() == "^":
            self._take()
            left = Xor(left, self._and())
        return left

    def _and(self) -> Formula:
        left = self._unary()
        while self._peek() == "&":
            self._take()
            left = And(left, self._unary())
        return left

    def _unary(self) -> Formula:
        if self._peek() == "~":
            self._take()
            return Not(self._unary())
        return self._atom()

    def _atom(self) -> Formula:
        kind = self._peek()
        if kind is None:
            raise FormulaSyntaxError("unexpected end of formula", self._offset())
        if kind == "0":
            self._take()
            return Const(False)
        if kind == "1":
            self._take()
            return Const(True)
        if kind == "ident":
            _, name, _ = self._take()
            if name not in self.vocab.variables:
                raise UnknownVariableError(name)
            return Var(name)
        if kind == "(":
            self._take()
            inner = self._implies()
            if self._peek() != ")":
                raise FormulaSyntaxError("expected ')'", self._offset())
            self._take()
            return inner
        raise FormulaSyntaxError(f"unexpected token {kind!r}", self._offset())


def parse_formula(text: str, vocab: Vocabulary) -> Formula:
    """Parse formula text against a vocabulary.

    Raises FormulaSyntaxError (with 0-based offset) or UnknownVariableError.
    """
    if not text.strip():
        raise FormulaSyntaxError("empty formula", 0)
    return _Parser(_tokenize(text), vocab, len(text)).parse()


def formula_to_text(f: Formula) -> str:
    """Fully parenthesized text; parse_formula round-trips to an identical AST."""
    if isinstance(f, Const):
        return "1" if f.value else "0"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        return f"(~{formula_to_text(f.child)})"
    ops = {And: "&", Xor: "^", Or: "|", Implies: "->"}
    op = ops[type(f)]
    return f"({formula_to_text(f.left)} {op} {formula_to_text(f.right)})"


def evaluate(f: Formula, vocab: Vocabulary) -> Event:
    """Compile a formula to the event of atoms on which it is true."""
    return Event(vocab, _eval_bits(f, vocab))


def _eval_bits(f: Formula, vocab: Vocabulary) -> int:
    full = vocab.full_mask
    if isinstance(f, Const):
        return full if f.value else 0
    if isinstance(f, Var):
        return _variable_mask(vocab.size, vocab.index(f.name))
    if isinstance(f, Not):
        return full ^ _eval_bits(f.child, vocab)
    left = _eval_bits(f.left, vocab)
    right = _eval_bits(f.right, vocab)
    if isinstance(f, And):
        return left & right
    if isinstance(f, Xor):
        return left ^ right
    if isinstance(f, Or):
        return left | right
    if isinstance(f, Implies):
        return (full ^ left) | right
    raise TypeError(f"not a formula node: {f!r}")


def compile_formula(text: str, vocab: Vocabulary) -> Event:
    """parse_formula + evaluate in one step."""
    return evaluate(parse_formula(text, vocab), vocab)


def canonical_partition(vocab: Vocabulary, events: Sequence[Event]) -> tuple[Event, ...]:
    """Cells of the partition generated by the given events.

    Atoms are grouped by their membership signature across the inputs; every
    input event is then an exact union of cells.  Cells are ordered by their
    smallest contained atom index, which fixes downstream matrix column order.
    An empty input yields the single cell 1.
    """
    cells = [vocab.full_mask]
    for e in events:
        if e.vocab != vocab:
            raise VocabularyMismatchError("partition events must share the vocabulary")
        nxt = []
        for c in cells:
            inside = c & e.bits
            outside = c ^ inside
            if inside:
                nxt.append(inside)
            if outside:
                nxt.append(outside)
        cells = nxt
    cells.sort(key=lambda b: b & -b)
    return tuple(Event(vocab, b) for b in cells)


def event_to_dnf(event: Event) -> str:
    """Disjunctive normal form over atoms; inverse of compile_formula."""
    if event.is_zero:
        return "0"
    if event.is_one:
        return "1"
    names = event.vocab.variables
    terms = []
    for j in event.atoms():
        lits = [name if (j >> i) & 1 else f"~{name}" for i, name in enumerate(names)]
        terms.append(" & ".join(lits))
    return " | ".join(terms)
