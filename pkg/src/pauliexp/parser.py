"""Parse and format the textual weighted-sum Hamiltonian language.

The grammar::

    expr   := term (('+' | '-') term)*
    term   := ['-'] [coeff '*'] factor+  |  ['-'] coeff '*' 'Id'
    factor := ('X' | 'Y' | 'Z') index

``coeff`` is a decimal real literal (scientific notation allowed) and
``index`` a 0-based qubit number below ``n_qubits``. An omitted coefficient
means 1.0; a '-' connective (or a leading '-') negates the following term.
Whitespace and line breaks are insignificant and ``#`` starts a comment to
end of line, so the same function parses both inline expressions and ``.ham``
files.

Every syntax problem raises :class:`ParseError` carrying the character
offset into the original text.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .paulis import Hamiltonian, PauliOp, PauliString, PauliTerm

_NUMBER_RE = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_INT_RE = re.compile(r"\d+$")


class ParseError(ValueError):
    """Syntax error with the character offset it was detected at."""

    def __init__(self, position: int, message: str) -> None:
        super().__init__(f"at offset {position}: {message}")
        self.position = position
        self.message = message


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | PAULI | ID | STAR | PLUS | MINUS | EOF
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "XYZ":
            tokens.append(_Token("PAULI", ch, i))
            i += 1
            continue
        if text.startswith("Id", i):
            tokens.append(_Token("ID", "Id", i))
            i += 2
            continue
        if ch == "*":
            tokens.append(_Token("STAR", ch, i))
            i += 1
            continue
        if ch == "+":
            tokens.append(_Token("PLUS", ch, i))
            i += 1
            continue
        if ch == "-":
            tokens.append(_Token("MINUS", ch, i))
            i += 1
            continue
        m = _NUMBER_RE.match(text, i)
        if m:
            tokens.append(_Token("NUMBER", m.group(), i))
            i = m.end()
            continue
        raise ParseError(i, f"unknown token {ch!r}")
    tokens.append(_Token("EOF", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], n_qubits: int) -> None:
        self.tokens = tokens
        self.pos = 0
        self.n_qubits = n_qubits

    @property
    def here(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Hamiltonian:
        if self.here.kind == "EOF":
            raise ParseError(self.here.position, "empty input")
        terms = [self.term(negated=self._eat_minus())]
        while self.here.kind != "EOF":
            conn = self.advance()
            if conn.kind == "PLUS":
                terms.append(self.term(negated=self._eat_minus()))
            elif conn.kind == "MINUS":
                terms.append(self.term(negated=not self._eat_minus()))
            else:
                raise ParseError(conn.position, f"expected '+' or '-', got {conn.text!r}")
        return Hamiltonian(self.n_qubits, tuple(terms))

    def _eat_minus(self) -> bool:
        if self.here.kind == "MINUS":
            self.advance()
            return True
        return False

    def term(self, negated: bool) -> PauliTerm:
        coeff = 1.0
        explicit_coeff = False
        if self.here.kind == "NUMBER":
            tok = self.advance()
            try:
                coeff = float(tok.text)
            except ValueError:
                raise ParseError(tok.position, f"malformed number {tok.text!r}") from None
            if not math.isfinite(coeff):
                raise ParseError(tok.position, f"coefficient {tok.text!r} is not finite")
            star = self.advance()
            if star.kind != "STAR":
                raise ParseError(star.position, "expected '*' after coefficient")
            explicit_coeff = True
        if negated:
            coeff = -coeff

        if self.here.kind == "ID":
            tok = self.advance()
            if not explicit_coeff:
                raise ParseError(tok.position, "'Id' requires an explicit coefficient")
            ops = [PauliOp.I] * self.n_qubits
            return PauliTerm(coeff, PauliString(tuple(ops)))

        if self.here.kind != "PAULI":
            raise ParseError(
                self.here.position,
                f"expected a Pauli factor, got {self.here.text or 'end of input'!r}",
            )
        ops = [PauliOp.I] * self.n_qubits
        while self.here.kind == "PAULI":
            factor = self.advance()
            idx_tok = self.advance()
            if idx_tok.kind != "NUMBER" or not _INT_RE.match(idx_tok.text):
                raise ParseError(idx_tok.position, f"expected a qubit index after '{factor.text}'")
            index = int(idx_tok.text)
            if index >= self.n_qubits:
                raise ParseError(
                    idx_tok.position,
                    f"qubit index {index} out of range for {self.n_qubits} qubits",
                )
            if ops[index] is not PauliOp.I:
                raise ParseError(factor.position, f"qubit {index} assigned twice in one term")
            ops[index] = PauliOp(factor.text)
        return PauliTerm(coeff, PauliString(tuple(ops)))


def parse_hamiltonian(text: str, n_qubits: int) -> Hamiltonian:
    """Parse an expression like ``"0.5*Z0 Z1 + 0.3*X0"`` into a Hamiltonian.

    Terms appear in the result in source order. Raises :class:`ParseError`
    on any input outside the grammar.
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be positive")
    return _Parser(_tokenize(text), n_qubits).parse()


def _format_coefficient(c: float) -> str:
    if c == int(c) and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


def format_hamiltonian(h: Hamiltonian) -> str:
    """Canonical rendering; ``parse_hamiltonian(format_hamiltonian(h), h.n_qubits)``
    reproduces ``h`` exactly, term order and coefficients included.

    Each term prints as ``coeff*F i F j ...`` with factors in ascending qubit
    order; the all-identity string prints as ``coeff*Id``; negative weights
    stay inside the coefficient literal and terms join with `` + ``.
    """
    rendered = []
    for term in h.terms:
        coeff = _format_coefficient(term.coefficient)
        factors = " ".join(
            f"{op.value}{k}" for k, op in enumerate(term.string.ops) if op is not PauliOp.I
        )
        rendered.append(f"{coeff}*{factors}" if factors else f"{coeff}*Id")
    return " + ".join(rendered)
