"""Recursive-descent parser for ``.mwc`` scenario files.

Grammar::

    scenario := stmt*
    stmt     := "let" IDENT "=" expr
              | "wall" RATIONAL "{" "plus" "=" exprlist ";" "minus" "=" exprlist [";"] "}"
              | "model" IDENT "=" expr ["walls"]
              | "expect" IDENT "==" polyliteral
    exprlist := stratum ("+" stratum)*
    stratum  := term ("-" term)*
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := "proj(" INT ")" | "aff(" INT ")" | "pt(" ")" | "gr(" INT "," INT ")"
              | "hilb(" INT ")" | "relhilb(" INT "," INT ")"
              | "sym2(" expr ")" | "wedge2(" expr ")" | "sym2od(" expr ")"
              | "bundle(" expr "," expr ")" | "equivsq(" expr "," expr "," expr ")"
              | polyliteral | IDENT | "(" expr ")"
    polyliteral := "poly" STRING
    RATIONAL := INT ["/" INT]

Lines starting with ``#`` (or trailing ``#`` text) are comments.
Atom parameters are at most MAX_ATOM_PARAMETER and polynomial literal
exponents at most MAX_LITERAL_EXPONENT.
"""

from fractions import Fraction
from typing import List, Optional, Set, Tuple

from libs.core.errors import (
    MalformedLiteralError,
    ScenarioError,
    ScenarioSyntaxError,
    UnknownModelError,
    UnresolvedNameError,
)
from libs.core.logging import get_logger
from libs.motivic.motives import AtomKind, AtomSpec
from libs.motivic.polyring import Polynomial, parse_polynomial
from libs.motivic.strata import (
    Atom,
    Bundle,
    Difference,
    EquivariantSquare,
    Ident,
    Literal,
    Product,
    SpaceExpr,
    Sum,
    Transform,
    TransformKind,
    WallTerm,
)
from .lexer import Token, tokenize
from .syntax import Binding, Expectation, ModelDecl, Scenario

logger = get_logger("scenario.parser")

_ATOM_KEYWORDS = {
    "proj": (AtomKind.PROJECTIVE, 1),
    "aff": (AtomKind.AFFINE, 1),
    "pt": (AtomKind.POINT, 0),
    "gr": (AtomKind.GRASSMANNIAN, 2),
    "hilb": (AtomKind.HILB_P2, 1),
    "relhilb": (AtomKind.REL_HILBERT, 2),
}

# Atom parameters beyond this make evaluation impractically slow (Gr(k, n) has degree k(n-k)).
MAX_ATOM_PARAMETER = 100
MAX_INTEGER_DIGITS = 18

_TRANSFORM_KEYWORDS = {
    "sym2": TransformKind.SYM2,
    "wedge2": TransformKind.WEDGE2,
    "sym2od": TransformKind.SYM2_OFF_DIAG,
}


class _Parser:
    def __init__(self, source: str, name: str):
        self.tokens = tokenize(source)
        self.pos = 0
        self.name = name
        self.declared: Set[str] = set()
        self.bindings: List[Binding] = []
        self.walls: List[WallTerm] = []
        self.models: List[ModelDecl] = []
        self.expectations: List[Tuple[Expectation, Token]] = []

    # ------------------------------------------------------------------
    # Token helpers
    # ------------------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def _error(self, message: str, tok: Optional[Token] = None) -> ScenarioSyntaxError:
        tok = tok or self.tok
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        return ScenarioSyntaxError(f"{message}, found {found}", tok.line, tok.column)

    def _at(self, text: str) -> bool:
        return self.tok.kind in ("OP", "EQEQ", "KEYWORD") and self.tok.text == text

    def _advance(self) -> Token:
        tok = self.tok
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise self._error(f"expected '{text}'")
        return self._advance()

    def _expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise self._error(f"expected {what}")
        return self._advance()

    def _int_value(self, tok: Token) -> int:
        if len(tok.text) > MAX_INTEGER_DIGITS:
            raise ScenarioSyntaxError("integer literal too long", tok.line, tok.column)
        return int(tok.text)

    def _int(self) -> int:
        return self._int_value(self._expect_kind("INT", "integer"))

    # ------------------------------------------------------------------
    # Statements
    # ------------------------------------------------------------------

    def parse(self) -> Scenario:
        while self.tok.kind != "EOF":
            if self._at("let"):
                self._let()
            elif self._at("wall"):
                self._wall()
            elif self._at("model"):
                self._model()
            elif self._at("expect"):
                self._expectation()
            else:
                raise self._error("expected 'let', 'wall', 'model' or 'expect'")

        model_names = {m.name for m in self.models}
        for expectation, name_tok in self.expectations:
            if expectation.model not in model_names:
                raise UnknownModelError(
                    f"unknown model {expectation.model}", name_tok.line, name_tok.column
                )

        return Scenario(
            name=self.name,
            bindings=tuple(self.bindings),
            walls=tuple(self.walls),
            models=tuple(self.models),
            expectations=tuple(e for e, _ in self.expectations),
        )

    def _declare(self, tok: Token):
        if tok.text in self.declared:
            raise ScenarioSyntaxError(
                f"duplicate identifier '{tok.text}'", tok.line, tok.column
            )
        self.declared.add(tok.text)

    def _let(self):
        start = self._advance()
        name = self._expect_kind("NAME", "identifier")
        self._expect("=")
        expr = self._expr()
        # declared after the body so a binding cannot refer to itself
        self._declare(name)
        self.bindings.append(Binding(name.text, expr, start.line, start.column))

    def _rational(self) -> Fraction:
        num_tok = self._expect_kind("INT", "wall value")
        numerator, denominator = self._int_value(num_tok), 1
        if self._at("/"):
            self._advance()
            den_tok = self._expect_kind("INT", "denominator")
            denominator = self._int_value(den_tok)
            if denominator == 0:
                raise ScenarioSyntaxError("zero denominator", den_tok.line, den_tok.column)
        value = Fraction(numerator, denominator)
        if value <= 0:
            raise ScenarioSyntaxError("wall value must be positive", num_tok.line, num_tok.column)
        return value

    def _wall(self):
        start = self._advance()
        alpha = self._rational()
        self._expect("{")
        self._expect("plus")
        self._expect("=")
        plus = self._exprlist()
        self._expect(";")
        self._expect("minus")
        self._expect("=")
        minus = self._exprlist()
        if self._at(";"):
            self._advance()
        self._expect("}")
        self.walls.append(WallTerm(alpha, plus, minus, start.line, start.column))

    def _model(self):
        start = self._advance()
        name = self._expect_kind("NAME", "model name")
        self._expect("=")
        expr = self._expr()
        with_walls = False
        if self._at("walls"):
            self._advance()
            with_walls = True
        self._declare(name)
        self.models.append(ModelDecl(name.text, expr, with_walls, start.line, start.column))

    def _expectation(self):
        start = self._advance()
        name = self._expect_kind("NAME", "model name")
        self._expect("==")
        value = self._polyliteral()
        self.expectations.append((Expectation(name.text, value, start.line, start.column), name))

    # ------------------------------------------------------------------
    # Expressions
    # ------------------------------------------------------------------

    def _exprlist(self) -> Tuple[SpaceExpr, ...]:
        strata = []
        current = self._term()
        while self._at("+") or self._at("-"):
            op = self._advance()
            if op.text == "+":
                strata.append(current)
                current = self._term()
            else:
                current = Difference(current, self._term())
        strata.append(current)
        return tuple(strata)

    def _expr(self) -> SpaceExpr:
        node = self._term()
        while self._at("+") or self._at("-"):
            op = self._advance()
            right = self._term()
            node = Sum(node, right) if op.text == "+" else Difference(node, right)
        return node

    def _term(self) -> SpaceExpr:
        node = self._factor()
        while self._at("*"):
            self._advance()
            node = Product(node, self._factor())
        return node

    def _factor(self) -> SpaceExpr:
        tok = self.tok

        if tok.kind == "KEYWORD" and tok.text in _ATOM_KEYWORDS:
            kind, arity = _ATOM_KEYWORDS[tok.text]
            self._advance()
            self._expect("(")
            params = []
            for i in range(arity):
                if i:
                    self._expect(",")
                param_tok = self.tok
                value = self._int()
                if value > MAX_ATOM_PARAMETER:
                    raise ScenarioSyntaxError(
                        f"atom parameter {value} exceeds {MAX_ATOM_PARAMETER}",
                        param_tok.line, param_tok.column,
                    )
                params.append(value)
            self._expect(")")
            return Atom(AtomSpec(kind, tuple(params)))

        if tok.kind == "KEYWORD" and tok.text in _TRANSFORM_KEYWORDS:
            self._advance()
            self._expect("(")
            operand = self._expr()
            self._expect(")")
            return Transform(_TRANSFORM_KEYWORDS[tok.text], operand)

        if self._at("bundle"):
            self._advance()
            self._expect("(")
            fiber = self._expr()
            self._expect(",")
            base = self._expr()
            self._expect(")")
            return Bundle(fiber, base)

        if self._at("equivsq"):
            self._advance()
            self._expect("(")
            fiber = self._expr()
            self._expect(",")
            base_plus = self._expr()
            self._expect(",")
            base_minus = self._expr()
            self._expect(")")
            return EquivariantSquare(fiber, base_plus, base_minus)

        if self._at("poly"):
            return Literal(self._polyliteral())

        if tok.kind == "NAME":
            self._advance()
            if tok.text not in self.declared or tok.text in {m.name for m in self.models}:
                raise UnresolvedNameError(
                    f"unbound identifier '{tok.text}'", tok.line, tok.column
                )
            return Ident(tok.text)

        if self._at("("):
            self._advance()
            node = self._expr()
            self._expect(")")
            return node

        raise self._error("expected an expression")

    def _polyliteral(self) -> Polynomial:
        self._expect("poly")
        tok = self._expect_kind("STRING", "quoted polynomial")
        body = tok.text[1:-1]
        try:
            return parse_polynomial(body)
        except MalformedLiteralError as e:
            raise ScenarioSyntaxError(
                f"malformed polynomial literal: {e}", tok.line, tok.column + 1 + e.offset
            ) from e


def parse_scenario(source: str, name: str = "scenario") -> Scenario:
    """
    Parse scenario text.

    Every input yields either a Scenario or a positioned ScenarioError.
    """
    try:
        scenario = _Parser(source, name).parse()
    except ScenarioError:
        raise
    except RecursionError:
        raise ScenarioSyntaxError("expression nested too deeply") from None
    logger.debug(
        f"parsed {len(scenario.bindings)} bindings, {len(scenario.walls)} walls, "
        f"{len(scenario.models)} models",
        extra={"scenario": name},
    )
    return scenario
