"""다항식 문자열 파서

문법:
    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'
    VAR    := x | y | z | x1 .. x9

단항 마이너스는 '^' 보다 약하게 결합한다: "-x^2" == -(x^2).
"""
import re
from dataclasses import dataclass
from typing import List, Optional

from src.models.polynomial import IntPolynomial, NAMED_VARIABLES
from src.utils.config import load_config
from src.utils.errors import PolynomialParseError

config = load_config()

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x[1-9]|[xyz])|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise PolynomialParseError(f"알 수 없는 문자 {text[pos]!r}", pos)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, num_vars: int):
        self.tokens = tokenize(text)
        self.index = 0
        self.num_vars = num_vars
        self.max_exponent = config["max_exponent"]

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _accept(self, text: str) -> Optional[Token]:
        token = self.current
        if token.kind == "op" and token.text == text:
            self.index += 1
            return token
        return None

    def parse(self) -> IntPolynomial:
        result = self.expr()
        if self.current.kind != "end":
            raise PolynomialParseError(f"예상치 못한 토큰 {self.current.text!r}", self.current.position)
        return result

    def expr(self) -> IntPolynomial:
        result = self.term()
        while True:
            if self._accept("+"):
                result = result + self.term()
            elif self._accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> IntPolynomial:
        result = self.unary()
        while self._accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> IntPolynomial:
        if self._accept("-"):
            return -self.unary()
        if self._accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> IntPolynomial:
        base = self.atom()
        if self._accept("^"):
            token = self.current
            if token.kind != "int":
                raise PolynomialParseError("지수는 음이 아닌 정수여야 합니다", token.position)
            self.index += 1
            exponent = int(token.text)
            if exponent > self.max_exponent:
                raise PolynomialParseError(f"지수가 한도({self.max_exponent})를 초과했습니다", token.position)
            return base ** exponent
        return base

    def atom(self) -> IntPolynomial:
        token = self.current
        if token.kind == "int":
            self.index += 1
            return IntPolynomial.constant(int(token.text), self.num_vars)
        if token.kind == "var":
            self.index += 1
            return IntPolynomial.variable(self._variable_index(token), self.num_vars)
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                raise PolynomialParseError("닫는 괄호가 없습니다", self.current.position)
            return inner
        if token.kind == "end":
            raise PolynomialParseError("식이 예상보다 일찍 끝났습니다", token.position)
        raise PolynomialParseError(f"예상치 못한 토큰 {token.text!r}", token.position)

    def _variable_index(self, token: Token) -> int:
        if token.text in NAMED_VARIABLES:
            index = NAMED_VARIABLES.index(token.text)
        else:
            index = int(token.text[1:]) - 1
        if index >= self.num_vars:
            raise PolynomialParseError(
                f"변수 {token.text} 의 번호가 변수 개수({self.num_vars})를 초과합니다", token.position
            )
        return index


def parse_polynomial(text: str, num_vars: int) -> IntPolynomial:
    """문자열을 희소 정규형 다항식으로 변환"""
    return _Parser(text, num_vars).parse()
