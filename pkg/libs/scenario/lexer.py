"""Tokenizer for ``.mwc`` scenario files."""

import re
from dataclasses import dataclass
from typing import Iterator, List

from libs.core.errors import ScenarioSyntaxError

KEYWORDS = frozenset({
    "let", "wall", "plus", "minus", "model", "expect", "walls", "poly",
    "proj", "aff", "pt", "gr", "hilb", "relhilb",
    "sym2", "wedge2", "sym2od", "bundle", "equivsq",
})

_TOKEN_SPEC = [
    ("WS", r"[ \t\r]+"),
    ("NEWLINE", r"\n"),
    ("COMMENT", r"#[^\n]*"),
    ("STRING", r'"[^"\n]*"'),
    ("INT", r"\d+"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("EQEQ", r"=="),
    ("OP", r"[=;{}()+\-*,/]"),
]
_MASTER = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str  # KEYWORD, NAME, INT, STRING, EQEQ, OP, EOF
    text: str
    line: int
    column: int


def _scan(source: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _MASTER.match(source, pos)
        if m is None:
            ch = source[pos]
            if ch == '"':
                raise ScenarioSyntaxError("unterminated string", line, pos - line_start + 1)
            raise ScenarioSyntaxError(f"unexpected character {ch!r}", line, pos - line_start + 1)
        kind, text = m.lastgroup, m.group()
        column = pos - line_start + 1
        if kind == "NEWLINE":
            line += 1
            line_start = m.end()
        elif kind == "NAME":
            yield Token("KEYWORD" if text in KEYWORDS else "NAME", text, line, column)
        elif kind not in ("WS", "COMMENT"):
            yield Token(kind, text, line, column)
        pos = m.end()
    yield Token("EOF", "", line, pos - line_start + 1)


def tokenize(source: str) -> List[Token]:
    return list(_scan(source))
