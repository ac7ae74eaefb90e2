"""Reading and writing polynomial system files.

File format: an optional run of comment/blank lines, a single declaration
``vars: v1 v2 ... vn`` listing the variables in ascending order, then one
polynomial expression per line.  Expressions use ``+ - * ^`` with integer
literals and declared variable names; juxtaposition is not multiplication.
``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .poly import Exponents, Polynomial, VariableOrder


class SystemParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SystemSyntaxError(SystemParseError):
    pass


class UndeclaredVariableError(SystemParseError):
    def __init__(self, name: str, line: int, column: int):
        super().__init__(f"undeclared variable {name!r}", line, column)
        self.name = name


class NonIntegerCoefficientError(SystemParseError):
    def __init__(self, line: int, column: int):
        super().__init__("coefficients must be integer literals", line, column)


_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+|/)|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^]))")


def _tokenize(text: str, line_no: int):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise SystemSyntaxError(f"unexpected character {stripped[0]!r}", line_no, col)
        col = m.start(m.lastindex) + 1
        if m.group(1):
            raise NonIntegerCoefficientError(line_no, col)
        if m.group(2):
            out.append(("int", int(m.group(2)), col))
        elif m.group(3):
            out.append(("name", m.group(3), col))
        else:
            out.append(("op", m.group(4), col))
        pos = m.end()
    return out


def parse_poly(order: VariableOrder, text: str, line_no: int = 1) -> Polynomial:
    """Parse one polynomial expression under the given variable order."""
    tokens = _tokenize(text, line_no)
    if not tokens:
        raise SystemSyntaxError("empty expression", line_no, 1)
    n = len(order)
    result: Dict[Exponents, int] = {}
    i = 0

    def syntax(msg: str, col: int):
        raise SystemSyntaxError(msg, line_no, col)

    while i < len(tokens):
        sign = 1
        # leading sign of the term
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            syntax("dangling operator", tokens[-1][2])
        coeff = sign
        exps = [0] * n
        expect_factor = True
        while True:
            if expect_factor:
                kind, value, col = tokens[i] if i < len(tokens) else ("end", None, tokens[-1][2])
                if kind == "int":
                    coeff *= value
                    i += 1
                elif kind == "name":
                    try:
                        idx = order.position(value)
                    except KeyError:
                        raise UndeclaredVariableError(value, line_no, col) from None
                    power = 1
                    i += 1
                    if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                        i += 1
                        if i >= len(tokens) or tokens[i][0] != "int":
                            syntax("exponent must be a non-negative integer",
                                   tokens[i][2] if i < len(tokens) else col)
                        power = tokens[i][1]
                        i += 1
                    exps[idx] += power
                else:
                    syntax("expected a variable or integer", col)
                expect_factor = False
            else:
                if i >= len(tokens):
                    break
                kind, value, col = tokens[i]
                if kind == "op" and value == "*":
                    i += 1
                    expect_factor = True
                elif kind == "op" and value in "+-":
                    break
                elif kind == "op" and value == "^":
                    syntax("exponent applies to a single variable", col)
                else:
                    syntax("expected an operator between factors", col)
        key = tuple(exps)
        total = result.get(key, 0) + coeff
        if total:
            result[key] = total
        elif key in result:
            del result[key]
    return Polynomial(order, result)


def parse_system(text: str) -> Tuple[VariableOrder, List[Polynomial]]:
    """Parse a system file into its variable order and polynomial list."""
    order: Optional[VariableOrder] = None
    polys: List[Polynomial] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if order is None:
            stripped = line.strip()
            if not stripped.startswith("vars:"):
                raise SystemSyntaxError("expected a 'vars:' declaration first", line_no, 1)
            names = stripped[len("vars:"):].split()
            if not names:
                raise SystemSyntaxError("no variables declared", line_no, len("vars:") + 1)
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise SystemSyntaxError(f"invalid variable name {name!r}", line_no, 1)
            if len(set(names)) != len(names):
                raise SystemSyntaxError("duplicate variable names", line_no, 1)
            order = VariableOrder(names)
            continue
        if line.strip().startswith("vars:"):
            raise SystemSyntaxError("duplicate 'vars:' declaration", line_no, 1)
        polys.append(parse_poly(order, line, line_no))
    if order is None:
        raise SystemSyntaxError("missing 'vars:' declaration", 1, 1)
    return order, polys


def render_system(order: VariableOrder, polys) -> str:
    """Render a system back into the file format (parse/render fixpoint)."""
    lines = ["vars: " + " ".join(order.names)]
    lines.extend(str(p) for p in polys)
    return "\n".join(lines) + "\n"
