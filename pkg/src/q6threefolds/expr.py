"""Parse polynomial expressions into MultiPoly.

Grammar: rational literals (``3``, ``2/5``), variable names, ``+ - *``,
``^`` (or ``**``) with a nonnegative integer exponent, parentheses.
Parsing goes through the ``ast`` module after a whitelist check.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Sequence

from .algebra.poly import MultiPoly


class ExprError(ValueError):
    pass


def _const(node) -> Fraction | None:
    """Value of a purely numeric subtree (literals, unary minus, literal/literal)."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _const(node.operand)
        if v is None:
            return None
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Div):
        a, b = _const(node.left), _const(node.right)
        if a is None or b is None:
            return None
        if b == 0:
            raise ExprError("division by zero in a rational literal")
        return a / b
    return None


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    variables = tuple(variables)
    if not isinstance(text, str):
        raise ExprError(f"expression must be a string, got {text!r}")
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {text!r}: {exc.msg}") from None

    def walk(node) -> MultiPoly:
        c = _const(node)
        if c is not None:
            return MultiPoly.const(c, variables)
        if isinstance(node, ast.Name):
            if node.id not in variables:
                raise ExprError(f"unknown variable {node.id!r} (expected one of {', '.join(variables)})")
            return MultiPoly.var(node.id, variables, Fraction(1))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                e = _const(node.right)
                if e is None or e.denominator != 1 or e < 0:
                    raise ExprError("exponents must be nonnegative integer literals")
                return walk(node.left) ** int(e)
            if isinstance(node.op, ast.Add):
                return walk(node.left) + walk(node.right)
            if isinstance(node.op, ast.Sub):
                return walk(node.left) - walk(node.right)
            if isinstance(node.op, ast.Mult):
                return walk(node.left) * walk(node.right)
            if isinstance(node.op, ast.Div):
                d = _const(node.right)
                if d is None or d == 0:
                    raise ExprError("only division by a nonzero rational literal is allowed")
                return walk(node.left) * (1 / d)
        raise ExprError(f"unsupported syntax in {text!r}")

    return walk(tree.body)
