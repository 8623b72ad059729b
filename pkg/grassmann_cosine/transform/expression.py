"""
Profile mini-language

Polynomials in c1..cp (c_i = cos^2 t_i) with + - *, non-negative integer
powers (^ or **), rational constants and division by constants, e.g.
    "c1*c2", "3/2*c1^2 - 1/2", "(c1 + c2)^2"
"""
import ast
import logging
import re
from fractions import Fraction
from typing import Callable

import numpy as np

from ..core.exceptions import ProfileParseError
from .profiles import PolynomialProfile

VARIABLE = re.compile(r"^c([1-9][0-9]*)$")


class ProfileParser:
    """Parse and evaluate polynomial profile expressions"""

    def __init__(self):
        # allowed binary operators
        self.operators = {
            ast.Add: np.add,
            ast.Sub: np.subtract,
            ast.Mult: np.multiply,
            ast.Div: np.true_divide,
            ast.Pow: np.power,
        }
        self.unary_operators = {
            ast.USub: np.negative,
            ast.UAdd: np.positive,
        }
        self.logger = logging.getLogger("transform.expression")

    def parse(self, expression: str, p: int, name: str = None) -> PolynomialProfile:
        """Compile expression into a profile on p angles."""
        text = expression.strip().replace("^", "**")
        if not text:
            raise ProfileParseError("Empty profile expression")
        try:
            tree = ast.parse(text, mode="eval")
        except SyntaxError as e:
            self.logger.error(f"Error parsing profile '{expression}': {e}")
            raise ProfileParseError(f"Invalid profile expression '{expression}': {e.msg}") from e
        self._validate(tree.body, p, expression)
        return PolynomialProfile(p, expression.strip(), self._compile(tree.body), name=name)

    def _has_variables(self, node: ast.AST) -> bool:
        return any(isinstance(child, ast.Name) for child in ast.walk(node))

    def _constant(self, node: ast.AST, expression: str) -> Fraction:
        """Exact value of a variable-free subtree."""
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
                raise ProfileParseError(f"Unsupported constant {node.value!r} in '{expression}'")
            return Fraction(str(node.value))
        if isinstance(node, ast.UnaryOp) and type(node.op) in self.unary_operators:
            value = self._constant(node.operand, expression)
            return -value if isinstance(node.op, ast.USub) else value
        if isinstance(node, ast.BinOp) and type(node.op) in self.operators:
            left = self._constant(node.left, expression)
            right = self._constant(node.right, expression)
            if isinstance(node.op, ast.Div) and right == 0:
                raise ProfileParseError(f"Division by zero in '{expression}'")
            if isinstance(node.op, ast.Pow):
                if right.denominator != 1 or right < 0:
                    raise ProfileParseError(f"Powers must be non-negative integers in '{expression}'")
                return left ** int(right)
            return {
                ast.Add: lambda: left + right,
                ast.Sub: lambda: left - right,
                ast.Mult: lambda: left * right,
                ast.Div: lambda: left / right,
            }[type(node.op)]()
        raise ProfileParseError(f"Unsupported syntax in '{expression}'")

    def _validate(self, node: ast.AST, p: int, expression: str) -> None:
        if isinstance(node, ast.Name):
            match = VARIABLE.match(node.id)
            if not match:
                raise ProfileParseError(f"Unknown variable '{node.id}' in '{expression}' (use c1..c{p})")
            if int(match.group(1)) > p:
                raise ProfileParseError(f"Variable '{node.id}' exceeds rank {p} in '{expression}'")
            return
        if not self._has_variables(node):
            self._constant(node, expression)
            return
        if isinstance(node, ast.UnaryOp) and type(node.op) in self.unary_operators:
            self._validate(node.operand, p, expression)
            return
        if isinstance(node, ast.BinOp) and type(node.op) in self.operators:
            if isinstance(node.op, ast.Pow):
                if self._has_variables(node.right):
                    raise ProfileParseError(f"Exponents must be constant in '{expression}'")
                exponent = self._constant(node.right, expression)
                if exponent.denominator != 1 or exponent < 0:
                    raise ProfileParseError(f"Powers must be non-negative integers in '{expression}'")
            elif isinstance(node.op, ast.Div):
                if self._has_variables(node.right):
                    raise ProfileParseError(f"Only division by constants is allowed in '{expression}'")
                if self._constant(node.right, expression) == 0:
                    raise ProfileParseError(f"Division by zero in '{expression}'")
            self._validate(node.left, p, expression)
            if not isinstance(node.op, (ast.Pow, ast.Div)):
                self._validate(node.right, p, expression)
            return
        raise ProfileParseError(f"Unsupported syntax in '{expression}'")

    def _compile(self, node: ast.AST) -> Callable[[np.ndarray], np.ndarray]:
        if not self._has_variables(node):
            value = float(self._constant(node, ""))
            return lambda c: value
        if isinstance(node, ast.Name):
            index = int(VARIABLE.match(node.id).group(1)) - 1
            return lambda c: c[..., index]
        if isinstance(node, ast.UnaryOp):
            op = self.unary_operators[type(node.op)]
            operand = self._compile(node.operand)
            return lambda c: op(operand(c))
        op = self.operators[type(node.op)]
        left = self._compile(node.left)
        if isinstance(node.op, ast.Pow):
            exponent = int(self._constant(node.right, ""))
            return lambda c: op(left(c), exponent)
        right = self._compile(node.right)
        return lambda c: op(left(c), right(c))
