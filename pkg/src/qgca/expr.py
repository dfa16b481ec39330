"""Parse closed-form expressions such as ``Y2*(1 + z*q**2*Y1 + q**4*Y1**2)``.

Names: ``Y<i>`` (1-based generators), ``q``, ``z`` (the first symbolic
coefficient) and ``z<i>_<s>``.  Operators: ``+ - * / **`` with integer
exponents, integer literals and parentheses.
"""
from __future__ import annotations

import ast
import re

from .coeff import Coeff
from .series import ConeSeries
from .torus import ExchangeData


class ExpressionError(ValueError):
    pass


def parse_expression(text: str, ed: ExchangeData, order: int):
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval(tree.body, ed, order)


def _name(node: ast.Name, ed, order):
    ident = node.id
    m = re.fullmatch(r"Y(\d+)", ident)
    if m:
        i = int(m.group(1))
        if not 1 <= i <= ed.n:
            raise ExpressionError(f"{ident} out of range 1..{ed.n}")
        return ConeSeries.generator(ed.form, i - 1, order)
    if ident == "q":
        return Coeff.q(1)
    if ident == "z":
        for i, di in enumerate(ed.d):
            if di > 1:
                return ed.zcoeff(i, 1)
        raise ExpressionError("no frozen coefficient in this seed")
    m = re.fullmatch(r"z(\d+)_(\d+)", ident)
    if m:
        i, s = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= ed.n and 1 <= s < ed.d[i - 1]):
            raise ExpressionError(f"no coefficient {ident}")
        return ed.zcoeff(i - 1, s)
    raise ExpressionError(f"unknown name {ident!r}")


def _int(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _int(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    raise ExpressionError("exponents must be integer literals")


def _eval(node, ed, order):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Coeff(node.value)
    if isinstance(node, ast.Name):
        return _name(node, ed, order)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, ed, order)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            return _eval(node.left, ed, order) ** _int(node.right)
        a, b = _eval(node.left, ed, order), _eval(node.right, ed, order)
        if isinstance(node.op, ast.Add):
            return b + a if isinstance(b, ConeSeries) else a + b
        if isinstance(node.op, ast.Sub):
            return (-b) + a if isinstance(b, ConeSeries) else a - b
        if isinstance(node.op, ast.Mult):
            if isinstance(a, Coeff) and isinstance(b, ConeSeries):
                return b.scale(a)
            return a * b
        if isinstance(node.op, ast.Div):
            if isinstance(b, ConeSeries):
                a = a if isinstance(a, ConeSeries) else ConeSeries.scalar(ed.form, a, order)
            return a / b
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")
