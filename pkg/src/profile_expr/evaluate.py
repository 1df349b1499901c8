from typing import Union

from src.errors import DomainError, ProfileError
from src.profile_expr import jet
from src.profile_expr.jet import Jet2
from src.profile_expr.nodes import Binary, Const, ExprAst, Unary, Var, has_variable, to_text
from src.profile_expr.parser import parse


def _eval(node: ExprAst, u: Jet2) -> Jet2:
    if isinstance(node, Var):
        return u
    if isinstance(node, Const):
        return Jet2.constant(node.value)
    try:
        if isinstance(node, Unary):
            arg = _eval(node.operand, u)
            if node.op == "neg":
                return -arg
            return jet.FUNCTIONS[node.op](arg)
        left = _eval(node.left, u)
        right = _eval(node.right, u)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            return left / right
        if has_variable(node.right):
            return jet.power(left, right)
        # u-free exponent: its jet is a constant
        return jet.power_const(left, right.value)
    except DomainError as exc:
        raise exc.at_node(to_text(node))


def eval_jet2(ast: ExprAst, u: Union[float, Jet2]) -> Jet2:
    """
    Evaluate (f, f', f'') at u. Passing a Jet2 for u composes: the result then
    carries derivatives of f(u(t)) with respect to whatever u was seeded with.
    """
    seed = u if isinstance(u, Jet2) else Jet2.variable(u)
    result = _eval(ast, seed)
    if not result.is_finite():
        raise DomainError("non-finite result", node=to_text(ast), value=seed.value)
    return result


def evaluate(ast: ExprAst, u: float) -> float:
    return eval_jet2(ast, u).value


def evaluate_constant(src: str) -> float:
    """Evaluate a u-free expression such as "pi/4" (CLI angles)."""
    ast = parse(src)
    if has_variable(ast):
        raise ProfileError(f"Expression {src!r} must not depend on u")
    return eval_jet2(ast, 0.0).value
