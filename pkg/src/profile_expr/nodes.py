from dataclasses import dataclass
from typing import Union

UNARY_FUNCTIONS = ("sin", "cos", "exp", "ln", "sinh", "cosh", "tanh", "sqrt", "abs")
BINARY_OPERATORS = ("+", "-", "*", "/", "^")


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Unary:
    """`op` is "neg" or one of UNARY_FUNCTIONS."""

    op: str
    operand: "ExprAst"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "ExprAst"
    right: "ExprAst"


ExprAst = Union[Const, Var, Unary, Binary]


def has_variable(node: ExprAst) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, Const):
        return False
    if isinstance(node, Unary):
        return has_variable(node.operand)
    return has_variable(node.left) or has_variable(node.right)


def to_text(node: ExprAst) -> str:
    """
    Print an AST as fully parenthesised source that parses back to an
    evaluation-equivalent tree.
    """
    if isinstance(node, Var):
        return "u"
    if isinstance(node, Const):
        text = repr(float(node.value))
        return f"({text})" if node.value < 0 else text
    if isinstance(node, Unary):
        if node.op == "neg":
            return f"(-{to_text(node.operand)})"
        return f"{node.op}({to_text(node.operand)})"
    return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
