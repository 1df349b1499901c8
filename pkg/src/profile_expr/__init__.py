# Re-export the public expression API
from src.profile_expr.evaluate import eval_jet2, evaluate, evaluate_constant
from src.profile_expr.jet import Jet2
from src.profile_expr.nodes import (
    BINARY_OPERATORS,
    UNARY_FUNCTIONS,
    Binary,
    Const,
    ExprAst,
    Unary,
    Var,
    has_variable,
    to_text,
)
from src.profile_expr.parser import parse, tokenize

__all__ = [
    "eval_jet2",
    "evaluate",
    "evaluate_constant",
    "Jet2",
    "BINARY_OPERATORS",
    "UNARY_FUNCTIONS",
    "Binary",
    "Const",
    "ExprAst",
    "Unary",
    "Var",
    "has_variable",
    "to_text",
    "parse",
    "tokenize",
]
