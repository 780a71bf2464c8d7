"""
Evaluation of event expressions.

`evaluate` decides one outcome. `evaluate_columns` decides many outcomes at
once: each draw is a numpy array of category values, one entry per outcome, and
the result is a boolean array. The enumeration oracle and the sampler both go
through `evaluate_columns`.
"""

from collections.abc import Mapping

import numpy as np

from .exceptions import UnresolvedReferenceError
from .models import And, Atom, Comparison, EventExpr, FalseExpr, Not, Or, Outcome, TrueExpr, VarRef


def evaluate(expr: EventExpr, outcome: Outcome) -> bool:
    """
    Decide whether `outcome` belongs to the event `expr`.

    Parameters:
        expr (EventExpr): A validated expression.
        outcome (Outcome): A total outcome of the expression's space.

    Returns:
        bool: The truth value of `expr` at `outcome`.

    Raises:
        UnresolvedReferenceError: If an atom names a draw the outcome does not assign.
    """
    if isinstance(expr, Atom):
        left = _lookup(outcome, expr.lhs)
        right = _lookup(outcome, expr.rhs) if isinstance(expr.rhs, VarRef) else expr.rhs
        equal = left == right
        return equal if expr.cmp is Comparison.EQ else not equal
    if isinstance(expr, Not):
        return not evaluate(expr.child, outcome)
    if isinstance(expr, And):
        return all(evaluate(child, outcome) for child in expr.children)
    if isinstance(expr, Or):
        return any(evaluate(child, outcome) for child in expr.children)
    return isinstance(expr, TrueExpr)


def _lookup(outcome: Outcome, ref: VarRef) -> int:
    value = outcome.value_of(ref)
    if value is None:
        raise UnresolvedReferenceError(str(ref))
    return value


def evaluate_columns(expr: EventExpr, columns: Mapping[VarRef, np.ndarray], size: int) -> np.ndarray:
    """
    Evaluate `expr` over `size` outcomes given column-wise.

    Parameters:
        expr (EventExpr): A validated expression.
        columns (Mapping[VarRef, np.ndarray]): For every draw the expression references, an integer array of length `size`.
        size (int): Number of outcomes.

    Returns:
        np.ndarray: Boolean array of length `size`; entry i is the value of `expr` at outcome i.

    Raises:
        UnresolvedReferenceError: If a referenced draw has no column.
    """
    if isinstance(expr, Atom):
        left = _column(columns, expr.lhs)
        right = _column(columns, expr.rhs) if isinstance(expr.rhs, VarRef) else expr.rhs
        if expr.cmp is Comparison.EQ:
            return np.equal(left, right)
        return np.not_equal(left, right)
    if isinstance(expr, Not):
        return np.logical_not(evaluate_columns(expr.child, columns, size))
    if isinstance(expr, And):
        result = evaluate_columns(expr.children[0], columns, size)
        for child in expr.children[1:]:
            result = np.logical_and(result, evaluate_columns(child, columns, size))
        return result
    if isinstance(expr, Or):
        result = evaluate_columns(expr.children[0], columns, size)
        for child in expr.children[1:]:
            result = np.logical_or(result, evaluate_columns(child, columns, size))
        return result
    if isinstance(expr, FalseExpr):
        return np.zeros(size, dtype=bool)
    return np.ones(size, dtype=bool)


def _column(columns: Mapping[VarRef, np.ndarray], ref: VarRef) -> np.ndarray:
    column = columns.get(ref)
    if column is None:
        raise UnresolvedReferenceError(str(ref))
    return column
