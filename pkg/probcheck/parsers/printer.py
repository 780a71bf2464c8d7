"""
Canonical text for event expressions and problem sets.

The output reparses to a structurally identical tree: a child is parenthesized
exactly when the grammar would otherwise read it differently, which includes an
Or directly under an Or (and an And under an And), since the parser flattens
unparenthesized chains.
"""

from ..core.models import And, Atom, EventExpr, FalseExpr, Not, Or, TrueExpr
from .models import ProblemSet


_OR, _AND, _UNARY = 1, 2, 3


def _precedence(expr: EventExpr) -> int:
    if isinstance(expr, Or):
        return _OR
    if isinstance(expr, And):
        return _AND
    return _UNARY


def format_atom(atom: Atom) -> str:
    """Render an atom as ``lhs == rhs`` / ``lhs != rhs``."""
    return f"{atom.lhs} {atom.cmp.value} {atom.rhs}"


def pretty_print(expr: EventExpr) -> str:
    """
    Render `expr` in the problem-file syntax with minimal parentheses.

    Parameters:
        expr (EventExpr): The expression.

    Returns:
        str: Text such that parsing it yields `expr` again.
    """
    if isinstance(expr, Atom):
        return format_atom(expr)
    if isinstance(expr, TrueExpr):
        return "true"
    if isinstance(expr, FalseExpr):
        return "false"
    if isinstance(expr, Not):
        inner = pretty_print(expr.child)
        return f"not {inner}" if _precedence(expr.child) == _UNARY else f"not ({inner})"
    own = _precedence(expr)
    joiner = " or " if isinstance(expr, Or) else " and "
    parts = []
    for child in expr.children:
        text = pretty_print(child)
        parts.append(f"({text})" if _precedence(child) <= own else text)
    return joiner.join(parts)


def format_problem(problem: ProblemSet) -> str:
    """
    Render a whole problem set as a problem file.

    Returns:
        str: Space declarations, then events, then forks, one per line.
    """
    lines = [f"space {f.name}[{f.count}] uniform({f.cardinality})" for f in problem.space.families]
    lines.extend(f"event {event.name}: {pretty_print(event.expr)}" for event in problem.events)
    lines.extend(f"fork {fork.name}: {', '.join(format_atom(atom) for atom in fork.atoms)}" for fork in problem.forks)
    return "\n".join(lines) + "\n"
