"""
Structural operations on event expressions: complement, negation normal form,
free draws and traversal.
"""

from collections.abc import Iterator

from .models import FALSE, TRUE, And, Atom, EventExpr, FalseExpr, Not, Or, TrueExpr, VarRef


def complement(expr: EventExpr) -> Not:
    """Wrap `expr` in a negation without simplifying it."""
    return Not(child=expr)


def negate_atom(atom: Atom) -> Atom:
    """The atom with EQ and NEQ swapped; it holds exactly where `atom` fails."""
    return Atom(lhs=atom.lhs, cmp=atom.cmp.flipped(), rhs=atom.rhs)


def to_nnf(expr: EventExpr) -> EventExpr:
    """
    Rewrite `expr` into negation normal form.

    Negations are pushed through And/Or with De Morgan's laws, double negations
    cancel, negated atoms become atoms with the opposite comparison and negated
    literals swap. The result contains no Not node and holds on exactly the same
    outcomes as `expr`.

    Parameters:
        expr (EventExpr): Any expression.

    Returns:
        EventExpr: The equivalent expression in negation normal form.
    """
    return _nnf(expr, negated=False)


def _nnf(expr: EventExpr, negated: bool) -> EventExpr:
    if isinstance(expr, Atom):
        return negate_atom(expr) if negated else expr
    if isinstance(expr, TrueExpr):
        return FALSE if negated else TRUE
    if isinstance(expr, FalseExpr):
        return TRUE if negated else FALSE
    if isinstance(expr, Not):
        return _nnf(expr.child, not negated)
    children = tuple(_nnf(child, negated) for child in expr.children)
    if isinstance(expr, And):
        return Or(children=children) if negated else And(children=children)
    return And(children=children) if negated else Or(children=children)


def iter_atoms(expr: EventExpr) -> Iterator[Atom]:
    """Yield the atoms of `expr` left to right."""
    if isinstance(expr, Atom):
        yield expr
    elif isinstance(expr, Not):
        yield from iter_atoms(expr.child)
    elif isinstance(expr, And | Or):
        for child in expr.children:
            yield from iter_atoms(child)


def iter_subexpressions(expr: EventExpr, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], EventExpr]]:
    """
    Yield ``(path, subexpression)`` pairs in pre-order.

    A path lists child positions from the root; the child of a Not is position 0.
    """
    yield path, expr
    if isinstance(expr, Not):
        yield from iter_subexpressions(expr.child, (*path, 0))
    elif isinstance(expr, And | Or):
        for position, child in enumerate(expr.children):
            yield from iter_subexpressions(child, (*path, position))


def free_vars(expr: EventExpr) -> frozenset[VarRef]:
    """
    The set of draws referenced by atoms of `expr`.

    Returns:
        frozenset[VarRef]: Every draw appearing on either side of an atom; empty for literals.
    """
    refs: set[VarRef] = set()
    for atom in iter_atoms(expr):
        refs.add(atom.lhs)
        if isinstance(atom.rhs, VarRef):
            refs.add(atom.rhs)
    return frozenset(refs)


def depth(expr: EventExpr) -> int:
    """Height of the expression tree; atoms and literals have depth 1."""
    if isinstance(expr, Not):
        return 1 + depth(expr.child)
    if isinstance(expr, And | Or):
        return 1 + max(depth(child) for child in expr.children)
    return 1
