"""
Validation of event expressions against a sample space.
"""

from loguru import logger

from .models import Atom, Diagnostic, EventExpr, SampleSpace, VarRef
from .transforms import iter_atoms


def _atom_text(atom: Atom) -> str:
    return f"{atom.lhs} {atom.cmp.value} {atom.rhs}"


def _check_ref(ref: VarRef, atom: Atom, space: SampleSpace) -> list[Diagnostic]:
    family = space.family(ref.family)
    if family is None:
        return [
            Diagnostic(
                code="unknown_family",
                message=f"unknown family '{ref.family}' in '{_atom_text(atom)}'",
                expr=atom,
            )
        ]
    if ref.index >= family.count:
        return [
            Diagnostic(
                code="index_out_of_range",
                message=f"index {ref.index} out of range for family '{family.name}' with {family.count} draws",
                expr=atom,
            )
        ]
    return []


def validate_atom(atom: Atom, space: SampleSpace) -> list[Diagnostic]:
    """
    Check a single atom against `space`.

    Reports unknown families, draw indices beyond the family's count, constants
    outside 1..cardinality of the left-hand family, and comparisons of a draw
    with itself.

    Returns:
        list[Diagnostic]: All problems found; empty when the atom is valid.
    """
    diagnostics = _check_ref(atom.lhs, atom, space)
    if isinstance(atom.rhs, VarRef):
        diagnostics.extend(_check_ref(atom.rhs, atom, space))
        if atom.rhs == atom.lhs:
            diagnostics.append(
                Diagnostic(
                    code="self_comparison",
                    message=f"'{_atom_text(atom)}' compares a draw with itself",
                    expr=atom,
                )
            )
    else:
        family = space.family(atom.lhs.family)
        if family is not None and not 1 <= atom.rhs <= family.cardinality:
            diagnostics.append(
                Diagnostic(
                    code="constant_out_of_range",
                    message=f"constant {atom.rhs} outside 1..{family.cardinality} for family '{family.name}'",
                    expr=atom,
                )
            )
    return diagnostics


def validate(expr: EventExpr, space: SampleSpace) -> list[Diagnostic]:
    """
    Check every atom of `expr` against `space`.

    Parameters:
        expr (EventExpr): The expression to check.
        space (SampleSpace): The space it will be evaluated over.

    Returns:
        list[Diagnostic]: One diagnostic per problem, in atom order; empty means valid.
    """
    diagnostics: list[Diagnostic] = []
    for atom in iter_atoms(expr):
        diagnostics.extend(validate_atom(atom, space))
    if diagnostics:
        logger.debug(f"Validation found {len(diagnostics)} problem(s)")
    return diagnostics
