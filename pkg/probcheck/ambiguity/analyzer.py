"""
De Morgan ambiguity analysis.

"Two people were not born in May" can mean "not both were born in May" or
"neither was born in May". Given the atoms of such a condition, this module
builds both readings, prices them exactly and reports how far apart they are.
It never picks a reading.
"""

from collections.abc import Sequence

from loguru import logger

from ..core.exceptions import ExpressionValidationError, InvalidReadingError
from ..core.models import And, Atom, EventExpr, Not, SampleSpace
from ..core.rational import format_fraction
from ..core.transforms import iter_subexpressions
from ..core.validation import validate
from ..exact.compositional import prob_compositional
from ..exact.models import ExactConfig
from ..exact.repeating import to_repeating_decimal
from ..parsers.printer import pretty_print
from .models import AmbiguitySite, ReadingPair, ReadingReport


def build_readings(atoms: Sequence[Atom]) -> tuple[EventExpr, EventExpr]:
    """
    The loose and strict readings of the negation of `atoms`.

    Returns:
        tuple[EventExpr, EventExpr]: ``(Not(And(atoms)), And(Not(a) for a in atoms))``; both are
        ``Not(atom)`` when there is a single atom.
    """
    if len(atoms) == 1:
        single = Not(child=atoms[0])
        return single, single
    loose = Not(child=And(children=tuple(atoms)))
    strict = And(children=tuple(Not(child=atom) for atom in atoms))
    return loose, strict


def dual_readings(space: SampleSpace, atoms: Sequence[Atom], config: ExactConfig | None = None) -> ReadingPair:
    """
    Build and price both readings of a negated condition.

    Parameters:
        space (SampleSpace): The sample space.
        atoms (Sequence[Atom]): The condition's atoms, at least one; polarities may be mixed.
        config (ExactConfig | None): Exact evaluation settings.

    Returns:
        ReadingPair: Both readings with their exact probabilities.

    Raises:
        InvalidReadingError: If `atoms` is empty or contains non-atoms.
        ExpressionValidationError: If an atom does not validate against `space`.
    """
    if not atoms:
        raise InvalidReadingError("the atom list is empty")
    for item in atoms:
        if not isinstance(item, Atom):
            raise InvalidReadingError(f"expected atoms only, got a '{getattr(item, 'kind', type(item).__name__)}' node")
    for atom in atoms:
        diagnostics = validate(atom, space)
        if diagnostics:
            raise ExpressionValidationError(diagnostics)

    loose, strict = build_readings(atoms)
    pair = ReadingPair(
        loose_reading=loose,
        strict_reading=strict,
        p_loose=prob_compositional(space, loose, config).probability,
        p_strict=prob_compositional(space, strict, config).probability,
    )
    logger.debug(f"Readings of {len(atoms)} atom(s): {pair.p_loose} vs {pair.p_strict}")
    return pair


def detect_ambiguity_sites(expr: EventExpr) -> list[AmbiguitySite]:
    """
    Find every negated conjunction in `expr`.

    The match is purely syntactic: each ``Not(And(c1, ..., cn))`` is reported with
    its path, in pre-order.

    Returns:
        list[AmbiguitySite]: The sites; empty when the expression has no "not both / neither" fork as written.
    """
    return [
        AmbiguitySite(location=path, sub_expression=node)
        for path, node in iter_subexpressions(expr)
        if isinstance(node, Not) and isinstance(node.child, And)
    ]


def explain(pair: ReadingPair, name: str | None = None) -> ReadingReport:
    """
    Render a ReadingPair for people.

    Parameters:
        pair (ReadingPair): The readings.
        name (str | None): Optional label, e.g. the fork name.

    Returns:
        ReadingReport: Both readings as text, their fractions and repeating decimals, the divergence
        and whether the readings are equivalent.
    """
    loose_value = f"{format_fraction(pair.p_loose)} = {to_repeating_decimal(pair.p_loose)}"
    strict_value = f"{format_fraction(pair.p_strict)} = {to_repeating_decimal(pair.p_strict)}"
    if pair.ambiguous:
        summary = (
            f"The readings differ: 'not both' gives {loose_value}, 'neither' gives {strict_value}; "
            f"the condition is ambiguous as stated."
        )
    else:
        summary = f"The readings coincide: both give {loose_value}."
    return ReadingReport(
        name=name,
        loose_reading=pretty_print(pair.loose_reading),
        strict_reading=pretty_print(pair.strict_reading),
        p_loose=format_fraction(pair.p_loose),
        p_loose_decimal=to_repeating_decimal(pair.p_loose),
        p_strict=format_fraction(pair.p_strict),
        p_strict_decimal=to_repeating_decimal(pair.p_strict),
        divergence=format_fraction(pair.divergence),
        divergence_decimal=to_repeating_decimal(pair.divergence),
        equivalent=not pair.ambiguous,
        summary=summary,
    )
