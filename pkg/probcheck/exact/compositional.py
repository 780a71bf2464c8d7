"""
Compositional exact evaluation.

Probabilities are assembled from the structure of the expression instead of
visiting the whole space:

- ``Not(e)`` is ``1 - P(e)``;
- an ``And`` is split into groups of conjuncts connected by shared draws; groups
  are independent, so their probabilities multiply, and a group of several
  conjuncts is counted over the joint values of its own draws only;
- an ``Or`` is split the same way; independent groups combine through their
  complements, and each group is expanded by inclusion-exclusion, skipping
  supersets of subsets that cannot occur together;
- atoms have closed forms (`atom_probability`).

The result always equals `prob_enumerate` on the same input.
"""

from fractions import Fraction
from itertools import combinations

from loguru import logger

from ..core.exceptions import ExpressionValidationError, SpaceTooLargeError
from ..core.models import And, Atom, Comparison, EventExpr, FalseExpr, Not, Or, SampleSpace, TrueExpr, VarRef
from ..core.transforms import free_vars
from ..core.validation import validate, validate_atom
from .enumeration import count_satisfying
from .models import ExactConfig, ExactMethod, ExactResult


MAX_INCLUSION_EXCLUSION = 12


def atom_probability(space: SampleSpace, atom: Atom) -> Fraction:
    """
    Closed-form probability of a single atom.

    A draw equals a given category with probability 1/k. Two draws with k1 and k2
    categories share min(k1, k2) values, so they are equal with probability
    min(k1, k2) / (k1 * k2), which is 1/k within one family. NEQ is the
    complement of EQ.

    Parameters:
        space (SampleSpace): The sample space.
        atom (Atom): A valid atom.

    Returns:
        Fraction: The exact probability.

    Raises:
        ExpressionValidationError: If the atom does not validate (including self-comparison).
    """
    diagnostics = validate_atom(atom, space)
    if diagnostics:
        raise ExpressionValidationError(diagnostics)
    left = space.cardinality_of(atom.lhs)
    if isinstance(atom.rhs, VarRef):
        right = space.cardinality_of(atom.rhs)
        p_equal = Fraction(min(left, right), left * right)
    else:
        p_equal = Fraction(1, left)
    return p_equal if atom.cmp is Comparison.EQ else 1 - p_equal


class _CompositionalEvaluator:
    """Recursive evaluator with a per-call memo keyed by subexpression."""

    def __init__(self, space: SampleSpace, config: ExactConfig):
        self.space = space
        self.config = config
        self._memo: dict[EventExpr, Fraction] = {}

    def probability(self, expr: EventExpr) -> Fraction:
        cached = self._memo.get(expr)
        if cached is not None:
            return cached
        if isinstance(expr, TrueExpr):
            result = Fraction(1)
        elif isinstance(expr, FalseExpr):
            result = Fraction(0)
        elif isinstance(expr, Atom):
            result = atom_probability(self.space, expr)
        elif isinstance(expr, Not):
            result = 1 - self.probability(expr.child)
        elif isinstance(expr, And):
            result = self.conjunction(list(expr.children))
        else:
            result = self.disjunction(list(expr.children))
        self._memo[expr] = result
        return result

    def conjunction(self, conjuncts: list[EventExpr]) -> Fraction:
        result = Fraction(1)
        for group in independent_groups(conjuncts):
            if len(group) == 1:
                result *= self.probability(group[0])
            else:
                result *= self.joint(And(children=tuple(group)))
            if result == 0:
                break
        return result

    def joint_size(self, expr: EventExpr) -> int:
        size = 1
        for ref in free_vars(expr):
            size *= self.space.cardinality_of(ref)
        return size

    def joint(self, expr: And | Or) -> Fraction:
        """Probability of a connective over dependent children, counted over their own draws."""
        refs = sorted(free_vars(expr), key=lambda r: (r.family, r.index))
        cardinalities = [self.space.cardinality_of(ref) for ref in refs]
        size = self.joint_size(expr)
        if size > self.config.max_enumeration:
            raise SpaceTooLargeError(size, self.config.max_enumeration)
        satisfying, total = count_satisfying(expr, refs, cardinalities, self.config.chunk_size)
        logger.debug(f"Joint count over {len(refs)} draw(s): {satisfying}/{total}")
        return Fraction(satisfying, total)

    def disjunction(self, disjuncts: list[EventExpr]) -> Fraction:
        """Independent groups of disjuncts combine as 1 - prod(1 - P(group))."""
        miss = Fraction(1)
        for group in independent_groups(disjuncts):
            miss *= 1 - self.inclusion_exclusion(group)
            if miss == 0:
                break
        return 1 - miss

    def inclusion_exclusion(self, disjuncts: list[EventExpr]) -> Fraction:
        """
        Inclusion-exclusion over one group of disjuncts.

        A subset whose conjunction has probability zero makes every superset
        zero too; such supersets are recorded and skipped without evaluation.
        Groups of more than MAX_INCLUSION_EXCLUSION disjuncts are counted over
        their own draws instead, when those fit under the enumeration cap.
        """
        if len(disjuncts) == 1:
            return self.probability(disjuncts[0])
        union = Or(children=tuple(disjuncts))
        if len(disjuncts) > MAX_INCLUSION_EXCLUSION and self.joint_size(union) <= self.config.max_enumeration:
            return self.joint(union)
        result = Fraction(0)
        empty: set[tuple[int, ...]] = set()
        for size in range(1, len(disjuncts) + 1):
            sign = 1 if size % 2 == 1 else -1
            for subset in combinations(range(len(disjuncts)), size):
                if size > 1 and any(subset[:i] + subset[i + 1 :] in empty for i in range(size)):
                    empty.add(subset)
                    continue
                term = self.conjunction([disjuncts[i] for i in subset])
                if term == 0:
                    empty.add(subset)
                result += sign * term
        return result


def independent_groups(conjuncts: list[EventExpr]) -> list[list[EventExpr]]:
    """
    Partition conjuncts into groups whose draw sets are pairwise disjoint.

    Two conjuncts land in the same group when they are linked by a chain of
    shared draws. Conjuncts without draws form groups of their own.

    Returns:
        list[list[EventExpr]]: Groups in order of their first member.
    """
    refs = [free_vars(expr) for expr in conjuncts]
    parent = list(range(len(conjuncts)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[VarRef, int] = {}
    for i, expr_refs in enumerate(refs):
        for ref in expr_refs:
            if ref in owner:
                parent[find(i)] = find(owner[ref])
            else:
                owner[ref] = i

    groups: dict[int, list[EventExpr]] = {}
    for i, expr in enumerate(conjuncts):
        groups.setdefault(find(i), []).append(expr)
    return list(groups.values())


def prob_compositional(space: SampleSpace, expr: EventExpr, config: ExactConfig | None = None) -> ExactResult:
    """
    Exact probability of `expr` from its structure.

    Parameters:
        space (SampleSpace): The sample space.
        expr (EventExpr): The event.
        config (ExactConfig | None): Cap for joint counts of dependent conjuncts.

    Returns:
        ExactResult: The probability, method COMPOSITIONAL.

    Raises:
        ExpressionValidationError: If `expr` does not validate against `space`.
        SpaceTooLargeError: If a group of dependent conjuncts spans more joint values than the cap.
    """
    config = config or ExactConfig()
    diagnostics = validate(expr, space)
    if diagnostics:
        raise ExpressionValidationError(diagnostics)
    probability = _CompositionalEvaluator(space, config).probability(expr)
    return ExactResult(probability=probability, method=ExactMethod.COMPOSITIONAL, space_size=space.total_size)
