"""
Property-based tests across the exact engines, transforms, printer and parser.
"""

from fractions import Fraction

import numpy as np
from hypothesis import assume, given
from hypothesis import strategies as st

from probcheck.ambiguity import dual_readings
from probcheck.core.evaluation import evaluate, evaluate_columns
from probcheck.core.models import And, Atom, Not, Or, Outcome
from probcheck.core.transforms import complement, iter_subexpressions, negate_atom, to_nnf
from probcheck.exact.compositional import prob_compositional
from probcheck.exact.enumeration import prob_enumerate
from probcheck.exact.repeating import from_repeating_decimal, to_repeating_decimal
from probcheck.parsers.lexer import TokenKind, tokenize
from probcheck.parsers.parser import load_problem, parse_problem
from probcheck.parsers.printer import format_problem
from probcheck.sampling.estimator import estimate
from probcheck.sampling.models import McConfig
from probcheck.sampling.rng import batch_generator, draw_columns

from .strategies import expressions, problem_sets, space_and_atom_list, space_and_expression, spaces


@st.composite
def space_and_two_expressions(draw):
    space = draw(spaces())
    return space, draw(expressions(space, max_depth=3)), draw(expressions(space, max_depth=3))


class TestExactProperties:
    """Identities that every exact result must satisfy."""

    @given(space_and_expression(max_depth=6))
    def test_methods_agree(self, case):
        """Test that compositional evaluation matches full enumeration."""
        space, expr = case
        assert prob_compositional(space, expr).probability == prob_enumerate(space, expr).probability

    @given(space_and_expression())
    def test_complement(self, case):
        """Test P(not e) == 1 - P(e)."""
        space, expr = case
        assert prob_enumerate(space, complement(expr)).probability == 1 - prob_enumerate(space, expr).probability

    @given(space_and_two_expressions())
    def test_inclusion_exclusion(self, case):
        """Test P(a or b) == P(a) + P(b) - P(a and b)."""
        space, a, b = case
        p = lambda expr: prob_enumerate(space, expr).probability  # noqa: E731
        assert p(Or(children=(a, b))) == p(a) + p(b) - p(And(children=(a, b)))

    @given(space_and_expression())
    def test_probability_is_count_over_size(self, case):
        """Test that every enumeration result is a reduced count / size."""
        space, expr = case
        result = prob_enumerate(space, expr)
        assert result.probability == Fraction(result.satisfying_count, space.total_size)


class TestTransformProperties:
    """Negation normal form keeps meaning."""

    @given(space_and_expression())
    def test_nnf_is_equivalent(self, case):
        """Test that NNF holds on the same outcomes and has no negation left."""
        space, expr = case
        nnf = to_nnf(expr)
        assert not any(isinstance(node, Not) for _, node in iter_subexpressions(nnf))
        assert prob_enumerate(space, nnf).satisfying_count == prob_enumerate(space, expr).satisfying_count
        assert prob_enumerate(space, And(children=(nnf, Not(child=expr)))).satisfying_count == 0

    @given(space_and_expression(max_depth=3), st.integers(min_value=0, max_value=2**32))
    def test_columns_match_scalar_evaluation(self, case, seed):
        """Test that vectorized evaluation agrees with evaluating outcome by outcome."""
        space, expr = case
        size = 32
        columns = draw_columns(space, batch_generator(seed, 0), size)
        vector = evaluate_columns(expr, columns, size)
        for row in range(size):
            outcome = Outcome(values={(ref.family, ref.index): int(col[row]) for ref, col in columns.items()})
            assert bool(vector[row]) is evaluate(expr, outcome)
        assert vector.dtype == np.bool_


class TestReadingProperties:
    """The strict reading always implies the loose one."""

    @given(space_and_atom_list())
    def test_strict_implies_loose(self, case):
        """Test that no outcome satisfies 'neither' without satisfying 'not both'."""
        space, atoms = case
        pair = dual_readings(space, atoms)
        assert pair.p_strict <= pair.p_loose
        counterexamples = And(children=(pair.strict_reading, Not(child=pair.loose_reading)))
        assert prob_enumerate(space, counterexamples).satisfying_count == 0

    @given(space_and_atom_list())
    def test_loose_reading_nnf(self, case):
        """Test that 'not both' normalizes to the disjunction of negated atoms with the same probability."""
        space, atoms = case
        pair = dual_readings(space, atoms)
        negated = tuple(negate_atom(atom) for atom in atoms)
        nnf = to_nnf(pair.loose_reading)
        assert nnf == (negated[0] if len(negated) == 1 else Or(children=negated))
        assert prob_enumerate(space, nnf).probability == pair.p_loose


class TestSamplingProperties:
    """Events evaluated on the same trials respect implication."""

    @given(space_and_two_expressions(), st.integers(min_value=0, max_value=2**32))
    def test_implication_monotone(self, case, seed):
        """Test hits(a and b) <= hits(a) <= hits(a or b) within one run."""
        space, a, b = case
        both, either = And(children=(a, b)), Or(children=(a, b))
        assert prob_enumerate(space, And(children=(both, Not(child=a)))).satisfying_count == 0
        events = [("a", a), ("both", both), ("either", either)]
        config = McConfig(trials=300, seed=seed, batch_size=128)
        hits = {est.event_name: est.hits for est in estimate(space, events, config)}
        assert hits["both"] <= hits["a"] <= hits["either"]


class TestRepeatingDecimalProperties:
    """Repeating notation is exact."""

    @given(st.fractions(min_value=0, max_value=1, max_denominator=5000))
    def test_round_trip(self, value):
        """Test that parsing the rendered decimal gives the fraction back."""
        assert from_repeating_decimal(to_repeating_decimal(value)) == value

    @given(st.fractions(min_value=0, max_value=1, max_denominator=5000))
    def test_canonical(self, value):
        """Test that rendering is a fixed point of parse-then-render."""
        text = to_repeating_decimal(value)
        assert to_repeating_decimal(from_repeating_decimal(text)) == text


class TestParserProperties:
    """Printing and parsing are inverse; syntax errors stay local."""

    @given(problem_sets(max_depth=6))
    def test_print_parse_round_trip(self, problem):
        """Test that a printed problem set parses back to the same content."""
        assert load_problem(format_problem(problem)).same_content(problem)

    @given(problem_sets(max_events=3), st.data())
    def test_error_locality(self, problem, data):
        """Test that deleting one token yields an error on the damaged line, if any."""
        text = format_problem(problem)
        tokens, lexical = tokenize(text)
        assert lexical == []
        candidates = [token for token in tokens if token.kind is not TokenKind.EOF]
        victim = data.draw(st.sampled_from(candidates))
        damaged = text[: victim.offset] + text[victim.offset + len(victim.text) :]
        result = parse_problem(damaged)
        assume(isinstance(result, list))
        assert any(diagnostic.span.line == victim.line for diagnostic in result), (damaged, result)

    @given(problem_sets())
    def test_atoms_survive_printing(self, problem):
        """Test that constants and draw pairs print and reparse unchanged."""
        reparsed = load_problem(format_problem(problem))
        for original, again in zip(problem.events, reparsed.events, strict=True):
            atoms_before = [node for _, node in iter_subexpressions(original.expr) if isinstance(node, Atom)]
            atoms_after = [node for _, node in iter_subexpressions(again.expr) if isinstance(node, Atom)]
            assert atoms_before == atoms_after
