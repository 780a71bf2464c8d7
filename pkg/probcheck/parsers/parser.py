"""
Recursive-descent parser for problem files.

Grammar::

    file      := { decl } ;
    decl      := spacedecl | eventdecl | forkdecl ;
    spacedecl := "space" IDENT "[" INT "]" "uniform" "(" INT ")" ;
    eventdecl := "event" IDENT ":" expr ;
    forkdecl  := "fork" IDENT ":" atom { "," atom } ;
    expr      := andexpr { "or" andexpr } ;
    andexpr   := unary { "and" unary } ;
    unary     := "not" unary | "(" expr ")" | "true" | "false" | atom ;
    atom      := ref ( "==" | "!=" ) ( ref | INT | MONTH ) ;
    ref       := IDENT "[" INT "]" ;

MONTH is a month name or three-letter abbreviation (any case), accepted when
the left-hand family has twelve categories.
"""

from dataclasses import dataclass

from loguru import logger

from ..core.exceptions import ProblemParseError
from ..core.models import (
    FALSE,
    TRUE,
    And,
    Atom,
    CategoricalFamily,
    Comparison,
    EventExpr,
    Not,
    Or,
    SampleSpace,
    VarRef,
)
from ..core.validation import validate_atom
from .lexer import DECL_KEYWORDS, Token, TokenKind, tokenize
from .models import Fork, NamedEvent, ParseDiagnostic, ProblemSet, Severity, SourceSpan


MONTHS = (
    "january",
    "february",
    "march",
    "april",
    "may",
    "june",
    "july",
    "august",
    "september",
    "october",
    "november",
    "december",
)
MONTH_ALIASES = {name: number for number, month in enumerate(MONTHS, start=1) for name in (month, month[:3])}
MONTH_CARDINALITY = 12
MAX_NESTING = 100


class _SyntaxError(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        self.diagnostic = diagnostic
        super().__init__(diagnostic.message)


@dataclass(frozen=True)
class _AtomSite:
    """An atom as written: its span and, when the rhs was a month name, that name."""

    atom: Atom
    span: SourceSpan
    month: str | None = None


@dataclass(frozen=True)
class _Declaration:
    name: str
    name_span: SourceSpan
    sites: tuple[_AtomSite, ...]
    expr: EventExpr | None = None
    atoms: tuple[Atom, ...] = ()


@dataclass(frozen=True)
class _FamilyDecl:
    family: CategoricalFamily
    span: SourceSpan


class _Parser:
    """Token cursor plus the grammar rules; collects diagnostics instead of stopping at the first error."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.diagnostics: list[ParseDiagnostic] = []
        self.families: list[_FamilyDecl] = []
        self.events: list[_Declaration] = []
        self.forks: list[_Declaration] = []
        self.sites: list[_AtomSite] = []
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    @property
    def previous(self) -> Token | None:
        return self.tokens[self.pos - 1] if self.pos > 0 else None

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def error_here(self, expected: str) -> _SyntaxError:
        """
        Build a syntax error for the current token.

        When the offending token starts a later line than the last consumed token
        (or is end of input), the error points just past the last consumed token:
        the missing piece belongs to that line.
        """
        token = self.current
        previous = self.previous
        if previous is not None and (token.kind is TokenKind.EOF or token.line > previous.line):
            span = SourceSpan(line=previous.line, column=previous.end_column, length=0)
        else:
            span = token.span
        return _SyntaxError(ParseDiagnostic(span=span, message=f"expected {expected} but found {token.describe()}"))

    def expect(self, kind: TokenKind, expected: str | None = None) -> Token:
        if self.current.kind is not kind:
            if expected is None:
                expected = "an identifier" if kind is TokenKind.IDENT else f"'{kind.value}'"
            raise self.error_here(expected)
        return self.advance()

    def expect_keyword(self, word: str) -> Token:
        if not self.current.is_keyword(word):
            raise self.error_here(f"'{word}'")
        return self.advance()

    def parse_file(self) -> None:
        while self.current.kind is not TokenKind.EOF:
            start = self.pos
            try:
                token = self.current
                if token.is_keyword("space"):
                    self.parse_space()
                elif token.is_keyword("event"):
                    self.parse_event()
                elif token.is_keyword("fork"):
                    self.parse_fork()
                else:
                    raise _SyntaxError(
                        ParseDiagnostic(
                            span=token.span,
                            message=f"expected 'space', 'event' or 'fork' but found {token.describe()}",
                        )
                    )
            except _SyntaxError as error:
                self.diagnostics.append(error.diagnostic)
                self.synchronize(start)

    def synchronize(self, start: int) -> None:
        """Skip to the next declaration keyword, consuming at least one token."""
        if self.pos == start:
            self.advance()
        while self.current.kind is not TokenKind.EOF and not (
            self.current.kind is TokenKind.KEYWORD and self.current.text in DECL_KEYWORDS
        ):
            self.advance()

    def parse_positive_int(self) -> tuple[int, Token]:
        token = self.expect(TokenKind.INT, "an integer")
        value = int(token.text)
        if value < 1:
            self.diagnostics.append(ParseDiagnostic(span=token.span, message=f"expected a positive integer, got {value}"))
        return value, token

    def parse_space(self) -> None:
        self.expect_keyword("space")
        name = self.expect(TokenKind.IDENT)
        self.expect(TokenKind.LBRACKET)
        count, count_token = self.parse_positive_int()
        self.expect(TokenKind.RBRACKET)
        self.expect_keyword("uniform")
        self.expect(TokenKind.LPAREN)
        cardinality, _ = self.parse_positive_int()
        self.expect(TokenKind.RPAREN)
        if count < 1 or cardinality < 1:
            return
        if any(decl.family.name == name.text for decl in self.families):
            self.diagnostics.append(ParseDiagnostic(span=name.span, message=f"duplicate space declaration '{name.text}'"))
            return
        self.families.append(
            _FamilyDecl(family=CategoricalFamily(name=name.text, count=count, cardinality=cardinality), span=name.span)
        )
        logger.trace(f"Declared family {name.text}[{count}] uniform({cardinality}) at {count_token.span}")

    def parse_event(self) -> None:
        self.expect_keyword("event")
        name = self.expect(TokenKind.IDENT)
        self.expect(TokenKind.COLON)
        self.sites = []
        expr = self.parse_expr()
        self.events.append(_Declaration(name=name.text, name_span=name.span, sites=tuple(self.sites), expr=expr))

    def parse_fork(self) -> None:
        self.expect_keyword("fork")
        name = self.expect(TokenKind.IDENT)
        self.expect(TokenKind.COLON)
        self.sites = []
        atoms = self.parse_atom_list()
        self.forks.append(_Declaration(name=name.text, name_span=name.span, sites=tuple(self.sites), atoms=atoms))

    def parse_atom_list(self) -> tuple[Atom, ...]:
        atoms = [self.parse_atom()]
        while self.current.kind is TokenKind.COMMA:
            self.advance()
            atoms.append(self.parse_atom())
        return tuple(atoms)

    def parse_expr(self) -> EventExpr:
        children = [self.parse_and()]
        while self.current.is_keyword("or"):
            self.advance()
            children.append(self.parse_and())
        return children[0] if len(children) == 1 else Or(children=tuple(children))

    def parse_and(self) -> EventExpr:
        children = [self.parse_unary()]
        while self.current.is_keyword("and"):
            self.advance()
            children.append(self.parse_unary())
        return children[0] if len(children) == 1 else And(children=tuple(children))

    def parse_unary(self) -> EventExpr:
        token = self.current
        if token.is_keyword("not") or token.kind is TokenKind.LPAREN:
            return self.parse_nested(token)
        if token.is_keyword("true"):
            self.advance()
            return TRUE
        if token.is_keyword("false"):
            self.advance()
            return FALSE
        if token.kind is TokenKind.IDENT:
            return self.parse_atom()
        raise self.error_here("an expression")

    def parse_nested(self, token: Token) -> EventExpr:
        """Parse a negation or a parenthesized expression, at most MAX_NESTING deep."""
        if self.depth >= MAX_NESTING:
            raise _SyntaxError(
                ParseDiagnostic(span=token.span, message=f"expression nested too deeply (limit {MAX_NESTING})")
            )
        self.advance()
        self.depth += 1
        try:
            if token.kind is TokenKind.LPAREN:
                inner = self.parse_expr()
                self.expect(TokenKind.RPAREN)
                return inner
            return Not(child=self.parse_unary())
        finally:
            self.depth -= 1

    def parse_ref(self) -> tuple[VarRef, Token]:
        name = self.expect(TokenKind.IDENT, "a draw reference")
        self.expect(TokenKind.LBRACKET)
        index = self.expect(TokenKind.INT, "an integer")
        self.expect(TokenKind.RBRACKET)
        return VarRef(family=name.text, index=int(index.text)), name

    def parse_atom(self) -> Atom:
        lhs, start = self.parse_ref()
        if self.current.kind is TokenKind.EQ:
            cmp = Comparison.EQ
        elif self.current.kind is TokenKind.NEQ:
            cmp = Comparison.NEQ
        else:
            raise self.error_here("'==' or '!='")
        self.advance()

        month: str | None = None
        token = self.current
        if token.kind is TokenKind.INT:
            self.advance()
            rhs: VarRef | int = int(token.text)
        elif token.kind is TokenKind.IDENT and self.tokens[self.pos + 1].kind is TokenKind.LBRACKET:
            rhs, _ = self.parse_ref()
        elif token.kind is TokenKind.IDENT and token.text.lower() in MONTH_ALIASES:
            self.advance()
            rhs = MONTH_ALIASES[token.text.lower()]
            month = token.text
        elif token.kind is TokenKind.IDENT:
            raise _SyntaxError(
                ParseDiagnostic(span=token.span, message=f"expected a draw reference or month name but found '{token.text}'")
            )
        else:
            raise self.error_here("a draw reference, integer or month name")

        end = self.previous
        length = end.offset + len(end.text) - start.offset if end is not None else 0
        atom = Atom(lhs=lhs, cmp=cmp, rhs=rhs)
        self.sites.append(
            _AtomSite(atom=atom, span=SourceSpan(line=start.line, column=start.column, length=length), month=month)
        )
        return atom


def _check_declaration(decl: _Declaration, space: SampleSpace) -> list[ParseDiagnostic]:
    diagnostics: list[ParseDiagnostic] = []
    for site in decl.sites:
        diagnostics.extend(ParseDiagnostic(span=site.span, message=d.message) for d in validate_atom(site.atom, space))
        family = space.family(site.atom.lhs.family)
        if site.month is not None and family is not None and family.cardinality != MONTH_CARDINALITY:
            diagnostics.append(
                ParseDiagnostic(
                    span=site.span,
                    message=f"month name '{site.month}' needs a family of cardinality 12, "
                    f"'{family.name}' has {family.cardinality}",
                )
            )
    return diagnostics


def _check_names(parser: _Parser) -> list[ParseDiagnostic]:
    diagnostics: list[ParseDiagnostic] = []
    seen: set[str] = set()
    for decl in sorted(parser.events + parser.forks, key=lambda d: (d.name_span.line, d.name_span.column)):
        if decl.name in seen:
            diagnostics.append(ParseDiagnostic(span=decl.name_span, message=f"duplicate name '{decl.name}'"))
        seen.add(decl.name)
    return diagnostics


def _unused_family_warnings(parser: _Parser) -> list[ParseDiagnostic]:
    used = {site.atom.lhs.family for decl in parser.events + parser.forks for site in decl.sites}
    used |= {
        site.atom.rhs.family
        for decl in parser.events + parser.forks
        for site in decl.sites
        if isinstance(site.atom.rhs, VarRef)
    }
    return [
        ParseDiagnostic(
            span=decl.span, message=f"family '{decl.family.name}' is never referenced", severity=Severity.WARNING
        )
        for decl in parser.families
        if decl.family.name not in used
    ]


def _sort(diagnostics: list[ParseDiagnostic]) -> list[ParseDiagnostic]:
    return sorted(diagnostics, key=lambda d: (d.span.line, d.span.column))


def parse_problem(text: str, source_name: str = "<string>") -> ProblemSet | list[ParseDiagnostic]:
    """
    Parse a problem file into a validated ProblemSet.

    Lexical, syntax and semantic errors are all collected; after a syntax error
    the parser resumes at the next declaration keyword. Semantic checks run the
    core validator on every atom and report its findings at the atom's span.

    Parameters:
        text (str): File contents (LF or CRLF line endings).
        source_name (str): Name recorded on the result, e.g. the file path.

    Returns:
        ProblemSet | list[ParseDiagnostic]: The problem set, or the ERROR diagnostics sorted by position
        (the first one is the earliest error).
    """
    tokens, lexical = tokenize(text)
    parser = _Parser(tokens)
    parser.parse_file()

    space = SampleSpace(families=tuple(decl.family for decl in parser.families))
    diagnostics = lexical + parser.diagnostics + _check_names(parser)
    for decl in parser.events + parser.forks:
        diagnostics.extend(_check_declaration(decl, space))

    errors = _sort([d for d in diagnostics if d.severity is Severity.ERROR])
    if errors:
        logger.debug(f"Parsing {source_name} failed with {len(errors)} error(s); first: {errors[0]}")
        return errors

    problem = ProblemSet(
        space=space,
        events=tuple(NamedEvent(name=decl.name, expr=decl.expr) for decl in parser.events if decl.expr is not None),
        forks=tuple(Fork(name=decl.name, atoms=decl.atoms) for decl in parser.forks),
        source_name=source_name,
        warnings=tuple(_sort(_unused_family_warnings(parser))),
    )
    logger.debug(f"Parsed {source_name}: {len(problem.events)} event(s), {len(problem.forks)} fork(s)")
    return problem


def load_problem(text: str, source_name: str = "<string>") -> ProblemSet:
    """
    Parse a problem file, raising on failure.

    Raises:
        ProblemParseError: Carrying the diagnostics when the text does not parse.
    """
    result = parse_problem(text, source_name)
    if isinstance(result, list):
        raise ProblemParseError(source_name, result)
    for warning in result.warnings:
        logger.warning(f"{source_name}:{warning}")
    return result


def parse_atoms(text: str, space: SampleSpace, source_name: str = "<atoms>") -> list[Atom] | list[ParseDiagnostic]:
    """
    Parse a comma-separated atom list such as ``person[0]==may, person[1]==may``.

    Parameters:
        text (str): The atom list.
        space (SampleSpace): Space the atoms are validated against.
        source_name (str): Name used in log messages.

    Returns:
        list[Atom] | list[ParseDiagnostic]: The atoms, or the ERROR diagnostics sorted by position.
    """
    tokens, diagnostics = tokenize(text)
    parser = _Parser(tokens)
    atoms: tuple[Atom, ...] = ()
    try:
        atoms = parser.parse_atom_list()
        if parser.current.kind is not TokenKind.EOF:
            raise parser.error_here("',' or end of input")
    except _SyntaxError as error:
        diagnostics.append(error.diagnostic)
    decl = _Declaration(name=source_name, name_span=SourceSpan(line=1, column=1), sites=tuple(parser.sites))
    diagnostics.extend(_check_declaration(decl, space))
    if diagnostics:
        return _sort(diagnostics)
    return list(atoms)
