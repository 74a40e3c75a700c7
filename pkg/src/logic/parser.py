"""
Lark grammar for the formula surface syntax.

    forall x. exists y. R(x,y) & x != y -> ~(y = x)

``~`` binds tighter than ``&``, ``&`` tighter than ``|``, ``|`` tighter than
``->`` (right-associative). A quantifier scopes as far right as possible, so
a quantified subformula under a connective needs parentheses.
"""
from __future__ import annotations

import logging
import warnings
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from src.core.errors import FormulaSyntaxError, UnboundVariableWarning
from src.logic.formula import (
    And, Bottom, Eq, Exists, Forall, Formula, Implies, Not, Or, Rel, Top, alpha_normalize, free_variables,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: formula

?formula: FORALL VAR "." formula        -> forall
        | EXISTS VAR "." formula        -> exists
        | implication

?implication: disjunction
            | disjunction "->" implication  -> implies

?disjunction: conjunction
            | conjunction ("|" conjunction)+  -> or_

?conjunction: unary
            | unary ("&" unary)+  -> and_

?unary: "~" unary   -> not_
      | atom

?atom: "R" "(" VAR "," VAR ")"   -> rel
     | VAR "=" VAR               -> eq
     | VAR "!=" VAR              -> neq
     | TRUE                      -> top
     | FALSE                     -> bottom
     | "(" formula ")"

FORALL.2: /forall\b/
EXISTS.2: /exists\b/
TRUE.2: /true\b/
FALSE.2: /false\b/
VAR: /(?!(forall|exists|true|false)\b)[a-z][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""


@v_args(inline=True)
class FormulaBuilder(Transformer):
    """Turns the parse tree into Formula nodes."""

    def forall(self, _keyword, var, body):
        return Forall(str(var), body)

    def exists(self, _keyword, var, body):
        return Exists(str(var), body)

    def implies(self, left, right):
        return Implies(left, right)

    def or_(self, *parts):
        return Or(tuple(parts))

    def and_(self, *parts):
        return And(tuple(parts))

    def not_(self, body):
        return Not(body)

    def rel(self, left, right):
        return Rel(str(left), str(right))

    def eq(self, left, right):
        return Eq(str(left), str(right))

    def neq(self, left, right):
        return Not(Eq(str(left), str(right)))

    def top(self, _token):
        return Top()

    def bottom(self, _token):
        return Bottom()


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(GRAMMAR, parser='lalr', maybe_placeholders=False)


def _end_position(text: str):
    lines = text.split('\n')
    return len(lines), len(lines[-1]) + 1


def parse_formula(text: str, sentence: bool = False, normalize: bool = False) -> Formula:
    """
    Parse ``text`` into a Formula.

    With ``normalize=True`` bound variables are renamed by quantifier depth
    (``alpha_normalize``), so shadowed and reused names get distinct scopes.
    The default keeps names as written so that printing round-trips.

    With ``sentence=True`` free variables are reported through
    ``UnboundVariableWarning`` (the formula is still returned).
    """
    try:
        tree = _parser().parse(text)
    except UnexpectedEOF as e:
        line, column = _end_position(text)
        raise FormulaSyntaxError(f"unexpected end of input, expected one of {sorted(e.expected)}",
                                 line, column) from None
    except UnexpectedInput as e:
        line, column = e.line, e.column
        if line is None or line < 1:
            line, column = _end_position(text)
        context = e.get_context(text).strip().splitlines()[0] if text else ''
        raise FormulaSyntaxError(f"unexpected input near {context!r}", line, column) from None

    try:
        formula = FormulaBuilder().transform(tree)
    except VisitError as e:
        raise FormulaSyntaxError(str(e.orig_exc), 1, 1) from None

    if sentence:
        unbound = sorted(free_variables(formula))
        if unbound:
            message = f"Sentence has unbound variable(s): {', '.join(unbound)}"
            logger.warning(message)
            warnings.warn(message, UnboundVariableWarning, stacklevel=2)
    return alpha_normalize(formula) if normalize else formula
