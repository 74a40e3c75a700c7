"""
Formula-engine commands: gamma-star, diag, eval, rank, univ, closure-type, realize
"""
from src.cli.commands import add_formula, add_graph, add_vertices, formula_argument, load_graph
from src.cli.outcome import CommandOutcome
from src.core.graph import ClassIndex
from src.data.graph_loader import load_closure_formula
from src.logic.builders import build_diagram, build_gamma_star, univ_axioms
from src.logic.closure_formula import closure_formula_rank, closure_type_code, realize_closure_formula
from src.logic.evaluator import eval_formula
from src.logic.formula import format_formula, free_variables, quantifier_rank
from src.utils.helpers import parse_pair_list


def gamma_star(args):
    return CommandOutcome.result({'formula': format_formula(build_gamma_star(args.m))})


def diag(args):
    graph = load_graph(args.graph)
    over = args.over if args.over else None
    return CommandOutcome.result({'formula': format_formula(build_diagram(graph, over=over))})


def evaluate(args):
    graph = load_graph(args.graph)
    formula = formula_argument(args)
    assignment = dict(parse_pair_list(args.assign)) if args.assign else {}
    holds = eval_formula(graph, formula, assignment)
    return CommandOutcome.result({'holds': holds, 'formula': format_formula(formula)})


def rank(args):
    formula = formula_argument(args)
    return CommandOutcome.result({'rank': quantifier_rank(formula),
                                  'free_variables': free_variables(formula),
                                  'formula': format_formula(formula)})


def univ(args):
    axioms = univ_axioms(args.alpha, args.size_bound, args.path_bound)
    payload = {'alpha': str(args.alpha), 'axioms': [format_formula(a) for a in axioms]}
    if args.graph:
        graph = load_graph(args.graph)
        failing = [format_formula(a) for a in axioms if not eval_formula(graph, a)]
        payload['failing'] = failing
        payload['satisfied'] = not failing
    return CommandOutcome.result(payload)


def closure_type(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'code': closure_type_code(graph, args.tuple)})


def realize(args):
    graph = load_graph(args.graph)
    formula = load_closure_formula(args.closure_formula)
    found = realize_closure_formula(formula, graph)
    return CommandOutcome.result({'rank': closure_formula_rank(formula), 'realization': found})


def register(subparsers):
    p = subparsers.add_parser('gamma-star', help='the closedness formula for m variables')
    p.add_argument('-m', type=int, required=True)
    p.set_defaults(handler=gamma_star)

    p = subparsers.add_parser('diag', help='diagram of a graph, optionally relative to a subset')
    add_graph(p)
    add_vertices(p, '--over', dest='over', help_text='base vertices', required=False)
    p.set_defaults(handler=diag)

    p = subparsers.add_parser('eval', help='truth value of a formula on a graph')
    add_graph(p)
    add_formula(p)
    p.add_argument('--assign', default=None, metavar='PAIRS', help='assignment as var:vertex,...')
    p.set_defaults(handler=evaluate)

    p = subparsers.add_parser('rank', help='quantifier rank of a formula')
    add_formula(p)
    p.set_defaults(handler=rank)

    p = subparsers.add_parser('univ', help='finite fragment of the axioms of K_alpha')
    p.add_argument('--alpha', type=ClassIndex.parse, required=True)
    p.add_argument('--size-bound', type=int, required=True)
    p.add_argument('--path-bound', type=int, required=True)
    p.add_argument('-g', '--graph', default=None, metavar='FILE', help='also evaluate every axiom on this graph')
    p.set_defaults(handler=univ)

    p = subparsers.add_parser('closure-type', help='canonical code of the marked closure of a tuple')
    add_graph(p)
    add_vertices(p, '-t', '--tuple', dest='tuple', help_text='ordered tuple')
    p.set_defaults(handler=closure_type)

    p = subparsers.add_parser('realize', help='first tuple satisfying a closure formula, with its closure')
    add_graph(p, help_text='search structure (graph JSON file)')
    p.add_argument('-c', '--closure-formula', required=True, metavar='FILE', help='closure formula JSON file')
    p.set_defaults(handler=realize)
