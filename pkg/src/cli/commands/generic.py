"""
Generic-builder commands: free-join, chain, pseudofinite, approximant, decide
"""
from src.cli.commands import add_formula, add_graph, add_vertices, formula_argument, load_graph
from src.cli.outcome import CommandOutcome
from src.core.graph import ClassIndex
from src.data.graph_loader import dump_graph
from src.generic.approximant import build_approximant, decide
from src.generic.builder import free_join, generic_chain, pseudofinite_chain


def _output(parser):
    parser.add_argument('-o', '--output', default=None, metavar='FILE',
                        help='write the graph here, with provenance next to it')


def _structure_payload(args, graph, provenance):
    if args.output:
        path = dump_graph(graph, args.output, provenance)
        return {'output': str(path), 'vertices': len(graph), 'provenance': provenance}
    return {'graph': graph, 'provenance': provenance}


def join(args):
    first, second = load_graph(args.left), load_graph(args.right)
    result = free_join(first, args.shared or (), second)
    return CommandOutcome.result(_structure_payload(args, result, None))


def chain(args):
    built = generic_chain(args.alpha, args.steps, args.size_bound)
    return CommandOutcome.result(_structure_payload(args, built.final, built.provenance()))


def pseudofinite(args):
    graph = pseudofinite_chain(args.alpha, args.i, args.size_bound)
    provenance = {'kind': 'pseudofinite_chain', 'alpha': str(args.alpha), 'i': args.i,
                  'size_bound': args.size_bound}
    return CommandOutcome.result(_structure_payload(args, graph, provenance))


def approximant(args):
    built = build_approximant(args.n, args.k, size_cap=args.size_cap, copies=args.copies,
                              prune_degree=not args.no_prune)
    return CommandOutcome.result(_structure_payload(args, built.graph, built.provenance()))


def decision(args):
    formula = formula_argument(args, sentence=True)
    result = decide(formula, args.n, allow_rank_3=args.allow_rank_3)
    return CommandOutcome.verdict(result.in_theory, result)


def register(subparsers):
    p = subparsers.add_parser('free-join', help='union of two graphs over their shared part')
    add_graph(p, '-g1', '--left', dest='left', help_text='first graph JSON file')
    add_graph(p, '-g2', '--right', dest='right', help_text='second graph JSON file')
    add_vertices(p, '--shared', dest='shared', help_text='shared vertices', required=False)
    _output(p)
    p.set_defaults(handler=join)

    p = subparsers.add_parser('chain', help='finite stage of a generic chain')
    p.add_argument('--alpha', type=ClassIndex.parse, required=True)
    p.add_argument('--steps', type=int, required=True)
    p.add_argument('--size-bound', type=int, required=True)
    _output(p)
    p.set_defaults(handler=chain)

    p = subparsers.add_parser('pseudofinite', help='disjoint union B_i of the first i + 1 members')
    p.add_argument('--alpha', type=ClassIndex.parse, required=True)
    p.add_argument('-i', type=int, required=True)
    p.add_argument('--size-bound', type=int, required=True)
    _output(p)
    p.set_defaults(handler=pseudofinite)

    p = subparsers.add_parser('approximant', help='finite approximant for sentences of rank k')
    p.add_argument('-n', type=ClassIndex.parse, required=True)
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--size-cap', type=int, default=None)
    p.add_argument('--copies', type=int, default=None)
    p.add_argument('--no-prune', action='store_true', help='do not skip trees of high degree')
    _output(p)
    p.set_defaults(handler=approximant)

    p = subparsers.add_parser('decide', help='whether a sentence belongs to the theory for K_n')
    p.add_argument('-n', type=ClassIndex.parse, required=True)
    add_formula(p)
    p.add_argument('--allow-rank-3', action='store_true', help='accept rank 3 (may hit capacity errors)')
    p.set_defaults(handler=decision)
