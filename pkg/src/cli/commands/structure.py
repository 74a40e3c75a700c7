"""
Strong-structure commands: closure, weak-closure, dim, classify-ext, unique-path
"""
from src.cli.commands import add_graph, add_vertices, load_graph
from src.cli.outcome import CommandOutcome
from src.core.strong_structure import (
    classify_extension, closure_star, dimension, is_closed, is_weakly_closed, unique_path_to, weak_closure,
)


def closure(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result(closure_star(graph, args.vertices))


def weak(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'weak_closure': weak_closure(graph, args.vertices)})


def dim(args):
    graph = load_graph(args.graph)
    payload = {'dim': dimension(graph, args.vertices),
               'closed': is_closed(graph, args.vertices),
               'weakly_closed': is_weakly_closed(graph, args.vertices)}
    return CommandOutcome.result(payload)


def classify(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result(classify_extension(args.A, graph))


def path(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'path': unique_path_to(graph, args.A, args.b, check_precondition=args.check)})


def register(subparsers):
    p = subparsers.add_parser('closure', help='cl*(S) with its chain of minimal pairs')
    add_graph(p)
    add_vertices(p, '-S', dest='vertices', help_text='vertex set')
    p.set_defaults(handler=closure)

    p = subparsers.add_parser('weak-closure', help='least weakly closed superset of S')
    add_graph(p)
    add_vertices(p, '-S', dest='vertices', help_text='vertex set')
    p.set_defaults(handler=weak)

    p = subparsers.add_parser('dim', help='dimension of S, with its closedness')
    add_graph(p)
    add_vertices(p, '-S', dest='vertices', help_text='vertex set')
    p.set_defaults(handler=dim)

    p = subparsers.add_parser('classify-ext', help='tag of the extension A -> B, B given as the graph')
    add_graph(p, help_text='graph JSON file of B')
    add_vertices(p, '-A', dest='A', help_text='vertices of A inside B')
    p.set_defaults(handler=classify)

    p = subparsers.add_parser('unique-path', help='path from b to a weakly closed A')
    add_graph(p)
    add_vertices(p, '-A', dest='A', help_text='weakly closed set')
    p.add_argument('-b', required=True)
    p.add_argument('--check', action='store_true', help='verify that A is weakly closed first')
    p.set_defaults(handler=path)
