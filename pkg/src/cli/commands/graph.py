"""
Graph-core commands: delta, class-check, dist, neighborhood, canonical-code,
enumerate, subdiv-clique
"""
from src.cli.commands import add_graph, add_vertices, load_graph
from src.cli.outcome import CommandOutcome
from src.core.canonical import canonical_code
from src.core.graph import ClassIndex, class_membership, dist, enumerate_class, enumerate_trees, neighborhood, predimension
from src.core.subdivision import find_subdivided_clique
from src.utils.helpers import format_distance


def delta(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'delta': predimension(graph, args.vertices)})


def class_check(args):
    graph = load_graph(args.graph)
    report = class_membership(graph, args.alpha)
    payload = {'member': report.is_member, 'alpha': str(report.alpha)}
    if report.violation is not None:
        payload['violation'] = report.violation.to_dict()
    return CommandOutcome.verdict(report.is_member, payload)


def distance(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'dist': format_distance(dist(graph, args.a, args.b))})


def neighbourhood(args):
    graph = load_graph(args.graph)
    local = neighborhood(graph, args.vertex, args.radius)
    return CommandOutcome.result({'graph': local.graph, 'root': local.root})


def canonical(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'code': canonical_code(graph, args.marks or ())})


def enumerate_members(args):
    if args.trees:
        members = enumerate_trees(args.alpha, args.max_size, args.max_degree)
    else:
        members = enumerate_class(args.alpha, args.max_size)
    return CommandOutcome.result({'count': len(members), 'graphs': members})


def subdivided_clique(args):
    graph = load_graph(args.graph)
    witness = find_subdivided_clique(graph, args.m, args.r)
    return CommandOutcome.result({'contains': witness is not None, 'witness': witness})


def register(subparsers):
    p = subparsers.add_parser('delta', help='predimension of a vertex set')
    add_graph(p)
    add_vertices(p, '-S', dest='vertices', help_text='vertex set')
    p.set_defaults(handler=delta)

    p = subparsers.add_parser('class-check', help='membership in K_alpha, with a violation witness')
    add_graph(p)
    p.add_argument('--alpha', type=ClassIndex.parse, required=True, help="natural number or 'omega'")
    p.set_defaults(handler=class_check)

    p = subparsers.add_parser('dist', help='distance between two vertices')
    add_graph(p)
    p.add_argument('-a', required=True)
    p.add_argument('-b', required=True)
    p.set_defaults(handler=distance)

    p = subparsers.add_parser('neighborhood', help='induced r-neighbourhood of a vertex')
    add_graph(p)
    p.add_argument('--vertex', required=True)
    p.add_argument('-r', '--radius', type=int, required=True)
    p.set_defaults(handler=neighbourhood)

    p = subparsers.add_parser('canonical-code', help='canonical code of a forest with ordered marks')
    add_graph(p)
    add_vertices(p, '--marks', dest='marks', help_text='ordered marks', required=False)
    p.set_defaults(handler=canonical)

    p = subparsers.add_parser('enumerate', help='members of K_alpha up to isomorphism')
    p.add_argument('--alpha', type=ClassIndex.parse, required=True)
    p.add_argument('--max-size', type=int, required=True)
    p.add_argument('--trees', action='store_true', help='connected members only')
    p.add_argument('--max-degree', type=int, default=None, help='with --trees: skip trees above this degree')
    p.set_defaults(handler=enumerate_members)

    p = subparsers.add_parser('subdiv-clique', help='search for a subdivided K_m with paths of length <= r')
    add_graph(p)
    p.add_argument('-m', type=int, required=True)
    p.add_argument('-r', type=int, required=True)
    p.set_defaults(handler=subdivided_clique)
