"""
Independence commands: component-over, d-indep, is-free-join, nonforking, forking-case
"""
from src.cli.commands import acl_oracle, add_graph, add_vertices, load_graph
from src.cli.outcome import CommandOutcome
from src.core.independence import component_over, d_independent, forking_case, is_free_join, nonforking_over


def component(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'component': component_over(graph, args.a, args.A)})


def d_indep(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result(d_independent(graph, args.b, args.C, args.A))


def free_join_check(args):
    graph = load_graph(args.graph)
    return CommandOutcome.result({'free_join': is_free_join(graph, args.B1, args.C, args.B2)})


def nonforking(args):
    graph = load_graph(args.graph)
    holds = nonforking_over(graph, args.a, args.A, args.B, acl_oracle(args, graph))
    return CommandOutcome.result({'nonforking': holds})


def case(args):
    graph = load_graph(args.graph)
    found = forking_case(graph, args.a, args.A, args.B, acl_oracle(args, graph))
    return CommandOutcome.result({'case': None if found is None else int(found),
                                  'name': None if found is None else found.name.lower()})


def _add_acl(parser):
    parser.add_argument('--acl', metavar='FILE', default=None,
                        help='acl table: JSON list of {"set": [...], "acl": [...]}; default acl(X) = X')


def register(subparsers):
    p = subparsers.add_parser('component-over', help='C(a/A): vertices reachable from a avoiding A')
    add_graph(p)
    p.add_argument('-a', required=True)
    add_vertices(p, '-A', dest='A', help_text='base set')
    p.set_defaults(handler=component)

    p = subparsers.add_parser('d-indep', help='d-independence of b from C over A')
    add_graph(p)
    add_vertices(p, '-b', dest='b', help_text='tuple b')
    add_vertices(p, '-C', dest='C', help_text='set C')
    add_vertices(p, '-A', dest='A', help_text='base set')
    p.set_defaults(handler=d_indep)

    p = subparsers.add_parser('is-free-join', help='whether B1 and B2 are freely joined over C')
    add_graph(p)
    add_vertices(p, '--B1', dest='B1', help_text='first side')
    add_vertices(p, '-C', dest='C', help_text='shared part')
    add_vertices(p, '--B2', dest='B2', help_text='second side')
    p.set_defaults(handler=free_join_check)

    p = subparsers.add_parser('nonforking', help='tp(a/B) does not fork over A')
    add_graph(p)
    add_vertices(p, '-a', dest='a', help_text='tuple a')
    add_vertices(p, '-A', dest='A', help_text='algebraically closed base')
    add_vertices(p, '-B', dest='B', help_text='superset of A')
    _add_acl(p)
    p.set_defaults(handler=nonforking)

    p = subparsers.add_parser('forking-case', help='which case of the forking criterion applies')
    add_graph(p)
    p.add_argument('-a', required=True)
    add_vertices(p, '-A', dest='A', help_text='base set')
    add_vertices(p, '-B', dest='B', help_text='superset of A')
    _add_acl(p)
    p.set_defaults(handler=case)
