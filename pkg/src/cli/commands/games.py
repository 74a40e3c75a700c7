"""
Game-engine commands: ef, distance-ef, k-similar, rs-value, sufficient
"""
from src.cli.commands import add_graph, load_graph
from src.cli.outcome import CommandOutcome
from src.games.ef_game import distance_ef_game, ef_game, k_similar
from src.games.rs_value import RootedTree, rs_value, rs_value_at
from src.games.sufficiency import duplicator_sufficient
from src.utils.helpers import parse_pair_list


def _boards(parser):
    add_graph(parser, '-g1', '--left', dest='left', help_text='left graph JSON file')
    add_graph(parser, '-g2', '--right', dest='right', help_text='right graph JSON file')


def _start_round(args):
    return True if args.start_is_round else None


def ef(args):
    left, right = load_graph(args.left), load_graph(args.right)
    start = parse_pair_list(args.start) if args.start else None
    result = ef_game(left, right, args.k, start=start, memoize=not args.no_memo, transcript=args.transcript)
    return CommandOutcome.verdict(result.duplicator_wins, result)


def distance_ef(args):
    left, right = load_graph(args.left), load_graph(args.right)
    result = distance_ef_game(left, args.a, right, args.b, args.k, start_is_round=_start_round(args),
                              memoize=not args.no_memo, transcript=args.transcript)
    return CommandOutcome.verdict(result.duplicator_wins, result)


def similar(args):
    left, right = load_graph(args.left), load_graph(args.right)
    holds = k_similar(left, args.a, right, args.b, args.k, args.r, start_is_round=_start_round(args))
    return CommandOutcome.verdict(holds, {'similar': holds, 'k': args.k, 'r': args.r})


def value(args):
    graph = load_graph(args.graph)
    if args.local:
        found = rs_value_at(graph, args.root, args.r, args.s)
    else:
        found = rs_value(RootedTree(graph, args.root), args.r, args.s)
    return CommandOutcome.result({'code': found.code, 'value': found.to_jsonable(), 'r': args.r, 's': args.s})


def sufficient(args):
    left, right = load_graph(args.left), load_graph(args.right)
    return CommandOutcome.result(duplicator_sufficient(left, right, args.k))


def _game_flags(parser):
    parser.add_argument('-k', type=int, required=True, help='number of rounds')
    parser.add_argument('--transcript', action='store_true', help='include a principal line of play')
    parser.add_argument('--no-memo', action='store_true', help='solve without the memo table')


def register(subparsers):
    p = subparsers.add_parser('ef', help='k-round Ehrenfeucht-Fraisse game')
    _boards(p)
    _game_flags(p)
    p.add_argument('--start', default=None, metavar='PAIRS', help='start pairs as left:right,...')
    p.set_defaults(handler=ef)

    p = subparsers.add_parser('distance-ef', help='distance game started by selecting (a, b)')
    _boards(p)
    p.add_argument('-a', required=True)
    p.add_argument('-b', required=True)
    _game_flags(p)
    p.add_argument('--start-is-round', action='store_true', help='the start pair consumes round 1')
    p.set_defaults(handler=distance_ef)

    p = subparsers.add_parser('k-similar', help='k-similarity of r-neighbourhoods')
    _boards(p)
    p.add_argument('-a', required=True)
    p.add_argument('-b', required=True)
    p.add_argument('-k', type=int, required=True)
    p.add_argument('-r', type=int, required=True)
    p.add_argument('--start-is-round', action='store_true', help='the start pair consumes round 1')
    p.set_defaults(handler=similar)

    p = subparsers.add_parser('rs-value', help='(r, s)-value of a rooted tree')
    add_graph(p)
    p.add_argument('--root', required=True)
    p.add_argument('-r', type=int, required=True)
    p.add_argument('-s', type=int, required=True)
    p.add_argument('--local', action='store_true', help='use the r-neighbourhood of the root in a forest')
    p.set_defaults(handler=value)

    p = subparsers.add_parser('sufficient', help='far-away similar vertex certificate for a Duplicator win')
    _boards(p)
    p.add_argument('-k', type=int, required=True)
    p.set_defaults(handler=sufficient)
