"""
Command modules, one per library area

Each module exposes ``register(subparsers)``; handlers take the parsed
arguments and return a ``CommandOutcome``. Files are read inside the
handlers so that format errors keep their position.
"""
from src.core.independence import AclOracle
from src.data.graph_loader import load_acl_table, load_graph
from src.logic.parser import parse_formula
from src.utils.helpers import parse_vertex_list, read_text_argument


def add_graph(parser, *flags, dest='graph', help_text='graph JSON file'):
    parser.add_argument(*(flags or ('-g', '--graph')), dest=dest, required=True, metavar='FILE', help=help_text)


def add_vertices(parser, *flags, dest, help_text, required=True):
    parser.add_argument(*flags, dest=dest, type=parse_vertex_list, required=required,
                        metavar='IDS', help=f"{help_text} (comma-separated ids)")


def add_formula(parser):
    parser.add_argument('-f', '--formula', required=True, metavar='TEXT',
                        help='formula text, or @path to read it from a file')


def formula_argument(args, sentence=False):
    return parse_formula(read_text_argument(args.formula), sentence=sentence)


def acl_oracle(args, graph):
    """The acl given by --acl, or the trivial one."""
    if getattr(args, 'acl', None):
        return AclOracle.from_table(graph, load_acl_table(args.acl, graph), name=args.acl)
    return AclOracle.trivial(graph)


__all__ = ['add_graph', 'add_vertices', 'add_formula', 'formula_argument', 'acl_oracle', 'load_graph']
