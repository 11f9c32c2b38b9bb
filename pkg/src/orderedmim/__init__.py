"""Vertex-ordering tools for induced matchings on cocomparability graphs."""

from .cocomp import NotUmbrellaFree, compute_cocomp_ordering, verify_umbrella_free
from .generators import generate
from .graph import (
    EdgeOrdering,
    Graph,
    GraphClass,
    GraphFormatError,
    Ordering,
    complement,
    parse_graph,
    parse_ordering,
    serialize_graph,
    serialize_ordering,
)
from .linesquare import is_2k2, line_graph, line_square, square
from .mwim import MatchingSolution, ccwmim, deg2_profile
from .mwis import Solution, ccwmis
from .oracle import brute_mim, brute_mwis, mim_via_explicit_l2
from .patterns import (
    CLASS_PATTERNS,
    P1,
    P2,
    P3,
    P4,
    P5,
    PATTERNS,
    Pattern,
    PatternWitness,
    exists_pattern_free_ordering,
    find_pattern,
    verify_class_ordering,
)
from .rules import Relation, bullet_compare, bullet_order, star_order

__version__ = "0.1.0"
