"""Queue layouts of graphs: rainbows, exact queue-number, exhaustive censuses and counting bounds."""

from .core import (
    GraphFormatError,
    LabelledGraph,
    OrderedEdge,
    OrderedGraph,
    are_nested,
    format_graph,
    is_nested,
    normalize_edge,
    parse_graph,
    read_graph,
    write_graph,
)
from .layout import LayoutResult, exact_queue_number, heuristic_queue_number, ordered_queue_number
from .rainbow import (
    QueueAssignment,
    RainbowCertificate,
    greedy_partition,
    max_rainbow,
    nesting_depth,
    validate_assignment,
)
from .randreg import RegularSample, degree_check, gen_regular

__version__ = "0.1.0"
