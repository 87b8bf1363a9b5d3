from .codecs import (
    digraph6_decode,
    digraph6_encode,
    digraph_json_decode,
    digraph_json_encode,
    graph6_decode,
    graph6_encode,
    graph_json_decode,
    graph_json_encode,
    load_graph,
)
from .graph import (
    UNREACHABLE,
    BipartiteResult,
    Digraph,
    DistanceTable,
    Graph,
    add_apex,
    bipartite_double,
    cartesian_product,
    common_neighbors,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    digraph_from_arcs,
    distance_graph,
    distances,
    empty_graph,
    folded_graph,
    from_edges,
    hypercube,
    is_bipartite,
    taylor_double,
    taylor_extension,
)
from .partitions import (
    SIGNATURES,
    QuotientMatrix,
    VertexPartition,
    antipode_map,
    distance_partition,
    equitable_check,
    signature_partition,
)
