"""Comaximal graphs of finite commutative rings.

Build finite rings from a small expression language (Z/n, polynomial
quotients, finite fields, square-zero extensions, direct products, or
explicit operation tables), attach the graph whose edges are the
comaximal element pairs, compute exact graph invariants, and run a
catalog of mechanised structural claims over whole families.
"""

from .claims import (
    Caps,
    ClaimReport,
    RingAnalysis,
    claim_catalog,
    corpus_family,
    product_family,
    revalidate_report,
    save_report,
    sweep,
    verify_pair,
    verify_ring,
    zn_family,
)
from .construct import (
    ProductExpr,
    PolyQuotExpr,
    SqzExpr,
    TableFileExpr,
    ZnExpr,
    build_ring,
    expression_size,
    format_expression,
    load_table_ring,
    minimal_irreducible,
    parse_expression,
    ring_from_text,
    save_table_ring,
)
from .errors import CapacityError, ParseError, RingAxiomError, TableFormatError
from .graphs import (
    GraphMetrics,
    PartitionStructure,
    SimpleGraph,
    build_comaximal_graph,
    chromatic_number,
    clique_number,
    complement,
    degree_profile,
    disjoint_union,
    distance,
    join,
    max_clique,
    metrics,
    multipartite_structure,
)
from .isomorphism import (
    are_isomorphic,
    canonical_certificate,
    refined_colors,
    verify_isomorphism,
)
from .rings import (
    CleanDecomposition,
    ElementMap,
    IdealSet,
    RingTable,
    direct_product,
    maximal_ideals_bruteforce,
    ring_isomorphic,
    validate_ring_axioms,
)
from .version import __version__

__all__ = [
    "Caps",
    "CapacityError",
    "ClaimReport",
    "CleanDecomposition",
    "ElementMap",
    "GraphMetrics",
    "IdealSet",
    "ParseError",
    "PartitionStructure",
    "PolyQuotExpr",
    "ProductExpr",
    "RingAnalysis",
    "RingAxiomError",
    "RingTable",
    "SimpleGraph",
    "SqzExpr",
    "TableFileExpr",
    "TableFormatError",
    "ZnExpr",
    "__version__",
    "are_isomorphic",
    "build_comaximal_graph",
    "build_ring",
    "canonical_certificate",
    "chromatic_number",
    "claim_catalog",
    "clique_number",
    "complement",
    "corpus_family",
    "degree_profile",
    "direct_product",
    "disjoint_union",
    "distance",
    "expression_size",
    "format_expression",
    "join",
    "load_table_ring",
    "max_clique",
    "maximal_ideals_bruteforce",
    "metrics",
    "minimal_irreducible",
    "multipartite_structure",
    "parse_expression",
    "product_family",
    "refined_colors",
    "revalidate_report",
    "ring_from_text",
    "ring_isomorphic",
    "save_report",
    "save_table_ring",
    "sweep",
    "validate_ring_axioms",
    "verify_isomorphism",
    "verify_pair",
    "verify_ring",
    "zn_family",
]
