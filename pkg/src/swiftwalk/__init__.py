try:
    from importlib.metadata import version
except ImportError:
    from importlib_metadata import version  # For Python <3.8

__version__ = version("swiftwalk")


from .graph import Graph, build_graph, generate_family, cone, disjoint_union, analyze
from .chiral import PhaseAssignment, ChiralMatrix, build_chiral
from .swift import SwiftReport, synthesize_auto, synthesize_cone_walk
from .dynamics import return_series, transport_probability, qsl
