"""Leavitt inverse semigroups and graded Leavitt path algebras of finite graphs.

The usual entry points::

    from leavitt import catalog, enumerate_elements, decide_graded_iso
    F1, F2 = catalog.load("F1"), catalog.load("F2")
    cert = decide_graded_iso(F1, F2)
"""

from . import catalog
from .algebra import (AlgebraElement, RowSpace, ck_ideal_generators, induced_algebra_iso_check,
                      lpa_dimension_acyclic, quotient_dimension, structure_constants)
from .classify import (CanonicalInvariant, Iso, NonIso, Witness, apply_witness, basis_element,
                       brute_force_iso, build_witness, canonical_invariant, certificate_to_json,
                       compare_cardinality, decide_graded_iso, decompose, depth_profile,
                       verify_certificate, verify_witness)
from .graph import (Graph, GraphError, Path, ScopeError, base_paths, load_graph, parse_graph,
                    relative_depth, unique_cycle, unique_sink, validate)
from .semigroup import (ZERO, Element, edge, enumerate_elements, ghost, multiply, normalize,
                        parse_element, star, vertex)
from .shifts import (Descriptor, GlobalShift, LaurentPoly, Permute, UnitShift, apply_moves,
                     find_move_sequence, is_unit, lpa_descriptor, realize_matrix_iso,
                     sink_descriptors)

__version__ = "0.1.0"
