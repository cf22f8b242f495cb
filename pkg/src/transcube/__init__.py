"""Exact computations with cotransverse cube maps and symmetric transverse sets.

The package is organized around a small set of exact, immutable values:

- :mod:`transcube.cube` -- boolean cubes, the directed L1 metric, validated
  cotransverse map tables, standard generators and a text literal format;
- :mod:`transcube.homsets` -- exhaustive hom-set enumeration, the unique
  coface/endomap factorization and its finality;
- :mod:`transcube.topo` -- the max-min topologized extension of a map,
  evaluated on exact rational points by two independent algorithms;
- :mod:`transcube.paths` -- piecewise-linear directed paths, naturality,
  reparametrization, transport, Moore composition and induced face maps;
- :mod:`transcube.sts` -- finite symmetric transverse sets: representables,
  boundaries, free generation, pushouts, cellular assembly;
- :mod:`transcube.reedy` -- boundary hom quotients and latching objects of
  set-valued cotransverse objects;
- :mod:`transcube.geometry` -- skeleton distances and chain bounds in
  realizations;
- :mod:`transcube.suites` -- deterministic property-check suites, also
  exposed through the ``transcube`` command-line tool.
"""

from .cube import (
    INF,
    CubeMap,
    Vertex,
    coface,
    compose,
    d1_vertex,
    height,
    identity,
    max_min_collapse,
    min_max_collapse,
    symmetry,
    validate_cotransverse,
)
from .homsets import (
    BudgetExceeded,
    Factorization,
    check_factorization_final,
    count_homset,
    enumerate_cofaces,
    enumerate_homset,
    factorize,
)
from .topo import d1_point, d1_sym, d1_sym_witness, t_eval, t_eval_maxmin, t_eval_permutation
from .paths import (
    DPath,
    SegmentPath,
    induced_coface,
    induced_path_map,
    is_dpath,
    is_natural,
    moore_compose,
    naturalize,
    segment_path,
    transport,
)
from .sts import (
    Precubical,
    Sts,
    StsMap,
    boundary,
    certify_cellular,
    free_sts,
    pushout,
    representable,
    terminal_sts,
    truncate,
)
from .reedy import (
    CotransverseSetObj,
    boundary_hom,
    compare_latching_to_boundary,
    latching,
    matching_emptiness_check,
    weighted_coend_eval,
)
from .geometry import PointPresentation, SkeletonDigraph, chain_distance_sample, dpath_length, vertex_distance
from .suites import CheckSuiteReport, run_suite, suite_names

__version__ = "0.1.0"
