"""Developments of Coxeter polyhedra by rolling along mirrors."""

from .scheme import (CoxeterMatrix, CoxeterType, SchemeError, SchemeParseError,
                     classify, decompose, parse_scheme, serialize_scheme)
from .roots import RootSystem, generate_roots
from .reduction import (equipment_of, equipment_reduce, oracle_reduce,
                        reduce_mirror, table_reduce)
from .rolling import (components, mirror_group_data, rolling_scheme, unfold)
from .geomkernel import (GeometricChamber, SpaceModel, dihedral_angle,
                         realize_simplex, reflection)
from .develop import (DevelopedFigure, classify_meeting, full_development,
                      measure_polygon, rechamber, roll_onto_mirror, two_stage)
from .andreev import (AndreevVerdict, PlanarAngleMap, check_all,
                      check_forbidden_quad, check_prismatic, check_vertices,
                      parse_map)

__version__ = "0.1.0"

__all__ = [
    "CoxeterMatrix", "CoxeterType", "SchemeError", "SchemeParseError",
    "classify", "decompose", "parse_scheme", "serialize_scheme",
    "RootSystem", "generate_roots",
    "equipment_of", "equipment_reduce", "oracle_reduce", "reduce_mirror",
    "table_reduce",
    "components", "mirror_group_data", "rolling_scheme", "unfold",
    "GeometricChamber", "SpaceModel", "dihedral_angle", "realize_simplex",
    "reflection",
    "DevelopedFigure", "classify_meeting", "full_development",
    "measure_polygon", "rechamber", "roll_onto_mirror", "two_stage",
    "AndreevVerdict", "PlanarAngleMap", "check_all", "check_forbidden_quad",
    "check_prismatic", "check_vertices", "parse_map",
]
