"""Character tables and Cartan matrices of finite transformation monoids."""

from .bichar import (BicharacterMatrix, TestElements, bicharacter_matrix, compute_c_m,
                     equivalent, fixed_points, fixed_points_exhaustive, schutz_data)
from .chartable import (CartanMatrix, MonoidCharTable, cartan_matrix, character_table,
                        simple_dimensions)
from .cyclotomic import Cyclotomic
from .enumeration import MonoidTable, contains, enumerate_monoid, index_of, parse_generators
from .green import GreenStructure, green_pair, green_structure, idempotents, regular_hclass
from .groupchar import conjugacy_classes, group_character_table
from .pipeline import analyze
from .radical import lclass_radical, trace_form_radical
from .schutz import PermGroup, induced_permutation, schutzenberger, tau
from .xform import Transformation, compose, idempotent_power, profile

__all__ = [
    "BicharacterMatrix", "CartanMatrix", "Cyclotomic", "GreenStructure", "MonoidCharTable",
    "MonoidTable", "PermGroup", "TestElements", "Transformation", "analyze",
    "bicharacter_matrix", "cartan_matrix", "character_table", "compose", "compute_c_m",
    "conjugacy_classes", "contains", "enumerate_monoid", "equivalent", "fixed_points",
    "fixed_points_exhaustive", "green_pair", "green_structure", "group_character_table",
    "idempotent_power", "idempotents", "index_of", "induced_permutation", "lclass_radical",
    "parse_generators", "profile", "regular_hclass", "schutz_data", "schutzenberger",
    "simple_dimensions", "tau", "trace_form_radical",
]
