"""Nerves of finite categories and groupoids, adjunction and colimit checks."""
from .adjunction import UnitMap, counit_check, dir_counit_check, unit_map
from .categories import (FiniteCategory, FiniteGroupoid, bundled_categories, bundled_groupoids,
                         category_from_json, codiscrete_groupoid, commutative_square,
                         cyclic_group, discrete_groupoid, group_groupoid, klein_four, ordinal)
from .nerve import NerveSimplexList, arrow_edges, nerve, nerve_trunc2, symmetric_nerve
from .reports import FAIL, INCONCLUSIVE, PASS, CheckReport
from .vankampen import presentation_pushout, space_from_ref, span_from_json, vankampen_check

__all__ = [name for name in dir() if not name.startswith("_")]
