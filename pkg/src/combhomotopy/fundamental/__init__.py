"""Fundamental groupoids, categories and groups as finite presentations."""
from .cosets import CosetLimitExceeded, CosetTable, enumerate_cosets, group_order
from .homsets import (BudgetExceeded, GroupoidCount, HomCount, MonoidTable, WordProblem,
                      groupoid_hom_count, hom_count, pi_monoid, presentation_count, rewrites,
                      words_from)
from .oracle import OracleCount, brute_force_classes
from .presentations import (CategoryPresentation, GroupoidPresentation, GroupPresentation,
                            VertexGroup, edge_path_groupoid, fundamental_category, pi0,
                            vertex_group, vertex_group_data)
from .smith import AbelianInvariants, abelianization, invariants_of_rows, smith_diagonal
from .tietze import TietzeResult, tietze_reduce, tietze_simplify
from .words import (Word, canonical_relator, cyclic_reduce, exponent_sums, free_reduce, inverse,
                    letter, substitute)

__all__ = [name for name in dir() if not name.startswith("_")]
