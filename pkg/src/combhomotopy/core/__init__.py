from .spaces import (Complex, DirectedComplex, StepSet, TolSet, chain_complex, clique_complex,
                     dedup_adjacent, enumerate_maps, is_map, membership, product, projections,
                     step_of, sym_forget, tol_of)
from .truncated import (Colimit, TruncDirSet, TruncMap, TruncSymSet, coequalizer, dir_two_skeleton,
                        disjoint_union, enumerate_truncated_maps, find_isomorphism, identity_map,
                        point, pushout, quotient, reflect_directed, reflect_u, symmetrize,
                        truncated_from_json, two_skeleton, vertex_inclusion)
from .catalog import (SpaceSpec, as_truncated, build_space, circle, codiscrete, collapsed_sphere,
                      dir_circle, dir_collapsed_sphere, dir_line_window, discrete, line_window,
                      parse_spec, simplex_dir, wedge)
