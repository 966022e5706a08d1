"""Diamond-colored distributive lattices and the Domino Game.

Build the type-A fundamental lattices in four coordinatizations, the
Domino Game digraph, the explicit isomorphism between them, and solve
move-minimizing games in closed form, with brute-force oracles checking
everything at desk scale.
"""

from .lattice import (ColoredLattice, LatticeError, PathRecord,
                      check_full_length_sublattice, full_length_witness,
                      is_diamond_colored, is_distributive, is_modular,
                      is_topographically_balanced, join, meet, mountainize,
                      path_stats, product, rank_function, valleyize)
from .poset import (PosetError, VertexColoredPoset, canonical_iso_to_ideals,
                    canonical_iso_to_filters, disjoint_sum, dual,
                    enumerate_order_ideals, j_lattice, join_irreducibles,
                    m_lattice, meet_irreducibles, recolor)
from .typea import (BoxSpec, CircleState, build_l_a, build_l_tab,
                    build_l_tilde, build_p_a, diagonal_to_partition,
                    ideal_to_partition, partition_join, partition_meet,
                    partition_rank, partition_to_diagonal, partition_to_ideal,
                    partition_to_tableau_L, tableau_to_circle,
                    tableau_to_partition_L)
from .domino import (beta_circ, beta_diag, beta_part, build_d_a, d_max, d_min,
                     gamma_ct, gamma_pt, gamma_tc, gamma_tp,
                     is_legal_domino_move, is_red, m_diag)
from .isomorphism import (BoxPermutation, MoveMatrix, apply_p, decompose,
                          move_matrix, phi, phi_circ, phi_inverse, pi)
from .solver import GameSolution, color_census, solve_distributive, solve_domino
from .oracle import (PathCapExceeded, bfs_all_pairs, check_constructed_iso,
                     check_lattice_laws, enumerate_shortest_paths)

__version__ = "1.0.0"
