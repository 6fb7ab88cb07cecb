"""Independence complexes of circulant graphs: well-covered, Buchsbaum, Cohen-Macaulay,
shellable and vertex decomposable classification."""

from .circulant import (CirculantGraph, ConnectionSet, OnePairedSpec, SpecError, build_circulant,
                        connected_components, enumerate_connection_sets, multiplier_equivalent,
                        one_paired)
from .classify import (ClassificationRecord, Prediction, classify, cubic_census,
                       family_complement_power, family_one_paired, family_remove_one, is_cis,
                       is_one_well_covered)
from .decomp import (BudgetExceeded, DecompVerdict, ShellingCertificate, find_shelling,
                     is_vertex_decomposable, verify_shelling)
from .estimator import CirculantComplexClassifier
from .homology import BettiTable, boundary_matrix, is_buchsbaum, is_cohen_macaulay, reduced_betti
from .simplex import (SimplicialComplex, deletion, f_vector, h_vector, independence_complex,
                      is_connected, is_pure, join, link, maximal_cliques)

__version__ = "0.1.0"
