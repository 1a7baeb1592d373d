"""Annihilator congruences of derivations on finite distributive lattices."""

from .boolean import (TheoremViolation, atom_report, complement_class, is_boolean_algebra,
                      quotient_boolean, sigma_maximal_analysis, sigma_poset, sigma_sets,
                      two_element_criterion)
from .congruences import (Congruence, QuotientLattice, compare, delta, enumerate_congruences,
                          generated_congruence, is_congruence, kernel_congruence, nabla, quotient,
                          theta)
from .core import (ElementSet, Lattice, canonical_form, chain, downset_lattice,
                   enumerate_distributive_lattices, is_isomorphic, sublattice_facts, validate)
from .derivations import (Derivation, annihilator, annihilators, derivation_from_mapping,
                          enumerate_derivations, identity_derivation, is_derivation,
                          kernel_elements, kernel_ideal, lambda_derivation)
from .ideals import (enumerate_filters, enumerate_ideals, i_minimal_primes, is_filter, is_ideal,
                     is_prime_filter, is_prime_ideal, prime_ideals, principal_filter,
                     principal_ideal, up_set)
from .io import dumps_lattice, load_fixture, load_lattice, parse_lattice, to_dot
from .search import open_question_search
from .theorems import CLAIMS, run_suite, verify

__version__ = "0.1.0"
