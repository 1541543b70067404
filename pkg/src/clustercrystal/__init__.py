"""Cluster variables on G^{e,c^2} and monomial realizations of Demazure crystals.

Quick tour::

    >>> from clustercrystal import CartanData, initial_seed, enumerate_cluster_variables
    >>> cd = CartanData.parse("B2")
    >>> len(enumerate_cluster_variables(initial_seed(cd)))
    6
"""
from .errors import (BudgetExceeded, ClusterCrystalError, IndexOutOfRange, InvariantViolation,
                     NotDivisible, NotHighest, OutOfRange, RepMismatch, UnsupportedRep)
from .kernel import BACKEND
from .laurent import (LaurentPolynomial, Monomial, Y, parse_monomial, parse_polynomial,
                      poly_divide_exact, poly_mul)
from .roots import CartanData, ReducedWord, coxeter_square_word
from .crystal import (crystal_component, crystal_stats, default_p, demazure_character,
                      demazure_monomials, kashiwara_e, kashiwara_f)
from .minors import evaluate_minor, initial_seed, initial_variables
from .cluster import (ExchangeMatrix, Seed, enumerate_cluster_variables, gamma_graph,
                      initial_exchange_matrix, mutation_diagram)
from .verifier import full_verification, run_case, theorem_cases

__version__ = "0.1.0"
