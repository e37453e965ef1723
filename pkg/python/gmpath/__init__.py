"""gmpath: radicals of path algebras, generalized matrix rings and pointed Hopf algebras.

Closed-form radical and primeness formulas sit next to brute-force oracles
over exact cyclotomic arithmetic, so every formula can be checked on
finite-dimensional instances.
"""

from .errors import GmpathError
from .findim import FinDimAlgebra, jacobson_oracle, prime_bruteforce, semiprime_bruteforce
from .gm_ring import GammaSystem, gm_radical_formula, load_system
from .groups import AbelianGroup, CayleyGroup, Character
from .hopf import HopfAlgebra, HopfParams, check_hopf_axioms, classify_instance, load_hopf, validate
from .path_algebra import PathAlgebra, materialize, radical_description, regular_path_count
from .quiver import Quiver, load_quiver, parse_edge_list
from .scalar import Cyclotomic, zeta

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CayleyGroup",
    "Character",
    "Cyclotomic",
    "FinDimAlgebra",
    "GammaSystem",
    "GmpathError",
    "HopfAlgebra",
    "HopfParams",
    "PathAlgebra",
    "Quiver",
    "__version__",
    "check_hopf_axioms",
    "classify_instance",
    "gm_radical_formula",
    "jacobson_oracle",
    "load_hopf",
    "load_quiver",
    "load_system",
    "materialize",
    "parse_edge_list",
    "prime_bruteforce",
    "radical_description",
    "regular_path_count",
    "semiprime_bruteforce",
    "validate",
    "zeta",
]
