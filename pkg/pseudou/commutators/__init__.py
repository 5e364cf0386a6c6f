from .elements import Transvection
from .elements import QuasiReflection
from .elements import build_transvection
from .elements import build_quasi_reflection
from .elements import factor_product
from .planes import hyperbolic_pair
from .planes import complete_hyperbolic_pair
from .planes import map_isotropic_line
from .planes import su11_to_transvections
from .factorization import reflection_factorization
from .factorization import split_factors
from .pipeline import DecompositionReport
from .pipeline import CommutatorList
from .pipeline import quasireflections_to_transvections
from .pipeline import transvection_to_commutator
from .pipeline import commutator_decomposition
