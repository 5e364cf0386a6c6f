from .braid import BraidWord
from .squier import DEFINITE_WINDOW
from .squier import PRINCIPAL_ROOT
from .squier import NON_UNITARIZABLE
from .squier import burau_generator
from .squier import reduced_burau
from .squier import squier_form
from .squier import squier_definite
from .squier import squier_eigenvalues
from .squier import square_root_parameter
from .squier import is_singular
from .squier import unitarizable
from .squier import invariance_residual
from .squier import inertia
from .counting import NoncompactCount
from .counting import count_noncompact_roots
from .counting import lattice_thresholds
from .counting import threshold_consistency
