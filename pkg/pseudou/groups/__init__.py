from .forms import SignatureForm
from .forms import Membership
from .forms import is_member
from .forms import require_member
from .forms import hermitian_product
from .forms import quadratic_value
from .spectral import SpectralData
from .spectral import CanonicalReport
from .spectral import spectral_analysis
from .spectral import canonical_form
from .spectral import elliptic_part
from .spectral import positive_determinant
from .phase import dgw_phase
from .phase import v0
from .phase import cartan_decomposition
from .paths import GroupPath
from .paths import concatenate
from .paths import lift_phase
from .paths import cocycle
from .embeddings import sp_to_su
from .embeddings import su_to_sp
from .embeddings import sp_lift
from .embeddings import sp_winding
from .embeddings import sp_phase
