from .spec import RecurrenceSpec
from .spec import extend
from .spec import companion_matrix
from .spec import companion_order
from .spec import state_vectors
from .spec import spec_to_json
from .spec import spec_from_json
from .builtin import builtin_spec
from .builtin import builtin_keys
from .orbit import OrbitReport
from .orbit import mod_orbit
from .orbit import zero_locus
from .orbit import invertibility_criterion
from .orbit import periodic_from
