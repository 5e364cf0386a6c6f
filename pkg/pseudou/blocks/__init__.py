from .graphs import TrivalentGraph
from .graphs import theta_graph
from .graphs import dumbbell_graph
from .graphs import chain_graph
from .graphs import loop_graph
from .graphs import k4_graph
from .graphs import standard_genus_graph
from .colorings import Coloring
from .colorings import color_set
from .colorings import iter_colorings
from .dimensions import count_admissible
from .dimensions import dim_blocks
from .dimensions import zagier_dimension
from .dimensions import verlinde_p5_closed_form
from .dimensions import congruence_check
from .dimensions import parity_checks
from .signatures import SignatureRecord
from .signatures import norm_sign
from .signatures import signature
from .signatures import central_obstruction
from .signatures import positivity_report
