from .number import CyclotomicNumber
from .roots import RootOfUnity
from .roots import standard_root
from .roots import theta
from .roots import theta_case_table
from .roots import quantum_integer
from .roots import central_exponents
from .sign import sign_of_real
