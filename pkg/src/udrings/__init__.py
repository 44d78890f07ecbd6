"""String modules, stable syzygies and universal deformation rings over Lambda_{m,N}."""

from .algebra import Algebra
from .classifier import Locus, Ring, UDRLabel, census, locate_component, udr, verify_lift_chain
from .errors import AlgebraError
from .fields import QQ, PrimeField, make_field
from .homs import hom_basis, hom_dim, stable_hom_dim
from .representations import projective_module, string_module
from .strings import Family, FamilySpec, build_family, enumerate_strings, format_string, parse
from .syzygy import ext1_dim, omega, omega_inverse, omega_string, stable_end_dim, tau

__version__ = "0.1.0"
