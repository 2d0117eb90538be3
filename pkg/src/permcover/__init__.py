"""Closed manifolds glued from permutahedra that realise integral cycles."""

from .assembly import (
    MirrorComplex,
    PermutahedralComplex,
    enumerate_complex,
    euler_characteristic,
    face_orbits,
    tomei_complex,
)
from .cycles import SimplicialCycle, barycentric_subdivide, colorize
from .errors import BudgetExceeded, InputError, PermcoverError, VerificationError
from .verification import verify_all

__version__ = "0.1.0"
