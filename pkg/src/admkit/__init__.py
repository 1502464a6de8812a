"""admkit: exact Shapovalov determinants, Jantzen filtrations and admissibility
classifications for the Virasoro and Neveu-Schwarz algebras and affine
Kac-Moody algebras."""

from . import (affine_adm, detformulas, exactmath, neveu_schwarz, partitions, rootsystem,
               shapovalov, virasoro, wreduction)
from .exactmath import XI, MultiPoly, TPoly
from .rootsystem import DomainError

__version__ = "0.1.0"

__all__ = [
    "affine_adm", "detformulas", "exactmath", "neveu_schwarz", "partitions", "rootsystem",
    "shapovalov", "virasoro", "wreduction", "XI", "MultiPoly", "TPoly", "DomainError",
]
