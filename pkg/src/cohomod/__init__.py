# src/cohomod/__init__.py

__version__ = "0.1.0"

from .config import Caps
from .errors import CohomodError
from .group import PGroup, build_group, build_group_from_table
from .gring import GradedPresentation, Polynomial, TruncatedPresentation
from .regseq import ParameterSequence, analyze_ring
from .complete import compute_until_complete, completion_test
