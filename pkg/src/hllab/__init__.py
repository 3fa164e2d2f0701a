"""Numerical toolkit for Hardy-Lorentz, mixed-norm and sequence spaces and
their coefficient multipliers."""

from .coeff_core import *  # noqa: F401,F403
from .boundary import *  # noqa: F401,F403
from .mixed_norm import *  # noqa: F401,F403
from .seq_spaces import *  # noqa: F401,F403
from .multipliers import *  # noqa: F401,F403
from .theorems import *  # noqa: F401,F403
from .config import *  # noqa: F401,F403

__version__ = "0.1.0"
