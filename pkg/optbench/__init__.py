from pathlib import Path

from optbench import exceptions
from optbench.api.config import AuditConfig, DEParams, NelderMeadParams, ProbeConfig
from optbench.functions import EvalContext, NoisePolicy, evaluate, evaluate_batch
from optbench.registry import filter, get_catalog, lookup

__version__ = "0.1.0"
__root__ = Path(__file__).parent.parent
__all__ = [
    "__version__",
    "__root__",
    # modules
    "exceptions",
    # API
    "AuditConfig",
    "DEParams",
    "NelderMeadParams",
    "ProbeConfig",
    "EvalContext",
    "NoisePolicy",
    "evaluate",
    "evaluate_batch",
    "filter",
    "get_catalog",
    "lookup",
]
