"""Property tester for solvable-group oracles, on a simulated quantum backend."""
from .errors import Fail, NotSolvable, OracleNotUnitary, StructureFailure
from .homtest import TesterConfig
from .magma import MagmaTable
from .tester import Transcript, Verdict, run_many, run_test

__all__ = [
    "Fail", "NotSolvable", "OracleNotUnitary", "StructureFailure",
    "MagmaTable", "TesterConfig", "Transcript", "Verdict", "run_many", "run_test",
]
__version__ = "0.1.0"
