from ._version import __version__
from .core import DiscordAnalysis
from .entities.densityMatrix import DensityMatrix
from .entities.oracleConfig import OracleConfig
from .initialize.gell_mann_basis import gell_mann_basis
from .initialize.ghz_state import ghz_state, maximally_entangled_state
from .solution.geometric_discord import geometric_discord
