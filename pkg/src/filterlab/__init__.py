"""Independent families, width-complete filters and compactness by ultrafilter extension."""
from . import encoder, filters, henkin, proplogic, setcore  # noqa: F401
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
