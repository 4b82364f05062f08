from ._magmech import *  # noqa: F401,F403
from ._magmech import __doc__  # noqa: F401
