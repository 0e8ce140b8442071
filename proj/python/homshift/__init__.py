from ._homshift import *  # noqa: F401,F403
from ._homshift import __doc__  # noqa: F401
