from ._kecs import *  # noqa: F401,F403
