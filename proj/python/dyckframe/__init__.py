"""Frames of Dyck paths and exact Dyck/Motzkin path counts."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
