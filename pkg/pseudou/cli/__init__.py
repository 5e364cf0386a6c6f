from .app import main
from . import commands
