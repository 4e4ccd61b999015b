from .support import *
from .sweep import *
