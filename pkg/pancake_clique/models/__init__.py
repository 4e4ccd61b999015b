from .config import *
from .audit import *
from .random import *
