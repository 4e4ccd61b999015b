from .intersection import *
from .cobipartite import *
from .matching import *
from .oracle import *
from .intervals import *
