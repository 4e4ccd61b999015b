from .triple import *
from .tangents import *
from .containment import *
from .cases import *
from .bipartition import *
