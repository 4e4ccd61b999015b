from .greedy import *
from .ordering import *
from .extraction import *
from .neighbourhoods import *
from .solvers import *
