from .predicates import *
from .circles import *
from .space import *
