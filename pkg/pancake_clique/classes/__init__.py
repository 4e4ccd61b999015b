from .shapes import *
from .graph import *
from .ordering import *
from .reports import *
from .instance import *
