from .io import *
