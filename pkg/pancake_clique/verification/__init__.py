from .suites import *
