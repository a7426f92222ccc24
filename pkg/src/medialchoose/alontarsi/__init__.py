from .eulerian import *
from .cycles import *
from .proof import *
