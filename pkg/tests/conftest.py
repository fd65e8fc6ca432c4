import os
import sys

# make the sibling helper modules importable regardless of invocation directory
sys.path.insert(0, os.path.dirname(__file__))
