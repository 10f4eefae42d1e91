__author__ = "Henry R. Winterbottom"
__version__ = "0.0.1"
