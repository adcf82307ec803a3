"""
chevlab — exact computations with universal Chevalley groups over finite commutative rings.
"""
__version__ = "0.1.0"
