"""
Exact algebra: finite rings, root systems, Chevalley and Steinberg groups.
"""
