"""
=====================
complete-graph-tsg
=====================

Decides which finite groups occur as the orientation preserving topological
symmetry group of some embedding of the complete graph K_n in S^3, lists
them for any n, checks single automorphisms by cycle type, and reproduces
the published tables for K_2 ... K_20 and K_140.

"""
__docformat__ = 'reStructuredText'
__version__ = '1.0.0'
