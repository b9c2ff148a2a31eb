"""
Real Representation Decomposition - Source Package
"""
from .liealg import LieAlgebra, CartanSubalgebra, RootData
from .rep import Representation, highest_weights
from .decomp import decompose, verify_decomposition, DecompositionReport, RealComponent
from .repzoo import build_algebra, build_rep, parse_cartan

__all__ = [
    'LieAlgebra',
    'CartanSubalgebra',
    'RootData',
    'Representation',
    'highest_weights',
    'decompose',
    'verify_decomposition',
    'DecompositionReport',
    'RealComponent',
    'build_algebra',
    'build_rep',
    'parse_cartan',
]
