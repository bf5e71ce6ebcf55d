"""Exact computations with B-orbits in the height-2 nilpotent locus of a
simple Lie algebra, through root systems and affine Weyl groups."""

from .root_system import CartanType, RootSystem, build, system

__all__ = ["CartanType", "RootSystem", "build", "system"]
__version__ = "0.1.0"
