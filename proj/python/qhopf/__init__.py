"""Exact cointegral computations for finite-dimensional quasi-Hopf algebras."""

from ._qhopf import Algebra, QhopfError, catalog_names

__all__ = ["Algebra", "QhopfError", "catalog_names"]
