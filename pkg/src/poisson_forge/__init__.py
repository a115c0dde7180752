"""Exact calculus of polynomial multivector fields on R^n, with a
classification toolkit for linear Poisson brackets on R^3 and their
quadratic deformations."""

__version__ = "0.1.0"
