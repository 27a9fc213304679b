"""Exact star products on flat and radial phase spaces, constraint
reduction to quotient algebras, coefficient tables, and a CLI front end."""

__version__ = "0.1.0"
