"""Exact computations for weak Hopf algebras and their module categories."""
