# physics/__init__.py

# One sub-package per concern: core numerics, dynamics, entanglement, experiments.
