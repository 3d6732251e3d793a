"""
Computational kernels of the toolkit, one module per concern.

Modules are imported directly, e.g. `from app.services.fibers import enumerate_fiber`.
"""
