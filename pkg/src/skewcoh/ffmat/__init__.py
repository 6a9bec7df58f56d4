"""Exact linear algebra over prime fields."""
from .field import PrimeField, is_prime
from .kernels import available_backends, get_backend, set_backend
from .matrix import SPARSE_THRESHOLD, FMatrix, kernel_basis, rank, solve_membership

__all__ = [
    "FMatrix",
    "PrimeField",
    "SPARSE_THRESHOLD",
    "available_backends",
    "get_backend",
    "is_prime",
    "kernel_basis",
    "rank",
    "set_backend",
    "solve_membership",
]
