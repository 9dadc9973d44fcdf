"""Permanents, symmetric tensor powers and their derivatives."""

from ._core import (
    DomainError,
    GuardError,
    __version__,
    dper,
    dsym_norm_exact,
    dsym_power,
    dtensor_power,
    enumerate_G,
    enumerate_Q,
    mixed_permanent,
    mixed_sym_product,
    multiplicity,
    padj,
    per_naive,
    per_ryser,
    permanent,
    spectral_norm,
    sym_power,
    symmetrizer,
    tensor_power,
    tilde_compound,
    trace_norm,
    verify_norm_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
