"""Exact filtered cohomology computations on finite cdga models."""

try:
    from ._filtcoh import (  # type: ignore[import-not-found]
        Model,
        ModelError,
        ParseError,
        ValidationError,
        betti,
        catalog_names,
        cohomology_table,
        fingerprint,
        lefschetz_ranks,
        load,
        product,
        semicharacteristics,
        spectral_ops,
        validate,
        verify_vanishing,
    )
except ImportError:
    # build-tree layout: the extension sits on sys.path, not in the package
    from _filtcoh import (  # type: ignore[import-not-found]
        Model,
        ModelError,
        ParseError,
        ValidationError,
        betti,
        catalog_names,
        cohomology_table,
        fingerprint,
        lefschetz_ranks,
        load,
        product,
        semicharacteristics,
        spectral_ops,
        validate,
        verify_vanishing,
    )

__all__ = [
    "Model",
    "ModelError",
    "ParseError",
    "ValidationError",
    "betti",
    "catalog_names",
    "cohomology_table",
    "fingerprint",
    "lefschetz_ranks",
    "load",
    "product",
    "semicharacteristics",
    "spectral_ops",
    "validate",
    "verify_vanishing",
]
