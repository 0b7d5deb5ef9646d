"""Deletable Bloom filter: data structure, closed-form model and simulator."""

from ._core import (
    ConfigError,
    ContractError,
    DeletableBloomFilter,
    DomainError,
    Error,
    FilterParams,
    ParseError,
    ReferenceOracle,
    RemoveOutcome,
    StandardBloomFilter,
    cell_probabilities,
    deletability_curve,
    deletability_probability,
    figure_dataset,
    fpr_dlbf,
    fpr_sbf,
    generate_elements,
    index_set,
    model,
    run_experiment,
    run_sbf_baseline,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "ContractError",
    "DeletableBloomFilter",
    "DomainError",
    "Error",
    "FilterParams",
    "ParseError",
    "ReferenceOracle",
    "RemoveOutcome",
    "StandardBloomFilter",
    "cell_probabilities",
    "deletability_curve",
    "deletability_probability",
    "figure_dataset",
    "fpr_dlbf",
    "fpr_sbf",
    "generate_elements",
    "index_set",
    "model",
    "run_experiment",
    "run_sbf_baseline",
]
