"""Exception types raised by the library.

Data-dependent failures get named classes so the CLI can report them in a
machine-readable way; plain contract violations (wrong cardinality, column
mismatch, bad indices) raise ValueError / IndexError as usual.
"""


class HyperprojError(Exception):
    """Base class for all library-specific errors."""


class ParseError(HyperprojError):
    """A token in a dataset stream is not a decimal integer."""


class MalformedDatasetError(HyperprojError):
    """Dataset streams are structurally inconsistent (e.g. length mismatch)."""


class MalformedLineError(MalformedDatasetError):
    """A single edge-list line is invalid (e.g. repeated node id)."""


class EmptyHypergraphError(HyperprojError):
    """No hyperedges survived parsing/filtering."""


class EmptyPositivesError(HyperprojError):
    """The hypergraph has no hyperedges of the requested target size."""


class SplitError(HyperprojError):
    """A candidate set side is too small to split into train/test."""


class AssemblyError(HyperprojError):
    """A candidate-set invariant was violated during assembly."""


class ProjectionBudgetError(HyperprojError):
    """A projection would exceed its configured combinatorial budget."""


class FeatureComputationError(HyperprojError):
    """A feature value came out non-finite for some candidate."""


class UndefinedMetricError(HyperprojError):
    """A metric is undefined for the given inputs (one class, zero variance...)."""


class ConfigError(HyperprojError):
    """An experiment configuration is invalid."""
