"""Tweet representation probing harness.

Builds elementary property-prediction datasets from tweet corpora, trains
softmax probes over frozen tweet/word embeddings, and analyses how task
performance varies with tweet length and embedding size.
"""

__version__ = "0.1.0"
