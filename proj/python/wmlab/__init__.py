"""Block-parity watermarking lab.

Embedding and extraction for the block-parity scheme, the parity-matching
complement attack against it, and exhaustive small-instance verification of
what that attack actually achieves.
"""

from wmlab._wmlab import *  # noqa: F401,F403

__version__ = "1.0.0"
