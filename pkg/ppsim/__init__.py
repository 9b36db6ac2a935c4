from ._about import __version__
