"""pairlex: a contrastive Russian-Bulgarian dictionary compiler.

Pipeline: load a bilingual lexicon, classify cross-language sense pairs
into seven typed signs, trace implicative chains of sense divergence,
compile five-row dictionary pages (HTML/XML/JSON), and index them for
alphabetical and combined search. The CLI front end is ``pairlex``.
"""

__version__ = "0.1.0"
