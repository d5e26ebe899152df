"""zenolab: a numerical laboratory for dense-measurement effects.

Library modules cover closed-form survival probabilities of repeated
reactions, joint probabilities of prescribed state paths, an annular
billiard escape simulator, multibarrier quantum transmission, multitrap
classical diffusion, exact observer-sequence counting, and piston-
cylinder entropy ensembles.  The ``zenolab`` command line exposes one
subcommand per experiment family and emits CSV/JSON/SVG with a
reproducibility manifest.
"""

__version__ = "0.1.0"
