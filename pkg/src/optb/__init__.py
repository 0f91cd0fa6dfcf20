"""Lens spaces containing knots whose exterior is a once-punctured torus bundle.

Submodules:

``words``    twist words, homology of genus one open books and binding surgeries
``lens``     lens spaces up to unoriented homeomorphism
``gof``      counting genus one fibered knots in lens spaces
``torus``    lens space surgeries on torus knots
``decider``  the containment decision and the L(m, 2) family scanner
``records``  persisted scan results
``cli``      command-line entry point
"""

__version__ = "0.1.0"

from optb._backend import BACKEND
from optb.abelian import AbelianGroup
from optb.decider import Answer, OptbVerdict, Reason, decide_optb, scan_family
from optb.gof import GofVerdict, gof_count, gof_count_bruteforce
from optb.lens import LensSpace, homeo_class, is_homeomorphic, make_lens
from optb.torus import SurgeryDescription, moser_forward, moser_inverse, trefoil_surgeries
from optb.words import (
    HomologyMatrix,
    MonodromyType,
    TwistWord,
    h1_binding_surgery,
    h1_open_book,
    parse_word,
    word_to_matrix,
)
