"""Motzkin-tree skeletons of lambda terms.

Enumeration, exact counting, simple-type classification and Boltzmann
sampling of lambda-term skeletons in de Bruijn form. Trees cross the
boundary in the canonical textual syntax (`v`, `l(X)`, `a(X,Y)`; term
leaves as `v(I)`), counts as Python ints.
"""

from lamskel._core import *  # noqa: F401,F403
from lamskel._core import __version__  # noqa: F401
