"""Exact combinatorial engine for su(N) chamber sheaves.

Modules:

* :mod:`flagsheaf.root_system` -- exact coroot/root pairings, the
  dominance order, the central lattice and its degree function.
* :mod:`flagsheaf.lie_numerics` -- floating-point verification of the
  matrix-level norm and exponential lemmas.
* :mod:`flagsheaf.flag_schubert` -- Schubert cells of partial flag
  varieties and the free decomposition of their cohomology.
* :mod:`flagsheaf.sheaf_complex` -- windowed complexes of constant
  sheaves on chamber regions, exact stalks/sections, jump functor.
* :mod:`flagsheaf.pipeline` -- the two models of the central-fiber
  sheaf, their stalk cross-check, Novikov-type modules H_I(d) and the
  non-vanishing certificate.
* :mod:`flagsheaf.cli` -- command-line front end.
"""

__version__ = "0.1.0"
