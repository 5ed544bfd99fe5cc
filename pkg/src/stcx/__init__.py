"""Exact homology of quotient frame complexes over prime fields.

Subpackages are organized bottom-up: fp (field arithmetic), symmetry
(signed permutation groups), orbits (simplex classification and canonical
forms), classify (orientation and determinant-twist predicates), chains
(rational chain complexes and Betti numbers), steinberg (coinvariant
dimensions and the reference table), tits (the quotient building poset),
oracle (an independent small-rank recomputation), checks (verification
suites), cli (command line entry point).
"""

__version__ = "0.1.0"
