"""langkit: exact bookkeeping for residual Eisenstein constant terms.

Submodules
----------
weyl        root data, signed-permutation words, coset representatives
groups      group/Levi descriptors, modular characters, half-integrality
satake      symbolic Satake eigenvalue calculus and coefficient transport
dual        dual-side nilradical grading and the two induced factors
spectra     formal cuspidal records and discrete-spectrum parameters
arch        infinitesimal characters, regularity predicates, sign formulas
eisenstein  constant-term quotients, pole decisions, the full pipeline
normalizer  quasi-tempered decompositions and normalization factors
cli         scenario files, command dispatch, reports
"""

__version__ = "0.1.0"
