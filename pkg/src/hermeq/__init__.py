"""Exact arithmetic for decomposable forms of integer polynomials.

The package decides equivalence questions for integer polynomials through
their decomposable forms and invariant lattices: translation equivalence,
Moebius (2x2 unimodular) equivalence, and equivalence of the forms
themselves via lattice witnesses.  Everything runs over exact integers
and fractions; no floating point enters any verdict.

The usual entry points:

- hermite_form / form_content / act_gln    (forms)
- invariant_order / zeta_lattice / norm_form    (algebra)
- z_equiv_test / gl2_pair_test / hermite_witness_check / partition_gl2
  (equivalence)
- build_kit / find_params / generate_certified_pair    (family)
- iota / act / principality_evidence    (quartic)
- coeff_bound_log / max_degree / bound_report    (bounds)
- reproduce_all    (reproduce)

plus the `hermeq` command line wired to all of the above.
"""

__version__ = "0.1.0"

from .intpoly import (DomainError, content, degree, discriminant,
                      resultant)
from .forms import (DecomposableForm, act_gln, form_content, hermite_form,
                    transfer_matrix, verify_disc_identity)
from .algebra import (AlgElement, EtaleAlgebra, IdealLattice,
                      invariant_order, lattice_mul, lattice_norm,
                      norm_form, zeta_lattice)
from .equivalence import (gl2_act, gl2_pair_test, hermite_witness_check,
                          partition_gl2, reducible_pair, z_equiv_test)
from .family import (build_kit, find_params, generate_certified_pair,
                     verify_kit_identities)
from .bounds import bound_report, coeff_bound_log, max_degree, split_counts
from .reproduce import reproduce_all

__all__ = [
    "__version__",
    "DomainError", "content", "degree", "discriminant", "resultant",
    "DecomposableForm", "act_gln", "form_content", "hermite_form",
    "transfer_matrix", "verify_disc_identity",
    "AlgElement", "EtaleAlgebra", "IdealLattice", "invariant_order",
    "lattice_mul", "lattice_norm", "norm_form", "zeta_lattice",
    "gl2_act", "gl2_pair_test", "hermite_witness_check", "partition_gl2",
    "reducible_pair", "z_equiv_test",
    "build_kit", "find_params", "generate_certified_pair",
    "verify_kit_identities",
    "bound_report", "coeff_bound_log", "max_degree", "split_counts",
    "reproduce_all",
]
