"""Higher-order measures on finite history spaces.

The package implements the hierarchy of generally non-additive measures on
the abelian group generated by indicator vectors of history subsets:
interference functionals of every order, polarization into totally symmetric
multiadditive forms, the homogeneous decomposition of an order-n measure,
group-dual (coproduct/counit/antipode) operations with discrete
coderivatives and primitivity classification, plus a multi-slit amplitude
simulator that exhibits the order-2 sum rules numerically.
"""

from .errors import (CapExceededError, OrderMembershipError,
                     SpaceMismatchError, SpecFormatError, UnsampledPointError)
from .histories import (GroupElement, HistorySpace, SubsetMask,
                        characteristic_function, ones)
from .hopf import (PrimitivityReport, antipode, classify_primitivity,
                   coderivative, coderivative_at_identity, coproduct, counit,
                   iterated_coproduct)
from .interference import (InterferenceResult, OrderReport, interference,
                           interference_value, overlapping_pair_forms,
                           probe_order, recursion_holds)
from .measures import (ClosureMeasure, Measure, ParitySplit,
                       PolynomialMeasure, QuantumMeasure, TableMeasure,
                       bimodule_action, check_order_identity, parity_split,
                       quadratic_even_form, quantum_measure_from_amplitudes)
from .polarization import (Decomposition, SymmetricForm,
                           binomial_section_check, decompose, polarize,
                           project, section)
from .scalars import GaussianRational, Scalar
from .slits import (SlitScenario, SumRuleReport, build_measure,
                    random_scenario, run_sum_rules)

__all__ = [
    "CapExceededError", "OrderMembershipError", "SpaceMismatchError",
    "SpecFormatError", "UnsampledPointError",
    "GroupElement", "HistorySpace", "SubsetMask",
    "characteristic_function", "ones",
    "PrimitivityReport", "antipode", "classify_primitivity", "coderivative",
    "coderivative_at_identity", "coproduct", "counit", "iterated_coproduct",
    "InterferenceResult", "OrderReport", "interference",
    "interference_value", "overlapping_pair_forms", "probe_order",
    "recursion_holds",
    "ClosureMeasure", "Measure", "ParitySplit", "PolynomialMeasure",
    "QuantumMeasure", "TableMeasure", "bimodule_action",
    "check_order_identity", "parity_split", "quadratic_even_form",
    "quantum_measure_from_amplitudes",
    "Decomposition", "SymmetricForm", "binomial_section_check", "decompose",
    "polarize", "project", "section",
    "GaussianRational", "Scalar",
    "SlitScenario", "SumRuleReport", "build_measure", "random_scenario",
    "run_sum_rules",
]
