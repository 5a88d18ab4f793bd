"""Generalized Fibonacci sequences, Fibonacci polynomials and the Binet-Fibonacci curve."""

from .errors import (BinetFibError, DegenerateCombination, DegenerateRoots,
                     DegenerateSequence, DegenerateVelocity, NonDivisible,
                     PreconditionError, RangeExceeded)
from .exact_core import GenSpec, binet_float, fib, gen_binet_float, gen_fib, lucas
from .linear_combinations import (CoefficientVector, combo_binet, combo_term, dual,
                                  verify_dual_identity)
from .polynomials import (BivarPoly, RootPair, fib_poly_binet, fib_poly_eval,
                          fib_poly_symbolic, gen_fib_poly, root_power_decompose,
                          roots)
from .precision import GoldenConstants, golden_constants
from .subsequences import (EquiSpec, equi_step, equi_superposition, equi_term,
                           higher_order_fib, verify_theorem1)

__version__ = "0.1.0"

__all__ = [
    "BinetFibError", "BivarPoly", "CoefficientVector", "DegenerateCombination",
    "DegenerateRoots", "DegenerateSequence", "DegenerateVelocity", "EquiSpec",
    "GenSpec", "GoldenConstants", "NonDivisible", "PreconditionError",
    "RangeExceeded", "RootPair", "binet_float", "combo_binet", "combo_term",
    "dual", "equi_step", "equi_superposition", "equi_term", "fib",
    "fib_poly_binet", "fib_poly_eval", "fib_poly_symbolic", "gen_binet_float",
    "gen_fib", "gen_fib_poly", "golden_constants", "higher_order_fib", "lucas",
    "root_power_decompose", "roots", "verify_dual_identity", "verify_theorem1",
]
