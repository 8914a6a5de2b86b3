"""Exact Kreck-Stolz s-invariants of circle bundles over CP^2n x CP^1.

Everything is computed over arbitrary-precision rationals; no floating
point anywhere.  The headline entry points:

>>> from fractions import Fraction
>>> from kreckstolz import BundleParams, s_invariant, s_laurent
>>> s_invariant(BundleParams(n=1, k=2, l=3)).s
Fraction(-1, 14)
>>> s_laurent(1).coefficient(2)
Fraction(-3, 896)
"""

from .bernoulli import (
    SERIES_NAMES,
    ahat_coeff,
    bernoulli_unsigned,
    l_coeff,
    mixing_constant,
    series_coeff,
)
from .cohomology import (
    Mod2Element,
    RingElement,
    apply_even_series,
    divide_by_euler_and_pair,
    euler_class,
    pair_fundamental,
    x_class,
    y_class,
)
from .genera import (
    SymPolynomial,
    genus_class_of_base,
    genus_polynomial,
    n_polynomial,
    pontrjagin_classes_of_base,
)
from .invariant import (
    BundleParams,
    SInvariantReport,
    eells_kuiper_mod1,
    is_spin,
    s_invariant,
    signature_Bc,
    sw_total_space,
    sw_total_W,
    t_w,
)
from .moduli import (
    CohomologyPresentation,
    ComponentRow,
    ComponentTable,
    LaurentPoly,
    LeadingCoeffCheck,
    component_table,
    homotopy_discriminator,
    leading_coeff_check,
    s_laurent,
    smith_normal_form,
    vanishing_l_scan,
)
from .rationals import Rational, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
    "bernoulli_unsigned",
    "ahat_coeff",
    "l_coeff",
    "mixing_constant",
    "series_coeff",
    "SERIES_NAMES",
    "RingElement",
    "Mod2Element",
    "x_class",
    "y_class",
    "euler_class",
    "apply_even_series",
    "divide_by_euler_and_pair",
    "pair_fundamental",
    "SymPolynomial",
    "genus_polynomial",
    "n_polynomial",
    "pontrjagin_classes_of_base",
    "genus_class_of_base",
    "BundleParams",
    "SInvariantReport",
    "is_spin",
    "sw_total_space",
    "sw_total_W",
    "signature_Bc",
    "t_w",
    "s_invariant",
    "eells_kuiper_mod1",
    "LaurentPoly",
    "s_laurent",
    "leading_coeff_check",
    "LeadingCoeffCheck",
    "ComponentRow",
    "ComponentTable",
    "component_table",
    "CohomologyPresentation",
    "homotopy_discriminator",
    "smith_normal_form",
    "vanishing_l_scan",
]
