"""Exact verification toolkit for projective-bundle characteristic-class calculus."""

from .poly import (
    Polynomial,
    Ring,
    RingMap,
    Variable,
    elementary_symmetric,
    express_in_elementary,
    graded_component,
    mod2,
    power_sum,
    reduce_mod_monomial,
    reduce_mod_variables,
    substitute,
)

__version__ = "0.1.0"
