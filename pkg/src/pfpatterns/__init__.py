"""Exact enumeration of pattern-avoiding parking functions and words.

Every closed form in :mod:`pfpatterns.closed_forms` has an exhaustive
counterpart, and :mod:`pfpatterns.verify` runs the two side by side.
"""

from .closed_forms import (
    MonotoneSpec,
    monotone_pf_count,
    monotone_word_count,
    pf321_closed,
    pf_bruteforce_count,
    pf_nonmonotone_count,
    sharp_sylvester_class_count_det,
    sylvester_class_count_det,
    w321_closed,
)
from .parking import enumerate_pf, is_parking_function, label_permutation, park

__version__ = "0.1.0"

__all__ = [
    "MonotoneSpec",
    "enumerate_pf",
    "is_parking_function",
    "label_permutation",
    "monotone_pf_count",
    "monotone_word_count",
    "park",
    "pf321_closed",
    "pf_bruteforce_count",
    "pf_nonmonotone_count",
    "sharp_sylvester_class_count_det",
    "sylvester_class_count_det",
    "w321_closed",
]
