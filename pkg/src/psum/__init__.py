"""Partition and sum: reduce a number to one digit by inserting plus signs."""
from .digitcore import (
    DigitString,
    digit_sum,
    format_digits,
    from_value,
    parse_digits,
    residue,
    to_value,
)
from .errors import *  # noqa: F401,F403
from .oracle import OracleCache, min_steps, optimal_trace, scan
from .partition import (
    Partition,
    ReductionStep,
    apply,
    make_step,
    reachable_sums,
    segments,
    uncut_gain,
)
from .strategies import (
    PairMergePlan,
    TripleMergePlan,
    base2_power_step,
    base2_reduce,
    base3_reduce,
    base_ge4_reduce,
    lemma4a_reduce,
    lemma4b_step,
    reduce,
    sum_digits_reduce,
    sum_digits_step,
)
from .trace import ReductionTrace

from .verify import EXCEPTIONAL_BASE3

__version__ = "0.1.0"
