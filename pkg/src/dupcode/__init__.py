"""Single-symbol-redundancy codes correcting one long tandem duplication.

A message of n base-q symbols is encoded into n+1 symbols whose content is
free of tandem repeats with half-length >= K = 4*ceil(log_q(n)) + 1; a single
duplication of any length >= K can then be located and removed uniquely.
"""

from .analysis import (
    BadWordReport,
    BallReport,
    Code0Report,
    ConverseReport,
    RoundtripReport,
    converse_gap,
    count_bad_words,
    enumerate_code0,
    roundtrip_suite,
    verify_ball_disjointness,
)
from .channel import ChannelSpec, DuplicationChannel, apply_duplication, random_duplication
from .codec import correct, correct_with_position, decode, encode, encode_with_trace, is_codeword
from .core import (
    CodeParams,
    DupcodeError,
    GuardExceededError,
    InternalDefectError,
    MalformedCodewordError,
    MalformedWordError,
    VerificationError,
    Word,
    derive_params,
    format_word,
    parse_word,
)
from .repeats import Duplication, find_leftmost_long, is_dup_free
from .seqword import EditableWord
from .windows import WindowIndex

__version__ = "0.1.0"

__all__ = [
    "BadWordReport",
    "BallReport",
    "ChannelSpec",
    "Code0Report",
    "CodeParams",
    "ConverseReport",
    "Duplication",
    "DupcodeError",
    "DuplicationChannel",
    "EditableWord",
    "GuardExceededError",
    "InternalDefectError",
    "MalformedCodewordError",
    "MalformedWordError",
    "RoundtripReport",
    "VerificationError",
    "WindowIndex",
    "Word",
    "apply_duplication",
    "converse_gap",
    "correct",
    "correct_with_position",
    "count_bad_words",
    "decode",
    "derive_params",
    "encode",
    "encode_with_trace",
    "enumerate_code0",
    "find_leftmost_long",
    "format_word",
    "is_codeword",
    "is_dup_free",
    "parse_word",
    "random_duplication",
    "roundtrip_suite",
    "verify_ball_disjointness",
]
