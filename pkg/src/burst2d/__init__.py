"""Two-dimensional cyclic burst-error-correcting codes in the finite field Fourier domain."""
from .code import (
    Code2D,
    CodeDesignWarning,
    ZeroSet,
    build_code,
    check_disjoint,
    encode,
    extract_message,
    from_config,
    is_codeword,
    to_config,
)
from .decoder import (
    DecodeOptions,
    DecodeOutcome,
    Kind,
    classify,
    compute_syndrome,
    decode,
    solve_multi_burst,
    solve_single_combination,
)
from .error_model import H2, V2, ErrorPattern, GlobalError, horizontal, inject, pattern_roots, vertical
from .galois import Field, build_field
from .transform import BitGrid, SpectrumGrid, check_conjugate, ffft, iffft, make_roots, orbits

__all__ = [
    "BitGrid", "Code2D", "CodeDesignWarning", "DecodeOptions", "DecodeOutcome", "ErrorPattern",
    "Field", "GlobalError", "H2", "Kind", "SpectrumGrid", "V2", "ZeroSet", "build_code",
    "build_field", "check_conjugate", "check_disjoint", "classify", "compute_syndrome", "decode",
    "encode", "extract_message", "ffft", "from_config", "horizontal", "iffft", "inject",
    "is_codeword", "make_roots", "orbits", "pattern_roots", "solve_multi_burst",
    "solve_single_combination", "to_config", "vertical",
]
