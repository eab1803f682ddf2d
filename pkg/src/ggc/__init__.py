"""Binary generalized Goppa codes: construction, unique and interleaved decoding."""

from .code import CodeError, GGCode, LocatorSet, WordMatrix, validate_locators
from .decode import DecodeOutcome, Status, decode_one
from .galois import FieldCtx, ResidueField, gf_make_ctx
from .ileave import InterleavedCode, joint_decode
from .polyring import Poly

__all__ = [
    "CodeError",
    "DecodeOutcome",
    "FieldCtx",
    "GGCode",
    "InterleavedCode",
    "LocatorSet",
    "Poly",
    "ResidueField",
    "Status",
    "WordMatrix",
    "decode_one",
    "gf_make_ctx",
    "joint_decode",
    "validate_locators",
]
