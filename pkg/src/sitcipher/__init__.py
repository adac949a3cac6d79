"""SIT: a 64-bit lightweight block cipher with an evaluation harness.

The cipher lives in :mod:`sitcipher.cipher`, byte-stream modes and the
SIT1 file container in :mod:`sitcipher.modes`, PGM image handling in
:mod:`sitcipher.pgm`, and the statistical evaluation suite in
:mod:`sitcipher.analysis`.
"""

from .cipher import (
    RoundKeys,
    decrypt_block,
    encrypt_block,
    expand_key,
    f_function,
)
from .modes import (
    CTR,
    ECB,
    ContainerError,
    PaddingError,
    ctr_process,
    decrypt_message,
    ecb_decrypt,
    ecb_encrypt,
    encrypt_message,
)
from .pgm import GrayImage, PGMError, read_pgm, write_pgm

__version__ = "0.1.0"

__all__ = [
    "CTR",
    "ECB",
    "ContainerError",
    "GrayImage",
    "PGMError",
    "PaddingError",
    "RoundKeys",
    "__version__",
    "ctr_process",
    "decrypt_block",
    "decrypt_message",
    "ecb_decrypt",
    "ecb_encrypt",
    "encrypt_block",
    "encrypt_message",
    "expand_key",
    "f_function",
    "read_pgm",
    "write_pgm",
]
