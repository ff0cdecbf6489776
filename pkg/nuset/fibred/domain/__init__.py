"""ファイバー形式のドメイン

- fibred_set.py: FibredSet, IdentityViolation, IdentityReport
"""

from .fibred_set import FaceMap, FibredSet, IdentityViolation, IdentityReport

__all__ = [
    "FaceMap",
    "FibredSet",
    "IdentityViolation",
    "IdentityReport",
]
