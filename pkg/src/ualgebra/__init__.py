"""Universal algebra over finite signatures, built on a flat term encoding.

Terms are sequences of symbol indices in prefix order, validated by a
counting stack machine; structural recursion, evaluation in finite
algebras, and equational satisfaction all run as single iterative passes
over that encoding.
"""

from .algebras import FiniteAlgebra, HomViolation, check_homomorphism, is_homomorphism
from .equations import (
    DEFAULT_BUDGET,
    Equation,
    ModelFailure,
    Theory,
    check_model,
    evaluate_with,
    find_violation,
    is_model,
    parse_equation,
    satisfies,
)
from .errors import (
    ArityMismatchError,
    BudgetExceededError,
    CarrierMismatchError,
    FormatError,
    InvalidSymbolError,
    InvalidTermError,
    LimitExceededError,
    SignatureError,
    SignatureMismatchError,
    StatusMismatchError,
    TermSyntaxError,
    UAlgebraError,
    UnknownSymbolError,
)
from .oplist import (
    Error,
    Ok,
    Status,
    format_oplist,
    is_term,
    parse_oplist,
    split_terms,
    status_of,
)
from .signature import SANITY_LIMIT, OpSymbol, Signature
from .syntax import parse_term
from .terms import (
    ENUM_LIMIT,
    Term,
    build_term,
    depth,
    destructure,
    enumerate_terms,
    fold,
    format_term,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "BudgetExceededError",
    "CarrierMismatchError",
    "DEFAULT_BUDGET",
    "ENUM_LIMIT",
    "Equation",
    "Error",
    "FiniteAlgebra",
    "FormatError",
    "HomViolation",
    "InvalidSymbolError",
    "InvalidTermError",
    "LimitExceededError",
    "ModelFailure",
    "Ok",
    "OpSymbol",
    "SANITY_LIMIT",
    "Signature",
    "SignatureError",
    "SignatureMismatchError",
    "Status",
    "StatusMismatchError",
    "Term",
    "TermSyntaxError",
    "Theory",
    "UAlgebraError",
    "UnknownSymbolError",
    "build_term",
    "check_homomorphism",
    "check_model",
    "depth",
    "destructure",
    "enumerate_terms",
    "evaluate_with",
    "find_violation",
    "fold",
    "format_oplist",
    "format_term",
    "is_homomorphism",
    "is_model",
    "is_term",
    "parse_equation",
    "parse_oplist",
    "parse_term",
    "satisfies",
    "split_terms",
    "status_of",
]
