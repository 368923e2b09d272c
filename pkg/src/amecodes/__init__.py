"""Exact constructions of minimal-support AME states from MDS codes, their
stabilizers, AME bases and the ``[[n, 1, d]]_q`` codes spanned by them."""
from .codes import (LinearCode, SingletonArray, extended_singleton_array_4, is_mds,
                    mds_generator, min_distance, parity_check, singleton_array)
from .cyclotomic import CyclotomicInt
from .errors import (AmeError, BudgetExceeded, ConstructionError, FieldError, NotMDSError,
                     UnsupportedError)
from .field import GaloisField, get_field
from .pauli import PauliString
from .qecc import (KLReport, QeccCode, build_code, certify_distance, verify_knill_laflamme)
from .stabilizer import (StabilizerSet, min_class_weight, push, search_incompressible,
                         state_stabilizers, stabilizers_for)
from .states import (SparseState, ame_basis_element, build_ame, closed_form, inner_product,
                     is_k_uniform, verify_ame)

__version__ = "0.1.0"

__all__ = [
    "AmeError", "BudgetExceeded", "ConstructionError", "CyclotomicInt", "FieldError",
    "GaloisField", "KLReport", "LinearCode", "NotMDSError", "PauliString", "QeccCode",
    "SingletonArray", "SparseState", "StabilizerSet", "UnsupportedError",
    "ame_basis_element", "build_ame", "build_code", "certify_distance", "closed_form",
    "extended_singleton_array_4", "get_field", "inner_product", "is_k_uniform", "is_mds",
    "mds_generator", "min_class_weight", "min_distance", "parity_check", "push",
    "search_incompressible", "singleton_array", "state_stabilizers", "stabilizers_for",
    "verify_ame", "verify_knill_laflamme",
]
