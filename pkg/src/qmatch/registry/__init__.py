"""Named catalog of matching-coefficient statements, identities and conjectures."""

from .core import (
    ALIASES,
    REGISTRY,
    EntryReport,
    RegistryEntry,
    Summary,
    export_catalog,
    get_entry,
    list_ids,
    verify_all,
    verify_entry,
)
from .dissections import verify_p_dissection, verify_theta_lemma

__all__ = [
    "ALIASES", "REGISTRY", "EntryReport", "RegistryEntry", "Summary", "export_catalog",
    "get_entry", "list_ids", "verify_all", "verify_entry", "verify_p_dissection",
    "verify_theta_lemma",
]
