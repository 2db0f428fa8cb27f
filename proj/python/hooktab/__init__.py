"""Hook-valued tableaux: uncrowding, switching, enumeration and checks.

Tableaux are passed as strings in the same text format the ``hooktab``
command line tool reads and writes.
"""

import json

from ._hooktab import (
    CapTooSmall,
    InvalidTableau,
    ParseError,
    PreconditionViolation,
    c_beta_shift,
    check_ids,
    classify_mixed,
    enum_biflagged,
    enum_exquisite,
    enum_hvt,
    enum_ssyt,
    fully_switch,
    gg_jdt,
    hvt_genfun,
    identity_holds,
    is_biflagged,
    is_exquisite,
    normalize,
    phi,
    shuffle,
    uncrowd,
    uncrowd_canonical,
    validate,
    verify_json,
    weight,
)


def verify(check_id, **options):
    """Run a verification check and return the report as a dict."""
    return json.loads(verify_json(check_id, **options))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
