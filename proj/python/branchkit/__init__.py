"""Branching laws, Weyl terms and good-weight classification for SU(m,n), SO_0(2,2n) and SO*(2n).

Families are strings ("su:3,2", "soe:2", "sostar:5"); weights and labels use
the CLI literal grammar ("0,0,0|0,0", "p=2;1,1", "q=0;1,1", ...). Results are
plain dicts and lists in the JSON encoding of the command-line tool.
"""

from ._core import (
    FamilyError,
    ResourceError,
    ValidationError,
    branch,
    explore_sostar,
    invariant_I,
    is_good,
    lattice_member,
    member_soe,
    oracle_restrict,
    preimage,
    run,
    run_criterion,
    star_groups,
    verify_telescoping,
    weyl_terms,
)

__all__ = [
    "FamilyError",
    "ResourceError",
    "ValidationError",
    "branch",
    "explore_sostar",
    "invariant_I",
    "is_good",
    "lattice_member",
    "member_soe",
    "oracle_restrict",
    "preimage",
    "run",
    "run_criterion",
    "star_groups",
    "verify_telescoping",
    "weyl_terms",
]
