"""Exact verification of the sporadic SIC / division-algebra correspondences.

The heavy lifting lives in the compiled extension; this package adds a thin
convenience layer returning parsed reports.
"""

import json as _json

from ._core import (  # noqa: F401
    __version__,
    cayley_automorphism_order,
    cayley_unit_count,
    claim_list,
    eisenstein_unit_count,
    hesse_is_sic,
    hesse_symmetry_orders,
    hoggar_is_sic,
    hoggar_stabilizer_orders,
    hurwitz_unit_count,
    qubit_stabilizer_order,
    root_system_labels,
    run_claims_json,
    sp62_order,
)


def verify_claims(ids=(), threads=1, cache_dir="", timings=False):
    """Run the selected claims (empty = all) and return the parsed report."""
    return _json.loads(run_claims_json(list(ids), threads, cache_dir, timings))


def claim_ids():
    return [cid for cid, _ in claim_list()]
