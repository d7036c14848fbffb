"""Unipotent character values of classical groups via symbols."""
import json

from ._core import (
    ContractError,
    DomainError,
    InternalError,
    ParseError,
    babbage_residue,
    cli,
    cohooks,
    d_ell,
    defect,
    degree,
    dual,
    hooks,
    is_ell_singular,
    normalize,
    predicted_exceptions,
    rank,
    regular_guarantee,
    symbols,
    value,
    value_oracle,
)
from . import _core


def scan(family, n, q, ell, threads=0):
    """Non-vanishing scan report as a dict."""
    return json.loads(_core.scan_json(family, n, q, ell, threads))


def cartan(case_id, d_or_e, r):
    return json.loads(_core.cartan_json(case_id, d_or_e, r))


def corrigendum(family, rank, q, p):
    return json.loads(_core.corrigendum_json(family, rank, q, p))


__all__ = [
    "ContractError", "DomainError", "InternalError", "ParseError", "babbage_residue", "cartan", "cli",
    "cohooks", "corrigendum", "d_ell", "defect", "degree", "dual", "hooks", "is_ell_singular", "normalize",
    "predicted_exceptions", "rank", "regular_guarantee", "scan", "symbols", "value", "value_oracle",
]
