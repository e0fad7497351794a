from oracle.validate import CommunityDiagnostics, to_networkx, validate_community
from oracle.enumerate import (
    ORACLE_MAX_VERTICES,
    CandidateDiagnostics,
    EnumerationReport,
    OracleRefusalError,
    brute_force_topr,
    enumerate_influential_communities,
    enumerate_view,
    ranking_key,
)
from oracle.mirror import UnipartiteGraph, mirror_transform, unipartite_k_core
from oracle.metrics import ApproximationReport, RankRatio, approximation_ratio, minimum_weight_influence

__all__ = [
    "ORACLE_MAX_VERTICES",
    "OracleRefusalError",
    "CandidateDiagnostics",
    "EnumerationReport",
    "enumerate_influential_communities",
    "enumerate_view",
    "brute_force_topr",
    "ranking_key",
    "CommunityDiagnostics",
    "validate_community",
    "to_networkx",
    "UnipartiteGraph",
    "mirror_transform",
    "unipartite_k_core",
    "ApproximationReport",
    "RankRatio",
    "approximation_ratio",
    "minimum_weight_influence",
]
