"""Canonical-form arithmetic for the concrete group families."""

from ascent_lab.groups.base import Group, Word, evaluate_word, format_word, parse_word, t_exponent
from ascent_lab.groups.families import BaumslagSolitar, FreeAbelian, Heisenberg, MatrixGroup, WreathZZ
from ascent_lab.groups.free import StallingsGraph, stallings_membership
from ascent_lab.groups.hnn import HnnAbelian, HnnFree, normalize_hnn_free
from ascent_lab.groups.spec import GroupSpec, build_group, parse_group_spec

__all__ = [
    "BaumslagSolitar",
    "FreeAbelian",
    "Group",
    "GroupSpec",
    "Heisenberg",
    "HnnAbelian",
    "HnnFree",
    "MatrixGroup",
    "StallingsGraph",
    "Word",
    "WreathZZ",
    "build_group",
    "evaluate_word",
    "format_word",
    "normalize_hnn_free",
    "parse_group_spec",
    "parse_word",
    "stallings_membership",
    "t_exponent",
]
