from .checks import (CHECKS, check_lemma6_lemma7, check_lemma9, check_main_theorem,
                     check_prop1, check_refinement_t4_t8, check_refinement_t5,
                     check_theorem2, get_catalog, run, search_open_problem)
from .report import CheckConfig, VerificationReport, exit_code, to_json, to_markdown

__all__ = [
    "CHECKS", "CheckConfig", "VerificationReport", "check_lemma6_lemma7", "check_lemma9",
    "check_main_theorem", "check_prop1", "check_refinement_t4_t8", "check_refinement_t5",
    "check_theorem2", "exit_code", "get_catalog", "run", "search_open_problem", "to_json",
    "to_markdown",
]
