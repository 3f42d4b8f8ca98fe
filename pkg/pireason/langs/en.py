"""
English strings for pireason.
All user-facing CLI text is defined here.
"""

STRINGS = {
    # ==================== PROGRAM ====================
    "prog_description": (
        "Prime implicants, partial entailment, relevance and partial goal "
        "satisfaction for propositional logic."
    ),
    "prog_epilog": (
        "Formulas use ! & | -> <-> with atoms [a-z][A-Za-z0-9_]*; literal and "
        "atom sets are written {x, !y}. Exit codes: 0 positive or report, "
        "1 negative, 2 usage or input error."
    ),

    # ==================== ARGUMENTS ====================
    "arg_format": "Output format (default: text)",
    "arg_theory": "Theory file: one formula per line, '#' comments",
    "arg_formula": "Formula, e.g. \"(x & r) | (y & s)\"",
    "arg_antecedent": "Antecedent formula P",
    "arg_consequent": "Consequent formula Q",
    "arg_kind": "Entailment kind",
    "arg_check_set": "Decide whether this literal set is a prime implicant instead of listing them",
    "arg_varset": "Atom set, e.g. \"{x, y}\"",
    "arg_samples": "Random instances per table cell (at least {minimum})",
    "arg_seed": "Seed for the random sweep",
    "arg_workers": "Worker processes for the sweep",
    "arg_scenario": "Scenario file (line format or .json)",
    "arg_kinds": "Comma-separated kinds allowed to rank actions, e.g. weak,strong",
    "arg_observation": "Observation formula to explain",
    "arg_hypotheses": "Hypothesis literals, e.g. \"{y, !y}\"",
    "arg_mode": "some: literal in at least one implicant; all: in every implicant",
    "arg_literal": "Literal, e.g. x or !y",
    "arg_clause": "Clause as a literal set read disjunctively, e.g. \"{x, y}\"",

    # ==================== RESULTS ====================
    "yes": "yes",
    "no": "no",
    "trivial": "TRIVIAL",
    "nontrivial": "NONTRIVIAL",
    "pi_member": "{candidate} is a prime implicant",
    "pi_not_member": "{candidate} is not a prime implicant",
    "no_implicants": "no prime implicants",
    "field_line": "{name}: {value}",
    "no_explanation": "no explanation",

    # ==================== RULE TABLE ====================
    "rules_header": (
        "Inference rules under partial entailment "
        "(falsification sweep: {samples} random instances per cell, seed {seed})"
    ),
    "rules_note": "A 'yes' cell survived the sweep; this is evidence, not a proof.",
    "rules_mismatch_mark": "!",
    "rules_extension": "{rule} is not in the published table",
    "rules_counterexample": "{rule}/{kind} [{source}]: {instance}",
    "rules_summary_ok": "All {cells} cells agree with the table.",
    "rules_summary_bad": "{bad} of {cells} cells disagree with the table.",
    "rules_violation": "Rule expected to hold was refuted: {error}",

    # ==================== GOALS ====================
    "goal_action_line": (
        "{label}: applicable={applicable} complete={complete} "
        "strong={strong} plain={plain} weak={weak} bucket={bucket}"
    ),
    "goal_ranking_header": "ranking:",
    "goal_bucket_line": "  {bucket}: {labels}",
    "goal_inapplicable": "inapplicable: {labels}",

    # ==================== ERRORS ====================
    "error_line": "error: {message}",
    "error_kinds": "Unknown kind in {value!r}; choose from weak, plain, strong",
}
