"""
Configuration module for pireason.
All configurable settings are centralized here.
"""

import os
from pathlib import Path

# Paths
BASE_DIR = Path(__file__).parent
DATA_DIR = BASE_DIR / "data"
ENV_FILE = BASE_DIR / ".env"


def load_env_file(path: Path = ENV_FILE) -> bool:
    """Export KEY=VALUE lines from `path`; variables already set win."""
    if not path.exists():
        return False
    try:
        from dotenv import load_dotenv
        load_dotenv(path)
    except ImportError:
        # python-dotenv not installed, load manually
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if line and not line.startswith("#") and "=" in line:
                    key, value = line.split("=", 1)
                    os.environ.setdefault(key.strip(), value.strip())
    return True


# Must run before any os.getenv below
ENV_LOADED = load_env_file()

# Truth-table engine: largest atom universe a single query may span.
# Every query enumerates 2^n rows, so keep this small.
MAX_UNIVERSE_ATOMS = int(os.getenv("PIREASON_MAX_UNIVERSE", "20"))

# Memoised PI(theory, formula) results
PI_CACHE_SIZE = int(os.getenv("PIREASON_PI_CACHE", "4096"))

# Rule table sweep defaults
DEFAULT_SAMPLES = int(os.getenv("PIREASON_SAMPLES", "500"))
DEFAULT_SEED = int(os.getenv("PIREASON_SEED", "1"))
MIN_SAMPLES_PER_CELL = 100
REPORT_WORKERS = int(os.getenv("PIREASON_WORKERS", "1"))

# Random instance generator caps
GENERATOR_ATOMS = ("x", "y", "z", "w")
GENERATOR_MAX_DEPTH = 4
GENERATOR_MAX_THEORY = 2
# Attempts allowed per requested instance before generation gives up
GENERATION_ATTEMPT_FACTOR = 200

# Output formats accepted by --format
OUTPUT_FORMATS = ("text", "json")

# CLI subcommands with a short description each (shown in --help)
CLI_COMMANDS = [
    ("pi", "List prime implicants of a formula w.r.t. a theory"),
    ("check", "Decide weak, plain or strong partial entailment"),
    ("trivial", "Check whether a formula is trivial w.r.t. a theory"),
    ("rules", "Re-derive the inference-rule table by random sweep"),
    ("independent", "Formula-variable independence"),
    ("strict-relevant", "Strict relevance of a formula to a set of atoms"),
    ("relevant", "Relevance between two formulas"),
    ("novelty", "New positive / new negative test"),
    ("goal", "Classify and rank actions against a goal"),
    ("abduce", "Abductive explanations from a hypothesis set"),
    ("literal", "Literal in some / all prime implicants"),
    ("clause", "Compare two clauses under every entailment notion"),
]

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"
