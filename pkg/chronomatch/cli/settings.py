# IMPORTATION STANDARD
import os
from pathlib import Path

# Installation related paths
HOME_DIRECTORY = Path.home()

SETTINGS_DIRECTORY = HOME_DIRECTORY / ".chronomatch"
SETTINGS_ENV_FILE = SETTINGS_DIRECTORY / ".env"

# Environment
LOG_LEVEL_ENV = "CHRONOMATCH_LOG_LEVEL"
DATASETS_ENV = "CHRONOMATCH_DATASETS"
DEFAULT_LOG_LEVEL = "WARNING"

# Commands
MATCH_CHUNK_SIZE = 10_000
BENCH_MOTIFS = "M1,M2,M3,M4,M5,M6"
BENCH_DELTAS = "1h"


def datasets_directory() -> Path:
    """Directory holding the public temporal edge lists"""
    return Path(os.getenv(DATASETS_ENV, str(SETTINGS_DIRECTORY / "datasets")))
