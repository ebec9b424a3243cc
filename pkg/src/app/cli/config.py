""" Configuration file
"""

import os

from dotenv import load_dotenv

load_dotenv(encoding="utf8", dotenv_path=".env")


class Config(object):
    """Environment settings; run parameters live in RunConfig."""
    LOG_DIR = os.getenv("LK_LOG_DIR", "logs")
    LOG_LEVEL = os.getenv("LK_LOG_LEVEL", "INFO")
    DEFAULT_OUTPUT_DIR = os.getenv("LK_OUTPUT_DIR", "results")
    DEFAULT_WORKERS = int(os.getenv("LK_WORKERS", "1"))
