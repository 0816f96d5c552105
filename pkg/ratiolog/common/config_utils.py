"""Utilities for reading and storing configurations."""

import os

DEFAULT_CACHE_DIR = "~/.ratiolog/cache"
DEFAULT_BASE_WINDOW = "64"
DEFAULT_H_DPS = "50"
DEFAULT_H_RETRIES = "3"
DEFAULT_WORKERS = "1"
DEFAULT_FORMAT = "text"
DEFAULT_PROPAGATION_HORIZON = "500"

RATIOLOG_CACHE_DIR = "RATIOLOG_CACHE_DIR"
RATIOLOG_BASE_WINDOW = "RATIOLOG_BASE_WINDOW"
RATIOLOG_H_DPS = "RATIOLOG_H_DPS"
RATIOLOG_H_RETRIES = "RATIOLOG_H_RETRIES"
RATIOLOG_WORKERS = "RATIOLOG_WORKERS"
RATIOLOG_FORMAT = "RATIOLOG_FORMAT"
RATIOLOG_PROPAGATION_HORIZON = "RATIOLOG_PROPAGATION_HORIZON"
RATIOLOG_SEQUENCES = "RATIOLOG_SEQUENCES"

CACHE_DIR = os.path.expanduser(os.getenv(RATIOLOG_CACHE_DIR, DEFAULT_CACHE_DIR))
BASE_WINDOW = int(os.getenv(RATIOLOG_BASE_WINDOW, DEFAULT_BASE_WINDOW))
H_DPS = int(os.getenv(RATIOLOG_H_DPS, DEFAULT_H_DPS))
H_RETRIES = int(os.getenv(RATIOLOG_H_RETRIES, DEFAULT_H_RETRIES))
WORKERS = max(1, int(os.getenv(RATIOLOG_WORKERS, DEFAULT_WORKERS)))
FORMAT = os.getenv(RATIOLOG_FORMAT, DEFAULT_FORMAT).lower()
PROPAGATION_HORIZON = int(os.getenv(RATIOLOG_PROPAGATION_HORIZON, DEFAULT_PROPAGATION_HORIZON))
SEQUENCES = os.getenv(RATIOLOG_SEQUENCES)
