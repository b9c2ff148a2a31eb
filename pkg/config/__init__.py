"""
Configuration package for the decomposition engine
"""
from .settings import (DECOMP_DEFAULT_ALGEBRA, DECOMP_OUTPUT_FORMAT, DECOMP_SEED_ORDER,
                       DECOMP_VERIFY, ensure_report_directory, validate_config)
