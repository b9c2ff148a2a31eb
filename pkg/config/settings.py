"""
Configuration management for the real decomposition engine.
Loads settings from environment variables.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent

# Output Configuration
DECOMP_OUTPUT_FORMAT = os.getenv("DECOMP_OUTPUT_FORMAT", "text").strip().lower()
DECOMP_SHOW_PROGRESS = os.getenv("DECOMP_SHOW_PROGRESS", "true").strip().lower() in ("1", "true", "yes", "on")

# Decomposition Configuration
DECOMP_VERIFY = os.getenv("DECOMP_VERIFY", "on").strip().lower()
DECOMP_SEED_ORDER = os.getenv("DECOMP_SEED_ORDER", "default").strip().lower()
DECOMP_ORACLE_MAX_DIM = int(os.getenv("DECOMP_ORACLE_MAX_DIM", 10))
DECOMP_DEFAULT_ALGEBRA = os.getenv("DECOMP_DEFAULT_ALGEBRA", "so(3,0)").strip()

# Paths
DECOMP_REPORT_DIR = PROJECT_ROOT / os.getenv("DECOMP_REPORT_DIR", "data/reports")

OUTPUT_FORMATS = ("text", "json")
VERIFY_MODES = ("on", "off")
SEED_ORDERS = ("default", "lex")


def ensure_report_directory():
    """Create the report directory if it doesn't exist."""
    DECOMP_REPORT_DIR.mkdir(parents=True, exist_ok=True)
    return DECOMP_REPORT_DIR


def validate_config(quiet: bool = False):
    """Validate that every configured value is usable."""
    invalid = []
    if DECOMP_OUTPUT_FORMAT not in OUTPUT_FORMATS:
        invalid.append(f"DECOMP_OUTPUT_FORMAT={DECOMP_OUTPUT_FORMAT!r} (expected one of {', '.join(OUTPUT_FORMATS)})")
    if DECOMP_VERIFY not in VERIFY_MODES:
        invalid.append(f"DECOMP_VERIFY={DECOMP_VERIFY!r} (expected on or off)")
    if DECOMP_SEED_ORDER not in SEED_ORDERS:
        invalid.append(f"DECOMP_SEED_ORDER={DECOMP_SEED_ORDER!r} (expected default or lex)")
    if DECOMP_ORACLE_MAX_DIM < 1:
        invalid.append(f"DECOMP_ORACLE_MAX_DIM={DECOMP_ORACLE_MAX_DIM} (must be positive)")

    if invalid:
        raise ValueError(
            f"Invalid configuration values: {'; '.join(invalid)}\n"
            f"Please check your .env file."
        )

    if not quiet:
        print("✓ Configuration validated successfully")
    return True


if __name__ == "__main__":
    # Test configuration
    validate_config()
    print(f"\nConfiguration:")
    print(f"  Output Format: {DECOMP_OUTPUT_FORMAT}")
    print(f"  Verify: {DECOMP_VERIFY}")
    print(f"  Seed Order: {DECOMP_SEED_ORDER}")
    print(f"  Oracle Max Dim: {DECOMP_ORACLE_MAX_DIM}")
    print(f"  Report Directory: {DECOMP_REPORT_DIR}")
