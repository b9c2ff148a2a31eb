"""
Entry point: decompose a real representation into real irreducible components.

Examples:
    python scripts/decompose.py decompose --algebra "so(3)" --cartan e1 --rep poly:2
    python scripts/decompose.py roots --algebra "so(2,2)" --cartan e2,e5
    python scripts/decompose.py decompose --in spec.json --out json
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import settings
from src.cli import main as cli_main


def main():
    """Validate configuration, then hand the arguments to the CLI."""
    try:
        settings.validate_config(quiet=True)
    except ValueError as e:
        print(f"❌ Configuration error: {e}")
        return 2
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
