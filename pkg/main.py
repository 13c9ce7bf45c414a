"""
Main Entry Point
Runs one of the qteleport-lab commands.

Usage:
  python main.py reproduce                          # Fixed check list
  python main.py scan --family iso --format csv     # Family sweep
  python main.py oracle-check --samples 50          # Oracle equivalence
  python main.py conjecture --sampler ginibre       # Conjecture scan
"""

import sys


def main() -> int:
    """Main entry point."""
    from src.ui.cli import main as cli_main

    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
