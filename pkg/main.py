"""Entry point: ``python main.py <subcommand> ...``."""

from src.cli.app import run

if __name__ == "__main__":
    run()
