"""Process entry point: ``python main.py <command> ...``."""

from dotenv import load_dotenv

from src.cli import cli

load_dotenv()

if __name__ == "__main__":
    cli(prog_name='dynlogic')
