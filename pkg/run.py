"""
Lab entry point.
"""
from dotenv import load_dotenv

from src.cli.main import cli

# Load environment variables
load_dotenv()

if __name__ == "__main__":
    cli()
