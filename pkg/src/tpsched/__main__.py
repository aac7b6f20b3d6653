"""Entry point for ``python -m tpsched``."""

from .cli import entry

if __name__ == "__main__":
    entry()
