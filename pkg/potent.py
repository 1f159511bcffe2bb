import sys
from modules.main.cli.potent_cli import main

if __name__ == "__main__":
    sys.exit(main())
