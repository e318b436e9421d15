import sys

import macbound


def main(args=None):
    sys.exit(macbound.cli.main(args))

if __name__ == "__main__":
    main()
