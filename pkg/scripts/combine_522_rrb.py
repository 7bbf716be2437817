"""Print the beat-by-beat timeline of a siteswap combined with a poi word (default 522 with RRB)."""

import sys

from jugglestate.cli import main

if __name__ == "__main__":
    pattern = sys.argv[1] if len(sys.argv) > 1 else "522"
    word = sys.argv[2] if len(sys.argv) > 2 else "RRB"
    sys.exit(main(["combine", pattern, "--word", word]))
