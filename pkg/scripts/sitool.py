"""
si-subgraph toolkit command line.

Usage:
    python scripts/sitool.py gen tripod_forest 2 --out t2.el
    python scripts/sitool.py analyze c7.el --t 1
    python scripts/sitool.py mwis p4.el --weights w.txt
    python scripts/sitool.py witness make --lemma 3.10 --params 1,2 --out w.txt
    python scripts/sitool.py witness verify w.txt
    python scripts/sitool.py verify si-equivalence --seed 7
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.main import main


if __name__ == "__main__":
    sys.exit(main())
