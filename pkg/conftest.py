import sys
from pathlib import Path

# allow running the suite from a fresh checkout without installing
src = str(Path(__file__).parent / "src")
if src not in sys.path:
    sys.path.insert(0, src)
