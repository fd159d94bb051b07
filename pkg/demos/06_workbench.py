"""
The command-line workbench
==========================

Everything above is also reachable from the ``proxkit`` command. Reports
are plain ``key: value`` lines, or JSON with ``--json``, and the exit
status says whether every check passed.
"""
import tempfile
from pathlib import Path

from proxkit.cli import main

# %% Validate a fixture together with its order relation
print("exit", main(["validate", "B2", "--relation", "leq"]))

# %% Dualize the least subordination on B2 and draw it
with tempfile.TemporaryDirectory() as tmp:
    out = str(Path(tmp) / "b2.json")
    main(["dualize", "B2", "min", "--out", out])
    main(["dot", out])

# %% Exhaustive theorem check and a failing morphism
main(["exhaust", "B2", "--check", "iff-s8"])
print("exit", main(["morphism", "B2", "C2", "0,0,0,1"]))
