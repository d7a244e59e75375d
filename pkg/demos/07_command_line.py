# The same operations from the shell, driven through subprocess.

import subprocess
import sys


def graphcat(*args):
    proc = subprocess.run([sys.executable, "-m", "graphcat", *args], capture_output=True, text=True)
    print("$ graphcat", " ".join(args), " -> exit", proc.returncode)
    print((proc.stdout or proc.stderr).strip()[:300])


graphcat("aut", "--input", "petersen", "--format", "text")
graphcat("minor", "--pattern", "k33", "--host", "petersen")
graphcat("order", "antichain", "--divisors", "2..12")
graphcat("transform", "tree", "--input", "c3", "--format", "dot")
graphcat("catalog", "8")
graphcat("named", "nope")
