"""
The command line
================

Everything above is reachable from the ``sig3`` command. This script calls
the same entry point in-process.
"""
import os
import tempfile

from sig3.cli import main

print("$ sig3 periods --grid 0.2:0.8:0.2")
main(["periods", "--grid", "0.2:0.8:0.2"])

print("\n$ sig3 eval P --kappa 0.6 --z 2/3*Omega")
main(["eval", "P", "--kappa", "0.6", "--z", "2/3*Omega"])
print("$ sig3 eval W --kappa 0.6 --z 2/3*Omega")
main(["eval", "W", "--kappa", "0.6", "--z", "2/3*Omega"])

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "w.csv")
    main(["sample", "W", "--kappa", "0.5", "--from", "0", "--to", "2*Omega", "--n", "101", "--out", out])
    with open(out) as fh:
        flagged = [line.split(",")[0] for line in fh.read().splitlines()[1:] if line.endswith(",1")]
    print(f"\nsampling W on [0, 2 Omega]: poles flagged at rows {', '.join(flagged)}")

print("\n$ sig3 verify --kappa 0.7071067811865476")
code = main(["verify", "--kappa", "0.7071067811865476"])
print(f"exit code {code}")
