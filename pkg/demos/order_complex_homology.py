"""Order complex of a triangulated real projective plane.

The order complex turns a simplicial complex into a simplicial set whose
simplices are vertex tuples spanning a face.  Its normalized chains must give
the same integer homology as the complex itself.
"""
from pathlib import Path

from suspsplit import homology, normalized_chains, order_complex, read_complex

data = Path(__file__).resolve().parent.parent / "data"
K = read_complex(data / "rp2.sc")
X = order_complex(K)

H = homology(normalized_chains(X))
for d in range(3):
    print(f"H~_{d}(RP^2) = {H.describe(d)}")
