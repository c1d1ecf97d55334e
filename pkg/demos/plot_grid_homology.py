"""
Homology of the 2 x n grid
==========================

Build the r-independence complex of the ladder graph G_{2,n} and compute its
reduced integral homology.  Small entries are instant; the last row takes a
couple of minutes in total.
"""
import sys
import time

from higher_ind import graphs, independence_complex, reduced_homology

###############################################################################
# A vertex subset is r-independent when every connected piece of the induced
# subgraph has at most r vertices.  The complex collects all such subsets.

g = graphs.grid(2, 3)
k = independence_complex(g, 2)
print(g, k)
print("facets:", [tuple(g.label(v) for v in f) for f in k.facets()][:4], "...")

###############################################################################
# Reduced homology over the integers.  ``short()`` lists the nonzero groups
# as ``dim:group``.

print("Ind_2(G_{2,3}):", reduced_homology(k).short())

###############################################################################
# The whole table.  Pass a row count on the command line to go further.

rows = int(sys.argv[1]) if len(sys.argv) > 1 else 6
for n in range(1, rows + 1):
    t = time.time()
    cells = [reduced_homology(independence_complex(graphs.grid(2, n), r)).short() for r in range(1, 10)]
    print(f"n={n}:", " | ".join(cells), f"({time.time() - t:.1f}s)")

###############################################################################
# The complex grows fast, but the homology stays concentrated in one or two
# degrees.  Windowed computation enumerates faces only up to the top degree
# asked for.

k = independence_complex(graphs.grid(2, 9), 2, max_dim=8)
print("Ind_2(G_{2,9}) dims 4..7:", reduced_homology(k, 4, 7).short())
