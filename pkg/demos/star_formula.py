"""
The star case is exactly solvable
=================================

For the star K_{1,m} and r colors the answer is r*(m-1)+1 on the nose:
that many edges at one center survive any pigeonhole split, and one fewer
edge admits a balanced coloring with no monochromatic K_{1,m}.  This
script confronts the formula with the brute-force searcher, which knows
nothing about stars.
"""

from sizeramsey import size_ramsey_exact, star

for r, m in [(2, 2), (2, 3), (3, 2), (3, 3)]:
    predicted = r * (m - 1) + 1
    # enumerate every connected host up to the predicted edge count and
    # exhaust all r-colorings of each
    res = size_ramsey_exact(star(m), r, emax=predicted)
    marker = "ok" if res.value == predicted else "MISMATCH"
    print(f"r={r} m={m}: formula {predicted}, search {res.value} "
          f"({res.nodes} nodes, host {res.arrowing_host_graph6})  {marker}")
