"""Clique certificates, segment cliques, and the odd-hole witness.

Run with: python3 demos/03_witnesses_and_certificates.py
"""

from delcodes import (
    build_graph,
    chromatic_certificate,
    chromatic_lower_bound,
    deletion_distance,
    imperfectness_witness,
    segment_clique,
    verify_clique,
    verify_coloring,
)

# A proper coloring gives an upper bound on the chromatic number and a
# clique gives a lower bound; when the sizes match, both are exact.
for n in (6, 10):
    coloring, clique, chi = chromatic_certificate(n)
    g = build_graph(1, n)
    assert verify_coloring(g, coloring.assignment)
    assert verify_clique(g, clique.vertices)
    print(f"chi(L(1,{n})) = {chi}: {coloring.num_colors} colors, "
          f"{len(clique.vertices)}-clique of supersequences of {clique.params['z']}")
print()

# For more deletions, run-length segment cliques can beat the plain
# supersequence clique at some lengths.
print("clique lower bounds on chi(L(2,n))")
for n in (11, 17, 24):
    print(f"  n={n:2d}: {chromatic_lower_bound(2, n)}")
print()

w = segment_clique(6, 3, 1, 1)
dists = [deletion_distance(w.center, y) for y in w.vertices]
print(f"segment clique l=6 k=3 b=c=1: {len(w.vertices)} strings of length "
      f"{len(w.vertices[0])}, center distance <= {max(dists)}")
print(f"center: {w.center}")
print()

# Five strings inducing a chordless cycle show the graph is not perfect:
# its clique and chromatic numbers can differ on induced subgraphs.
for s, n in [(1, 5), (2, 7)]:
    vs = imperfectness_witness(s, n)
    print(f"odd hole in L({s},{n}): {' '.join(str(v) for v in vs)}")
