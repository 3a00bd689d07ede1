"""Tour of the confusability graphs: degrees, colorings, exact alpha.

Run with: python3 demos/02_graphs_and_independent_sets.py
"""

from delcodes import (
    build_graph,
    degree_stats,
    exact_mis,
    greedy_mis,
    insertion_count,
    layer_avg_degree_bound,
    modified_vt_weight,
    verify_coloring,
    vt_code,
    vt_weight,
)

# Vertices are all length-n strings; two strings are adjacent when some
# single string of length n-s is a subsequence of both.
for n in (6, 8, 10):
    g = build_graph(1, n)
    max_deg, avg_deg, edges = degree_stats(g)
    ins = insertion_count(1, n)
    print(
        f"L(1,{n:2d}): {len(g):5d} vertices {edges:6d} edges "
        f"max_deg={max_deg:3d} avg={float(avg_deg):6.2f} "
        f"(bound {float(ins * (ins - 1)) / 2:.1f})"
    )
print()

# The weighted-sum coloring is proper, so each color class is a code;
# a greedy independent set gives another code directly.
g = build_graph(1, 8)
assert verify_coloring(g, {x: vt_weight(x) for x in g.vertices})
greedy = greedy_mis(g)
exact = exact_mis(g)
best_class = max(len(vt_code(8, a).words) for a in range(9))
print(f"alpha(L(1,8)): greedy {len(greedy)}, exact {len(exact)}, best class {best_class}")
print()

# Weight layers are much smaller and carry their own reduced-modulus
# coloring; the exact solver confirms the best layer code sizes.
print("layers of L(1,8)")
for k in range(9):
    layer = build_graph(1, 8, k)
    _, avg_deg, _ = degree_stats(layer)
    assert verify_coloring(layer, {x: modified_vt_weight(x) for x in layer.vertices})
    alpha = len(exact_mis(layer))
    bound = layer_avg_degree_bound(1, 8, k)
    print(
        f"  k={k} vertices={len(layer):2d} avg_deg={float(avg_deg):5.2f} "
        f"(bound {float(bound):5.2f}) alpha={alpha}"
    )
