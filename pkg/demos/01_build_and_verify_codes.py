"""Build single- and two-deletion codes and check them against the bounds.

Run with: python3 demos/01_build_and_verify_codes.py
"""

from delcodes import (
    constant_weight_guarantee,
    greedy_layer_solver,
    layer_color_solver,
    levenshtein_lower_bound,
    verify_code,
    vt_code,
    weight_partition_code,
    weight_partition_size_bound,
)

n = 10

# The classic residue-class construction: 2^n strings split into n+1
# classes by the position-weighted sum; every class corrects one deletion.
print(f"residue classes for n={n}")
sizes = []
for a in range(n + 1):
    code = vt_code(n, a)
    assert verify_code(code)
    sizes.append(len(code.words))
    print(f"  a={a:2d} size={len(code.words)}")
print(f"total {sum(sizes)} = 2^{n}")
print(f"best class {max(sizes)}, analytic floor {levenshtein_lower_bound(n, 1)}")
print()

# The weight-partition construction: pick a weight residue, take an
# independent set in each admissible layer, and union them. Adjacent
# strings differ in weight by at most s, so layers s+1 apart never clash.
print("weight-partition construction, one deletion")
for a in (0, 1):
    code = weight_partition_code(n, 1, a, layer_color_solver)
    assert verify_code(code)
    floor = weight_partition_size_bound(n, a)
    print(f"  a={a} size={len(code.words)} floor={floor} (~{float(floor):.1f})")
print()

# For two deletions there is no coloring shortcut; use the greedy
# per-layer solver and compare with the constant-weight guarantee.
print("weight-partition construction, two deletions")
floor = constant_weight_guarantee(n, 2)
best = 0
for a in (0, 1, 2):
    code = weight_partition_code(n, 2, a, greedy_layer_solver)
    assert verify_code(code)
    best = max(best, len(code.words))
    print(f"  a={a} size={len(code.words)}")
print(f"best {best} vs analytic floor ~{float(floor):.2f}")
