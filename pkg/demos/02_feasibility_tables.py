"""Feasibility tables for the two extremal families.

The odd-fibre family ((t^2-1)^2, r, (t-1)^2(t^2+t-1)/r) needs r | t-1 and
gcd(6, r) = 1, plus the lone (9, 3, 3) exception; members would give
SIC-sized line systems.  The even-fibre family at r = 2 contains the hexagon,
icosahedron and the double covers on 28 and 276 vertices.
"""
from coverlab import feasible_A, feasible_B, hoffman_bounds

print("Odd-fibre feasibility table, t <= 30")
print(f"{'t':>4} {'r':>4} {'n':>8} {'mu':>7} {'lambda':>8} "
      f"{'clique<=':>9} {'coclique<=':>11}")
for fb in feasible_B(30):
    p = fb.params
    clique, coclique = hoffman_bounds(fb)
    tag = "  (the exceptional square case)" if fb.special else ""
    print(f"{fb.t:>4} {fb.r:>4} {p.n:>8} {p.mu:>7} {p.lam:>8} "
          f"{str(clique):>9} {str(coclique):>11}{tag}")

print("\nEvery entry has integral positive multiplicities:",
      all(fb.params.multiplicities_integral for fb in feasible_B(100)))

print("\nEven-fibre feasibility table, t <= 6 (real absolute bound)")
print(f"{'t':>8} {'r':>4} {'n':>5} {'mu':>5}  branch")
for e in feasible_A(6):
    p = e.params
    print(f"{str(e.t):>8} {e.r:>4} {p.n:>5} {p.mu:>5}  {e.branch}")
print("\nThe r=2 rows are the hexagon (3,2,1), icosahedron (6,2,2), and the")
print("double covers on 28 and 276 vertices with their companion systems.")
