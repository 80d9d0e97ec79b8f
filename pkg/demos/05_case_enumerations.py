"""The finite arithmetic case analyses, re-proved by exhaustion.

Each report sweeps its declared constraint system exactly and compares the
solution set against the expected one; `match` is the machine-checkable
verdict.  The number-theoretic identity sweeps run alongside.
"""
from coverlab.casecheck import all_cases
from coverlab.numtheory import (gcd_qpow, lifting_identity_check,
                                nagell_ljunggren_search,
                                zsigmondy_corollary_solve)

print("Case enumerations")
for case_id, rep in all_cases().items():
    print(f"\n[{case_id}]  match = {rep.match}")
    print(f"  space: {rep.search_space}")
    print(f"  solutions: {rep.solutions}")

print("\nSolutions of p^m = q^n + 1 up to 10^6, classified:")
for s in zsigmondy_corollary_solve(10**6):
    print(f"  {s.p}^{s.m} = {s.q}^{s.n} + 1   [{s.case}]")

print("\nSquare quotients (x^i - 1)/(x - 1) = y^2 for x <= 200, i <= 20:")
print(" ", nagell_ljunggren_search(200, 20))

print("\np-part lifting identity, a few instances:")
for q, e, m, p in [(4, 1, 3, 3), (5, -1, 3, 3), (7, 1, 12, 2)]:
    chk = lifting_identity_check(q, e, m, p)
    print(f"  (q,e,m,p)=({q},{e:+d},{m},{p}): lhs={chk.lhs} rhs={chk.rhs} "
          f"equal={chk.equal}")

print("\ngcd(q^k-1, q^m-1) = q^gcd(k,m)-1, a few instances:")
for q, k, m in [(2, 6, 4), (3, 4, 6), (10, 12, 18)]:
    chk = gcd_qpow(q, k, m)
    print(f"  q={q}, k={k}, m={m}: gcd = {chk.gcd_value} = {chk.expected}")
