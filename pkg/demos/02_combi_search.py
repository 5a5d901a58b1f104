"""
Searching the residue tree for divisor subsets
==============================================

For m = n**a and k = a*b, the polynomial X**k + n**a splits into factors
f_d, one for each divisor d of a.  At a prime p the set w_z collects the
d for which f_d(-z) has symbol -1.  The pruned search below finds every
w_z that occurs on p-adic points, without scanning all z.
"""

from brauer_zk.combi import combi
from brauer_zk.cyclotomic import fd_family
from brauer_zk.oracle import residue_scan_C

a, b, n = 3, 3, 6  # m = 216, k = 9

family = fd_family(a, b, n)
for d, f in family.members.items():
    print(f"f_{d}(X) = {f}")
print("product:", family.product())

for p in (2, 3, 5):
    result = combi(a, b, n, p)
    print(f"p = {p}: subsets {result.sorted_subsets()} "
          f"({result.nodes_visited} nodes, depth {result.max_depth})")

# a brute-force scan of z below 2**8 finds the same subsets at p = 2
print("scan at p = 2:", sorted(sorted(s) for s in residue_scan_C(a, b, n, 2, 8)))

# the default pruning settles a divisor as soon as its Taylor expansion
# pins the symbol; the literal rule visits more nodes for the same answer
for mode in ("taylor", "literal"):
    r = combi(3, 3, 30, 3, pruning=mode)
    print(f"{mode:8s} nodes={r.nodes_visited:5d} subsets={r.sorted_subsets()}")
