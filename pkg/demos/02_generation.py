# Listing every tree in A-order with the in-place successor.

from ordtrees import build_tables, first_codeword, iter_codewords
from ordtrees.cli import bench

# all 9 trees with 5 nodes and at most 2 children per node
for word in iter_codewords(5, 2):
    print(word)

# the first tree packs leaves greedily; the last one is always the path
print(first_codeword(12, 4).text)   # slmmrlmmrlmr

# the state can be advanced by hand; nchild holds sibling indices
state = first_codeword(6, 3)
print(state.text, state.nchild)
state.next()
print(state.text, state.nchild)

# work per tree stays flat as n grows (amortized constant time)
for n in (8, 10, 12, 14):
    report = bench(n, 3)
    print(n, report["items"], round(report["writes_per_item"], 3), round(report["scans_per_item"], 3))

print(build_tables(14, 3).count(14))
