# Ranking and unranking against the precomputed count table.

from ordtrees import build_tables, count, iter_codewords, rank, unrank
from ordtrees.ranking import OpCounter, rank_steps

t = build_tables(60, 4)

# positions in A-order, 1-based
for i, word in enumerate(iter_codewords(6, 4), 1):
    assert rank(word, t) == i
print("ranks agree with the generator for n=6")

# counts grow like 4**n, so ranks are arbitrary-precision integers
total = count(t, 60)
print(total)
word = unrank(total // 3, 60, t)
print(word)
print(rank(word, t) == total // 3)

# how the rank of a tree is assembled from its root's subtrees
for step in rank_steps("slslrmsrlmsmr", t):
    print(step)

# operation counts: linear for rank, n log n at worst for unrank
for n in (15, 30, 60):
    c = OpCounter()
    rank(unrank(count(t, n) // 2, n, t), t, c)
    print(n, c.ops)
