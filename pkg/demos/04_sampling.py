# Uniform random trees: draw a rank, unrank it.

from collections import Counter

import numpy as np

from ordtrees import build_tables, uniform_sample
from ordtrees.ranking import sample_many

t = build_tables(40, 4)

print(uniform_sample(40, t, seed=42))
print(uniform_sample(40, t, seed=42))   # same seed, same tree

# empirical frequencies over the 9 trees with n=5, delta=2
small = build_tables(5, 2)
freq = Counter(str(uniform_sample(5, small, seed)) for seed in range(18_000))
for word, hits in sorted(freq.items()):
    print(word, hits)

# depth of random 40-node trees
words = sample_many(40, t, seed=7, k=500)
depths = []
for w in words:
    depth, best, groups = 0, 0, []
    for ch in str(w)[1:]:
        if ch in "sl":
            depth += 1
            if ch == "l":
                groups.append(depth)
        else:
            depth = groups[-1]
            if ch == "r":
                groups.pop()
        best = max(best, depth)
    depths.append(best)
print("mean height", np.mean(depths), "max", np.max(depths))
