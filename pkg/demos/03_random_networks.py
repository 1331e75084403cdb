# coding: utf-8

# # Driver density in random networks
#
# Fraction of nodes that need an input, for three random graph families at
# a few densities. Sparse graphs need many drivers; dense ones few.

# In[1]:

import time

import numpy as np

from drivernodes import bipartite_of, generate_random, maximum_matching, min_driver_count

n = 2000
rows = []
for model, params in [
    ("erdos-renyi", {"p": 1.0 / n}),
    ("erdos-renyi", {"p": 3.0 / n}),
    ("erdos-renyi", {"p": 8.0 / n}),
    ("small-world", {"k": 2, "beta": 0.1}),
    ("small-world", {"k": 4, "beta": 0.3}),
    ("scale-free", {"m": 1}),
    ("scale-free", {"m": 3}),
]:
    fracs = [min_driver_count(generate_random(model, n, seed=s, **params)) / n for s in range(3)]
    rows.append((model, params, np.mean(fracs)))

for model, params, f in rows:
    print(f"{model:12s} {str(params):28s} n_D = {f:.3f}")


# ## How the matching step scales
#
# Doubling n at fixed mean degree should cost a bit more than double.

# In[2]:

for size in (1000, 2000, 4000, 8000):
    g = generate_random("erdos-renyi", size, seed=1, p=3.0 / size)
    b = bipartite_of(g)
    t = time.perf_counter()
    maximum_matching(b)
    print(size, f"{(time.perf_counter() - t) * 1e3:.1f} ms")
