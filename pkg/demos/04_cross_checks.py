# coding: utf-8

# # Checking the planner against slow but obvious methods
#
# Exhaustive search over driver subsets, and random numeric realizations
# with an exact rank test over a prime field.

# In[1]:

import random

from drivernodes import (
    Digraph,
    InfeasibleError,
    brute_force_min_drivers,
    min_driver_count,
    numeric_controllability_check,
    select_driver_nodes,
)

rng = random.Random(0)


def random_graph(n, p):
    return Digraph(n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                       if i != j and rng.random() < p])


agree = 0
for _ in range(100):
    g = random_graph(rng.randint(2, 9), rng.choice([0.1, 0.2, 0.3]))
    F = set(rng.sample(range(1, g.n + 1), rng.randint(0, g.n // 3)))
    bf = brute_force_min_drivers(g, F)
    try:
        ours = min_driver_count(g, F)
    except InfeasibleError:
        ours = None
    agree += ours == (bf.count if bf.feasible else None)
print(f"{agree}/100 agree with exhaustive search")


# ## Numeric spot check
#
# Fill the pattern with random entries mod 2^31-1 and build the Kalman
# matrix. A structurally controllable choice should give full rank.

# In[2]:

g = random_graph(8, 0.25)
r = select_driver_nodes(g)
print("drivers:", r.drivers)
print(numeric_controllability_check(g, r.drivers, trials=5, seed=1))
if len(r.drivers) > 1:
    print("one fewer:", numeric_controllability_check(g, r.drivers[1:], trials=5, seed=1))
