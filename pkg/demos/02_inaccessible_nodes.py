# coding: utf-8

# # When some actuators are off limits
#
# Sixteen nodes: a four-node core {1,2,3,4}, four two-node loops, and four
# relay nodes 5..8 sitting downstream of them. Some nodes cannot host an
# actuator. We see how the minimum changes.

# In[1]:

from drivernodes import Digraph, InfeasibleError, min_driver_count, select_driver_nodes

edges = [
    (1, 2), (2, 1), (3, 4), (4, 3), (1, 4), (4, 1), (3, 2),
    (2, 5), (9, 5), (2, 7), (13, 7), (1, 6), (11, 6), (1, 8), (15, 8),
    (9, 10), (10, 9), (11, 12), (12, 11), (13, 14), (14, 13), (15, 16), (16, 15),
]
g = Digraph(16, edges)

report = select_driver_nodes(g)
print(report.to_text())


# Now forbid nodes 2, 4, 5, 12 and 15.

# In[2]:

blocked = {2, 4, 5, 12, 15}
report = select_driver_nodes(g, blocked)
print(report.to_text())


# One extra input is needed. The plan only ever picks accessible nodes.

# In[3]:

assert not set(report.drivers) & blocked

for extra in range(1, 17):
    F = blocked | {extra}
    try:
        print(extra, min_driver_count(g, F))
    except InfeasibleError as exc:
        print(extra, "infeasible:", exc)
