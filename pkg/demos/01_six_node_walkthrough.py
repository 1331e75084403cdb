# coding: utf-8

# # Driver nodes of a six-node network
#
# Nodes 1 and 2 feed each other, node 2 fans out to 3 and 4, and node 1
# fans out to 5 and 6. How many inputs does it take to steer every state?

# In[1]:

from drivernodes import (
    bipartite_of,
    dilation_sets,
    maximum_matching,
    numeric_controllability_check,
    parse_graph,
    scc_decompose,
    select_driver_nodes,
    verify_structural_controllability,
)

g = parse_graph("1 2\n2 1\n2 3\n2 4\n1 5\n1 6")
print(g)


# ## Matching
#
# A maximum matching in the bipartite view tells us which states already
# get "their own" incoming edge. Everything else is unmatched.

# In[2]:

m = maximum_matching(bipartite_of(g))
print("matched links:", sorted(m.links))
print("unmatched:", sorted(m.unmatched_right))


# Each unmatched node anchors a dilation set: the nodes that could swap
# places with it under some other maximum matching.

# In[3]:

for d in dilation_sets(g, m):
    print(d.anchor, d.sorted_members(), "in-neighbours:", sorted(g.in_neighborhood(d.members)))


# ## Source components
#
# A strongly connected component with nothing feeding into it must get an
# input somewhere, otherwise it is never reached.

# In[4]:

print("child SCCs:", [sorted(c) for c in scc_decompose(g).children])


# ## Putting it together

# In[5]:

report = select_driver_nodes(g)
print(report.to_text())


# Node 1 does double duty: it covers the set {1, 3} and the source
# component {1, 2} at once, so four inputs suffice instead of five.

# In[6]:

print(verify_structural_controllability(g, report.drivers))
print(numeric_controllability_check(g, report.drivers, trials=5, seed=0))

# Dropping node 1 breaks reachability of the source component.
print(verify_structural_controllability(g, {3, 4, 5, 6}))
