"""Building a field layout and reading its radio adjacency.

The bundled 16-node layout places sensors on a 300x500 field with a
110-unit radio range; two nodes are linked when they sit within range
of each other.  Run this to see the neighbor lists and hop distances
the other demos build on.
"""

from collections import deque

from qcs_sim import default16_topology, load_layout

topo = default16_topology()

print(f"field {topo.field_size[0]:.0f}x{topo.field_size[1]:.0f}, "
      f"radio range {topo.radio_range:.0f}, base station node {topo.base_id}")
print(f"connected: {topo.is_connected()}")
print()

print("adjacency")
for nid in sorted(topo.nodes):
    tag = " (base)" if nid == topo.base_id else ""
    nbrs = ",".join(str(j) for j in topo.neighbors(nid))
    x, y = topo.nodes[nid]
    print(f"  node {nid:>2} at ({x:>3.0f},{y:>3.0f}){tag}: {nbrs}")
print()

# hop distance to the base, breadth first
dist = {topo.base_id: 0}
frontier = deque([topo.base_id])
while frontier:
    cur = frontier.popleft()
    for nb in topo.neighbors(cur):
        if nb not in dist:
            dist[nb] = dist[cur] + 1
            frontier.append(nb)

print("hops to base")
for nid in sorted(dist):
    print(f"  node {nid:>2}: {dist[nid]}")
print()

# the same structure can come from a plain text layout file
text = """\
[field]
width = 200
height = 100
radio_range = 110

[nodes]
1 0 0
2 100 0
3 200 0 base
"""
small = load_layout(text)
print(f"parsed layout: {len(small.nodes)} nodes, "
      f"node 2 hears {small.neighbors(2)}")
