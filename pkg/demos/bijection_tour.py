"""Round trips between walks, maps, posets, and transversal structures.

Run with:  python3 demos/bijection_tour.py

Starts from a walk given as text, decodes it to a plane bipolar
orientation, reads the statistics off both sides, and re-encodes.  Then
does the same through the decorated correspondences: a poset from a
V-walk and a transversal structure from a T-walk.
"""

from tandemwalks import (
    enumerate_walks,
    format_walk,
    kmsw_backward,
    kmsw_forward,
    parse_walk,
    psi_V,
    phi_V,
    t_walk_to_transversal,
    transversal_to_t_walk,
    v_walk_to_poset,
    poset_to_v_walk,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


show("plain walk -> bipolar orientation -> plain walk")
text = "(0,2): SE,SE,(-0,+0)"
walk = parse_walk(text.split(": ")[1], start=(0, 2))
b = kmsw_backward(walk)
print(f"walk          {text}")
print(f"decoded map   {b.map.n_vertices} vertices, {b.map.n_edges} edges,"
      f" pole type {b.pole_type()}")
back = format_walk(kmsw_forward(b))
print(f"re-encoded    {back}")
assert back == text

show("every plain excursion of length 4 and its map")
for w in enumerate_walks("plain", 4, start=(0, 0), end=(0, 0)):
    m = kmsw_backward(w)
    print(f"{format_walk(w):38s} -> {m.map.n_vertices} vertices,"
          f" {m.map.n_edges} edges")

show("V-walk -> plane poset -> V-walk")
vtext = "SE,(-1,+1)[N,W],SE"
vwalk = parse_walk(vtext, walk_class="V", start=(0, 1))
poset = v_walk_to_poset(vwalk)
print(f"V-walk        (0,1): {vtext}")
print(f"poset         {poset.map.n_vertices} vertices, {poset.map.n_edges} edges")
print(f"decorated     {psi_V(poset).kind}-decorated bipolar orientation")
assert format_walk(poset_to_v_walk(poset)) == f"(0,1): {vtext}"
print("re-encoded    matches")

show("T-walk -> transversal structure -> T-walk")
ttext = "SE,(-1,+2)[*NW,N],SE,SE"
twalk = parse_walk(ttext, walk_class="T", start=(0, 1))
x = t_walk_to_transversal(twalk)
print(f"T-walk        (0,1): {ttext}")
print(f"structure     {len(x.inner_vertices())} inner vertices,"
      f" {x.quad_count()} quadrangular inner faces, WE-type {x.we_type()}")
assert format_walk(transversal_to_t_walk(x)) == f"(0,1): {ttext}"
print("re-encoded    matches")
