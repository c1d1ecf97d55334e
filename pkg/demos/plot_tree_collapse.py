"""
Collapsing perfect m-ary trees
==============================

For the binary tree of height 3 and r = 4, element matchings with the
leftmost leaves clear out every face touching the root. What is left is
the complex of two disjoint height-2 trees, a join of two wedges of three
3-spheres.
"""
from higher_ind import complexes, formulas, graphs, morse, reduced_homology

tree = graphs.perfect_mary_tree(2, 3)
full = complexes.independence_complex(tree, 4)
print(tree, full)

###############################################################################
# Element matchings on the leftmost leaves, run on the faces that meet the
# root level.  Every such face is matched, so the rest is a subcomplex with
# the same homotopy type.

sub = morse.tree_collapse(2, 3, 4)
print("after collapse:", sub, "f-vector", complexes.f_vector(sub))
print("homology before:", reduced_homology(full).short())
print("homology after: ", reduced_homology(sub).short())

###############################################################################
# The closed form, with the m = 2 caveat attached.

ht = formulas.ht_mary_tree(2, 3, 4)
print(ht, ht.flags)
print("join of the two halves:", formulas.wedge_join(formulas.ht_mary_tree(2, 2, 4),
                                                       formulas.ht_mary_tree(2, 2, 4)))
