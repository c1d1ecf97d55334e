"""
Morse matchings on cycles
=========================

Walk through the matching that shows Ind_{d-2}(C_n) is a wedge of spheres:
build it, audit it, and compare its critical cells with homology.
"""
from higher_ind import formulas, morse, reduced_homology

###############################################################################
# Start with paths.  A single critical cell survives exactly when n is one of
# dk - 1, dk.

for n in range(4, 10):
    res = morse.path_perfect_matching(n, 3)
    print(f"P_{n}: critical cells {res.critical_labels()}  formula {formulas.ht_path(n, 3)}")

###############################################################################
# The cycle matching glues path matchings together. ``verify_acyclic`` is
# run independently on the finished matching, so the construction is checked
# rather than trusted.

n, d = 11, 4
res = morse.cycle_morse_matching(n, d)
print(f"C_{n}, d={d}: {len(res.matching)} pairs, acyclic={res.acyclic}, "
      f"critical by dimension {res.counts_by_dim}")
print("extra pairs across component sizes:", res.notes["cross_pairs"])

###############################################################################
# Critical cells bound homology from above; here the bound is sharp.

h = reduced_homology(res.complex)
print("homology:", h.short(), "  formula:", formulas.ht_cycle(n, d))
print("Morse inequalities hold:", morse.morse_inequality_check(res, h))

###############################################################################
# The matching can be exported and read back.

text = morse.format_matching(res)
print("\n".join(text.splitlines()[:5]), "\n...")
