"""
Root systems and Weyl groups
============================

Build the E6 root system, enumerate its Weyl group, and look at lengths,
reduced words and parabolic cosets.
"""

import numpy as np

from renner import (
    build_root_system,
    enumerate_group,
    minimal_coset_reps,
    shortlex_word,
    subgroup_elements,
    word_to_element,
)

# Roots are integer vectors in the simple-root basis. Generators follow the
# usual E6 numbering: the chain 1-3-4-5-6 with node 2 hanging off node 4.
rs = build_root_system("E6")
print(rs.cartan)
print(f"{rs.num_roots} roots, {rs.num_positive} positive")

# The group is enumerated once as permutations of the 72 roots; after that
# every product with a generator is a table lookup.
gt = enumerate_group(rs)
print(f"|W(E6)| = {gt.order}")

# Length counts positive roots sent to negative ones. The longest element
# inverts all 36.
w0 = gt.longest
print("longest element:", shortlex_word(gt, w0), "length", gt.length[w0])

# Words are read left to right: [1, 3, 4] is s_1 s_3 s_4.
w = word_to_element(gt, [1, 3, 1, 4, 3])
print("[1, 3, 1, 4, 3] has length", gt.length[w], "and normal form", shortlex_word(gt, w))

# Minimal coset representatives of W / W_J for the D5 parabolic J = {2,...,6}.
J = [2, 3, 4, 5, 6]
reps = minimal_coset_reps(gt, J)
print(f"|W_J| = {len(subgroup_elements(gt, J))}, {len(reps)} minimal coset representatives")
print("lengths of the representatives:", np.bincount(gt.length[reps]))
