"""
Checking a list of class representatives
========================================

Given representatives transcribed from elsewhere, check that they are
pairwise non-conjugate and hit every class. The fixtures under
``tests/data`` hold the published E6 tables.
"""

from pathlib import Path

from renner import are_conjugate, build_lattice, build_root_system, enumerate_group, verify_transversal

rs = build_root_system("E6")
gt = enumerate_group(rs)
lat = build_lattice(rs, 1)

data = Path(__file__).resolve().parent.parent / "tests" / "data"
for path in sorted(data.glob("table*.txt")):
    report = verify_transversal(gt, lat, path.read_text())
    print(path.name, "PASS" if report.passed else "FAIL")

# A deliberately broken list: [ 1 ] twice.
report = verify_transversal(gt, lat, "# e_1\n[ ]\n[ 1 ]\n[ 1 ]\n")
print("\n".join(report.lines()))

# Single conjugacy questions go through the same orbit machinery.
print("s_1 e_1 ~ s_3 e_1 ?", are_conjugate(gt, lat, "e_1", [1], [3]))
# s_4 lies in W(e_1), so conjugating by it stays in the class
print("s_3 e_1 ~ s_4 s_3 s_4 e_1 ?", are_conjugate(gt, lat, "e_1", [3], [4, 3, 4]))
