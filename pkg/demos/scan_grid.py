"""Map the vanishing conclusions over a grid of divisors.

On a rank-2 tower each divisor is a lattice point (a_1, a_2), so the
vanishing analysis of a whole region can be drawn as a small character
map. Legend:

    *   every degree vanishes
    0/1/2  cohomology can only live in this single degree
    ?   more than one degree survives the certificates

The picture makes the structure of the criterion visible: a plus-accepting
half-plane concentrates cohomology in degree 0, a minus-accepting one in
the top degree, and the overlaps kill everything.
"""

from bottsamelson import Word, build_bott_data, cartan_of_type, vanishing_report

bott = build_bott_data(cartan_of_type("A", 2), Word((1, 2)))
LO, HI = -6, 6

print(f"word (1, 2) on the rank-2 type A matrix, a_1, a_2 in [{LO}, {HI}]")
print("(a_1 grows to the right, a_2 grows upward)\n")

for a2 in range(HI, LO - 1, -1):
    row = []
    for a1 in range(LO, HI + 1):
        report = vanishing_report(bott, (a1, a2), with_toric=False)
        if report.everything_vanishes:
            row.append("*")
        elif report.single_degree is not None:
            row.append(str(report.single_degree))
        else:
            row.append("?")
    print(f"    a_2 = {a2:+d}   " + " ".join(row))

print("\nSpot checks against the exact toric tables:")
for a in [(-6, 3), (4, 4), (-3, -3), (2, -5)]:
    report = vanishing_report(bott, a)
    tag = ("all degrees vanish" if report.everything_vanishes
           else f"single degree {report.single_degree}"
           if report.single_degree is not None
           else f"window {report.possible_window}")
    print(f"    a = {a}: {tag}, toric table {report.toric.dims}")
