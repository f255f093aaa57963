"""From condition tables to vanishing certificates.

For a divisor sum a_i Z_i on the tower, each index i carries a family of
integers C_i^eps, one per sign suffix. If every value at index i is
>= -1 the index accepts a plus; if every value is <= -1 it accepts a
minus. A certificate eta assigns +, - or 0 to each index, using only
accepted signs, and forces cohomology to vanish in low degrees (below the
number of minuses) and high degrees (above N minus the number of pluses).

The script prints the full condition table and the resulting conclusions
for a handful of divisors on the running rank-3 example, ending with one
where the certificates kill every degree at once.
"""

from bottsamelson import (
    ToricDivisor,
    Word,
    admissible_etas,
    build_bott_data,
    cartan_of_type,
    check_toric_vanishing,
    condition_profile,
    vanishing_report,
)

bott = build_bott_data(cartan_of_type("A", 3), Word((2, 1, 3, 2)))
N = bott.length


def show(a):
    print(f"\ndivisor a = {a}")
    profile = condition_profile(bott, a)
    for i in range(N):
        flags = []
        if profile.plus_ok[i]:
            flags.append("accepts +")
        if profile.minus_ok[i]:
            flags.append("accepts -")
        print(f"    index {i + 1}: C ranges over [{profile.c_min[i]}, "
              f"{profile.c_max[i]}]  {' and '.join(flags) or 'accepts neither'}")
    report = vanishing_report(bott, a)
    print(f"    extreme certificates: {report.certificate_minus.eta_string()} "
          f"and {report.certificate_plus.eta_string()}")
    print(f"    vanished degrees: {report.vanished}")
    if report.everything_vanishes:
        print("    -> every degree vanishes")
    elif report.single_degree is not None:
        print(f"    -> cohomology can only live in degree {report.single_degree}")
    else:
        print(f"    -> possibly nonzero degrees: {report.possible_window}")
    print(f"    exact toric table on the degenerate fiber: {report.toric.dims}")
    return report


# mixed signs: vanishing in degrees 0, 3, 4 (and here even 2) while the
# toric table shows degree 1 vanishes too — the certificate method is a
# sufficient criterion, not a sharp one
show((-1, -1, 1, 0))

# a nonnegative divisor: three pluses force degrees 2, 3, 4 to die, and the
# degenerate fiber genuinely carries something in degree 1 (so no
# certificate for degree 1 can exist)
show((2, 2, 2, 2))

# full plus coverage concentrates everything in degree 0
show((3, 0, 0, 0))

# and a divisor where the certificates wipe out all degrees
report = show((-2, 1, -1, -1))

print("\nEvery admissible certificate's claim can be checked one by one")
print("against the exact toric table:")
profile = condition_profile(bott, (-1, -1, 1, 0))
etas = list(admissible_etas(profile))
good = sum(check_toric_vanishing(bott, (-1, -1, 1, 0), eta) for eta in etas)
print(f"    a = (-1, -1, 1, 0): {good} of {len(etas)} admissible certificates "
      "verified against the table")
