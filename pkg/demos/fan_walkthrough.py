"""Walk through the toric fan attached to a word in simple reflections.

A generalized Cartan matrix plus a word of length N determines a Bott
tower: a smooth projective toric variety of dimension N whose fan lives on
2N rays. This script builds the running example of the package — the
rank-3 type A matrix with the word (2, 1, 3, 2) — and prints everything
the rest of the library computes from: the interaction matrix beta, the
ray vectors, the unimodularity of all 2^N maximal cones, and the
suffix-interaction numbers alpha that drive the vanishing conditions.
"""

from bottsamelson import (
    Word,
    all_sign_vectors,
    alpha_path,
    alpha_reflect,
    build_bott_data,
    cartan_of_type,
    det,
    maximal_cone_rows,
)

gcm = cartan_of_type("A", 3)
bott = build_bott_data(gcm, Word((2, 1, 3, 2)))
N = bott.length

print("Cartan matrix (type A, rank 3):")
for row in gcm.entries:
    print("   ", row)

print(f"\nword: {bott.word.letters}  ->  a Bott tower of dimension {N}")
print("\nbeta[i][j] = cartan(word[i], word[j]) couples position i to the")
print("later positions; only the upper triangle (j > i) enters the fan:")
for row in bott.beta:
    print("   ", row)

print("\nupper rays e_i^+ (the standard basis) and lower rays")
print("e_i^- = -e_i^+ - sum_{j>i} beta[i][j] e_j^+ :")
for i in range(N):
    print(f"    e_{i+1}^+ = {bott.rays_plus[i]}    e_{i+1}^- = {bott.rays_minus[i]}")

print("\nEach choice of one ray per index spans a maximal cone; all 2^N of")
print("them are unimodular (determinant +-1), so the tower is smooth:")
dets = sorted({det(maximal_cone_rows(bott, eps)) for eps in all_sign_vectors(N)})
print(f"    determinants over all {2 ** N} cones: {dets}")

print("\nalpha_ij^eps measures how index j feeds back into index i when the")
print("signs between them are eps. Two independent computations — a chain of")
print("root reflections, and a signed sum over interaction paths — agree:")
for i in range(1, N + 1):
    for j in range(i + 1, N + 1):
        values = {}
        for eps in all_sign_vectors(N):
            via_reflect = alpha_reflect(bott, i, j, eps)
            via_paths = alpha_path(bott, i, j, eps)
            assert via_reflect == via_paths
            interior = eps[i:j - 1]
            values[interior] = via_reflect
        shown = sorted(set(values.values()))
        print(f"    alpha_{i}{j} over all interior signs: {shown}")

print("\nWith no minus signs between i and j, alpha is just beta:")
plus = (1,) * N
print(f"    [alpha_ij^(+...+)] upper triangle = "
      f"{[[alpha_reflect(bott, i, j, plus) for j in range(i + 1, N + 1)] for i in range(1, N + 1)]}")
