"""Locking a key behind a feature set and testing partial witnesses.

The vault is a complete table over the field: feature entries carry the
key polynomial's true values, every other entry carries chaff chosen to
disagree with it.  Anyone can read the table; only a witness sharing
enough features indexes a decodable row of values.
"""

import random

from rankfuzz import (
    VaultParams,
    lock,
    sample_feature_set,
    sample_witness_overlap,
    unlock,
)

params = VaultParams(q=2, m=8, n=8, ell=2)
F = params.field
rng = random.Random(12)

features = sample_feature_set(F, 8, rng)
key = F.random_vector(2, rng)
vault = lock(params, features, key, rng)
print(f"locked a {len(key)}-element key behind 8 features")
print(f"table size {len(vault.table)} entries, 8 authentic, {len(vault.table) - 8} chaff")
print(f"tolerated set difference: {2 * params.t}")

print("\nunlock attempts with shrinking overlap:")
for u in range(8, -1, -1):
    wit = sample_witness_overlap(F, features, u, rng)
    res = unlock(vault, wit)
    d = 2 * (8 - u)
    if res:
        note = "key recovered" + (" (exact)" if res.key == key else "")
    else:
        note = f"failed ({res.reason})"
    print(f"  {u} shared features, set difference {d:2d}: {note}")

# the witness order never matters: any arrangement decodes the same
shuffled = list(features.elems)
rng.shuffle(shuffled)
assert unlock(vault, tuple(shuffled)).key == key
print("\nshuffled witness order: still the exact key")

# a taller field leaves room for features no witness will ever span
tall = VaultParams(q=2, m=10, n=8, ell=2)
Ft = tall.field
feats10 = sample_feature_set(Ft, 8, rng)
key10 = Ft.random_vector(2, rng)
vault10 = lock(tall, feats10, key10, rng)
wit10 = sample_witness_overlap(Ft, feats10, 6, rng)
print(f"\nm=10 variant, 6 of 8 features shared: "
      f"{'key recovered' if unlock(vault10, wit10).key == key10 else 'failed'}")
