"""Binding a noisy witness vector: accept nearby readings, reject strangers.

The stored pair is (witness - codeword, digest(codeword)).  Nothing
about the witness itself is stored; any fresh reading within rank
distance t of the original shifts back to a decodable word and is
accepted, everything else lands on the digest check and fails.
"""

import random

from rankfuzz import GabidulinCode, commit, ext_field, random_rank_error, verify

F = ext_field(2, 8)
code = GabidulinCode(F, 8, 4, 1, tuple(2**i for i in range(8)))
rng = random.Random(31)

witness = F.random_vector(8, rng)
com = commit(code, witness, rng)
print(f"committed to an 8-element witness, tolerance: rank {code.t}")


def attempt(label, reading):
    res = verify(code, reading, com)
    print(f"  {label}: {'accepted' if res else 'rejected (' + res.reason + ')'}")


print("\nfresh readings of the same subject:")
attempt("identical reading        ", witness)

# common offset on a few positions: one repeated value, rank 1
offset = F.random_element(rng)
shifted = tuple(F.add(w, offset) if i in (1, 4, 6) else w for i, w in enumerate(witness))
attempt("shared offset, 3 spots   ", shifted)

# one digit row wiped across the vector also has rank 1
wiped = tuple(w & ~0x10 for w in witness)
attempt("bit row cleared          ", wiped)

# an exact rank-2 disturbance across all positions
err2 = random_rank_error(F, 8, 2, rng)
attempt("rank-2 disturbance       ", tuple(F.add(w, e) for w, e in zip(witness, err2)))

print("\nout-of-tolerance readings:")
err3 = random_rank_error(F, 8, 3, rng)
attempt("rank-3 disturbance       ", tuple(F.add(w, e) for w, e in zip(witness, err3)))
attempt("unrelated random vector  ", F.random_vector(8, rng))

# two readings can be combined into one longer witness: commit to both
pair = witness + F.random_vector(8, rng)
wide = GabidulinCode(ext_field(2, 16), 16, 8, 1, tuple(2**i for i in range(16)))
lifted = tuple(ext_field(2, 16).check(w) for w in pair)
com2 = commit(wide, lifted, rng)
res = verify(wide, lifted, com2)
print(f"\ntwo factors fused into a 16-element witness: {'accepted' if res else 'rejected'}")
