"""Fuzzy commitment in the rank metric.

Committing to a witness vector b draws a uniform codeword c_b of a
Gabidulin code and stores the pair (b - c_b, H(c_b)).  A later witness
b' opens the commitment when b' - (b - c_b) decodes back to a codeword
whose digest matches: exactly the witnesses within rank distance t of b.
The offset alone reveals b only up to an unknown codeword, and the
digest binds the commitment to the particular c_b that was drawn.

The digest is SHA-256 over the canonical byte serialization of the
codeword (m digit bytes per coordinate, in coordinate order).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import LengthMismatch, ParamMismatch
from .fields import ExtField, ext_field
from .gabidulin import GabidulinCode
from .errors import DecodingFailure

DIGEST_BYTES = 32


def codeword_digest(field: ExtField, codeword) -> bytes:
    return hashlib.sha256(field.vec_to_bytes(codeword)).digest()


@dataclass(frozen=True)
class Commitment:
    """Opening-independent public data: code identification, offset vector,
    and the digest of the hidden codeword."""

    q: int
    m: int
    n: int
    k: int
    s: int
    points: tuple[int, ...]
    offset: tuple[int, ...]
    digest: bytes
    seed_meta: int | None = None


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    reason: str | None
    codeword: tuple[int, ...] | None

    def __bool__(self):
        return self.accepted


def commit(code: GabidulinCode, witness, rng, seed_meta: int | None = None) -> Commitment:
    """Commit to a witness vector of n field elements."""
    field = code.field
    b = field.check_vector(witness)
    if len(b) != code.n:
        raise LengthMismatch(f"witness length {len(b)}, expected {code.n}")
    message = field.random_vector(code.k, rng)
    c_b = code.encode(message)
    sub = field.sub
    offset = tuple(sub(x, y) for x, y in zip(b, c_b))
    return Commitment(
        q=field.q,
        m=field.m,
        n=code.n,
        k=code.k,
        s=code.s,
        points=code.points,
        offset=offset,
        digest=codeword_digest(field, c_b),
        seed_meta=seed_meta,
    )


def code_from_commitment(com: Commitment) -> GabidulinCode:
    field = ext_field(com.q, com.m)
    return GabidulinCode(field, com.n, com.k, com.s, com.points)


def verify(code: GabidulinCode, witness, com: Commitment) -> VerifyResult:
    """Open the commitment with a candidate witness.

    Accepts iff shifting the witness by the stored offset decodes and the
    recovered codeword hashes to the stored digest; the codeword is
    returned on acceptance.
    """
    field = code.field
    if (
        com.q != field.q
        or com.m != field.m
        or com.n != code.n
        or com.k != code.k
        or com.s != code.s
        or tuple(com.points) != code.points
    ):
        raise ParamMismatch("commitment was made under a different code")
    b2 = field.check_vector(witness)
    if len(b2) != code.n:
        raise LengthMismatch(f"witness length {len(b2)}, expected {code.n}")
    sub = field.sub
    shifted = tuple(sub(x, y) for x, y in zip(b2, com.offset))
    try:
        message, _ = code.decode(shifted)
    except DecodingFailure:
        return VerifyResult(False, "decoding_failure", None)
    recovered = code.encode(message)
    if codeword_digest(field, recovered) != com.digest:
        return VerifyResult(False, "digest_mismatch", None)
    return VerifyResult(True, None, recovered)


# ---------------------------------------------------------------------------
# JSON form


def commitment_to_dict(com: Commitment) -> dict:
    field = ext_field(com.q, com.m)
    out = {
        "q": com.q,
        "m": com.m,
        "n": com.n,
        "k": com.k,
        "s": com.s,
        "points": [field.to_hex(x) for x in com.points],
        "offset": [field.to_hex(x) for x in com.offset],
        "digest": com.digest.hex(),
    }
    if com.seed_meta is not None:
        out["seed_meta"] = com.seed_meta
    return out


def commitment_from_dict(data: dict) -> Commitment:
    field = ext_field(int(data["q"]), int(data["m"]))
    digest = bytes.fromhex(data["digest"])
    if len(digest) != DIGEST_BYTES:
        raise LengthMismatch("digest must be 32 bytes of hex")
    return Commitment(
        q=field.q,
        m=field.m,
        n=int(data["n"]),
        k=int(data["k"]),
        s=int(data["s"]),
        points=tuple(field.from_hex(x) for x in data["points"]),
        offset=tuple(field.from_hex(x) for x in data["offset"]),
        digest=digest,
        seed_meta=int(data["seed_meta"]) if "seed_meta" in data else None,
    )


def save_commitment(com: Commitment, path):
    with open(path, "w") as fh:
        json.dump(commitment_to_dict(com), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_commitment(path) -> Commitment:
    with open(path) as fh:
        return commitment_from_dict(json.load(fh))
