"""Linearized-polynomial fuzzy vault.

The secret key is the coefficient vector of a linearized polynomial
kappa of degree below ell.  Locking against a feature set A stores a
total table over F_{q^m}: authentic entries (x, kappa(x)) for x in A,
and for every other x a chaff value drawn uniformly from everything
except kappa(x).  The table alone does not single out A: by construction
every point deviates from at most one low-degree polynomial pattern.

Unlocking with a witness set W reads the table at W and decodes the
values as a Gabidulin code on the points W.  Entries shared with A are
exact evaluations of kappa; the others are chaff, so the error rank is
at most |W \\ A|.  Whenever the set difference |A ^ W| is at most
2 * floor((n - ell) / 2) the decoder recovers kappa and the key digest
confirms it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field

from .errors import (
    BadDimensions,
    DependentFeatures,
    DuplicateFeatures,
    LengthMismatch,
    ParamMismatch,
    TooLarge,
)
from .fields import ExtField, ext_field, is_independent
from .gabidulin import GabidulinCode
from .linpoly import LinearizedPoly, _check_twist
from .errors import DecodingFailure

_TABLE_GUARD = 1 << 20


@dataclass(frozen=True)
class VaultParams:
    q: int
    m: int
    n: int
    ell: int
    s: int = 1

    def __post_init__(self):
        fld = ext_field(self.q, self.m)  # validates q, m
        _check_twist(fld, self.s)
        if not 1 <= self.ell < self.n <= self.m:
            raise BadDimensions(
                f"need 1 <= ell < n <= m, got ell={self.ell}, n={self.n}, m={self.m}"
            )
        if fld.order > _TABLE_GUARD:
            raise TooLarge(f"total table needs q^m <= {_TABLE_GUARD}, got {fld.order}")

    @property
    def field(self) -> ExtField:
        return ext_field(self.q, self.m)

    @property
    def t(self) -> int:
        """Decoding radius of the unlock step."""
        return (self.n - self.ell) // 2


class FeatureSet:
    """Ordered collection of distinct, F_q-independent field elements."""

    __slots__ = ("field", "elems")

    def __init__(self, field: ExtField, elems):
        elems = field.check_vector(elems)
        if len(set(elems)) != len(elems):
            raise DuplicateFeatures("feature elements must be distinct")
        if not is_independent(field, elems):
            raise DependentFeatures("feature elements must be independent over F_q")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "elems", elems)

    def __setattr__(self, name, value):
        raise AttributeError("FeatureSet is immutable")

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, x):
        return x in self.elems

    def __repr__(self):
        shown = ", ".join(self.field.to_hex(x) for x in self.elems)
        return f"FeatureSet([{shown}])"

    def as_set(self) -> frozenset:
        return frozenset(self.elems)


@dataclass(frozen=True)
class Vault:
    params: VaultParams
    table: tuple[int, ...] = dc_field(repr=False)  # index = element, value = table entry
    key_digest: bytes


@dataclass(frozen=True)
class UnlockResult:
    key: tuple[int, ...] | None
    reason: str | None

    @property
    def ok(self) -> bool:
        return self.key is not None

    def __bool__(self):
        return self.ok


def key_digest_bytes(field: ExtField, key) -> bytes:
    return hashlib.sha256(field.vec_to_bytes(key)).digest()


def _as_feature_set(field: ExtField, features) -> FeatureSet:
    if isinstance(features, FeatureSet):
        if features.field is not field:
            raise ParamMismatch("feature set belongs to a different field")
        return features
    return FeatureSet(field, features)


def lock(params: VaultParams, features, key, rng) -> Vault:
    """Build the vault table for the given features and key coefficients."""
    fld = params.field
    fs = _as_feature_set(fld, features)
    if len(fs) != params.n:
        raise ParamMismatch(f"feature count {len(fs)} differs from n={params.n}")
    key = fld.check_vector(key)
    if len(key) != params.ell:
        raise LengthMismatch(f"key length {len(key)}, expected ell={params.ell}")
    kappa = LinearizedPoly(fld, params.s, key)
    values = kappa.evaluate_all()
    authentic = fs.as_set()
    order = fld.order
    table = [0] * order
    randrange = rng.randrange
    for x in range(order):
        kx = values[x]
        if x in authentic:
            table[x] = kx
        else:
            # uniform over everything except kappa(x)
            r = randrange(order - 1)
            table[x] = r if r < kx else r + 1
    return Vault(params, tuple(table), key_digest_bytes(fld, key))


def unlock(vault: Vault, witness) -> UnlockResult:
    """Try to recover the key with a witness feature set."""
    params = vault.params
    fld = params.field
    ws = _as_feature_set(fld, witness)
    if len(ws) != params.n:
        raise ParamMismatch(f"witness count {len(ws)} differs from n={params.n}")
    code = GabidulinCode(fld, params.n, params.ell, params.s, ws.elems)
    received = tuple(vault.table[x] for x in ws.elems)
    try:
        message, _ = code.decode(received)
    except DecodingFailure:
        return UnlockResult(None, "decoding_failure")
    if key_digest_bytes(fld, message) != vault.key_digest:
        return UnlockResult(None, "digest_mismatch")
    return UnlockResult(message, None)


# ---------------------------------------------------------------------------
# JSON form


def vault_to_dict(vault: Vault) -> dict:
    fld = vault.params.field
    pairs = [
        [fld.to_hex(x), fld.to_hex(y)]
        for x, y in enumerate(vault.table)
    ]
    pairs.sort(key=lambda p: p[0])  # canonical byte order of x
    return {
        "q": vault.params.q,
        "m": vault.params.m,
        "n": vault.params.n,
        "ell": vault.params.ell,
        "s": vault.params.s,
        "points": pairs,
        "key_digest": vault.key_digest.hex(),
    }


def vault_from_dict(data: dict) -> Vault:
    params = VaultParams(
        q=int(data["q"]),
        m=int(data["m"]),
        n=int(data["n"]),
        ell=int(data["ell"]),
        s=int(data["s"]),
    )
    fld = params.field
    entries = data["points"]
    if len(entries) != fld.order:
        raise LengthMismatch(f"table must cover all {fld.order} elements")
    table = [None] * fld.order
    for hx, hy in entries:
        x = fld.from_hex(hx)
        if table[x] is not None:
            raise DuplicateFeatures(f"table lists {hx} twice")
        table[x] = fld.from_hex(hy)
    digest = bytes.fromhex(data["key_digest"])
    if len(digest) != 32:
        raise LengthMismatch("key digest must be 32 bytes of hex")
    return Vault(params, tuple(table), digest)


def save_vault(vault: Vault, path):
    with open(path, "w") as fh:
        json.dump(vault_to_dict(vault), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_vault(path) -> Vault:
    with open(path) as fh:
        return vault_from_dict(json.load(fh))
