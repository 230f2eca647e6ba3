"""Linear codes over Z_ell: exact construction, codeword enumeration, duals.

A linear code is an additive subgroup of Z_ell^n. Everything here is exact
integer arithmetic; enumerations are guarded by a configurable budget and
fail loudly instead of truncating.
"""

from __future__ import annotations

import math
import os
from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded

# Default cap on candidate vectors touched by a single enumeration.
DEFAULT_BUDGET = 10**7
# Hard cap for the exhaustive all-subgroups regime (ell**n).
EXHAUSTIVE_CAP = 10**4
BUDGET_ENV_VAR = "MWL_BUDGET"

_CHUNK = 1 << 16


def resolve_budget(budget: int | None = None) -> int:
    """Effective enumeration budget: explicit value, else MWL_BUDGET, else default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def validate_modulus(ell: int) -> int:
    ell = int(ell)
    if ell < 2:
        raise ValueError(f"modulus must be >= 2, got {ell}")
    return ell


def _vector_order(g: Sequence[int], ell: int) -> int:
    """Additive order of g in Z_ell^n."""
    d = ell
    for e in g:
        d = math.gcd(d, e)
    return ell // d


def _vector_chunks(ell: int, n: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """All vectors of Z_ell^n in lexicographic order, as int64 blocks."""
    total = ell**n
    pows = [ell ** (n - 1 - j) for j in range(n)]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield np.stack([(idx // p) % ell for p in pows], axis=1)


class LinearCode:
    """Additive subgroup of Z_ell^n described by a list of generators.

    Value semantics: two codes are equal iff modulus, length, and codeword
    set agree, no matter which generators produced them. Instances are
    immutable apart from internal caching of the enumerated codeword set,
    so they are safe to share across threads.
    """

    def __init__(self, ell: int, length: int, generators: Iterable[Sequence[int]] = ()):
        self.ell = validate_modulus(ell)
        self.length = int(length)
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {length}")
        gens = []
        for g in generators:
            row = tuple(int(e) % self.ell for e in g)
            if len(row) != self.length:
                raise ValueError(
                    f"generator {row} has length {len(row)}, expected {self.length}"
                )
            gens.append(row)
        self.generators: tuple[tuple[int, ...], ...] = tuple(gens)
        self._codewords: tuple[tuple[int, ...], ...] | None = None
        self._codeword_set: frozenset[tuple[int, ...]] | None = None
        self._cw_array: np.ndarray | None = None

    @classmethod
    def _from_codeword_array(cls, ell: int, length: int, arr: np.ndarray) -> "LinearCode":
        """Build a code whose full codeword list is already known (lex-sorted)."""
        rows = tuple(map(tuple, arr.tolist()))
        code = cls(ell, length, rows)
        code._codewords = rows
        code._cw_array = arr
        return code

    def _span_array(self, budget: int | None) -> np.ndarray:
        """Closure of the generators, as a lex-sorted int64 array of rows."""
        ell, n = self.ell, self.length
        limit = resolve_budget(budget)
        cur = np.zeros((1, n), dtype=np.int64)
        count = 1
        for g in self.generators:
            r = _vector_order(g, ell)
            if r == 1:
                continue
            count += (r - 1) * len(cur)
            if count > limit:
                raise BudgetExceeded(
                    f"span of code over Z_{ell}^{n} needs > {limit} candidate vectors"
                )
            garr = np.asarray(g, dtype=np.int64)
            blocks = [cur]
            # slab over t to bound peak allocation
            step = max(1, min(r - 1, _CHUNK // max(1, len(cur))))
            t = 1
            while t < r:
                ts = np.arange(t, min(r, t + step), dtype=np.int64)
                blocks.append(
                    ((cur[None, :, :] + ts[:, None, None] * garr) % ell).reshape(-1, n)
                )
                t += step
            cur = np.unique(np.vstack(blocks), axis=0)
        return cur

    def codeword_array(self, budget: int | None = None) -> np.ndarray:
        if self._cw_array is None:
            self._cw_array = self._span_array(budget)
        return self._cw_array

    def codewords(self, budget: int | None = None) -> tuple[tuple[int, ...], ...]:
        """All codewords, lexicographically sorted (canonical order)."""
        if self._codewords is None:
            self._codewords = tuple(map(tuple, self.codeword_array(budget).tolist()))
        return self._codewords

    def codeword_set(self, budget: int | None = None) -> frozenset[tuple[int, ...]]:
        if self._codeword_set is None:
            self._codeword_set = frozenset(self.codewords(budget))
        return self._codeword_set

    def cardinality(self, budget: int | None = None) -> int:
        return len(self.codewords(budget))

    def contains(self, v: Sequence[int], budget: int | None = None) -> bool:
        return tuple(int(e) % self.ell for e in v) in self.codeword_set(budget)

    def dual(self, budget: int | None = None) -> "LinearCode":
        """All vectors orthogonal to this code under the standard inner product.

        Scans the whole ambient space; orthogonality is tested against the
        generators only, which suffices by linearity. The returned code's
        generator list is its full codeword list.
        """
        ell, n = self.ell, self.length
        total = ell**n
        if total > resolve_budget(budget):
            raise BudgetExceeded(
                f"dual over Z_{ell}^{n} scans {total} vectors, beyond the budget"
            )
        G = np.asarray(self.generators, dtype=np.int64).reshape(-1, n)
        kept = []
        for chunk in _vector_chunks(ell, n):
            if len(G):
                if n * (ell - 1) ** 2 < 2**62:
                    rem = (chunk @ G.T) % ell
                else:  # keep the dot products exact for absurdly large moduli
                    rem = (chunk.astype(object) @ G.T.astype(object)) % ell
                chunk = chunk[~rem.astype(bool).any(axis=1)]
            kept.append(chunk)
        return LinearCode._from_codeword_array(ell, n, np.vstack(kept))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.ell == other.ell
            and self.length == other.length
            and self.codeword_set() == other.codeword_set()
        )

    def __hash__(self) -> int:
        return hash((self.ell, self.length, self.codewords()))

    def __repr__(self) -> str:
        return f"LinearCode(ell={self.ell}, length={self.length}, generators={self.generators!r})"


def enumerate_codewords(code: LinearCode, budget: int | None = None) -> tuple[tuple[int, ...], ...]:
    """The additive span of the generators, deduplicated and lex-sorted."""
    return code.codewords(budget)


def dual_code(code: LinearCode, budget: int | None = None) -> LinearCode:
    return code.dual(budget)


def cardinality(code: LinearCode, budget: int | None = None) -> int:
    return code.cardinality(budget)


def all_linear_codes(ell: int, length: int, budget: int | None = None) -> Iterator[LinearCode]:
    """Every distinct additive subgroup of Z_ell^length, each exactly once.

    Yields in canonical order: lexicographic on the sorted codeword list
    (so the zero code always comes first). Only available in the exhaustive
    regime ell**length <= EXHAUSTIVE_CAP.
    """
    ell = validate_modulus(ell)
    length = int(length)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    total = ell**length
    if total > EXHAUSTIVE_CAP or total > resolve_budget(budget):
        raise BudgetExceeded(
            f"exhaustive subgroup enumeration needs ell**n <= "
            f"{min(EXHAUSTIVE_CAP, resolve_budget(budget))}, got {total}"
        )
    yield from _all_codes(ell, length)


@lru_cache(maxsize=None)
def _all_codes(ell: int, n: int) -> tuple[LinearCode, ...]:
    """BFS over the subgroup lattice: grow every known subgroup by one generator.

    Subgroups are tracked as sorted arrays of packed vector indices (index
    order equals lexicographic order on vectors). Every subgroup of Z_ell^n
    needs at most n generators, so single-generator extensions reach all of
    them.
    """
    N = ell**n
    pows = np.array([ell ** (n - 1 - j) for j in range(n)], dtype=np.int64)
    idx = np.arange(N, dtype=np.int64)
    digits = np.stack([(idx // p) % ell for p in pows], axis=1)

    if N <= 1024:
        # full addition table: add[u, v] = index of vector u + vector v
        table = np.empty((N, N), dtype=np.int64)
        for v in range(N):
            table[:, v] = ((digits + digits[v]) % ell) @ pows

        def add_set(h: np.ndarray, w: int) -> np.ndarray:
            return table[h, w]

        def add_one(u: int, w: int) -> int:
            return int(table[u, w])

    else:

        def add_set(h: np.ndarray, w: int) -> np.ndarray:
            return ((digits[h] + digits[w]) % ell) @ pows

        def add_one(u: int, w: int) -> int:
            return int(((digits[u] + digits[w]) % ell) @ pows)

    zero = np.array([0], dtype=np.int64)
    subgroups: dict[bytes, tuple[np.ndarray, tuple[int, ...]]] = {zero.tobytes(): (zero, ())}
    queue = deque([zero.tobytes()])
    while queue:
        H, gens = subgroups[queue.popleft()]
        members = set(H.tolist())
        # vectors already known to regenerate an extension we have computed
        skip = set(members)
        for v in range(1, N):
            if v in skip:
                continue
            cosets = [H]
            w = v
            while w not in members:
                cosets.append(add_set(H, w))
                w = add_one(w, v)
            r = len(cosets)
            K = np.sort(np.concatenate(cosets))
            key = K.tobytes()
            if key not in subgroups:
                subgroups[key] = (K, gens + (v,))
                queue.append(key)
            # u in coset t with gcd(t, r) = 1 generates the same extension
            for t in range(1, r):
                if math.gcd(t, r) == 1:
                    skip.update(cosets[t].tolist())

    ordered = sorted(subgroups.values(), key=lambda item: tuple(item[0].tolist()))
    codes = []
    for K, gens in ordered:
        code = LinearCode(ell, n, tuple(tuple(digits[g].tolist()) for g in gens))
        arr = digits[K]
        code._cw_array = arr
        code._codewords = tuple(map(tuple, arr.tolist()))
        codes.append(code)
    return tuple(codes)


def parse_code_spec(text: str) -> LinearCode:
    """Parse the code-spec text format.

    Lines: ``modulus L``, ``length N``, then ``gen r1 r2 ... rN`` per
    generator. ``#`` starts a comment; residues are reduced mod L on load.
    """
    modulus: int | None = None
    length: int | None = None
    gens: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw, rest = parts[0], parts[1:]
        if kw == "modulus":
            if len(rest) != 1:
                raise ValueError(f"line {lineno}: modulus takes one value")
            modulus = int(rest[0])
        elif kw == "length":
            if len(rest) != 1:
                raise ValueError(f"line {lineno}: length takes one value")
            length = int(rest[0])
        elif kw == "gen":
            if modulus is None or length is None:
                raise ValueError(f"line {lineno}: gen before modulus/length")
            if len(rest) != length:
                raise ValueError(
                    f"line {lineno}: generator has {len(rest)} entries, expected {length}"
                )
            gens.append([int(p) for p in rest])
        else:
            raise ValueError(f"line {lineno}: unknown directive {kw!r}")
    if modulus is None or length is None:
        raise ValueError("code spec must declare modulus and length")
    return LinearCode(modulus, length, gens)


def format_code_spec(code: LinearCode) -> str:
    """Render a code in the code-spec text format (one gen line per generator)."""
    lines = [f"modulus {code.ell}", f"length {code.length}"]
    lines.extend("gen " + " ".join(map(str, g)) for g in code.generators)
    return "\n".join(lines) + "\n"
