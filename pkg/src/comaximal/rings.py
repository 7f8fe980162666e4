"""Finite commutative ring kernel.

Elements of a ring of size n are the dense indices 0..n-1 with index 0
always the additive identity.  Rings up to `TABLE_LIMIT` elements carry
full numpy Cayley tables; larger rings evaluate operations through
scalar callables plus vectorised row functions, so bulk scans stay fast
without quadratic memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError, RingAxiomError
from .limits import (
    CROSSCHECK_LIMIT,
    DEFAULT_MAX_RING_SIZE,
    DEFAULT_RING_ISO_CAP,
    TABLE_LIMIT,
)


def _mask_from_bool(flags: np.ndarray) -> int:
    packed = np.packbits(flags.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _bool_from_mask(mask: int, n: int) -> np.ndarray:
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:n].astype(bool)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class IdealSet:
    """An ideal stored as a membership bitmask over element indices."""

    ring_size: int
    mask: int

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.ring_size and bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(_iter_bits(self.mask))

    def member_flags(self) -> np.ndarray:
        return _bool_from_mask(self.mask, self.ring_size)


@dataclass(frozen=True)
class ElementMap:
    """An element-wise map between two rings (projection or isomorphism)."""

    source: "RingTable"
    target: "RingTable"
    mapping: tuple[int, ...]
    isomorphism: bool = False

    def __call__(self, index: int) -> int:
        return self.mapping[index]

    def verify(self) -> bool:
        """Re-check the homomorphism laws element by element."""
        src, dst, phi = self.source, self.target, self.mapping
        if len(phi) != src.size:
            return False
        if phi[src.one] != dst.one or phi[0] != 0:
            return False
        for a in range(src.size):
            fa = phi[a]
            for b in range(a, src.size):
                fb = phi[b]
                if phi[src.add(a, b)] != dst.add(fa, fb):
                    return False
                if phi[src.mul(a, b)] != dst.mul(fa, fb):
                    return False
        if self.isomorphism and len(set(phi)) != src.size:
            return False
        return True


@dataclass(frozen=True)
class CleanDecomposition:
    """Outcome of writing every element as idempotent + unit."""

    clean: bool
    witnesses: tuple[tuple[int, int], ...] | None
    counterexample: int | None


class RingTable:
    """A finite commutative ring with unital multiplication.

    `add` and `mul` may be flat row-major tables (any sequence of length
    size*size) or scalar callables.  Callable-backed rings should also
    pass `add_row`/`mul_row` returning the full numpy row for one fixed
    left operand; the constructor materialises full tables from them
    whenever size <= TABLE_LIMIT.
    """

    def __init__(
        self,
        size: int,
        one: int,
        add,
        mul,
        *,
        neg: Callable[[int], int] | None = None,
        add_row: Callable[[int], np.ndarray] | None = None,
        mul_row: Callable[[int], np.ndarray] | None = None,
        labels: Sequence[str] | None = None,
        name: str | None = None,
    ):
        if size < 2:
            raise ValueError("ring must have at least two elements")
        if not 0 <= one < size:
            raise ValueError("multiplicative identity index out of range")
        if one == 0:
            raise ValueError("identity cannot coincide with zero (index 0)")
        self.size = size
        self.zero = 0
        self.one = one
        self.name = name or f"ring[{size}]"

        if labels is None:
            self.labels: tuple[str, ...] = tuple(str(i) for i in range(size))
        else:
            if len(labels) != size:
                raise ValueError("label count does not match ring size")
            self.labels = tuple(str(x) for x in labels)

        self._add_np: np.ndarray | None = None
        self._mul_np: np.ndarray | None = None
        self._add_fn: Callable[[int, int], int] | None = None
        self._mul_fn: Callable[[int, int], int] | None = None
        self._add_row_fn = add_row
        self._mul_row_fn = mul_row
        self._neg_fn = neg

        if callable(add):
            self._add_fn = add
            self._mul_fn = mul
            if size <= TABLE_LIMIT:
                self._add_np = self._materialise(add, add_row)
                self._mul_np = self._materialise(mul, mul_row)
        else:
            self._add_np = self._as_table(add, "add")
            self._mul_np = self._as_table(mul, "mul")

    def _as_table(self, flat, which: str) -> np.ndarray:
        arr = np.asarray(flat, dtype=np.int32)
        if arr.shape == (self.size, self.size):
            pass
        elif arr.shape == (self.size * self.size,):
            arr = arr.reshape(self.size, self.size)
        else:
            raise ValueError(f"{which} table must hold size*size entries")
        if arr.size and (arr.min() < 0 or arr.max() >= self.size):
            raise ValueError(f"{which} table entry out of range")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        return arr

    def _materialise(self, fn, row_fn) -> np.ndarray:
        n = self.size
        if row_fn is not None:
            arr = np.stack([np.asarray(row_fn(a), dtype=np.int32) for a in range(n)])
        else:
            arr = np.empty((n, n), dtype=np.int32)
            for a in range(n):
                for b in range(n):
                    arr[a, b] = fn(a, b)
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        return arr

    def __repr__(self) -> str:
        return f"RingTable({self.name!r}, size={self.size})"

    def _check_index(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise ValueError(f"element index {a} out of range for ring of size {self.size}")

    # -- scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        if self._add_np is not None:
            return int(self._add_np[a, b])
        return self._add_fn(a, b)

    def mul(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        if self._mul_np is not None:
            return int(self._mul_np[a, b])
        return self._mul_fn(a, b)

    def neg(self, a: int) -> int:
        self._check_index(a)
        return int(self.negatives[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- vectorised rows ---------------------------------------------------

    def add_row(self, a: int) -> np.ndarray:
        """Row vector r with r[b] = a + b."""
        self._check_index(a)
        if self._add_np is not None:
            return self._add_np[a]
        if self._add_row_fn is not None:
            return np.asarray(self._add_row_fn(a))
        fn = self._add_fn
        return np.fromiter((fn(a, b) for b in range(self.size)), dtype=np.int64, count=self.size)

    def mul_row(self, a: int) -> np.ndarray:
        """Row vector r with r[b] = a * b."""
        self._check_index(a)
        if self._mul_np is not None:
            return self._mul_np[a]
        if self._mul_row_fn is not None:
            return np.asarray(self._mul_row_fn(a))
        fn = self._mul_fn
        return np.fromiter((fn(a, b) for b in range(self.size)), dtype=np.int64, count=self.size)

    # -- cached structure --------------------------------------------------

    @cached_property
    def negatives(self) -> np.ndarray:
        if self._neg_fn is not None:
            arr = np.fromiter((self._neg_fn(a) for a in range(self.size)), dtype=np.int64, count=self.size)
        elif self._add_np is not None:
            arr = (self._add_np == 0).argmax(axis=1)
        else:
            arr = np.fromiter(
                (int((self.add_row(a) == 0).argmax()) for a in range(self.size)),
                dtype=np.int64,
                count=self.size,
            )
        arr.setflags(write=False)
        return arr

    @cached_property
    def unit_flags(self) -> np.ndarray:
        """Boolean vector marking invertible elements."""
        if self._mul_np is not None:
            flags = (self._mul_np == self.one).any(axis=1)
        else:
            flags = np.fromiter(
                ((self.mul_row(a) == self.one).any() for a in range(self.size)),
                dtype=bool,
                count=self.size,
            )
        flags.setflags(write=False)
        return flags

    @cached_property
    def units(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.unit_flags))

    @property
    def unit_count(self) -> int:
        return int(self.unit_flags.sum())

    def is_unit(self, a: int) -> bool:
        self._check_index(a)
        return bool(self.unit_flags[a])

    @cached_property
    def jacobson_radical(self) -> IdealSet:
        """Elements x with 1 - r*x invertible for every r."""
        n = self.size
        units = self.unit_flags
        one_minus = self.add_row(self.one)[self.negatives]
        member = np.zeros(n, dtype=bool)
        for x in range(n):
            if units[x]:
                continue
            if units[one_minus[self.mul_row(x)]].all():
                member[x] = True
        ideal = IdealSet(n, _mask_from_bool(member))
        assert self.is_ideal(ideal), "radical is not an ideal; operations are inconsistent"
        return ideal

    @cached_property
    def idempotent_elements(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.size) if self.mul(a, a) == a)

    @cached_property
    def nilpotent_elements(self) -> tuple[int, ...]:
        out = []
        for a in range(self.size):
            seen = set()
            x = a
            while x not in seen:
                seen.add(x)
                if x == 0:
                    out.append(a)
                    break
                x = self.mul(x, a)
        return tuple(out)

    @property
    def is_reduced(self) -> bool:
        return len(self.nilpotent_elements) == 1

    @cached_property
    def characteristic(self) -> int:
        k, x = 1, self.one
        while x != 0:
            x = self.add(x, self.one)
            k += 1
        return k

    # -- ideals ------------------------------------------------------------

    def is_ideal(self, ideal: IdealSet) -> bool:
        if ideal.ring_size != self.size or 0 not in ideal:
            return False
        flags = ideal.member_flags()
        members = np.flatnonzero(flags)
        for a in map(int, members):
            if not flags[self.add_row(a)[members]].all():
                return False
            if not flags[self.mul_row(a)].all():
                return False
        return True

    def is_proper_ideal(self, ideal: IdealSet) -> bool:
        return self.one not in ideal and self.is_ideal(ideal)

    def ideal_closure(self, generators: Iterable[int]) -> IdealSet:
        """Smallest ideal containing the generators (fixpoint closure)."""
        gens = list(generators)
        if not gens:
            raise ValueError("ideal_closure needs at least one generator")
        for g in gens:
            self._check_index(g)
        n = self.size
        member = np.zeros(n, dtype=bool)
        member[0] = True
        member[gens] = True
        while True:
            current = np.flatnonzero(member)
            grown = member.copy()
            for a in map(int, current):
                grown[self.mul_row(a)] = True
                grown[self.add_row(a)[current]] = True
            if (grown == member).all():
                break
            member = grown
        return IdealSet(n, _mask_from_bool(member))

    def principal_ideal(self, a: int) -> IdealSet:
        self._check_index(a)
        member = np.zeros(self.size, dtype=bool)
        member[self.mul_row(a)] = True
        return IdealSet(self.size, _mask_from_bool(member))

    @cached_property
    def maximal_ideals(self) -> tuple[IdealSet, ...]:
        """All maximal ideals, via primitive idempotents of R/J.

        Up to CROSSCHECK_LIMIT elements the result is re-derived with the
        brute-force oracle and the two must agree.
        """
        n = self.size
        quot, proj = self.quotient(self.jacobson_radical)
        idems = [e for e in quot.idempotent_elements if e != 0]
        primitive = [
            e
            for e in idems
            if not any(f != e and quot.mul(e, f) == f for f in idems)
        ]
        proj_arr = np.asarray(proj.mapping)
        ideals: list[IdealSet] = []
        for e in primitive:
            annihilates = quot.mul_row(e) == 0
            member = annihilates[proj_arr]
            ideals.append(IdealSet(n, _mask_from_bool(member)))
        assert ideals, "every nonzero finite ring has a maximal ideal"
        meet = ideals[0].mask
        for ideal in ideals[1:]:
            meet &= ideal.mask
        assert meet == self.jacobson_radical.mask, "maximal ideals do not intersect in the radical"
        for ideal in ideals:
            assert self.one not in ideal, "maximal ideal contains the identity"
        if n <= CROSSCHECK_LIMIT:
            independent = {i.mask for i in maximal_ideals_bruteforce(self)}
            assert {i.mask for i in ideals} == independent, (
                "idempotent-based maximal ideals disagree with brute force"
            )
        return tuple(ideals)

    @property
    def maximal_ideal_count(self) -> int:
        return len(self.maximal_ideals)

    @cached_property
    def residue_field_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(self.size // len(m) for m in self.maximal_ideals))

    # -- signatures and comaximality ----------------------------------------

    @cached_property
    def signature_array(self) -> np.ndarray:
        """signature[a] has bit i set when a lies in maximal ideal i."""
        sig = np.zeros(self.size, dtype=np.int64)
        for i, ideal in enumerate(self.maximal_ideals):
            sig |= ideal.member_flags().astype(np.int64) << i
        units_by_sig = sig == 0
        assert (units_by_sig == self.unit_flags).all(), (
            "elements outside every maximal ideal must be exactly the units"
        )
        sig.setflags(write=False)
        return sig

    @cached_property
    def signatures(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self.signature_array)

    def signature(self, a: int) -> int:
        self._check_index(a)
        return self.signatures[a]

    def is_comaximal(self, a: int, b: int) -> bool:
        """True when Ra + Rb is the whole ring.

        Note is_comaximal(a, a) is true exactly when a is a unit.
        """
        return self.signature(a) & self.signature(b) == 0

    def is_comaximal_via_closure(self, a: int, b: int) -> bool:
        """Definition-level oracle: does the ideal generated by {a, b} hit 1?"""
        return self.one in self.ideal_closure((a, b))

    # -- quotients and cosets ------------------------------------------------

    def coset_representatives(self, ideal: IdealSet) -> tuple[np.ndarray, np.ndarray]:
        """Minimum-index representative of each coset of `ideal`.

        Returns (reps, rep_of): the sorted distinct representatives and,
        for every element x, the representative of x + ideal.
        """
        if ideal.ring_size != self.size:
            raise ValueError("ideal belongs to a ring of different size")
        rep_of: np.ndarray | None = None
        for j in ideal.members():
            row = self.add_row(j)
            rep_of = row.copy() if rep_of is None else np.minimum(rep_of, row)
        assert rep_of is not None
        reps = np.unique(rep_of)
        return reps, rep_of

    def quotient(self, ideal: IdealSet) -> tuple["RingTable", ElementMap]:
        """Quotient ring R/I together with the projection map."""
        if not self.is_ideal(ideal):
            raise ValueError("quotient requires an ideal of this ring")
        if self.one in ideal:
            raise ValueError("cannot quotient by the whole ring")
        n = self.size
        if len(ideal) == 1:
            identity = ElementMap(self, self, tuple(range(n)), isomorphism=True)
            return self, identity
        reps, rep_of = self.coset_representatives(ideal)
        q = len(reps)
        assert q * len(ideal) == n, "cosets do not partition the ring evenly"
        position = np.full(n, -1, dtype=np.int64)
        position[reps] = np.arange(q)
        elem_to_q = position[rep_of]
        labels = [self.labels[int(r)] for r in reps]
        name = f"{self.name}/I{len(ideal)}"
        reps_list = [int(r) for r in reps]

        def q_add_row(i: int) -> np.ndarray:
            return elem_to_q[self.add_row(reps_list[i])[reps]]

        def q_mul_row(i: int) -> np.ndarray:
            return elem_to_q[self.mul_row(reps_list[i])[reps]]

        def q_add(i: int, j: int) -> int:
            return int(elem_to_q[self.add(reps_list[i], reps_list[j])])

        def q_mul(i: int, j: int) -> int:
            return int(elem_to_q[self.mul(reps_list[i], reps_list[j])])

        def q_neg(i: int) -> int:
            return int(elem_to_q[self.neg(reps_list[i])])

        ring = RingTable(
            q,
            int(elem_to_q[self.one]),
            q_add,
            q_mul,
            neg=q_neg,
            add_row=q_add_row,
            mul_row=q_mul_row,
            labels=labels,
            name=name,
        )
        proj = ElementMap(self, ring, tuple(int(x) for x in elem_to_q))
        return ring, proj

    def idempotent_component(self, e: int) -> "RingTable":
        """The ring e*R with identity e, for an idempotent e != 0."""
        self._check_index(e)
        if self.mul(e, e) != e or e == 0:
            raise ValueError("component requires a nonzero idempotent")
        members = np.unique(self.mul_row(e))
        if members[0] != 0:
            raise ValueError("component of a non-idempotent")
        m = len(members)
        position = np.full(self.size, -1, dtype=np.int64)
        position[members] = np.arange(m)
        members_list = [int(x) for x in members]

        def c_add(i: int, j: int) -> int:
            return int(position[self.add(members_list[i], members_list[j])])

        def c_mul(i: int, j: int) -> int:
            return int(position[self.mul(members_list[i], members_list[j])])

        def c_neg(i: int) -> int:
            return int(position[self.neg(members_list[i])])

        def c_add_row(i: int) -> np.ndarray:
            return position[self.add_row(members_list[i])[members]]

        def c_mul_row(i: int) -> np.ndarray:
            return position[self.mul_row(members_list[i])[members]]

        return RingTable(
            m,
            int(position[e]),
            c_add,
            c_mul,
            neg=c_neg,
            add_row=c_add_row,
            mul_row=c_mul_row,
            labels=[self.labels[x] for x in members_list],
            name=f"{self.name}*e{e}",
        )

    # -- element-wise structure ----------------------------------------------

    def clean_decomposition(self) -> CleanDecomposition:
        """Try to write every element as idempotent + unit."""
        idems = self.idempotent_elements
        units = self.unit_flags
        witnesses: list[tuple[int, int]] = []
        for x in range(self.size):
            for e in idems:
                u = self.sub(x, e)
                if units[u]:
                    witnesses.append((e, u))
                    break
            else:
                return CleanDecomposition(False, None, x)
        return CleanDecomposition(True, tuple(witnesses), None)


# -- constructions ----------------------------------------------------------


def direct_product(*rings: RingTable, max_size: int = DEFAULT_MAX_RING_SIZE) -> RingTable:
    """Componentwise product ring; index = mixed-radix over factor indices."""
    if len(rings) < 2:
        raise ValueError("direct product needs at least two factors")
    sizes = [r.size for r in rings]
    total = 1
    for s in sizes:
        total *= s
        if total > max_size:
            raise CapacityError(
                f"product ring would exceed the size cap ({max_size})"
            )
    k = len(rings)
    digit_matrix = np.empty((total, k), dtype=np.int64)
    idx = np.arange(total)
    for i in range(k - 1, -1, -1):
        digit_matrix[:, i] = idx % sizes[i]
        idx //= sizes[i]
    digit_matrix.setflags(write=False)

    def decode(a: int) -> list[int]:
        return [int(d) for d in digit_matrix[a]]

    def encode(parts: Sequence[int]) -> int:
        out = 0
        for s, d in zip(sizes, parts):
            out = out * s + d
        return out

    def p_add(a: int, b: int) -> int:
        da, db = digit_matrix[a], digit_matrix[b]
        return encode([r.add(int(x), int(y)) for r, x, y in zip(rings, da, db)])

    def p_mul(a: int, b: int) -> int:
        da, db = digit_matrix[a], digit_matrix[b]
        return encode([r.mul(int(x), int(y)) for r, x, y in zip(rings, da, db)])

    def p_neg(a: int) -> int:
        return encode([r.neg(int(x)) for r, x in zip(rings, digit_matrix[a])])

    def _row(a: int, rows: Callable[[RingTable, int], np.ndarray]) -> np.ndarray:
        da = digit_matrix[a]
        acc: np.ndarray | None = None
        for i, r in enumerate(rings):
            col = np.asarray(rows(r, int(da[i])), dtype=np.int64)[digit_matrix[:, i]]
            acc = col if acc is None else acc * r.size + col
        return acc

    def p_add_row(a: int) -> np.ndarray:
        return _row(a, lambda r, d: r.add_row(d))

    def p_mul_row(a: int) -> np.ndarray:
        return _row(a, lambda r, d: r.mul_row(d))

    labels = []
    for a in range(total):
        parts = decode(a)
        labels.append("(" + ",".join(r.labels[d] for r, d in zip(rings, parts)) + ")")
    one = encode([r.one for r in rings])
    name = " x ".join(r.name for r in rings)
    return RingTable(
        total,
        one,
        p_add,
        p_mul,
        neg=p_neg,
        add_row=p_add_row,
        mul_row=p_mul_row,
        labels=labels,
        name=name,
    )


# -- oracles and validation ---------------------------------------------------


def maximal_ideals_bruteforce(ring: RingTable) -> tuple[IdealSet, ...]:
    """Maximal ideals by greedy growth of principal ideals.

    Independent of the idempotent route: every proper ideal extends to a
    maximal one, and each nonunit generator not yet covered starts a new
    growth, so all maximal ideals are found.
    """
    n = ring.size
    units = ring.unit_flags
    found: list[int] = []
    for a in range(n):
        if units[a]:
            continue
        if any(mask >> a & 1 for mask in found):
            continue
        current = ring.ideal_closure((a,))
        assert ring.one not in current
        members = list(current.members())
        mask = current.mask
        for x in range(n):
            if mask >> x & 1 or units[x]:
                continue
            candidate = ring.ideal_closure(members + [x])
            if ring.one not in candidate:
                mask = candidate.mask
                members = list(candidate.members())
        found.append(mask)
    return tuple(IdealSet(n, m) for m in sorted(found))


def validate_ring_axioms(
    ring: RingTable,
    *,
    exhaustive_limit: int = TABLE_LIMIT,
    samples: int = 4096,
    seed: int = 0,
) -> None:
    """Check the commutative-ring axioms, raising RingAxiomError on failure.

    Exhaustive up to `exhaustive_limit` elements, randomised sampling of
    associativity/distributivity triples above it.  Identity and negation
    laws are always checked for every element.
    """
    n = ring.size
    one = ring.one
    if not np.array_equal(ring.add_row(0), np.arange(n)):
        bad = int((ring.add_row(0) != np.arange(n)).argmax())
        raise RingAxiomError("zero identity", (0, bad))
    if not np.array_equal(ring.mul_row(one), np.arange(n)):
        bad = int((ring.mul_row(one) != np.arange(n)).argmax())
        raise RingAxiomError("one identity", (one, bad))
    for a in range(n):
        if not (ring.add_row(a) == 0).any():
            raise RingAxiomError("additive inverse", (a,))

    if n <= exhaustive_limit and ring._add_np is not None:
        A, M = ring._add_np, ring._mul_np
        if not np.array_equal(A, A.T):
            a, b = map(int, np.argwhere(A != A.T)[0])
            raise RingAxiomError("commutativity(add)", (a, b))
        if not np.array_equal(M, M.T):
            a, b = map(int, np.argwhere(M != M.T)[0])
            raise RingAxiomError("commutativity(mul)", (a, b))
        for a in range(n):
            lhs = A[A[a]]
            rhs = A[a][A]
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise RingAxiomError("associativity(add)", (a, b, c))
            lhs = M[M[a]]
            rhs = M[a][M]
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise RingAxiomError("associativity(mul)", (a, b, c))
            Ma = M[a]
            lhs = Ma[A]
            rhs = A[np.ix_(Ma, Ma)]
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise RingAxiomError("distributivity", (a, b, c))
        return

    import random

    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (rng.randrange(n) for _ in range(3))
        if ring.add(a, b) != ring.add(b, a):
            raise RingAxiomError("commutativity(add)", (a, b))
        if ring.mul(a, b) != ring.mul(b, a):
            raise RingAxiomError("commutativity(mul)", (a, b))
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
            raise RingAxiomError("associativity(add)", (a, b, c))
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
            raise RingAxiomError("associativity(mul)", (a, b, c))
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
            raise RingAxiomError("distributivity", (a, b, c))


# -- ring isomorphism ---------------------------------------------------------


def _element_profiles(ring: RingTable) -> list[tuple[int, ...]]:
    n = ring.size
    nilpotent = set(ring.nilpotent_elements)
    idem = set(ring.idempotent_elements)
    units = ring.unit_flags
    profiles = []
    for a in range(n):
        order, x = 1, a
        while x != 0:
            x = ring.add(x, a)
            order += 1
        ann = int((ring.mul_row(a) == 0).sum())
        profiles.append((order, int(units[a]), int(a in idem), int(a in nilpotent), ann))
    return profiles


def _additive_generators(ring: RingTable) -> list[int]:
    """Greedy additive generating set, identity first."""
    n = ring.size
    span = np.zeros(n, dtype=bool)
    span[0] = True
    gens: list[int] = []

    def grow(g: int) -> None:
        frontier = [g]
        span[g] = True
        while frontier:
            x = frontier.pop()
            row = ring.add_row(x)[np.flatnonzero(span)]
            fresh = [int(v) for v in row if not span[v]]
            for v in fresh:
                span[v] = True
            frontier.extend(fresh)

    grow(ring.one)
    gens.append(ring.one)
    for a in range(n):
        if not span[a]:
            gens.append(a)
            grow(a)
    return gens


def ring_isomorphic(
    r1: RingTable,
    r2: RingTable,
    *,
    cap: int = DEFAULT_RING_ISO_CAP,
) -> ElementMap | None:
    """Search for a ring isomorphism r1 -> r2.

    Returns a verified ElementMap, or None when the rings are provably
    non-isomorphic.  Raises CapacityError for same-size rings above the
    cap; a size mismatch is always a definite negative.
    """
    if r1.size != r2.size:
        return None
    n = r1.size
    if n > cap:
        raise CapacityError(
            f"ring isomorphism undecided: size {n} exceeds the cap ({cap})"
        )
    coarse = (
        r1.characteristic,
        r1.unit_count,
        len(r1.idempotent_elements),
        len(r1.nilpotent_elements),
        r1.residue_field_sizes,
    )
    if coarse != (
        r2.characteristic,
        r2.unit_count,
        len(r2.idempotent_elements),
        len(r2.nilpotent_elements),
        r2.residue_field_sizes,
    ):
        return None
    prof1 = _element_profiles(r1)
    prof2 = _element_profiles(r2)
    if sorted(prof1) != sorted(prof2):
        return None
    by_profile: dict[tuple[int, ...], list[int]] = {}
    for b, p in enumerate(prof2):
        by_profile.setdefault(p, []).append(b)

    gens = _additive_generators(r1)

    def propagate(fwd: list[int], rev: list[int], x: int, y: int) -> bool:
        """Force phi(x)=y and close under both operations."""
        queue = [(x, y)]
        while queue:
            u, v = queue.pop()
            if fwd[u] != -1:
                if fwd[u] != v:
                    return False
                continue
            if rev[v] != -1:
                return False
            if prof1[u] != prof2[v]:
                return False
            fwd[u] = v
            rev[v] = u
            defined = [w for w in range(n) if fwd[w] != -1]
            for w in defined:
                fw = fwd[w]
                queue.append((r1.add(u, w), r2.add(v, fw)))
                queue.append((r1.mul(u, w), r2.mul(v, fw)))
        return True

    def search(fwd: list[int], rev: list[int], gi: int) -> list[int] | None:
        if gi == len(gens):
            if -1 in fwd:
                return None
            return fwd
        g = gens[gi]
        if fwd[g] != -1:
            candidates = [fwd[g]]
        elif g == r1.one:
            candidates = [r2.one]
        else:
            candidates = [b for b in by_profile.get(prof1[g], ()) if rev[b] == -1]
        for c in candidates:
            nfwd, nrev = fwd.copy(), rev.copy()
            if fwd[g] != -1 or propagate(nfwd, nrev, g, c):
                result = search(nfwd, nrev, gi + 1)
                if result is not None:
                    return result
        return None

    fwd = [-1] * n
    rev = [-1] * n
    fwd[0] = 0
    rev[0] = 0
    mapping = search(fwd, rev, 0)
    if mapping is None:
        return None
    iso = ElementMap(r1, r2, tuple(mapping), isomorphism=True)
    assert iso.verify(), "search produced a mapping that fails verification"
    return iso
