"""Ring expressions: parsing, printing, and construction.

Grammar (whitespace allowed between tokens):

    spec    := term ("x" term)*
    term    := "Z/" nat
             | "Z/" prime "[x]/(" poly ")"
             | "GF(" nat ["^" nat] ")"
             | "SQZ(" prime "," nat ")"
             | "table:" path
    poly    := polyterm ("+" polyterm)*
    polyterm:= nat | nat? "x" ["^" nat]

`GF(q)` accepts a prime power directly (GF(4)) or the explicit form
GF(2^2); it desugars to a Z/p[x]/(f) quotient by the smallest monic
irreducible polynomial of the right degree under the base-p coefficient
encoding, so the choice is deterministic and reproducible.  `SQZ(p,k)`
is the local ring F_p (+) F_p^k with square-zero multiplication on the
vector part.  Paths for `table:` run to the next whitespace, so file
names with spaces are not expressible.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import CapacityError, ParseError, TableFormatError
from .limits import DEFAULT_MAX_RING_SIZE
from .rings import RingTable, direct_product, validate_ring_axioms


@dataclass(frozen=True)
class ZnExpr:
    modulus: int


@dataclass(frozen=True)
class PolyQuotExpr:
    p: int
    coeffs: tuple[int, ...]  # ascending degree, monic


@dataclass(frozen=True)
class SqzExpr:
    p: int
    k: int


@dataclass(frozen=True)
class TableFileExpr:
    path: str


@dataclass(frozen=True)
class ProductExpr:
    factors: tuple["RingExpr", ...]


RingExpr = Union[ZnExpr, PolyQuotExpr, SqzExpr, TableFileExpr, ProductExpr]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- parsing ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, pos: int | None = None) -> None:
        raise ParseError(message, self.pos if pos is None else pos, self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def looking_at(self, literal: str) -> bool:
        return self.text.startswith(literal, self.pos)

    def eat(self, literal: str) -> bool:
        if self.looking_at(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.eat(literal):
            self.fail(f"expected {literal!r}")

    def parse_nat(self, what: str = "number") -> tuple[int, int]:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail(f"expected {what}")
        return int(self.text[start : self.pos]), start

    def parse_expression(self) -> RingExpr:
        self.skip_ws()
        factors = [self.parse_term()]
        while True:
            self.skip_ws()
            if self.eat("x"):
                self.skip_ws()
                factors.append(self.parse_term())
            else:
                break
        self.skip_ws()
        if not self.at_end():
            self.fail("unexpected trailing input")
        if len(factors) == 1:
            return factors[0]
        return ProductExpr(tuple(factors))

    def parse_term(self) -> RingExpr:
        start = self.pos
        if self.eat("Z/"):
            n, npos = self.parse_nat("modulus")
            if self.looking_at("["):
                if not _is_prime(n):
                    self.fail("polynomial quotient base must be prime", npos)
                self.expect("[x]/(")
                coeffs = self.parse_poly(n)
                self.expect(")")
                return PolyQuotExpr(n, coeffs)
            if n < 2:
                self.fail("modulus must be at least 2", npos)
            return ZnExpr(n)
        if self.eat("GF("):
            q, qpos = self.parse_nat("field size")
            if self.eat("^"):
                k, kpos = self.parse_nat("exponent")
                if not _is_prime(q):
                    self.fail("field characteristic must be prime", qpos)
                if k < 1:
                    self.fail("field exponent must be at least 1", kpos)
                p = q
            else:
                if q < 2:
                    self.fail("field size must be at least 2", qpos)
                p = min(d for d in range(2, q + 1) if q % d == 0)
                k, rest = 0, q
                while rest % p == 0:
                    rest //= p
                    k += 1
                if rest != 1:
                    self.fail("field size must be a prime power", qpos)
            self.expect(")")
            if k == 1:
                return ZnExpr(p)
            return PolyQuotExpr(p, minimal_irreducible(p, k))
        if self.eat("SQZ("):
            p, ppos = self.parse_nat("prime")
            if not _is_prime(p):
                self.fail("SQZ base must be prime", ppos)
            self.expect(",")
            k, kpos = self.parse_nat("vector dimension")
            if k < 1:
                self.fail("SQZ dimension must be at least 1", kpos)
            self.expect(")")
            return SqzExpr(p, k)
        if self.eat("table:"):
            pstart = self.pos
            while self.pos < len(self.text) and not self.text[self.pos].isspace():
                self.pos += 1
            path = self.text[pstart : self.pos]
            if not path:
                self.fail("expected a file path after table:", pstart)
            return TableFileExpr(path)
        self.fail("expected a ring term (Z/, GF(, SQZ(, or table:)", start)
        raise AssertionError("unreachable")

    def parse_poly(self, p: int) -> tuple[int, ...]:
        start = self.pos
        acc: dict[int, int] = {}
        while True:
            self.skip_ws()
            if self.text[self.pos : self.pos + 1].isdigit():
                c, _ = self.parse_nat("coefficient")
                if self.eat("x"):
                    deg = self.parse_exponent()
                else:
                    deg = 0
            elif self.eat("x"):
                c = 1
                deg = self.parse_exponent()
            else:
                self.fail("expected a polynomial term")
            acc[deg] = acc.get(deg, 0) + c
            self.skip_ws()
            if not self.eat("+"):
                break
        reduced = {d: c % p for d, c in acc.items() if c % p}
        degree = max(reduced, default=0)
        if degree < 1:
            self.fail("polynomial must have degree at least 1", start)
        if reduced[degree] != 1:
            self.fail("polynomial must be monic", start)
        return tuple(reduced.get(d, 0) for d in range(degree + 1))

    def parse_exponent(self) -> int:
        if self.eat("^"):
            e, _ = self.parse_nat("exponent")
            return e
        return 1


def parse_expression(text: str) -> RingExpr:
    return _Parser(text).parse_expression()


def _poly_str(coeffs: tuple[int, ...]) -> str:
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            x = "x" if d == 1 else f"x^{d}"
            parts.append(x if c == 1 else f"{c}{x}")
    return "+".join(parts) if parts else "0"


def format_expression(expr: RingExpr) -> str:
    if isinstance(expr, ZnExpr):
        return f"Z/{expr.modulus}"
    if isinstance(expr, PolyQuotExpr):
        return f"Z/{expr.p}[x]/({_poly_str(expr.coeffs)})"
    if isinstance(expr, SqzExpr):
        return f"SQZ({expr.p},{expr.k})"
    if isinstance(expr, TableFileExpr):
        return f"table:{expr.path}"
    if isinstance(expr, ProductExpr):
        return " x ".join(format_expression(f) for f in expr.factors)
    raise TypeError(f"not a ring expression: {expr!r}")


# -- irreducible polynomials ----------------------------------------------------


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by den over F_p; den monic."""
    num = num[:]
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]]


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(coeffs)) % p == 0:
            return False
    if deg < 4:
        return True
    num = list(coeffs)
    for d in range(2, deg // 2 + 1):
        for m in range(p**d):
            den, rest = [], m
            for _ in range(d):
                den.append(rest % p)
                rest //= p
            den.append(1)
            if not any(_poly_rem(num, den, p)):
                return False
    return True


@lru_cache(maxsize=None)
def minimal_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p in base-p coefficient order."""
    if not _is_prime(p) or k < 1:
        raise ValueError("need a prime p and degree k >= 1")
    for m in range(p**k):
        low, rest = [], m
        for _ in range(k):
            low.append(rest % p)
            rest //= p
        coeffs = tuple(low) + (1,)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("an irreducible polynomial of every degree exists")


# -- builders -------------------------------------------------------------------


def _check_size(n: int, max_size: int) -> None:
    if n > max_size:
        raise CapacityError(f"ring of size {n} exceeds the size cap ({max_size})")


def _zn_ring(n: int, max_size: int) -> RingTable:
    if n < 2:
        raise ValueError("modulus must be at least 2")
    _check_size(n, max_size)
    idx = np.arange(n, dtype=np.int64)
    return RingTable(
        n,
        1 % n if n > 1 else 0,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        add_row=lambda a: (idx + a) % n,
        mul_row=lambda a: (idx * a) % n,
        labels=[str(i) for i in range(n)],
        name=f"Z/{n}",
    )


def _polyquot_ring(p: int, coeffs: tuple[int, ...], max_size: int) -> RingTable:
    if not _is_prime(p):
        raise ValueError("polynomial quotient base must be prime")
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[deg] != 1:
        raise ValueError("polynomial must be monic of degree at least 1")
    n = p**deg
    _check_size(n, max_size)

    # x^(deg+j) mod f as coefficient vectors, for folding products.
    top = [(-coeffs[i]) % p for i in range(deg)]
    reductions = [top]
    for _ in range(deg - 2):
        prev = reductions[-1]
        shifted = [0] + prev[:-1]
        carry = prev[-1]
        reductions.append([(shifted[i] + carry * top[i]) % p for i in range(deg)])
    red = np.array(reductions, dtype=np.int64) if reductions else np.zeros((0, deg), np.int64)

    digits = np.empty((n, deg), dtype=np.int64)
    idx = np.arange(n)
    for i in range(deg):
        digits[:, i] = idx % p
        idx //= p
    digits.setflags(write=False)
    powers = np.array([p**i for i in range(deg)], dtype=np.int64)

    def encode_vec(mat: np.ndarray) -> np.ndarray:
        return mat @ powers

    def add_row(a: int) -> np.ndarray:
        return encode_vec((digits + digits[a]) % p)

    def mul_row(a: int) -> np.ndarray:
        da = digits[a]
        conv = np.zeros((n, 2 * deg - 1), dtype=np.int64)
        for i in range(deg):
            if da[i]:
                conv[:, i : i + deg] += int(da[i]) * digits
        conv %= p
        for j in range(2 * deg - 2, deg - 1, -1):
            col = conv[:, j]
            conv[:, :deg] = (conv[:, :deg] + np.outer(col, red[j - deg])) % p
            conv[:, j] = 0
        return encode_vec(conv[:, :deg])

    def add(a: int, b: int) -> int:
        return int(encode_vec(((digits[a] + digits[b]) % p)[None, :])[0])

    def mul(a: int, b: int) -> int:
        return int(mul_row(a)[b])

    def neg(a: int) -> int:
        return int(encode_vec(((-digits[a]) % p)[None, :])[0])

    labels = [_poly_str(tuple(int(c) for c in digits[a])) for a in range(n)]
    return RingTable(
        n,
        1,
        add,
        mul,
        neg=neg,
        add_row=add_row,
        mul_row=mul_row,
        labels=labels,
        name=f"Z/{p}[x]/({_poly_str(coeffs)})",
    )


_SQZ_VARS = ("x", "y", "z")


def _sqz_ring(p: int, k: int, max_size: int) -> RingTable:
    if not _is_prime(p):
        raise ValueError("SQZ base must be prime")
    if k < 1:
        raise ValueError("SQZ dimension must be at least 1")
    n = p ** (k + 1)
    _check_size(n, max_size)
    names = _SQZ_VARS[:k] if k <= len(_SQZ_VARS) else tuple(f"t{i+1}" for i in range(k))
    pk = p**k

    # columns: scalar part first, then vector coordinates (big-endian).
    digits = np.empty((n, k + 1), dtype=np.int64)
    idx = np.arange(n)
    for i in range(k, -1, -1):
        digits[:, i] = idx % p
        idx //= p
    digits.setflags(write=False)
    powers = np.array([p ** (k - i) for i in range(k + 1)], dtype=np.int64)

    def add_row(a: int) -> np.ndarray:
        return ((digits + digits[a]) % p) @ powers

    def mul_row(a: int) -> np.ndarray:
        da = digits[a]
        out = np.empty((n, k + 1), dtype=np.int64)
        out[:, 0] = (da[0] * digits[:, 0]) % p
        out[:, 1:] = (da[0] * digits[:, 1:] + digits[:, 0, None] * da[1:]) % p
        return out @ powers

    def add(a: int, b: int) -> int:
        return int(((digits[a] + digits[b]) % p) @ powers)

    def mul(a: int, b: int) -> int:
        return int(mul_row(a)[b])

    def neg(a: int) -> int:
        return int(((-digits[a]) % p) @ powers)

    def label(a: int) -> str:
        d = digits[a]
        parts = []
        if d[0]:
            parts.append(str(int(d[0])))
        for i, v in enumerate(names):
            c = int(d[i + 1])
            if c == 1:
                parts.append(v)
            elif c:
                parts.append(f"{c}{v}")
        return "+".join(parts) if parts else "0"

    return RingTable(
        n,
        pk,
        add,
        mul,
        neg=neg,
        add_row=add_row,
        mul_row=mul_row,
        labels=[label(a) for a in range(n)],
        name=f"SQZ({p},{k})",
    )


def build_ring(expr: RingExpr, *, max_size: int = DEFAULT_MAX_RING_SIZE) -> RingTable:
    if isinstance(expr, ZnExpr):
        return _zn_ring(expr.modulus, max_size)
    if isinstance(expr, PolyQuotExpr):
        return _polyquot_ring(expr.p, expr.coeffs, max_size)
    if isinstance(expr, SqzExpr):
        return _sqz_ring(expr.p, expr.k, max_size)
    if isinstance(expr, TableFileExpr):
        ring = load_table_ring(expr.path)
        _check_size(ring.size, max_size)
        return ring
    if isinstance(expr, ProductExpr):
        factors = [build_ring(f, max_size=max_size) for f in expr.factors]
        return direct_product(*factors, max_size=max_size)
    raise TypeError(f"not a ring expression: {expr!r}")


def ring_from_text(text: str, *, max_size: int = DEFAULT_MAX_RING_SIZE) -> RingTable:
    return build_ring(parse_expression(text), max_size=max_size)


def expression_size(expr: RingExpr) -> int:
    """Element count of the ring an expression denotes, without building it.

    Table-file expressions read only the size field from the file.
    """
    if isinstance(expr, ZnExpr):
        return expr.modulus
    if isinstance(expr, PolyQuotExpr):
        return expr.p ** (len(expr.coeffs) - 1)
    if isinstance(expr, SqzExpr):
        return expr.p ** (expr.k + 1)
    if isinstance(expr, ProductExpr):
        total = 1
        for f in expr.factors:
            total *= expression_size(f)
        return total
    if isinstance(expr, TableFileExpr):
        try:
            with open(expr.path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise TableFormatError(f"cannot read table file: {exc}") from exc
        size = data.get("size") if isinstance(data, dict) else None
        if not isinstance(size, int) or size < 2:
            raise TableFormatError("size must be an integer >= 2")
        return size
    raise TypeError(f"not a ring expression: {expr!r}")


# -- table files ------------------------------------------------------------------


def load_table_ring(path: str) -> RingTable:
    """Load a ring from a JSON table file and validate the ring axioms.

    Expects keys size, one, add, mul (row-major flat tables) and an
    optional labels list.  Element 0 must be the additive identity,
    which the axiom check enforces.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise TableFormatError(f"cannot read table file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"table file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise TableFormatError("table file must hold a JSON object")
    for key in ("size", "one", "add", "mul"):
        if key not in data:
            raise TableFormatError(f"table file is missing {key!r}")
    size = data["size"]
    if not isinstance(size, int) or size < 2:
        raise TableFormatError("size must be an integer >= 2")
    one = data["one"]
    if not isinstance(one, int) or not 0 <= one < size:
        raise TableFormatError("one must be an element index")
    for key in ("add", "mul"):
        table = data[key]
        if not isinstance(table, list) or len(table) != size * size:
            raise TableFormatError(f"{key} table must hold size*size entries")
        for v in table:
            if not isinstance(v, int) or not 0 <= v < size:
                raise TableFormatError(f"{key} table entry {v!r} out of range")
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != size:
            raise TableFormatError("labels must list one string per element")
        if not all(isinstance(x, str) for x in labels):
            raise TableFormatError("labels must list one string per element")
    ring = RingTable(
        size,
        one,
        data["add"],
        data["mul"],
        labels=labels,
        name=f"table:{os.path.basename(path)}",
    )
    validate_ring_axioms(ring)
    return ring


def save_table_ring(ring: RingTable, path: str) -> None:
    """Write a ring as a JSON table file (inverse of load_table_ring)."""
    add: list[int] = []
    mul: list[int] = []
    for a in range(ring.size):
        add.extend(int(v) for v in ring.add_row(a))
        mul.extend(int(v) for v in ring.mul_row(a))
    obj = {
        "size": ring.size,
        "one": ring.one,
        "add": add,
        "mul": mul,
        "labels": list(ring.labels),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, sort_keys=True)
        fh.write("\n")
