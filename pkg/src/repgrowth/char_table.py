"""Complex character tables of finite groups, with exact-or-float scalars.

Values are ``Fraction`` when rational and ``complex`` otherwise, so rational
tables (all symmetric groups here) stay exact end to end and cyclotomic
tables fall back to floats with explicit tolerances.  Multiplicities come
from the standard inner product (1/|G|) sum_c |c| f(c) conj(chi(c)) and are
accepted only when within INTEGRALITY_TOL of a non-negative integer.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, complex]

ORTHOGONALITY_TOL = 1e-9
INTEGRALITY_TOL = 1e-6


class InvalidCharacterError(ValueError):
    """Raised when a class function fails to behave like a character."""


class TableParseError(ValueError):
    """A malformed character-table file; ``line`` is the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ClassFunction:
    """Values of a class function on the conjugacy classes, identity first."""

    values: tuple[Scalar, ...]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if len(self.values) != len(other.values):
            raise ValueError("class counts differ")
        return ClassFunction(tuple(a * b for a, b in zip(self.values, other.values)))


def tensor_power_char(f: ClassFunction, d: int) -> ClassFunction:
    """Character of the d-th tensor power: pointwise d-th power.

    d = 0 gives the trivial (all-ones) character.
    """
    if d < 0:
        raise ValueError(f"power must be non-negative, got {d}")
    return ClassFunction(tuple(v**d for v in f.values))


def _near_int(value: Scalar) -> int | None:
    c = complex(value)
    nearest = round(c.real)
    if abs(c.imag) > INTEGRALITY_TOL or abs(c.real - nearest) > INTEGRALITY_TOL:
        return None
    return nearest


@dataclass(frozen=True)
class CharacterTable:
    """A complete character table: class sizes plus one row per irreducible.

    Validated on construction: the identity class (size 1) comes first, class
    sizes sum to the group order, degrees are positive integers, the rows are
    orthonormal for the standard inner product, and squared degrees sum to
    the group order (so the listed irreducibles are all of them).
    """

    group_order: int
    class_sizes: tuple[int, ...]
    irrep_names: tuple[str, ...]
    irreps: tuple[ClassFunction, ...]

    def __post_init__(self) -> None:
        k = len(self.class_sizes)
        if k == 0 or self.class_sizes[0] != 1:
            raise InvalidCharacterError("first class must be the identity, size 1")
        if any(size < 1 for size in self.class_sizes):
            raise InvalidCharacterError(f"class sizes {self.class_sizes} not positive")
        if sum(self.class_sizes) != self.group_order:
            raise InvalidCharacterError(
                f"class sizes sum to {sum(self.class_sizes)}, not {self.group_order}"
            )
        if len(self.irreps) != k or len(self.irrep_names) != k:
            raise InvalidCharacterError(f"need exactly {k} named irreducibles")
        if len(set(self.irrep_names)) != k:
            raise InvalidCharacterError("irreducible names must be distinct")
        for name, chi in zip(self.irrep_names, self.irreps):
            if len(chi.values) != k:
                raise InvalidCharacterError(f"{name} has {len(chi.values)} values, not {k}")
            degree = _near_int(chi.values[0])
            if degree is None or degree < 1:
                raise InvalidCharacterError(f"{name} has degree {chi.values[0]}")
        if sum(self.degree(i) ** 2 for i in range(k)) != self.group_order:
            raise InvalidCharacterError("squared degrees do not sum to the group order")
        for i in range(k):
            for j in range(i, k):
                expected = 1 if i == j else 0
                got = complex(inner_product(self, self.irreps[i], self.irreps[j]))
                if abs(got - expected) > ORTHOGONALITY_TOL:
                    raise InvalidCharacterError(
                        f"rows {self.irrep_names[i]}, {self.irrep_names[j]} "
                        f"have inner product {got}"
                    )

    def degree(self, i: int) -> int:
        return _near_int(self.irreps[i].values[0])  # validated integral

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(i) for i in range(len(self.irreps)))

    @property
    def trivial_index(self) -> int:
        for i, chi in enumerate(self.irreps):
            if all(abs(complex(v) - 1) <= ORTHOGONALITY_TOL for v in chi.values):
                return i
        raise InvalidCharacterError("table has no trivial character")

    def irrep_index(self, name: str) -> int:
        try:
            return self.irrep_names.index(name)
        except ValueError:
            raise KeyError(
                f"no irreducible named {name!r}; have {', '.join(self.irrep_names)}"
            ) from None


def inner_product(table: CharacterTable, f: ClassFunction, g: ClassFunction) -> Scalar:
    """(1/|G|) sum over classes of |c| * f(c) * conj(g(c))."""
    total: Scalar = Fraction(0)
    for size, fv, gv in zip(table.class_sizes, f.values, g.values):
        total = total + size * fv * gv.conjugate()
    return total / table.group_order


def decompose(table: CharacterTable, f: ClassFunction) -> tuple[int, ...]:
    """Multiplicities of each irreducible in f, in table row order.

    Raises InvalidCharacterError when any inner product is not a non-negative
    integer within INTEGRALITY_TOL: such an f is not a character of this group.
    """
    mults = []
    for name, chi in zip(table.irrep_names, table.irreps):
        value = inner_product(table, f, chi)
        mult = _near_int(value)
        if mult is None or mult < 0:
            raise InvalidCharacterError(
                f"multiplicity of {name} is {value}, not a non-negative integer"
            )
        mults.append(mult)
    return tuple(mults)


def is_faithful(table: CharacterTable, f: ClassFunction) -> bool:
    """Whether f takes the value f(identity) only on the identity class.

    For a character this says the underlying representation has trivial
    kernel, which is what makes tensor powers of f eventually contain
    every irreducible.
    """
    identity = complex(f.values[0])
    return all(
        abs(complex(v) - identity) > ORTHOGONALITY_TOL for v in f.values[1:]
    )


def first_power_containing(
    table: CharacterTable, f: ClassFunction, target: int, max_d: int
) -> int | None:
    """Least d in 1..max_d with the target irreducible inside f**d, else None.

    Requires f faithful; a faithful character always succeeds for some
    d <= |G| (tested), but the search cap keeps the call total.
    """
    if not is_faithful(table, f):
        raise ValueError("character is not faithful")
    if not 0 <= target < len(table.irreps):
        raise ValueError(f"target index {target} out of range")
    if max_d < 1:
        raise ValueError(f"max_d must be at least 1, got {max_d}")
    power = f
    for d in range(1, max_d + 1):
        if decompose(table, power)[target] >= 1:
            return d
        power = power * f
    return None


def regular_character(table: CharacterTable) -> ClassFunction:
    """|G| at the identity, 0 elsewhere."""
    return ClassFunction(
        (Fraction(table.group_order),) + (Fraction(0),) * (len(table.class_sizes) - 1)
    )


def regular_tensor_check(table: CharacterTable, f: ClassFunction) -> bool:
    """Verify V (x) Regular = deg(f) copies of Regular, via characters.

    Decomposes f * chi_regular and compares with deg(f) * (degrees vector);
    in particular the trivial multiplicity -- the trivial-summand count of
    V (x) Regular -- must equal deg(f).
    """
    degree = _near_int(f.values[0])
    if degree is None or degree < 1:
        raise InvalidCharacterError(f"degree {f.values[0]} is not a positive integer")
    mults = decompose(table, f * regular_character(table))
    expected = tuple(degree * d for d in table.degrees)
    return mults == expected and mults[table.trivial_index] == degree


def min_power_containing_regular(
    table: CharacterTable, f: ClassFunction, max_n: int | None = None
) -> int:
    """Least N with (1 + f)**N containing the regular character, f faithful.

    "1 + f" is the character of Triv + V; containment means every irreducible
    multiplicity reaches its degree.  Once that holds for N it holds for all
    larger N (the check spot-verifies N+1 and N+2).  Searches N = 1..max_n
    (default |G|) and raises LookupError if the cap is exceeded.
    """
    if not is_faithful(table, f):
        raise ValueError("character is not faithful")
    cap = table.group_order if max_n is None else max_n
    one_plus = ClassFunction(tuple(1 + v for v in f.values))

    def contains_regular(n: int) -> bool:
        mults = decompose(table, tensor_power_char(one_plus, n))
        return all(m >= d for m, d in zip(mults, table.degrees))

    for n in range(1, cap + 1):
        if contains_regular(n):
            assert contains_regular(n + 1) and contains_regular(n + 2)
            return n
    raise LookupError(f"no power up to {cap} contains the regular character")


# --- Built-in tables -------------------------------------------------------


def _rational_table(
    order: int, sizes: tuple[int, ...], rows: dict[str, tuple[int, ...]]
) -> CharacterTable:
    return CharacterTable(
        group_order=order,
        class_sizes=sizes,
        irrep_names=tuple(rows),
        irreps=tuple(
            ClassFunction(tuple(Fraction(v) for v in values)) for values in rows.values()
        ),
    )


def _cyclic_table(n: int) -> CharacterTable:
    omega = cmath.exp(2j * cmath.pi / n)
    rows = []
    for i in range(n):
        if i == 0:
            rows.append(ClassFunction((Fraction(1),) * n))
        else:
            rows.append(ClassFunction(tuple(omega ** (i * j) for j in range(n))))
    return CharacterTable(
        group_order=n,
        class_sizes=(1,) * n,
        irrep_names=tuple("triv" if i == 0 else f"chi{i}" for i in range(n)),
        irreps=tuple(rows),
    )


def builtin_table(name: str) -> CharacterTable:
    """Tables shipped for tests and CLI demos: z2, z3, z4, s3, s4, d4."""
    key = name.lower()
    if key == "z2":
        return _rational_table(2, (1, 1), {"triv": (1, 1), "sign": (1, -1)})
    if key in ("z3", "z4"):
        return _cyclic_table(int(key[1:]))
    if key == "s3":
        # Classes: e (1), transpositions (3), 3-cycles (2).
        return _rational_table(
            6,
            (1, 3, 2),
            {"triv": (1, 1, 1), "sign": (1, -1, 1), "std": (2, 0, -1)},
        )
    if key == "s4":
        # Classes: e (1), 2-cycles (6), 2+2-cycles (3), 3-cycles (8), 4-cycles (6).
        return _rational_table(
            24,
            (1, 6, 3, 8, 6),
            {
                "triv": (1, 1, 1, 1, 1),
                "sign": (1, -1, 1, 1, -1),
                "two": (2, 0, 2, -1, 0),
                "std": (3, 1, -1, 0, -1),
                "stdsign": (3, -1, -1, 0, 1),
            },
        )
    if key == "d4":
        # Classes: e, r^2, {r, r^3}, reflections, diagonal reflections.
        return _rational_table(
            8,
            (1, 1, 2, 2, 2),
            {
                "triv": (1, 1, 1, 1, 1),
                "rot": (1, 1, 1, -1, -1),
                "refl": (1, 1, -1, 1, -1),
                "diag": (1, 1, -1, -1, 1),
                "two": (2, -2, 0, 0, 0),
            },
        )
    raise KeyError(f"no built-in table named {name!r}")


# --- Text format -----------------------------------------------------------
#
#   <order> <class count k>
#   <k class sizes>
#   <name> <k values>        (one line per irreducible)
#
# Values are a, a+bi, or a-bi with a, b integers or fractions like -1/2.
# Blank lines and lines starting with '#' are skipped.

_VALUE_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)(?:(?P<im>[+-]\d+(?:/\d+)?)i)?$"
)


def _parse_value(token: str, line: int) -> Scalar:
    match = _VALUE_RE.match(token)
    if match is None:
        raise TableParseError(line, f"malformed value {token!r}")
    real = Fraction(match.group("re"))
    if match.group("im") is None:
        return real
    imag = Fraction(match.group("im"))
    if imag == 0:
        return real
    return complex(real, imag)


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise TableParseError(line, f"malformed {what} {token!r}") from None


def load_table(text: str) -> CharacterTable:
    """Parse a character table from its text form (strict; see format above).

    Syntactic problems raise TableParseError with the offending line number;
    the assembled table is then validated like any other CharacterTable.
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise TableParseError(1, "empty table")
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise TableParseError(number, f"header must be '<order> <classes>', got {header!r}")
    order = _parse_int(fields[0], number, "group order")
    k = _parse_int(fields[1], number, "class count")
    if order < 1 or k < 1:
        raise TableParseError(number, f"order {order} and class count {k} must be positive")
    if len(lines) < 2:
        raise TableParseError(number, "missing class-sizes line")
    number, sizes_line = lines[1]
    size_tokens = sizes_line.split()
    if len(size_tokens) != k:
        raise TableParseError(number, f"expected {k} class sizes, got {len(size_tokens)}")
    sizes = tuple(_parse_int(tok, number, "class size") for tok in size_tokens)
    names: list[str] = []
    rows: list[ClassFunction] = []
    for number, line in lines[2:]:
        tokens = line.split()
        if len(tokens) != k + 1:
            raise TableParseError(
                number, f"expected a name and {k} values, got {len(tokens)} fields"
            )
        names.append(tokens[0])
        rows.append(ClassFunction(tuple(_parse_value(tok, number) for tok in tokens[1:])))
    if len(rows) != k:
        raise TableParseError(
            lines[-1][0], f"expected {k} irreducible rows, got {len(rows)}"
        )
    return CharacterTable(order, sizes, tuple(names), tuple(rows))


def load_table_file(path: str) -> CharacterTable:
    with open(path, encoding="utf-8") as handle:
        return load_table(handle.read())
