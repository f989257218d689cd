"""Character-table arithmetic on built-in groups and the text-file format."""

from fractions import Fraction

import pytest

from repgrowth.char_table import (
    CharacterTable,
    ClassFunction,
    InvalidCharacterError,
    TableParseError,
    builtin_table,
    decompose,
    first_power_containing,
    inner_product,
    is_faithful,
    load_table,
    min_power_containing_regular,
    regular_character,
    regular_tensor_check,
    tensor_power_char,
)

S3_TEXT = """\
6 3
1 3 2
triv 1 1 1
sign 1 -1 1
std 2 0 -1
"""

Z4_TEXT = """\
# cyclic group of order 4; columns e, g, g^2, g^3
4 4
1 1 1 1
triv 1 1 1 1
i 1 0+1i -1 0-1i
m1 1 -1 1 -1
mi 1 0-1i -1 0+1i
"""

BUILTINS = ("z2", "z3", "z4", "s3", "s4", "d4")


def test_builtin_tables_validate_and_have_trivial():
    for name in BUILTINS:
        table = builtin_table(name)
        assert table.class_sizes[0] == 1
        assert sum(d**2 for d in table.degrees) == table.group_order
        assert table.irrep_names[table.trivial_index] == "triv"
    with pytest.raises(KeyError):
        builtin_table("q8")


def test_inner_product_orthonormality_s3():
    s3 = builtin_table("s3")
    for i, chi in enumerate(s3.irreps):
        for j, psi in enumerate(s3.irreps):
            assert inner_product(s3, chi, psi) == (1 if i == j else 0)


def test_decompose_examples():
    s3 = builtin_table("s3")
    std = s3.irreps[s3.irrep_index("std")]
    assert decompose(s3, tensor_power_char(std, 2)) == (1, 1, 1)
    assert decompose(s3, std) == (0, 0, 1)
    assert decompose(s3, regular_character(s3)) == (1, 1, 2)
    trivial = tensor_power_char(std, 0)
    assert decompose(s3, trivial) == (1, 0, 0)


def test_decompose_rejects_non_characters():
    s3 = builtin_table("s3")
    with pytest.raises(InvalidCharacterError):
        decompose(s3, ClassFunction((Fraction(1, 2), Fraction(0), Fraction(0))))
    with pytest.raises(InvalidCharacterError):
        # <f, sign> = -1 for f = sign * (-1)
        decompose(s3, ClassFunction((Fraction(-1), Fraction(1), Fraction(-1))))


def test_decompose_identities_across_builtins():
    for name in BUILTINS:
        table = builtin_table(name)
        # The regular character decomposes with multiplicity = degree.
        assert decompose(table, regular_character(table)) == table.degrees
        for index, chi in enumerate(table.irreps):
            d = table.degree(index)
            for power in range(4):
                f = tensor_power_char(chi, power)
                mults = decompose(table, f)
                # Degree bookkeeping: sum of mult * degree = deg(f).
                assert sum(m * di for m, di in zip(mults, table.degrees)) == d**power
                # Parseval: sum of squares = <f, f>.
                norm = complex(inner_product(table, f, f))
                assert abs(norm - sum(m**2 for m in mults)) < 1e-6


def test_is_faithful():
    s3 = builtin_table("s3")
    assert is_faithful(s3, s3.irreps[s3.irrep_index("std")])
    assert not is_faithful(s3, s3.irreps[s3.irrep_index("sign")])
    assert not is_faithful(s3, s3.irreps[s3.irrep_index("triv")])
    z3 = builtin_table("z3")
    assert is_faithful(z3, z3.irreps[1])
    d4 = builtin_table("d4")
    assert is_faithful(d4, d4.irreps[d4.irrep_index("two")])
    assert is_faithful(s3, regular_character(s3))


def test_first_power_containing_s3():
    s3 = builtin_table("s3")
    std = s3.irreps[s3.irrep_index("std")]
    answers = [
        first_power_containing(s3, std, target, 6) for target in range(3)
    ]
    assert answers == [2, 2, 1]
    with pytest.raises(ValueError):
        first_power_containing(s3, s3.irreps[0], 0, 6)  # not faithful


def test_first_power_containing_z3_and_not_found():
    z3 = builtin_table("z3")
    chi1 = z3.irreps[1]
    assert [first_power_containing(z3, chi1, t, 3) for t in range(3)] == [3, 1, 2]
    assert first_power_containing(z3, chi1, 0, 2) is None


def test_first_power_bounded_by_group_order():
    for name in BUILTINS:
        table = builtin_table(name)
        for chi in table.irreps:
            if not is_faithful(table, chi):
                continue
            for target in range(len(table.irreps)):
                d = first_power_containing(table, chi, target, table.group_order)
                assert d is not None and 1 <= d <= table.group_order


def test_regular_tensor_check():
    s3 = builtin_table("s3")
    std = s3.irreps[s3.irrep_index("std")]
    assert regular_tensor_check(s3, std)
    assert decompose(s3, std * regular_character(s3)) == (2, 2, 4)
    for name in BUILTINS:
        table = builtin_table(name)
        for chi in table.irreps:
            assert regular_tensor_check(table, chi)
        assert regular_tensor_check(table, regular_character(table))


def test_min_power_containing_regular():
    s3 = builtin_table("s3")
    std = s3.irreps[s3.irrep_index("std")]
    assert min_power_containing_regular(s3, std) == 2
    z2 = builtin_table("z2")
    assert min_power_containing_regular(z2, z2.irreps[1]) == 1
    assert min_power_containing_regular(s3, regular_character(s3)) == 1
    z3 = builtin_table("z3")
    assert min_power_containing_regular(z3, z3.irreps[1]) == 2
    with pytest.raises(ValueError):
        min_power_containing_regular(s3, s3.irreps[0])
    with pytest.raises(LookupError):
        min_power_containing_regular(z3, z3.irreps[1], max_n=1)


def test_load_table_round_trips_s3():
    assert load_table(S3_TEXT) == builtin_table("s3")


def test_load_table_complex_values():
    table = load_table(Z4_TEXT)
    assert table.group_order == 4
    chi = table.irreps[table.irrep_index("i")]
    assert chi.values[1] == complex(0, 1)
    assert is_faithful(table, chi)
    assert decompose(table, tensor_power_char(chi, 2)) == (0, 0, 1, 0)


@pytest.mark.parametrize(
    "text, bad_line",
    [
        ("", 1),
        ("6\n", 1),
        ("6 x\n", 1),
        ("6 3\n", 1),
        ("6 3\n1 3\n", 2),
        ("6 3\n1 3 x\n", 2),
        ("6 3\n1 3 2\ntriv 1 1\n", 3),
        ("6 3\n1 3 2\ntriv 1 1 1\nsign 1 -1 1\nstd 2 0 zz\n", 5),
        ("6 3\n1 3 2\ntriv 1 1 1\nsign 1 -1 1\n", 4),
    ],
)
def test_load_table_reports_line_numbers(text, bad_line):
    with pytest.raises(TableParseError) as excinfo:
        load_table(text)
    assert excinfo.value.line == bad_line
    assert f"line {bad_line}:" in str(excinfo.value)


def test_table_validation_failures():
    # Sizes that do not sum to the order.
    with pytest.raises(InvalidCharacterError):
        load_table("7 3\n1 3 2\ntriv 1 1 1\nsign 1 -1 1\nstd 2 0 -1\n")
    # Non-orthogonal rows (duplicated character).
    with pytest.raises(InvalidCharacterError):
        load_table("6 3\n1 3 2\ntriv 1 1 1\nalso 1 1 1\nstd 2 0 -1\n")
    # First class must be the identity.
    with pytest.raises(InvalidCharacterError):
        load_table("6 3\n3 1 2\ntriv 1 1 1\nsign -1 1 1\nstd 0 2 -1\n")
    # Degrees must be positive integers.
    with pytest.raises(InvalidCharacterError):
        CharacterTable(
            2,
            (1, 1),
            ("a", "b"),
            (
                ClassFunction((Fraction(-1), Fraction(1))),
                ClassFunction((Fraction(1), Fraction(1))),
            ),
        )


def test_tensor_power_char_validates():
    s3 = builtin_table("s3")
    with pytest.raises(ValueError):
        tensor_power_char(s3.irreps[0], -1)
