import pytest

from crossfam.familyfile import FamilyFileError, parse_family, serialize_family
from crossfam.families import Family, frankl_family


CANON = "n 4\n-\n1,2\n1,2,4\n2,3,4\n"


def test_round_trip_is_identity():
    fam = parse_family(CANON)
    assert fam.n == 4
    assert len(fam) == 4
    assert serialize_family(fam) == CANON


def test_comments_blanks_and_spacing():
    messy = "# witness family\n\nn 4\n 1,2 \n\n-\n# tail comment\n2,3,4\n1, 2, 4\n"
    assert parse_family(messy) == parse_family(CANON)


def test_serialize_orders_empty_first():
    fam = Family.from_masks(3, {0b111, 0})
    assert serialize_family(fam) == "n 3\n-\n1,2,3\n"


def test_frankl_round_trip():
    fam = frankl_family(6, 2, 1)
    assert parse_family(serialize_family(fam)) == fam


def test_empty_family():
    fam = parse_family("n 5\n")
    assert fam.n == 5 and len(fam) == 0
    assert serialize_family(fam) == "n 5\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "m 4\n1,2\n",
        "n\n",
        "n 4 5\n",
        "n x\n",
        "n -1\n",
        "n 3\n0,1\n",
        "n 3\n1,4\n",
        "n 3\n2,1\n",
        "n 3\n1,1\n",
        "n 3\n1,a\n",
        "n 3\n1,2\n1,2\n",
        "n 3\n-\n-\n",
        "n 3\n1,,2\n",
    ],
)
def test_malformed_inputs(text):
    with pytest.raises(FamilyFileError):
        parse_family(text)
