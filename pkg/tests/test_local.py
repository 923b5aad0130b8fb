import pytest

from fintop.core import discrete_space, indiscrete_space, product_subset, product_space, validate_space
from fintop.local import (
    DIAGRAM_ARROWS,
    LCVariant,
    LCWitness,
    PreconditionError,
    are_a_separated,
    characterize_alc,
    characterize_alo,
    converse_fails_check,
    disjoint_aclosed_witness,
    interpolation_witness,
    is_regular,
    is_variant_dense,
    is_variant_space,
    is_variant_submaximal,
    lc_family,
    lc_mask,
    lc_witness,
    product_lc_witness,
    sandwich_witness,
    separated_union_witness,
)
from fintop.variants import Variant, variant_closed_family, variant_open_family
from oracles import LC_PAIRS, Oracle

ALC = LCVariant.A_LC


def test_lc_parse():
    assert LCVariant.parse("alc") is ALC
    assert LCVariant.parse("FLC").open_variant is Variant.FEEBLY
    with pytest.raises(ValueError):
        LCVariant.parse("xLC")



def test_lc_families_match_oracle(small_spaces):
    for space in small_spaces:
        ref = Oracle(space.n, space.opens)
        for lcv in LCVariant:
            assert set(lc_family(space, lcv)) == ref.lc(LC_PAIRS[lcv.value])


def test_diagram_arrows_hold(small_spaces):
    for space in small_spaces:
        for src, dst in DIAGRAM_ARROWS:
            assert lc_family(space, src).issubset(lc_family(space, dst))


def test_flc_equals_alphalc(small_spaces):
    for space in small_spaces:
        assert lc_family(space, LCVariant.F_LC) == lc_family(space, LCVariant.ALPHA_LC)


def test_witness_examples(ex37, ex39):
    w = lc_witness(ex39, ALC, ex39.parse_subset("{a,c}"))
    assert (ex39.format_subset(w.u), ex39.format_subset(w.v)) == ("{a,b,c}", "{a,c,d}")
    assert w.is_valid(ex39) and w.witnessed == ex39.parse_subset("{a,c}")
    assert lc_witness(ex37, ALC, ex37.parse_subset("{a}")) is None
    assert lc_witness(ex37, LCVariant.LC, ex37.parse_subset("{a}")) is not None


def test_witnesses_exist_exactly_for_members(small_spaces):
    for space in small_spaces[:40]:
        for lcv in LCVariant:
            mask = lc_mask(space, lcv)
            for a in range(space.full + 1):
                w = lc_witness(space, lcv, a)
                assert (w is not None) == bool(mask[a])
                if w is not None:
                    assert w.is_valid(space) and w.witnessed == a


def test_membership_example(ex39):
    c = ex39.parse_subset("{c}")
    assert lc_mask(ex39, ALC)[c] and not lc_mask(ex39, LCVariant.LC)[c]


@pytest.mark.parametrize(
    "name, literal, expected, p",
    [
        ("ex37", "{a}", False, "-"),
        ("ex37", "{b}", True, "{b}"),
        ("ex39", "{a,c}", True, "{a,b,c}"),
        ("ex39", "{d}", True, "{a,b,d}"),
    ],
)
def test_characterize_alc_examples(request, name, literal, expected, p):
    space = request.getfixturevalue(name)
    rec = characterize_alc(space, space.parse_subset(literal))
    assert rec.forms == (expected,) * 5
    assert rec.format(space).splitlines()[1] == f"b: {str(expected).lower()} P={p}"


def test_characterize_alo_examples(ex37, ex39):
    rec = characterize_alo(ex39, ex39.parse_subset("{a,c}"))
    assert rec.consistent and rec.a_lc and ex39.format_subset(rec.p) == "{c}"
    assert characterize_alo(ex37, ex37.parse_subset("{a}")).forms == (False,) * 5


def test_characterizations_are_consistent(small_spaces):
    for space in small_spaces:
        for a in range(space.full + 1):
            assert characterize_alc(space, a).consistent
            assert characterize_alo(space, a).consistent


def test_disjoint_witness(ex37, ex39):
    w = LCWitness(ex37.parse_subset("{b}"), ex37.full, ALC)
    assert ex37.format_subset(disjoint_aclosed_witness(ex37, w)) == "{a,c,d}"
    w = LCWitness(ex39.parse_subset("{a,b,c}"), ex39.parse_subset("{a,c,d}"), ALC)
    assert ex39.format_subset(disjoint_aclosed_witness(ex39, w)) == "{d}"
    with pytest.raises(PreconditionError):
        disjoint_aclosed_witness(ex39, LCWitness(ex39.parse_subset("{c}"), ex39.full, ALC))


def test_converse_fails(ex37, ex39):
    assert converse_fails_check(ex37, ex37.parse_subset("{a}"))
    assert not converse_fails_check(ex37, ex37.parse_subset("{b}"))
    assert not converse_fails_check(ex39, ex39.parse_subset("{a}"))


def test_interpolation(ex37, ex39):
    e, f = interpolation_witness(ex37, ex37.parse_subset("{b}"), ex37.parse_subset("{a,c,d}"))
    assert (e, f) == (ex37.full, 0)
    e, f = interpolation_witness(ex39, ex39.parse_subset("{a,b}"), ex39.parse_subset("{a,c,d}"))
    assert (ex39.format_subset(e), ex39.format_subset(f)) == ("{a,b}", "{a,c,d}")
    with pytest.raises(PreconditionError):
        interpolation_witness(ex39, ex39.parse_subset("{c}"), ex39.full)
    with pytest.raises(PreconditionError):
        interpolation_witness(ex39, ex39.parse_subset("{a}"), ex39.parse_subset("{a}"))


def test_sandwich(ex37, ex39):
    k = sandwich_witness(ex39, ex39.parse_subset("{c}"), ex39.parse_subset("{a,c}"))
    assert ex39.format_subset(k) == "{c}"
    with pytest.raises(PreconditionError):
        sandwich_witness(ex39, ex39.parse_subset("{b}"), ex39.parse_subset("{a,c}"))
    with pytest.raises(PreconditionError):
        sandwich_witness(ex37, 0, ex37.parse_subset("{a}"))


def test_density_and_submaximality(ex37, ex39):
    ab = ex39.parse_subset("{a,b}")
    assert all(is_variant_dense(ex39, v, ab) for v in (Variant.OPEN, Variant.A_OPEN, Variant.E_OPEN))
    assert not is_variant_dense(ex39, Variant.A_OPEN, ex39.parse_subset("{a}"))
    assert is_variant_submaximal(ex39, Variant.A_OPEN)
    assert not is_variant_submaximal(ex39, Variant.OPEN)
    assert not is_variant_submaximal(ex37, Variant.A_OPEN)
    ind = indiscrete_space("ab")
    a = ind.parse_subset("{a}")
    assert is_variant_dense(ind, Variant.A_OPEN, a) and a not in variant_open_family(ind, Variant.A_OPEN)
    with pytest.raises(ValueError):
        is_variant_dense(ex39, Variant.SEMI, ab)


def test_a_submaximal_iff_alc_is_everything(small_spaces):
    for space in small_spaces:
        assert is_variant_submaximal(space, Variant.A_OPEN) == (len(lc_family(space, ALC)) == 1 << space.n)


def test_spaces(aspace, ex37):
    assert is_variant_space(aspace, Variant.A_OPEN)
    assert not is_variant_space(ex37, Variant.A_OPEN)
    assert is_variant_space(discrete_space("abc"), Variant.E_OPEN)
    with pytest.raises(ValueError):
        is_variant_space(ex37, Variant.SEMI)


def test_regular(sierpinski, aspace):
    assert is_regular(discrete_space("abc"))
    assert is_regular(indiscrete_space("abc"))
    assert is_regular(aspace)
    assert not is_regular(sierpinski)


def test_regular_e_space_submaximality_agrees(small_spaces):
    seen = 0
    for space in small_spaces:
        if is_regular(space) and is_variant_space(space, Variant.E_OPEN):
            seen += 1
            flags = {is_variant_submaximal(space, v) for v in (Variant.OPEN, Variant.A_OPEN, Variant.E_OPEN)}
            assert len(flags) == 1
    assert seen > 0


def test_separation(ex39, ex37):
    s = ex39.parse_subset
    assert are_a_separated(ex39, s("{a}"), s("{b}"))
    assert are_a_separated(ex39, s("{c}"), s("{d}"))
    assert not are_a_separated(ex39, s("{a}"), s("{c}"))
    w = separated_union_witness(ex39, s("{a}"), s("{b}"))
    assert ex39.format_subset(w.witnessed) == "{a,b}" and w.is_valid(ex39)
    w = separated_union_witness(ex39, s("{c}"), s("{d}"))
    assert ex39.format_subset(w.witnessed) == "{c,d}"
    with pytest.raises(PreconditionError):
        separated_union_witness(ex39, s("{a}"), s("{c}"))
    with pytest.raises(PreconditionError):
        separated_union_witness(ex37, ex37.parse_subset("{a}"), 0)


def test_separated_union_never_fails(small_spaces):
    for space in small_spaces:
        alc = list(lc_family(space, ALC))
        for a in alc:
            for b in alc:
                if are_a_separated(space, a, b):
                    assert separated_union_witness(space, a, b).witnessed == a | b


def test_product_witnesses(ex37, sierpinski):
    d = discrete_space("ab")
    w = product_lc_witness(d, d, 1, 2)
    assert w.witnessed == product_subset(d, d, 1, 2)
    w = product_lc_witness(ex37, sierpinski, ex37.parse_subset("{b}"), sierpinski.full)
    prod = product_space(ex37, sierpinski)
    assert prod.n == 8 and w.is_valid(prod)
    assert w.witnessed == product_subset(ex37, sierpinski, ex37.parse_subset("{b}"), sierpinski.full)
    w = product_lc_witness(ex37, sierpinski, ex37.full, sierpinski.full, prod)
    assert w.witnessed == prod.full
    with pytest.raises(PreconditionError):
        product_lc_witness(ex37, sierpinski, ex37.parse_subset("{a}"), 1)


def test_alc_intersection_and_e_lc(small_spaces):
    for space in small_spaces:
        alc = lc_family(space, ALC)
        elc = lc_family(space, LCVariant.E_LC)
        assert all(a & b in alc for a in alc for b in alc)
        assert alc.issubset(elc)
