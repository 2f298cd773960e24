"""Tests for permutations, groups, structure and normal pi-series."""

import pytest

from src.group_core.builtins import builtin_group, cyclic, dihedral, klein_four, section4_construction
from src.group_core.constructions import build_semidirect, direct_product, semidirect_product
from src.group_core.group import Group
from src.group_core.perm_io import parse_perm_text, read_perm_file, write_perm_file
from src.group_core.permutation import compose, invert, parse_cycles, perm_order, to_cycles
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries, enumerate_normal_pi_series, series_from_orders
from src.group_core.structure import (
    center,
    conjugacy_classes,
    derived_subgroup,
    is_normal,
    is_pi_separable,
    normal_subgroups,
    quotient_group,
)
from src.utils.errors import (
    GroupConstructionError,
    InputError,
    NotPiSeparableError,
    OrderCapExceeded,
    PermutationSyntaxError,
)


@pytest.mark.unit
class TestPermutations:
    def test_parse_cycles(self):
        assert parse_cycles("(1 2 3)", 4) == (1, 2, 0, 3)
        assert parse_cycles("(1,2)(3,4)", 4) == (1, 0, 3, 2)
        assert parse_cycles("()", 3) == (0, 1, 2)
        assert parse_cycles("", 2) == (0, 1)

    @pytest.mark.parametrize("text", ["(1 2", "(1 5)", "(1 2)(2 3)", "(a b)", "1 2"])
    def test_malformed_cycles(self, text):
        with pytest.raises(PermutationSyntaxError):
            parse_cycles(text, 4)

    def test_compose_left_to_right(self):
        g = parse_cycles("(1 2)", 3)
        h = parse_cycles("(2 3)", 3)
        # 1 -> 2 under g, then 2 -> 3 under h
        assert compose(g, h)[0] == 2
        assert to_cycles(compose(g, h)) == "(1 3 2)"

    def test_inverse_and_order(self):
        g = parse_cycles("(1 2 3)(4 5)", 5)
        assert compose(g, invert(g)) == tuple(range(5))
        assert perm_order(g) == 6

    def test_to_cycles(self):
        assert to_cycles((0, 1, 2)) == "()"
        assert to_cycles(parse_cycles("(2 4 3)", 4)) == "(2 4 3)"


@pytest.mark.unit
class TestPiSet:
    def test_parse(self):
        pi = PiSet.parse("2, 3")
        assert pi.primes == frozenset({2, 3})
        assert str(pi) == "{2,3}"

    @pytest.mark.parametrize("text", ["", "4", "2,x"])
    def test_invalid(self, text):
        with pytest.raises(InputError):
            PiSet.parse(text)

    def test_numbers_and_parts(self):
        pi = PiSet.of([2])
        assert pi.is_number(8)
        assert pi.is_number(1)
        assert not pi.is_number(12)
        assert pi.part(12) == 4
        other = pi.complement_set()
        assert other.is_number(21)
        assert other.part(12) == 3
        assert str(other) == "{2}'"


@pytest.mark.unit
class TestGroups:
    @pytest.mark.parametrize(
        "name,order",
        [
            ("c1", 1), ("c6", 6), ("s3", 6), ("d8", 8), ("d10", 10), ("q8", 8), ("a4", 12),
            ("s4", 24), ("c7:c3", 21), ("sl23", 24), ("gl23", 48), ("e27", 27), ("klein4", 4),
        ],
    )
    def test_builtin_orders(self, name, order):
        assert builtin_group(name).order == order

    def test_unknown_builtin(self):
        with pytest.raises(InputError):
            builtin_group("nope")
        with pytest.raises(InputError):
            dihedral(7)

    def test_identity_is_first(self, s3):
        assert s3.perm(0) == (0, 1, 2)
        assert s3.index_of((0, 1, 2)) == 0

    def test_order_cap(self):
        with pytest.raises(OrderCapExceeded):
            Group.from_cycles(5, ["(1 2)", "(1 2 3 4 5)"], order_cap=100)

    def test_subgroups_are_shared(self, s3):
        a = s3.subgroup_generated([parse_cycles("(1 2 3)", 3)])
        b = s3.subgroup_generated([parse_cycles("(1 3 2)", 3)])
        assert a is b
        assert a.order == 3
        assert a.is_subgroup_of(s3)
        assert a.root is s3

    def test_intersection(self, s3):
        a = s3.subgroup_generated([parse_cycles("(1 2 3)", 3)])
        t = s3.subgroup_generated([parse_cycles("(1 2)", 3)])
        assert a.intersection(t).order == 1

    def test_direct_and_semidirect_products(self):
        assert direct_product(cyclic(2), cyclic(3)).order == 6
        C7 = cyclic(7)
        g = C7.generators[0]
        G = semidirect_product(C7, cyclic(3), [[compose(g, g)]])
        assert G.order == 21
        assert len(conjugacy_classes(G)) == 5

    def test_action_must_respect_relations(self):
        # x -> x^2 has order 4 on C5, so it cannot be attached to both involutions of V4
        C5 = cyclic(5)
        g = C5.generators[0]
        square = compose(g, g)
        with pytest.raises(GroupConstructionError, match="not a homomorphism"):
            build_semidirect(C5, klein_four(), [[square], [square]])

    def test_faithful_affine_action(self):
        C5 = cyclic(5)
        g = C5.generators[0]
        built = build_semidirect(C5, cyclic(4), [[compose(g, g)]])
        assert built.affine_only
        assert built.group.order == 20
        assert len(conjugacy_classes(built.group)) == 5

    def test_inversion_by_klein_four(self):
        C5 = cyclic(5)
        g = C5.generators[0]
        G = semidirect_product(C5, klein_four(), [[invert(g)], [g]])
        assert G.order == 20
        assert len(conjugacy_classes(G)) == 8

    def test_unfaithful_action_uses_regular_points(self):
        # an involution on six points acting trivially: the product is C6 on 3 + 2 points
        K = Group.from_cycles(6, ["(1 2)(3 4)(5 6)"])
        C3 = cyclic(3)
        built = build_semidirect(C3, K, [[C3.generators[0]]])
        assert not built.affine_only
        assert built.group.degree == 5
        assert built.group.order == 6
        assert len(conjugacy_classes(built.group)) == 6

    def test_generator_images_must_be_automorphisms(self):
        C4 = cyclic(4)
        g = C4.generators[0]
        with pytest.raises(GroupConstructionError):
            build_semidirect(C4, cyclic(2), [[compose(g, g)]])

    def test_order_1323_construction(self):
        built = section4_construction()
        G = built.group
        assert G.order == 1323
        assert G.degree == 58
        assert G.subgroup_generated([built.t1, built.t2]).order == 49
        assert G.subgroup_generated([built.a, built.b, built.c]).order == 27


@pytest.mark.unit
class TestStructure:
    @pytest.mark.parametrize("name,classes", [("s3", 3), ("s4", 5), ("a4", 4), ("q8", 5), ("sl23", 7), ("e27", 11)])
    def test_class_counts(self, name, classes):
        assert len(conjugacy_classes(builtin_group(name))) == classes

    def test_identity_class_first(self, s4):
        classes = conjugacy_classes(s4)
        assert classes[0].representative == 0
        assert classes[0].size == 1
        assert int(classes.sizes.sum()) == 24

    @pytest.mark.parametrize("name,count", [("s3", 3), ("s4", 4), ("a4", 3), ("q8", 6), ("d8", 6)])
    def test_normal_subgroups(self, name, count):
        normals = normal_subgroups(builtin_group(name))
        assert len(normals) == count
        assert normals[0].order == 1
        assert normals[-1].order == builtin_group(name).order

    def test_derived_and_center(self, a4):
        assert derived_subgroup(a4).order == 4
        assert center(builtin_group("q8")).order == 2
        assert center(builtin_group("e27")).order == 3
        assert center(builtin_group("s3")).order == 1

    def test_is_normal(self, s3):
        a3 = s3.subgroup_generated([parse_cycles("(1 2 3)", 3)])
        t = s3.subgroup_generated([parse_cycles("(1 2)", 3)])
        assert is_normal(a3, s3)
        assert not is_normal(t, s3)

    def test_quotient(self, s4):
        v4 = next(N for N in normal_subgroups(s4) if N.order == 4)
        Q = quotient_group(s4, v4)
        assert Q.group.order == 6
        assert len(set(Q.projection.tolist())) == 6

    def test_pi_separability(self):
        a5 = builtin_group("a5")
        assert not is_pi_separable(a5, PiSet.of([2])).holds
        assert is_pi_separable(a5, PiSet.of([2, 3, 5])).holds
        assert is_pi_separable(builtin_group("s4"), PiSet.of([3])).holds


@pytest.fixture
def s4():
    return builtin_group("s4")


@pytest.mark.unit
class TestSeries:
    def test_s3_has_one_series(self, s3, pi3):
        found = enumerate_normal_pi_series(s3, pi3)
        assert len(found) == 1
        assert found[0].orders == (1, 3, 6)
        assert found[0].kinds == ("pi", "pi'")
        assert found[0].label() == "1<3<6"
        assert not found.truncated

    def test_factors_are_pi_or_pi_prime(self, s4, pi2):
        for S in enumerate_normal_pi_series(s4, pi2):
            for lower, upper, kind in zip(S.chain, S.chain[1:], S.kinds):
                index = upper.order // lower.order
                assert (pi2.is_number(index) if kind == "pi" else pi2.complement_set().is_number(index))

    def test_from_orders(self, s4, pi2):
        S = series_from_orders(s4, pi2, [4, 12])
        assert S.orders == (1, 4, 12, 24)
        assert S.kinds == ("pi", "pi'", "pi")
        with pytest.raises(InputError):
            series_from_orders(s4, pi2, [3])

    def test_enumeration_cap(self, s4):
        found = enumerate_normal_pi_series(s4, PiSet.of([2, 3]), cap=1)
        assert len(found) == 1
        assert found.truncated

    def test_from_chain_validates(self, s3, pi3):
        t = s3.subgroup_generated([parse_cycles("(1 2)", 3)])
        with pytest.raises(InputError):
            NormalPiSeries.from_chain(pi3, [s3.trivial_subgroup(), t, s3])
        with pytest.raises(InputError):
            NormalPiSeries.from_chain(pi3, [s3.trivial_subgroup(), s3])

    def test_not_separable(self):
        with pytest.raises(NotPiSeparableError):
            enumerate_normal_pi_series(builtin_group("a5"), PiSet.of([2]))

    def test_truncate(self, s3, pi3):
        S = enumerate_normal_pi_series(s3, pi3)[0]
        T = S.truncate(1)
        assert T.group.order == 3
        assert T.kinds == ("pi",)


@pytest.mark.unit
class TestPermFiles:
    def test_parse_text(self):
        degree, gens = parse_perm_text("# S3\ndegree 3\n(1 2)\n(1 2 3)  # rotation\n")
        assert degree == 3
        assert gens == ["(1 2)", "(1 2 3)"]

    def test_missing_degree(self):
        with pytest.raises(PermutationSyntaxError):
            parse_perm_text("(1 2)\n")

    def test_write_and_read(self, tmp_path, s4):
        path = tmp_path / "s4.perm"
        write_perm_file(s4, path)
        G = read_perm_file(path)
        assert G.order == 24
        assert G.name == "s4"

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            read_perm_file(tmp_path / "none.perm")
