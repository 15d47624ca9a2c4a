"""Builders and the presentation schema."""

import json

import pytest

from hopfmonad import presentation, zoo
from hopfmonad.exactla import ExactError, FieldSpec
from hopfmonad.monad import check_bimonad
from hopfmonad.presentation import SchemaError, load

Q = FieldSpec.rationals()
F3 = FieldSpec.prime(3)
F7 = FieldSpec.prime(7)


class TestBuilders:
    def test_presentations_are_json_serializable(self):
        for pres in [zoo.build_trivial(Q),
                     zoo.build_group_algebra(zoo.cyclic_group_table(3), F7, "kz3"),
                     zoo.build_sweedler(Q),
                     zoo.build_taft(2, 3),
                     zoo.build_drinfeld_double_group(zoo.cyclic_group_table(2), Q),
                     zoo.build_pair_groupoid(Q)]:
            text = json.dumps(pres, sort_keys=True)
            assert load(json.loads(text)).name == pres["name"]

    def test_group_algebra_needs_neutral_first(self):
        with pytest.raises(ExactError):
            zoo.build_group_algebra([[1, 0], [0, 1]], Q)

    def test_taft_needs_root_of_unity(self):
        with pytest.raises(ExactError):
            zoo.build_taft(3, 5)  # 3 does not divide 4

    def test_sweedler_rejects_char_two(self):
        with pytest.raises(ExactError):
            zoo.build_sweedler(FieldSpec.prime(2))

    def test_taft_two_matches_sweedler(self):
        # basis alignment: taft orders g^a x^b as a*2+b, the four-dimensional
        # builder as a+2b; both give the same structure constants over GF(3)
        taft = presentation.load(zoo.build_taft(2, 3))
        sw = presentation.load(zoo.build_sweedler(F3))
        perm = [0, 2, 1, 3]  # taft index of the sweedler basis element
        f = F3
        for a in range(4):
            for b in range(4):
                got = [taft.alg.mul[perm[a]][perm[b]][perm[c]] for c in range(4)]
                want = sw.alg.mul[a][b]
                assert got == want
        t2_t = taft.t.t2[((0, 0), (0, 0))].block(0, 0)
        t2_s = sw.t.t2[((0, 0), (0, 0))].block(0, 0)
        for a in range(4):
            for p in range(4):
                for q in range(4):
                    assert t2_t[perm[p] * 4 + perm[q], perm[a]] == t2_s[p * 4 + q, a]
        for a in range(4):
            assert taft.t.t0.block(0, 0)[0, perm[a]] == sw.t.t0.block(0, 0)[0, a]
            for b in range(4):
                assert taft.s_matrix[perm[a]][perm[b]] == sw.s_matrix[a][b]

    def test_one_object_groupoid_matches_group_algebra(self, one_object_z2, kz2):
        a, b = one_object_z2.t, kz2.t
        assert a.m.block(0, 0).tolist() == b.m.block(0, 0).tolist()
        assert a.u.block(0, 0).tolist() == b.u.block(0, 0).tolist()
        assert a.t0.block(0, 0).tolist() == b.t0.block(0, 0).tolist()
        key = ((0, 0), (0, 0))
        assert a.t2[key].block(0, 0).tolist() == b.t2[key].block(0, 0).tolist()
        assert one_object_z2.antipode.sl[(0, 0)].block(0, 0).tolist() == \
            kz2.antipode.sl[(0, 0)].block(0, 0).tolist()

    def test_double_s3_loads(self):
        m = presentation.load(
            zoo.build_drinfeld_double_group(zoo.symmetric3_table(), F7, "ds3"))
        assert m.t.carrier_dim == 36
        assert m.stock_modules and m.stock_modules[0].carrier.total_dim() == 6

    def test_groupoid_ambiguity_detected(self):
        with pytest.raises(ExactError):
            zoo.build_groupoid_algebra(["1"], [("g", 0, 0), ("h", 0, 0)], Q)


class TestSchema:
    def test_missing_keys(self):
        with pytest.raises(SchemaError):
            load({"schema": 1, "name": "x", "field": "Q"})

    def test_bad_schema_version(self):
        with pytest.raises(SchemaError):
            load({"schema": 2, "name": "x", "field": "Q", "labels": ["*"]})

    def test_bad_field(self):
        with pytest.raises(SchemaError):
            load({"schema": 1, "name": "x", "field": {"Fp": 6}, "labels": ["*"]})

    def test_shape_mismatch(self):
        pres = zoo.build_sweedler(Q)
        pres["unit"] = ["1", "0"]
        with pytest.raises(SchemaError):
            load(pres)

    def test_scalar_parse_round_trip(self):
        pres = zoo.build_sweedler(Q)
        m = load(pres)
        assert m.t.base.field.is_rationals
        # scalars serialize as plain strings such as -7/2
        from fractions import Fraction
        assert Q.show(Fraction(-7, 2)) == "-7/2"
        assert Q.coerce("-7/2") == Fraction(-7, 2)

    def test_multilabel_without_groupoid_rejected(self):
        with pytest.raises(SchemaError):
            load({"schema": 1, "name": "x", "field": "Q", "labels": ["a", "b"]})


class TestRegression:
    @pytest.mark.parametrize("name", ["trivial", "kz2", "ks3", "sweedler"])
    def test_builders_pass_axioms(self, name, request):
        fixture = {"trivial": "trivial", "kz2": "kz2", "ks3": "ks3",
                   "sweedler": "sweedler"}[name]
        m = request.getfixturevalue(fixture)
        assert check_bimonad(m.t).passed
