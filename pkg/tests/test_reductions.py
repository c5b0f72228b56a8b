import pytest

from fairnet import (
    FairnessCertificate,
    InputError,
    LabelMultiset,
    RefusalError,
    SemiMagicSpec,
    ThreePartitionInstance,
    XsatFormula,
    brute_3partition,
    certificate_from_xsat_assignment,
    decode_semimagic,
    gen_3partition_k33,
    gen_3partition_stars,
    gen_circulant,
    gen_semimagic,
    gen_xsat,
    solve_auto,
    solve_oracle,
    validate_xsat,
    verify,
)

N3_FORMULA = XsatFormula(3, ((0, 1, 2), (0, 1, 2), (0, 1, 2)))


class TestThreePartitionType:
    def test_validates_count(self):
        with pytest.raises(InputError):
            ThreePartitionInstance((1, 2, 3, 4), 1)
        with pytest.raises(InputError):
            ThreePartitionInstance((1, 2, 3), 0)

    def test_validates_positivity(self):
        with pytest.raises(InputError):
            ThreePartitionInstance((1, 2, 0), 1)

    def test_target(self):
        assert ThreePartitionInstance((1, 2, 3), 1).target == 6
        assert ThreePartitionInstance((1, 2, 3, 1, 2, 4), 2).target is None


class TestK33Generator:
    def test_even_triple_count(self):
        made = gen_3partition_k33(ThreePartitionInstance((1, 2, 3, 1, 2, 3), 2))
        graph, labels = made
        assert graph.vertex_count == 6 and graph.edge_count == 9
        assert labels.values == (1, 1, 2, 2, 3, 3)
        assert made.metadata["case"] == "1" and made.metadata["k"] == "6"
        out = solve_oracle(graph, labels)
        assert out.fair and out.certificate.constant == 6

    def test_odd_triple_count_with_shift(self):
        made = gen_3partition_k33(ThreePartitionInstance((1, 2, 3), 1))
        graph, labels = made
        # values lift to (2,3,4), padding triple {7,1,1}, one extra copy
        assert made.metadata["shift"] == "1" and made.metadata["case"] == "2"
        assert made.metadata["k"] == "9"
        assert graph.vertex_count == 6
        assert labels.values == (1, 1, 2, 3, 4, 7)
        out = solve_oracle(graph, labels)
        assert out.fair and out.certificate.constant == 9

    def test_odd_triple_count_without_shift(self):
        made = gen_3partition_k33(ThreePartitionInstance((2, 3, 4), 1))
        assert made.metadata["shift"] == "0" and made.metadata["k"] == "9"

    def test_rejects_indivisible_sum(self):
        with pytest.raises(InputError):
            gen_3partition_k33(ThreePartitionInstance((1, 1, 2, 1, 1, 1), 2))

    def test_unfair_when_unpartitionable(self):
        inst = ThreePartitionInstance((5, 5, 5, 1, 1, 1), 2)
        graph, labels = gen_3partition_k33(inst)
        assert not solve_oracle(graph, labels).fair


class TestStarsGenerator:
    def test_structure_and_fairness(self):
        made = gen_3partition_stars(ThreePartitionInstance((1, 2, 3, 1, 2, 3), 2))
        graph, labels = made
        assert graph.vertex_count == 8 and graph.edge_count == 6
        assert labels.values == (1, 1, 2, 2, 3, 3, 6, 6)
        out = solve_oracle(graph, labels)
        assert out.fair and out.certificate.constant == 6

    def test_unfair_when_unpartitionable(self):
        inst = ThreePartitionInstance((5, 5, 5, 1, 1, 1), 2)
        graph, labels = gen_3partition_stars(inst)
        assert not solve_oracle(graph, labels).fair


class TestBrute3Partition:
    def test_witness(self):
        ok, witness = brute_3partition(
            ThreePartitionInstance((1, 1, 4, 1, 1, 4), 2)
        )
        assert ok and witness == ((1, 1, 4), (1, 1, 4))

    def test_divisible_but_unsplittable(self):
        ok, witness = brute_3partition(
            ThreePartitionInstance((5, 5, 5, 1, 1, 1), 2)
        )
        assert not ok and witness is None

    def test_indivisible(self):
        ok, witness = brute_3partition(ThreePartitionInstance((1, 1, 1, 1, 1, 2), 2))
        assert not ok and witness is None

    def test_refuses_large(self):
        with pytest.raises(RefusalError):
            brute_3partition(ThreePartitionInstance(tuple(range(1, 16)), 5))


class TestXsat:
    def test_validate_accepts_block_formula(self):
        assert validate_xsat(N3_FORMULA) is None
        blocks = XsatFormula(
            6, ((0, 1, 2),) * 3 + ((3, 4, 5),) * 3
        )
        assert validate_xsat(blocks) is None

    def test_validate_rejections(self):
        assert "size" in validate_xsat(XsatFormula(3, ((0, 1), (0, 1, 2), (0, 1, 2))))
        assert "clause count" in validate_xsat(XsatFormula(3, ((0, 1, 2),) * 2))
        assert "divisible" in validate_xsat(XsatFormula(4, ((0, 1, 2),) * 4))
        lopsided = XsatFormula(
            6, ((0, 1, 2),) * 4 + ((3, 4, 5),) * 2
        )
        assert "occurs" in validate_xsat(lopsided)

    def test_formula_type_rejects_bad_indices(self):
        with pytest.raises(InputError):
            XsatFormula(3, ((0, 1, 7),))

    def test_gadget_shape(self):
        made = gen_xsat(N3_FORMULA)
        graph, labels = made
        assert graph.vertex_count == 48
        assert graph.regular_degree() == 6
        assert labels.counts[1] == 2 and labels.counts[2] == 45
        assert labels.counts[4] == 1
        assert made.metadata["k"] == "12"

    def test_certificate(self):
        made = gen_xsat(N3_FORMULA)
        cert = certificate_from_xsat_assignment(N3_FORMULA, (True, False, False))
        assert cert.constant == 12
        assert verify(made.graph, made.labels, cert.labels) == 12

    def test_certificate_rejects_bad_assignment(self):
        with pytest.raises(InputError):
            certificate_from_xsat_assignment(N3_FORMULA, (True, True, False))
        with pytest.raises(InputError):
            certificate_from_xsat_assignment(N3_FORMULA, (False, False, False))
        with pytest.raises(InputError):
            certificate_from_xsat_assignment(N3_FORMULA, (True,))

    def test_gen_rejects_invalid_formula(self):
        with pytest.raises(InputError):
            gen_xsat(XsatFormula(3, ((0, 1, 2),) * 2))


class TestSemimagic:
    LO_SHU = SemiMagicSpec(3, (2, 7, 6, 9, 5, 1, 4, 3, 8))

    def test_structure(self):
        made = gen_semimagic(self.LO_SHU)
        graph, labels = made
        assert graph.vertex_count == 15
        assert sorted(set(graph.degrees)) == [2, 3]
        assert labels.multiplicity(14) == 3 and labels.multiplicity(1) >= 3
        assert "necessarily_unfair" not in made.metadata

    def test_decode_round_trip(self):
        made = gen_semimagic(self.LO_SHU)
        labels = (2, 7, 6, 9, 5, 1, 4, 3, 8) + (14,) * 3 + (1,) * 3
        assert verify(made.graph, made.labels, labels) == 15
        grid = decode_semimagic(self.LO_SHU, FairnessCertificate(labels, 15))
        assert grid == ((2, 7, 6), (9, 5, 1), (4, 3, 8))

    def test_decode_flipped_orientation(self):
        labels = (2, 7, 6, 9, 5, 1, 4, 3, 8) + (1,) * 3 + (14,) * 3
        grid = decode_semimagic(self.LO_SHU, FairnessCertificate(labels, 15))
        assert grid == ((2, 7, 6), (9, 5, 1), (4, 3, 8))

    def test_decode_rejects_bad_certificate(self):
        labels = (7, 2, 6, 9, 5, 1, 4, 3, 8) + (14,) * 3 + (1,) * 3
        with pytest.raises(InputError):
            decode_semimagic(self.LO_SHU, FairnessCertificate(labels, 15))

    def test_decode_rejects_wrong_claimed_constant(self):
        labels = (2, 7, 6, 9, 5, 1, 4, 3, 8) + (14,) * 3 + (1,) * 3
        with pytest.raises(InputError):
            decode_semimagic(self.LO_SHU, FairnessCertificate(labels, 14))

    def test_indivisible_flagged_without_search(self):
        spec = SemiMagicSpec(3, (1,) * 8 + (2,))
        made = gen_semimagic(spec)
        assert made.metadata["necessarily_unfair"] == "true"
        assert made.metadata["verdict"] == "unfair"
        assert not solve_auto(made.graph, made.labels).fair

    def test_spec_validation(self):
        with pytest.raises(InputError):
            SemiMagicSpec(2, (1, 2, 3, 4))
        with pytest.raises(InputError):
            SemiMagicSpec(3, (1, 2, 3))
        with pytest.raises(InputError):
            SemiMagicSpec(3, (0,) * 9)


class TestCirculant:
    def test_shapes(self):
        assert gen_circulant(8, 2).edge_count == 8
        assert gen_circulant(7, 4).regular_degree() == 4
        assert gen_circulant(5, 0).is_edgeless()
        assert gen_circulant(1, 0).vertex_count == 1

    def test_rejections(self):
        for n, r in ((6, 3), (4, 4), (0, 0), (5, -2)):
            with pytest.raises(InputError):
                gen_circulant(n, r)

    def test_regular_solver_route(self):
        # 4-regular, total 36, forced constant 4*36/8 = 18
        graph = gen_circulant(8, 4)
        labels = LabelMultiset.from_iterable(range(1, 9))
        out = solve_auto(graph, labels)
        ref = solve_oracle(graph, labels)
        assert out.fair == ref.fair
        if out.fair:
            assert out.certificate.constant == 18


class TestUnpacking:
    def test_generated_instance_unpacks(self):
        graph, labels = gen_3partition_stars(ThreePartitionInstance((1, 2, 3), 1))
        assert graph.vertex_count == len(labels)
