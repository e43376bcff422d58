import itertools

import pytest
from oracles import brute_orbit

from weylrack.classes import class_of
from weylrack.constructions import (
    CITE_NICHOLS,
    EXCEPTIONS_BN,
    EXCEPTIONS_REFINED,
    PermType,
    build_witness_1_3,
    build_witness_1n2_2,
    build_witness_2_3,
    build_witness_4_cycle,
    build_witness_12_3,
    classify_class,
    conjugation_components_2_3,
    conjugation_components_12_3,
    fixes_sq_2_3,
    fixes_sq_3cycle,
    listed_exception,
    three_cycle_sums,
    transport,
)
from weylrack.core import (
    GroupKind,
    SignedElem,
    WeylError,
    conjugate,
    element,
    format_element,
    perm_from_cycles,
)
from weylrack.rack import check_type_d, conj_rack, sq
from weylrack.verify import printed_families

S123 = perm_from_cycles([(1, 2, 3)], 5)
T45 = perm_from_cycles([(4, 5)], 5)
VECS5 = list(itertools.product((0, 1), repeat=5))
FAMILIES = printed_families((4, 5, 6), ("B", "D"))
FAMILY_IDS = [check_id for check_id, _ in FAMILIES]


def _rack_clauses_ok(w):
    verdict = check_type_d(w, conj_rack(class_of(w.class_rep, w.kind)))
    return all(ok for name, ok in verdict.clauses.items() if name != "membership"), verdict


class TestPermType:
    def test_parse_and_print(self):
        t = PermType.parse("(1^2,3)", 5)
        assert t.mult == (2, 0, 1, 0, 0)
        assert str(t) == "(1^2,3)"
        assert PermType.parse("(1^{n-2},2)".replace("n-2", "3"), 5) == PermType.of(perm_from_cycles([(1, 2)], 5))

    def test_weight_mismatch(self):
        with pytest.raises(WeylError):
            PermType.parse("(2,3)", 6)


class TestExceptionTables:
    # literal copy of the published exception lists
    GOLDEN_BN = (
        ("i", "(2,3)", ""),
        ("i", "(2^3)", ""),
        ("ii", "(2^4)", ""),
        ("ii", "(1,2^2)", ""),
        ("ii", "(1^2,3)", ""),
        ("ii", "(1^2,2^2)", ""),
        ("iii", "(1^{n-2},2)", "(n > 5) with a_i = a_j when tau(i) = i and tau(j) = j"),
        ("iii", "(1^{n-3},3)", "(n > 5) with a_i = a_j when tau(i) = i and tau(j) = j"),
    )
    GOLDEN_REFINED = (
        ("i", "(2,3)", ""),
        ("ii", "(1^2,3)", ""),
        ("iii", "(1^{n-2},2)", "for n > 5 with a_i = a_j when sigma(i) = i and sigma(j) = j"),
    )

    def test_round_trip(self):
        assert tuple((e.item, e.pattern, e.condition) for e in EXCEPTIONS_BN) == self.GOLDEN_BN
        assert tuple((e.item, e.pattern, e.condition) for e in EXCEPTIONS_REFINED) == self.GOLDEN_REFINED

    def test_lookup(self):
        assert listed_exception(PermType.parse("(2,3)", 5)).item == "i"
        assert listed_exception(PermType.parse("(5)", 5)) is None
        # the transposition entry only applies from n = 6 on
        assert listed_exception(PermType.parse("(1^3,2)", 5)) is None
        assert listed_exception(PermType.parse("(1^4,2)", 6)).item == "iii"


class TestFixedPointCriteria:
    def test_equal_vectors(self):
        a = (1, 0, 1, 1, 0)
        assert fixes_sq_3cycle(a, a, S123)
        assert fixes_sq_2_3(a, a, T45, S123)

    def test_designated_3cycle_pair(self):
        a, b = (1, 1, 0, 0, 0), (1, 0, 0, 0, 1)
        assert three_cycle_sums(a) == (1, 1, 0)
        assert three_cycle_sums(b) == (0, 1, 1)
        assert not fixes_sq_3cycle(a, b, S123)

    @pytest.mark.parametrize("a, b", [((1, 1, 0, 0, 0), (1, 0, 0, 0, 1)), ((1, 1, 0, 0, 1), (1, 0, 0, 0, 0))])
    def test_designated_2_3_pairs(self, a, b):
        assert not fixes_sq_2_3(a, b, T45, S123)

    def test_3cycle_equivalence_exhaustive(self):
        for a in VECS5:
            for b in VECS5:
                fixed = sq(SignedElem(a, S123), SignedElem(b, S123)) == SignedElem(b, S123)
                assert fixes_sq_3cycle(a, b, S123) == fixed

    def test_2_3_equivalence_exhaustive(self):
        s = perm_from_cycles([(1, 2, 3), (4, 5)], 5)
        for a in VECS5:
            for b in VECS5:
                fixed = sq(SignedElem(a, s), SignedElem(b, s)) == SignedElem(b, s)
                assert fixes_sq_2_3(a, b, T45, S123) == fixed

    def test_wrong_shapes_rejected(self):
        with pytest.raises(WeylError):
            fixes_sq_3cycle(VECS5[0], VECS5[0], T45)
        with pytest.raises(WeylError):
            fixes_sq_2_3(VECS5[0], VECS5[0], perm_from_cycles([(1, 2)], 5), S123)


class TestComponentIdentities:
    def test_12_3(self):
        for a in VECS5:
            for b in VECS5:
                got = conjugate(SignedElem(a, S123), SignedElem(b, S123))
                assert got == SignedElem(conjugation_components_12_3(a, b), S123)

    def test_2_3(self):
        s = perm_from_cycles([(1, 2, 3), (4, 5)], 5)
        w = build_witness_2_3(GroupKind("B", 5))
        for x in w.R:
            for y in w.S:
                assert conjugate(x, y) == SignedElem(conjugation_components_2_3(x.sign, y.sign), s)


class TestFamilies:
    def test_transposition_family_sets(self):
        w = build_witness_1n2_2(GroupKind("B", 5), 5, 0)
        assert [format_element(x) for x in w.R] == ["00000;(1 2)", "00000;(1 3)", "00000;(2 3)"]
        assert [format_element(x) for x in w.S] == ["11110;(1 2)", "11110;(1 3)", "11110;(2 3)"]
        assert sq(w.sigma, w.tau) != w.tau

    def test_12_3_family_sets(self):
        w = build_witness_12_3(GroupKind("B", 5))
        assert len(w.R) == len(w.S) == 4
        assert {x.sign for x in w.R} == {(0, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (0, 1, 1, 0, 0)}
        assert not fixes_sq_3cycle(w.sigma.sign, w.tau.sign, S123)

    def test_1_3_parity1_pair(self):
        w = build_witness_1_3(1)
        assert w.sigma.sign == (1, 1, 0, 1) and w.tau.sign == (1, 0, 0, 0)
        assert sq(w.sigma, w.tau) != w.tau

    def test_2_3_family_sets(self):
        w = build_witness_2_3(GroupKind("D", 5))
        assert len(w.R) == len(w.S) == 8
        assert all(sum(x.sign) % 2 == 0 for x in w.R + w.S)

    def test_four_cycle_family(self):
        w = build_witness_4_cycle()
        assert len(w.R) == len(w.S) == 6
        assert sq(element("0000", (1, 2, 3, 4)), element("0000", (1, 2, 4, 3))) == element("0000", (1, 2, 3, 4))
        orbit = brute_orbit(w.sigma, 4, "D")
        assert all(x in orbit for x in w.R + w.S)
        assert check_type_d(w, conj_rack(class_of(w.sigma, w.kind))).ok

    @pytest.mark.parametrize("check_id, w", FAMILIES, ids=FAMILY_IDS)
    def test_every_family_is_a_rack_decomposition_with_sq_moving_tau(self, check_id, w):
        ok, verdict = _rack_clauses_ok(w)
        assert ok, verdict.failed

    @pytest.mark.parametrize("check_id, w", FAMILIES, ids=FAMILY_IDS)
    def test_family_membership_against_orbit_oracle(self, check_id, w):
        orbit = brute_orbit(w.sigma, w.kind.n, w.kind.kind)
        inside = [x in orbit for x in w.R + w.S]
        _, verdict = _rack_clauses_ok(w)
        # check_type_d's membership clause agrees with the matrix orbit oracle
        assert verdict.clauses["membership"] == all(inside)

    def test_printed_families_mostly_span_two_classes(self):
        # the printed sets mix sign patterns of both sign parities on the moved points
        counts = {}
        for check_id, w in printed_families((4, 5, 6), ("B", "D")):
            counts[check_id] = len({class_of(x, w.kind).rep for x in w.R + w.S})
        assert counts["family(4)/D4"] == 1
        assert counts["family(1^2,2)/B4/parity1"] == 1
        assert set(counts.values()) == {1, 2}

    @pytest.mark.parametrize(
        "build",
        [
            lambda: build_witness_1n2_2(GroupKind("D", 5), 5, 1),
            lambda: build_witness_12_3(GroupKind("D", 5), 1),
            lambda: build_witness_2_3(GroupKind("D", 5), 1),
            lambda: build_witness_1_3(1, GroupKind("D", 4)),
            lambda: build_witness_1n2_2(GroupKind("B", 3), 3, 0),
        ],
    )
    def test_infeasible_requests(self, build):
        with pytest.raises(WeylError):
            build()


class TestClassify:
    def test_sigma_trivial(self):
        c = class_of(element("10000"), GroupKind("B", 5))
        assert classify_class(c).verdict == "sigma-trivial"

    def test_rank_too_small(self):
        with pytest.raises(WeylError):
            classify_class(class_of(element("000", (1, 2)), GroupKind("B", 3)))

    def test_out_of_scope_at_rank_four(self):
        c = class_of(element("0000", (1, 2, 3, 4)), GroupKind("B", 4))
        assert classify_class(c).verdict == "out-of-paper-scope"

    def test_certified_five_cycle(self):
        c = class_of(element("00000", (1, 2, 3, 4, 5)), GroupKind("B", 5))
        result = classify_class(c)
        assert result.certified
        assert check_type_d(result.witness, conj_rack(c)).ok
        doc = result.to_json()
        assert doc["nichols"] == CITE_NICHOLS
        assert doc["witness"]["checks"]["membership"]

    def test_four_cycle_d4_certified_by_constructor(self):
        c = class_of(element("0000", (1, 2, 3, 4)), GroupKind("D", 4))
        result = classify_class(c)
        assert result.certified and result.constructor == "build_witness_4_cycle"
        assert not result.constructor_failures

    def test_constructor_failure_is_reported(self):
        c = class_of(element("00000", (1, 2, 3)), GroupKind("B", 5))
        result = classify_class(c)
        assert result.constructor == "build_witness_12_3"
        assert result.constructor_failures == ("membership",)

    def test_deterministic(self):
        c = class_of(element("00000", (1, 2), (3, 4)), GroupKind("B", 5))
        assert classify_class(c).to_json() == classify_class(c).to_json()

    def test_transport_conjugates_every_element(self):
        w = build_witness_4_cycle()
        c = class_of(w.sigma, w.kind)
        moved = transport(w, c)
        assert moved.class_rep == c.rep
        assert set(moved.R) | set(moved.S) <= set(c.elements)
        assert check_type_d(moved, conj_rack(c)).ok
