"""Optimal collection states, lemma audits, and remainder structure."""

import pytest

from chordpack.errors import (
    NoCollectionError,
    NotSpanningError,
    PreconditionError,
    TooLargeError,
)
from chordpack.extremal import gen_g1, gen_g2
from chordpack.prooflab import (
    ALL_LEMMAS,
    K22,
    K23,
    audit_all,
    audit_lemma,
    offpath_census,
    optimal_collection,
    remainder_profile,
)

from conftest import complete, cycle_graph


@pytest.fixture(scope="module")
def g2_state():
    return optimal_collection(gen_g2(2), 2)


@pytest.fixture(scope="module")
def g1_state():
    return optimal_collection(gen_g1(10, 2), 2)


class TestOptimalCollection:
    def test_g2_metric(self, g2_state):
        # one 4-cycle with a chord; remainder K_{2,3} carries a 5-path
        assert g2_state.metric == (4, 1, 5)

    def test_g1_metric(self, g1_state):
        # a spanning K_{3,3} 6-cycle with 3 chords beats any 4-vertex option
        assert g1_state.metric == (6, 3, 4)

    def test_k_below_two_rejected(self):
        with pytest.raises(PreconditionError):
            optimal_collection(gen_g2(2), 1)

    def test_no_collection_raises(self):
        with pytest.raises(NoCollectionError):
            optimal_collection(cycle_graph(8), 2)

    def test_packing_graph_rejected(self):
        # K_9 still packs 2 cycles, so no state exists for it
        with pytest.raises(PreconditionError):
            optimal_collection(complete(9), 2)

    def test_deterministic(self):
        a = optimal_collection(gen_g2(2), 2)
        b = optimal_collection(gen_g2(2), 2)
        assert a.collection == b.collection and a.metric == b.metric


class TestRemainderStructure:
    def test_g2_remainder_is_k23(self, g2_state):
        assert remainder_profile(g2_state) == K23

    def test_g1_remainder_is_k22(self, g1_state):
        assert remainder_profile(g1_state) == K22

    def test_profile_requires_spanning_path(self):
        state = optimal_collection(gen_g1(12, 2), 2)
        assert not state.path_spans_remainder
        with pytest.raises(NotSpanningError):
            remainder_profile(state)

    def test_offpath_census_g1_12(self):
        state = optimal_collection(gen_g1(12, 2), 2)
        census = offpath_census(state)
        assert census.complete_bipartite and census.separated and census.holds

    def test_offpath_rejects_spanning_state(self, g2_state):
        with pytest.raises(NotSpanningError):
            offpath_census(g2_state)


class TestAudits:
    @pytest.mark.parametrize("lemma", ALL_LEMMAS)
    def test_g2_state_clean(self, g2_state, lemma):
        report = audit_lemma(g2_state, lemma, strict=True)
        assert report.violations == []

    @pytest.mark.parametrize("lemma", ALL_LEMMAS)
    def test_g1_state_clean(self, g1_state, lemma):
        report = audit_lemma(g1_state, lemma, strict=True)
        assert report.violations == []

    def test_unknown_lemma_rejected(self, g2_state):
        with pytest.raises(PreconditionError):
            audit_lemma(g2_state, "NOPE")

    def test_audit_all_covers_every_lemma(self, g2_state):
        reports = audit_all(g2_state)
        assert [r.lemma_id for r in reports] == list(ALL_LEMMAS)

    def test_inapplicable_reports_zero_instances(self, g1_state):
        # K_{5,5} has no 6-vertex cycle with degree-3 remainder neighbours
        # feeding the uv-neighbourhood audit, so it reports inapplicable
        report = audit_lemma(g1_state, "UVNHD", strict=True)
        if not report.applicable:
            assert report.instances_checked == 0 and report.violations == []

    def test_report_json_shape(self, g2_state):
        obj = audit_lemma(g2_state, "RCEDGES").to_json_obj()
        assert set(obj) == {"lemma", "applicable", "instances_checked", "violations"}
