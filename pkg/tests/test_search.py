"""Exhaustive enumeration: brute-force equality, determinism, pruning."""

import pytest

from crcforge.hamming import Hyperface, Space, hyperface_vertices
from crcforge.search import (SearchConstraints, SearchSummary, enumerate_crcs,
                             resolve_workers)
from crcforge.verifier import CrcCertificate, check_crc

from helpers import all_vertex_subsets, brute_crc1_params, code_of


def brute_census(sp):
    """(codes, parameter triples) of every rho=1 CRC, straight from the definition."""
    found = []
    params = set()
    for words in all_vertex_subsets(sp):
        res = brute_crc1_params(sp, words)
        if res is None:
            continue
        gamma, beta = res
        idx = (gamma + beta) // sp.q if (gamma + beta) % sp.q == 0 else None
        found.append(frozenset(words))
        params.add((gamma, beta, idx))
    return found, params


def test_search_equals_brute_force_h32():
    sp = Space(3, 2)
    brute_codes, brute_params = brute_census(sp)
    collected = []
    summary = enumerate_crcs(SearchConstraints(3, 2), sink=collected.append, workers=1)
    assert summary.codes_found == len(brute_codes) == 22
    assert summary.parameter_sets == frozenset(brute_params)
    assert {frozenset(c.vertices()) for c in collected} == set(brute_codes)


def test_search_equals_brute_force_h23():
    sp = Space(2, 3)
    brute_codes, brute_params = brute_census(sp)
    summary = enumerate_crcs(SearchConstraints(2, 3), workers=1)
    assert summary.codes_found == len(brute_codes) == 24
    assert summary.parameter_sets == frozenset(brute_params)


def test_search_equals_brute_force_h22():
    sp = Space(2, 2)
    brute_codes, brute_params = brute_census(sp)
    summary = enumerate_crcs(SearchConstraints(2, 2), workers=1)
    assert summary.codes_found == len(brute_codes) == 6
    assert summary.parameter_sets == frozenset(brute_params) == frozenset(
        {(1, 1, 1), (2, 2, 2)})


def test_summary_independent_of_worker_count():
    base = None
    for w in (1, 2, 4):
        s = enumerate_crcs(SearchConstraints(3, 2), workers=w)
        if base is None:
            base = s
        assert s == base
    assert base.nodes == 56  # node count is part of the deterministic contract


def test_collected_codes_independent_of_worker_count():
    runs = []
    for w in (1, 2, 4):
        collected = []
        enumerate_crcs(SearchConstraints(2, 3), sink=collected.append, workers=w)
        runs.append([tuple(int(i) for i in c.indices()) for c in collected])
    assert runs[0] == runs[1] == runs[2]


def test_repeat_runs_identical():
    a = enumerate_crcs(SearchConstraints(2, 3, gamma=2), workers=2)
    b = enumerate_crcs(SearchConstraints(2, 3, gamma=2), workers=2)
    assert a == b


def test_fix_first_codeword_halves_enumeration():
    full = enumerate_crcs(SearchConstraints(3, 2), workers=1)
    fixed = enumerate_crcs(SearchConstraints(3, 2, fix_first_codeword=True), workers=1)
    # complements pair up the codes; exactly one of each pair contains vertex 0
    assert fixed.codes_found * 2 == full.codes_found
    assert fixed.parameter_sets == full.parameter_sets
    assert fixed.nodes < full.nodes

    collected = []
    enumerate_crcs(SearchConstraints(3, 2, fix_first_codeword=True),
                   sink=collected.append, workers=1)
    assert all((0, 0, 0) in c for c in collected)


def test_targeted_search_perfect_pairs():
    collected = []
    summary = enumerate_crcs(SearchConstraints(3, 2, gamma=1, eigenvalue_index=2),
                             sink=collected.append, workers=1)
    assert summary.codes_found == 4
    assert summary.parameter_sets == frozenset({(1, 3, 2)})
    # the four antipodal pairs of the cube
    sp = Space(3, 2)
    pairs = {frozenset({v, tuple(1 - x for x in v)}) for v in sp.vertices()}
    assert {frozenset(c.vertices()) for c in collected} == pairs


def test_targeted_search_hyperfaces():
    collected = []
    summary = enumerate_crcs(SearchConstraints(3, 3, gamma=1, eigenvalue_index=1),
                             sink=collected.append, workers=2)
    assert summary.codes_found == 9
    assert summary.parameter_sets == frozenset({(1, 2, 1)})
    sp = Space(3, 3)
    faces = {frozenset(hyperface_vertices(sp, Hyperface(j, s)))
             for j in (1, 2, 3) for s in range(3)}
    assert {frozenset(c.vertices()) for c in collected} == faces


def test_search_verifies_every_emission():
    collected = []
    enumerate_crcs(SearchConstraints(3, 3, gamma=2, eigenvalue_index=2),
                   sink=collected.append, workers=2)
    assert len(collected) == 90
    for c in collected[:10]:
        cert = check_crc(c)
        assert isinstance(cert, CrcCertificate)
        assert (cert.gamma, cert.eigenvalue_index) == (2, 2)


def test_count_only_skips_collection():
    calls = []
    summary = enumerate_crcs(SearchConstraints(3, 2), sink=calls.append,
                             workers=1, count_only=True)
    assert summary.codes_found == 22
    assert calls == []


def test_infeasible_size_prunes_to_nothing():
    # |C| = q^n * gamma/(q*i) = 9/6 is not an integer: zero nodes explored
    s = enumerate_crcs(SearchConstraints(2, 3, gamma=1, eigenvalue_index=2), workers=1)
    assert s.codes_found == 0
    assert s.nodes == 0


def test_constraint_validation():
    with pytest.raises(ValueError):
        SearchConstraints(3, 5)  # 125 vertices exceed the enumeration limit
    with pytest.raises(ValueError):
        SearchConstraints(3, 2, gamma=0)
    with pytest.raises(ValueError):
        SearchConstraints(3, 2, gamma=4)  # valency is 3
    with pytest.raises(ValueError):
        SearchConstraints(3, 2, eigenvalue_index=4)
    with pytest.raises(ValueError):
        SearchConstraints(3, 2, gamma=3, eigenvalue_index=2)  # gamma > beta


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv("CRC_FORGE_THREADS", raising=False)
    assert resolve_workers(3) == 3
    assert resolve_workers(0) == 1
    assert 1 <= resolve_workers(None) <= 4
    monkeypatch.setenv("CRC_FORGE_THREADS", "2")
    assert resolve_workers(None) == 2
    assert resolve_workers(5) == 5  # explicit argument wins
    monkeypatch.setenv("CRC_FORGE_THREADS", "junk")
    assert 1 <= resolve_workers(None) <= 4


def test_gamma_only_constraint():
    sp = Space(2, 3)
    brute = [ws for ws in all_vertex_subsets(sp)
             if (brute_crc1_params(sp, ws) or (None,))[0] == 2]
    summary = enumerate_crcs(SearchConstraints(2, 3, gamma=2), workers=1)
    assert summary.codes_found == len(brute)
    assert all(p[0] == 2 for p in summary.parameter_sets)
