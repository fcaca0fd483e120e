"""Python smoke tests for the hyperboot extension module."""

from fractions import Fraction

import hyperboot as hb


def test_rank_round_trip():
    assert hb.binom(7, 3) == 35
    assert hb.rank_jset([2, 4], 5) == 4
    assert hb.unrank_jset(4, 5, 2) == [2, 4]
    for rank in range(hb.binom(6, 3)):
        assert hb.rank_jset(hb.unrank_jset(rank, 6, 3), 6) == rank


def test_process_and_percolation():
    result = hb.run_process([[1, 2]], n=6, k=3, j=2, r=1)
    assert result["percolated"]
    assert not result["truncated"]
    assert len(result["final"]) == hb.binom(6, 2)

    z2, centers = hb.make_z_config(2, 6)
    assert z2 == [[1, 2], [3, 4]]
    assert centers == [1, 3]
    assert hb.is_contagious(z2, n=6, k=3, j=2, r=2)
    assert not hb.is_contagious([[1, 2], [1, 3]], n=6, k=3, j=2, r=2)


def test_infection_routes_agree():
    infected = [[1, 2], [1, 3]]
    assert not hb.infection_check([2, 3], infected, n=5, k=3, r=2)
    assert not hb.brute_force_infection_oracle([2, 3], infected, n=5, k=3, r=2)
    assert hb.ext_set([2, 3], infected, n=5, k=3) == [1]


def test_explicit_hypergraph():
    edges = [[1, 2, 3]]
    assert hb.infection_check([1, 3], [[1, 2]], n=5, k=3, r=1, edges=edges)
    assert not hb.infection_check([1, 4], [[1, 2]], n=5, k=3, r=1, edges=edges)


def test_constructions_and_jokers():
    star = hb.make_star(m=1, j=2, size=3, n=4)
    assert star == [[1, 2], [1, 3], [1, 4]]
    assert hb.star_of([1], n=4, j=2) == star
    assert hb.is_joker([1], star, n=4, j=2)

    grown = hb.augment([[1, 2], [1, 3]], v=7, n=7, j=2)
    assert grown == [[1, 2, 7], [1, 3, 7]]

    members, masters = hb.make_recursive_tight(4, 3, 12)
    assert len(members) == 7
    assert masters == [1, 2, 3]
    assert len(hb.make_clique_config(3, 3, 8)) == 10


def test_bounds():
    assert hb.exact_small_j(4, 2, 3) == 3
    assert [hb.exact_32(r) for r in range(1, 6)] == [1, 2, 4, 6, 9]
    assert hb.recursive_upper(4, 3) == 7
    assert hb.clique_upper(3, 3) == 10
    assert hb.closed_form_upper(4, 3) == Fraction(7)
    for k in (4, 5, 6):
        for r in range(1, 11):
            assert hb.closed_form_upper(k, r) == hb.recursive_upper(k, r)
    report = hb.best_known(4, 3, 3)
    assert report["lower"] == 3 and report["upper"] == 7 and report["exact"] is None


def test_search_and_witness():
    cert = hb.min_contagious(6, 3, 2, 2)
    assert cert["verdict"] == "found"
    assert cert["size"] == 2
    assert hb.is_contagious(cert["witness"], n=6, k=3, j=2, r=2)

    assert len(hb.enumerate_canonical_configs(4, 2, 2)) == 2

    witness = hb.disjoint_witness([[1, 2], [3, 4]], n=6, r=2)
    assert witness["pairs"][0] == [1, 3]
    assert witness["ext_counts"][0] >= 2


def test_suites():
    report = hb.run_suite("tight-equivalence", seed=3, instances=5)
    assert report["passed"]


def main():
    tests = [fn for name, fn in sorted(globals().items()) if name.startswith("test_")]
    for fn in tests:
        fn()
        print(f"ok {fn.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
