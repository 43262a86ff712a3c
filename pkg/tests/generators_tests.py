import unittest

from extremalgraph.graph.generators import balanced_sizes, complete_graph, complete_multipartite, cycle_graph, \
    fixture, k4_minus_edge, make_gks, make_turan, pad_graph, partition_of, path_graph, petersen_graph, random_graph, \
    star_graph
from extremalgraph.extremal.formulas import g_edges, turan_edges
from extremalgraph.invariants.clique import clique_number
from extremalgraph.invariants.matching import matching_number
from extremalgraph.exceptions.graph_errors import InvalidParameterError

CONCURRENTTEST = False
try:
    from concurrencytest import ConcurrentTestSuite, fork_for_tests
    CONCURRENTTEST = True
except ImportError:
    pass


class TestGenerators(unittest.TestCase):

    # TURAN

    def test_turan_7_3(self):
        g, p = make_turan(7, 3)
        self.assertEqual(p.sizes, (3, 2, 2))
        self.assertEqual(g.m, 16)
        self.assertEqual(p.classes[0], (0, 1, 2))

    def test_turan_with_more_classes_than_vertices_is_complete(self):
        g, p = make_turan(4, 5)
        self.assertEqual(g.m, 6)
        self.assertEqual(p.sizes, (1, 1, 1, 1, 0))

    def test_turan_one_class_is_empty(self):
        g, _ = make_turan(5, 1)
        self.assertEqual(g.m, 0)

    def test_turan_edge_count_matches_formula(self):
        for n in range(0, 61):
            for k in range(1, n + 3):
                self.assertEqual(make_turan(n, k)[0].m, turan_edges(n, k))

    def test_turan_clique_number(self):
        for n in range(0, 21):
            for k in range(1, n + 3):
                self.assertEqual(clique_number(make_turan(n, k)[0])[0], min(n, k))

    def test_turan_classes_are_independent(self):
        g, p = make_turan(10, 4)
        for c in p.classes:
            for u in c:
                for v in c:
                    self.assertFalse(u != v and g.adjacent(u, v))

    def test_turan_raise_InvalidParameterError(self):
        with self.assertRaises(InvalidParameterError):
            make_turan(5, 0)
        with self.assertRaises(InvalidParameterError):
            make_turan(-1, 2)

    def test_balanced_sizes(self):
        self.assertEqual(balanced_sizes(7, 3), [3, 2, 2])
        self.assertEqual(balanced_sizes(2, 4), [1, 1, 0, 0])

    # GKS

    def test_gks_7_2_2_is_K_2_5(self):
        g, p = make_gks(7, 2, 2)
        self.assertEqual(p.sizes, (2, 5))
        self.assertEqual(g.m, 10)

    def test_gks_9_3_2(self):
        g, p = make_gks(9, 3, 2)
        self.assertEqual(p.sizes, (1, 1, 7))
        self.assertEqual(g.m, 15)

    def test_gks_edge_count_matches_formula(self):
        for n in range(0, 12):
            for k in range(2, 6):
                for s in range(0, n + 1):
                    self.assertEqual(make_gks(n, k, s)[0].m, g_edges(n, k, s))

    def test_gks_matching_and_clique_numbers(self):
        for n in range(1, 41):
            for k in range(2, 6):
                for s in range(0, n // 2 + 1):
                    g = make_gks(n, k, s)[0]
                    self.assertEqual(matching_number(g)[0], s)
                    self.assertEqual(clique_number(g)[0], min(k, s + 1))

    def test_constructions_are_admissible(self):
        for n in range(1, 41):
            for k in range(1, 6):
                for s in range(0, n // 2 + 1):
                    turan = pad_graph(make_turan(min(n, 2 * s + 1), k)[0], n)
                    self.assertLessEqual(clique_number(turan)[0], k)
                    self.assertLessEqual(matching_number(turan)[0], s)
                    if k > 1 or s == 0:
                        gks = make_gks(n, k, s)[0]
                        self.assertLessEqual(clique_number(gks)[0], k)
                        self.assertLessEqual(matching_number(gks)[0], s)

    def test_gks_raise_InvalidParameterError(self):
        with self.assertRaises(InvalidParameterError):
            make_gks(3, 1, 1)
        with self.assertRaises(InvalidParameterError):
            make_gks(3, 2, 4)

    def test_gks_k_1_s_0_is_empty(self):
        g, p = make_gks(4, 1, 0)
        self.assertEqual(g.m, 0)
        self.assertEqual(p.sizes, (4,))

    def test_complete_multipartite(self):
        g, p = complete_multipartite([2, 0, 1])
        self.assertEqual(g.n, 3)
        self.assertEqual(g.m, 2)
        self.assertEqual(p.classes, ((0, 1), (), (2,)))

    # OTHER GENERATORS

    def test_pad_graph(self):
        g = pad_graph(complete_graph(3), 5)
        self.assertEqual(g.n, 5)
        self.assertEqual(g.m, 3)
        self.assertEqual(g.degree(4), 0)
        with self.assertRaises(InvalidParameterError):
            pad_graph(complete_graph(3), 2)

    def test_random_graph_is_reproducible(self):
        self.assertEqual(random_graph(12, 0.4, 7), random_graph(12, 0.4, 7))

    def test_random_graph_golden(self):
        g = random_graph(5, 0.5, 42)
        self.assertEqual(list(g.edges), [(0, 2), (0, 3), (0, 4), (2, 3), (2, 4), (3, 4)])

    def test_random_graph_extreme_probabilities(self):
        self.assertEqual(random_graph(6, 0, 1).m, 0)
        self.assertEqual(random_graph(6, 1, 1).m, 15)
        with self.assertRaises(InvalidParameterError):
            random_graph(6, 1.5, 1)

    def test_fixtures(self):
        self.assertEqual(fixture('K4').m, 6)
        self.assertEqual(fixture('c5').m, 5)
        self.assertEqual(fixture('P3').m, 2)
        self.assertEqual(fixture('K4e'), k4_minus_edge())
        self.assertEqual(fixture('Petersen'), petersen_graph())
        with self.assertRaises(InvalidParameterError):
            fixture('Q3')

    def test_named_graphs(self):
        self.assertEqual(cycle_graph(6).m, 6)
        self.assertEqual(list(cycle_graph(4).edges), [(0, 1), (0, 3), (1, 2), (2, 3)])
        self.assertEqual(list(path_graph(4).edges), [(0, 1), (1, 2), (2, 3)])
        self.assertEqual([complete_graph(n).m for n in range(6)], [0, 0, 1, 3, 6, 10])
        self.assertEqual(path_graph(1).m, 0)
        self.assertEqual(star_graph(3).degree(0), 3)
        self.assertEqual(petersen_graph().m, 15)
        self.assertTrue(all(petersen_graph().degree(v) == 3 for v in range(10)))
        self.assertEqual(k4_minus_edge().m, 5)
        with self.assertRaises(InvalidParameterError):
            cycle_graph(2)

    # PARTITIONS OF NON-ADJACENCY

    def test_partition_of_multipartite_graph(self):
        g, p = make_turan(7, 3)
        self.assertEqual(partition_of(g, range(7)), p)

    def test_partition_of_non_transitive_set(self):
        self.assertIsNone(partition_of(path_graph(4), range(4)))


if __name__ == '__main__':

    if CONCURRENTTEST:
        suite = unittest.TestLoader().loadTestsFromTestCase(TestGenerators)
        runner = unittest.TextTestRunner()
        concurrent_suite = ConcurrentTestSuite(suite, fork_for_tests(50))
        runner.run(concurrent_suite)
    else:
        unittest.main()
