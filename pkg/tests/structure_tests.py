import random
import unittest

from extremalgraph.graph.graph import Graph
from extremalgraph.graph.generators import complete_graph, cycle_graph, make_gks, path_graph, random_graph
from extremalgraph.invariants.matching import matching_number
from extremalgraph.invariants.structure import GallaiEdmonds, TutteBergeWitness, gallai_edmonds, \
    gallai_edmonds_witness, is_witness_for, tutte_berge_max_deficiency, witness_from_set
from extremalgraph.exceptions.graph_errors import CapacityError

CONCURRENTTEST = False
try:
    from concurrencytest import ConcurrentTestSuite, fork_for_tests
    CONCURRENTTEST = True
except ImportError:
    pass


class TestStructure(unittest.TestCase):

    def setUp(self):
        rng = random.Random(12)
        self.corpus = [random_graph(rng.randint(1, 12), rng.choice([0.1, 0.2, 0.3, 0.5, 0.7]), rng.getrandbits(32))
                       for _ in range(200)]

    # TUTTE-BERGE WITNESSES

    def test_witness_of_gks_small_side(self):
        g = make_gks(7, 2, 2)[0]
        w = tutte_berge_max_deficiency(g)
        self.assertEqual(w.B, (0, 1))
        self.assertEqual(w.odd_components, (1, 1, 1, 1, 1))
        self.assertEqual(w.even_components, ())
        self.assertEqual(w.deficiency, 3)
        self.assertEqual(w.bound, 2)

    def test_witness_of_c5_is_empty_set(self):
        w = tutte_berge_max_deficiency(cycle_graph(5))
        self.assertEqual(w.B, ())
        self.assertEqual(w.bound, 2)

    def test_witness_of_k4_counts_even_component(self):
        w = tutte_berge_max_deficiency(complete_graph(4))
        self.assertEqual(w.B, ())
        self.assertEqual(w.even_components, (4,))
        self.assertEqual(w.bound, 2)

    def test_witness_of_empty_graph(self):
        w = tutte_berge_max_deficiency(Graph(0))
        self.assertEqual(w, TutteBergeWitness((), (), ()))
        self.assertEqual(w.bound, 0)

    def test_tutte_berge_identity(self):
        for g in self.corpus:
            nu = matching_number(g)[0]
            w = tutte_berge_max_deficiency(g)
            self.assertEqual(nu, (g.n - w.deficiency) // 2)
            self.assertEqual(w.bound, nu)

    def test_any_set_gives_an_upper_bound(self):
        rng = random.Random(3)
        for g in self.corpus:
            vertices = [v for v in g if rng.random() < 0.3]
            self.assertGreaterEqual(witness_from_set(g, vertices).bound, matching_number(g)[0])

    def test_witness_to_dict(self):
        d = tutte_berge_max_deficiency(make_gks(7, 2, 2)[0]).to_dict()
        self.assertEqual(d['B'], [0, 1])
        self.assertEqual(d['bound'], 2)

    def test_raise_CapacityError(self):
        with self.assertRaises(CapacityError):
            tutte_berge_max_deficiency(Graph(17))
        with self.assertRaises(CapacityError):
            tutte_berge_max_deficiency(Graph(5), max_vertices=4)

    def test_is_witness_for(self):
        g = path_graph(5)
        w = witness_from_set(g, [1, 3])
        self.assertTrue(is_witness_for(g, w))
        self.assertFalse(is_witness_for(g.with_edge(2, 4), w))
        self.assertFalse(is_witness_for(Graph(2), w))

    # GALLAI-EDMONDS

    def test_gallai_edmonds_of_gks(self):
        self.assertEqual(gallai_edmonds(make_gks(7, 2, 2)[0]), GallaiEdmonds((2, 3, 4, 5, 6), (0, 1), ()))

    def test_gallai_edmonds_of_perfect_matching(self):
        self.assertEqual(gallai_edmonds(path_graph(4)), GallaiEdmonds((), (), (0, 1, 2, 3)))

    def test_gallai_edmonds_definition(self):
        for g in self.corpus:
            nu = matching_number(g)[0]
            partition = gallai_edmonds(g)
            for v in g:
                lost = matching_number(g.without_vertices([v])[0])[0] < nu
                self.assertEqual(v not in partition.D, lost)
            self.assertEqual(sorted(partition.D + partition.A + partition.C), list(range(g.n)))

    def test_gallai_edmonds_set_is_optimal(self):
        for g in self.corpus:
            w = gallai_edmonds_witness(g)
            self.assertEqual(w.B, gallai_edmonds(g).A)
            self.assertEqual(w.bound, matching_number(g)[0])
            self.assertEqual(w.deficiency, tutte_berge_max_deficiency(g).deficiency)

    def test_gallai_edmonds_raise_CapacityError(self):
        with self.assertRaises(CapacityError):
            gallai_edmonds(Graph(6), max_vertices=5)


if __name__ == '__main__':

    if CONCURRENTTEST:
        suite = unittest.TestLoader().loadTestsFromTestCase(TestStructure)
        runner = unittest.TextTestRunner()
        concurrent_suite = ConcurrentTestSuite(suite, fork_for_tests(50))
        runner.run(concurrent_suite)
    else:
        unittest.main()
