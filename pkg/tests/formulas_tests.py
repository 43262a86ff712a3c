import unittest

from extremalgraph.extremal.formulas import ExtremalResult, Winner, case4_f, case_bound, case_of, erdos_gallai_edges, \
    ex_edges, g_edges, gks_crossover, turan_edges
from extremalgraph.exceptions.graph_errors import InvalidParameterError

CONCURRENTTEST = False
try:
    from concurrencytest import ConcurrentTestSuite, fork_for_tests
    CONCURRENTTEST = True
except ImportError:
    pass


def binom2(x):
    return x * (x - 1) // 2


class TestFormulas(unittest.TestCase):

    # TURAN NUMBERS

    def test_turan_edges_values(self):
        self.assertEqual(turan_edges(7, 3), 16)
        self.assertEqual(turan_edges(5, 2), 6)
        self.assertEqual(turan_edges(9, 3), 27)
        self.assertEqual(turan_edges(4, 5), 6)
        self.assertEqual(turan_edges(0, 1), 0)
        self.assertEqual(turan_edges(6, 1), 0)

    def test_turan_edges_raise_InvalidParameterError(self):
        with self.assertRaises(InvalidParameterError):
            turan_edges(4, 0)
        with self.assertRaises(InvalidParameterError):
            turan_edges(-1, 2)

    def test_turan_edges_raise_TypeError(self):
        with self.assertRaises(TypeError):
            turan_edges(4.0, 2)

    def test_turan_edges_large_values(self):
        n = 2 ** 31
        self.assertEqual(turan_edges(n, 2), (n // 2) ** 2)
        self.assertLess(turan_edges(n, n), 2 ** 63)

    # G(n, k, s)

    def test_g_edges_values(self):
        self.assertEqual(g_edges(7, 2, 2), 10)
        self.assertEqual(g_edges(9, 3, 3), 20)
        self.assertEqual(g_edges(12, 3, 4), 36)
        self.assertEqual(g_edges(7, 2, 3), 12)

    def test_g_edges_raise_InvalidParameterError(self):
        with self.assertRaises(InvalidParameterError):
            g_edges(3, 2, 4)
        with self.assertRaises(InvalidParameterError):
            g_edges(5, 1, 1)

    def test_g_edges_k_1_s_0(self):
        self.assertEqual(g_edges(5, 1, 0), 0)

    # MAXIMUM NUMBER OF EDGES

    def test_ex_edges_named_cells(self):
        self.assertEqual(ex_edges(7, 2, 2).value, 10)
        self.assertEqual(ex_edges(6, 2, 2).value, 8)
        self.assertEqual(ex_edges(5, 2, 2).value, 6)
        self.assertEqual(ex_edges(7, 3, 3).value, 16)
        self.assertEqual(ex_edges(7, 4, 3).value, 18)
        self.assertEqual(ex_edges(20, 3, 5).value, 81)
        self.assertEqual(ex_edges(12, 3, 4).value, 36)

    def test_ex_edges_winners(self):
        self.assertEqual(ex_edges(7, 2, 2).winner, Winner.GKS)
        self.assertEqual(ex_edges(7, 4, 3).winner, Winner.SMALL_N)
        self.assertEqual(ex_edges(8, 7, 3).winner, Winner.TURAN)

    def test_ex_edges_branches(self):
        result = ex_edges(6, 3, 2)
        self.assertEqual((result.turan_branch, result.gks_branch), (8, 9))
        result = ex_edges(6, 2, 2)
        self.assertEqual((result.turan_branch, result.gks_branch), (6, 8))

    def test_ex_edges_tie(self):
        # t(7, 4) = 18 = t(3, 3) + 3 * 5
        result = ex_edges(8, 4, 3)
        self.assertEqual((result.turan_branch, result.gks_branch, result.value), (18, 18, 18))
        self.assertEqual(result.winner, Winner.TIE)

    def test_ex_edges_tie_winner(self):
        for n in range(1, 30):
            for k in range(2, 8):
                for s in range(0, n // 2 + 1):
                    result = ex_edges(n, k, s)
                    if result.winner == Winner.TIE:
                        self.assertEqual(result.turan_branch, result.gks_branch)
                        self.assertEqual(result.value, result.gks_branch)

    def test_ex_edges_small_n(self):
        result = ex_edges(7, 4, 3)
        self.assertEqual(result, ExtremalResult(7, 4, 3, 18, None, 18, Winner.SMALL_N))
        self.assertIsNone(result.to_dict()['gks_branch'])

    def test_ex_edges_to_dict_keys(self):
        self.assertEqual(list(ex_edges(7, 2, 2).to_dict()),
                         ['n', 'k', 's', 'turan_branch', 'gks_branch', 'value', 'winner'])
        self.assertEqual(ex_edges(7, 2, 2).to_dict()['winner'], 'GKS')

    def test_ex_edges_k_1_has_no_edge(self):
        for n in range(0, 10):
            for s in range(0, 6):
                self.assertEqual(ex_edges(n, 1, s).value, 0)

    def test_ex_edges_s_0_has_no_edge(self):
        for n in range(0, 10):
            for k in range(1, 6):
                self.assertEqual(ex_edges(n, k, 0).value, 0)

    def test_ex_edges_raise_InvalidParameterError(self):
        with self.assertRaises(InvalidParameterError):
            ex_edges(5, 0, 1)
        with self.assertRaises(InvalidParameterError):
            ex_edges(5, 2, -1)

    def test_ex_edges_is_nondecreasing(self):
        for n in range(1, 25):
            for k in range(1, 10):
                for s in range(0, 13):
                    value = ex_edges(n, k, s).value
                    self.assertLessEqual(value, ex_edges(n, k + 1, s).value)
                    self.assertLessEqual(value, ex_edges(n, k, s + 1).value)
                    self.assertLessEqual(value, ex_edges(n + 1, k, s).value)

    # CLASSICAL SPECIALIZATIONS

    def test_erdos_gallai_recovered_for_large_k(self):
        for n in range(1, 101):
            for s in range(0, n // 2 + 1):
                expected = max(binom2(2 * s + 1), binom2(s) + s * (n - s)) if n >= 2 * s + 1 else binom2(n)
                self.assertEqual(ex_edges(n, 2 * s + 1, s).value, expected)
                self.assertEqual(erdos_gallai_edges(n, s), expected)

    def test_turan_recovered_for_large_s(self):
        for n in range(1, 101):
            for k in range(1, 12):
                self.assertEqual(ex_edges(n, k, n // 2).value, turan_edges(n, k))

    # PROOF CASES

    def test_case4_f_values(self):
        # f(b) = t(2s - b + 1, k) + b(n - 2s + b - 1)
        self.assertEqual(case4_f(20, 3, 5, 0), turan_edges(11, 3))
        self.assertEqual(case4_f(20, 3, 5, 5), turan_edges(6, 3) + 5 * 14)

    def test_case4_f_raise_InvalidParameterError(self):
        with self.assertRaises(InvalidParameterError):
            case4_f(10, 3, 5, 1)
        with self.assertRaises(InvalidParameterError):
            case4_f(20, 3, 5, 6)

    def test_case4_f_is_convex(self):
        for k in range(2, 11):
            for s in range(0, 31):
                for n in range(2 * s + 1, 101):
                    f = [case4_f(n, k, s, b) for b in range(s + 1)]
                    for b in range(1, s):
                        self.assertGreaterEqual(f[b - 1] - 2 * f[b] + f[b + 1], 0)

    def test_case_of(self):
        # s = 4, k = 3, m = 2: Case 3 iff 9 - b <= 6
        self.assertEqual(case_of(12, 3, 4, 0), 1)
        self.assertEqual(case_of(12, 3, 4, 1), 4)
        self.assertEqual(case_of(12, 3, 4, 2), 4)
        self.assertEqual(case_of(12, 3, 4, 3), 3)
        self.assertEqual(case_of(12, 3, 4, 4), 2)
        with self.assertRaises(InvalidParameterError):
            case_of(12, 1, 4, 0)

    def test_case_bound_cases_2_and_3_give_g(self):
        for k in range(2, 8):
            for s in range(0, 15):
                m = s // (k - 1)
                for n in range(2 * s + 1, 45):
                    self.assertEqual(turan_edges(s + m, k) + s * (n - s - m), g_edges(n, k, s))

    def test_case_bound_maximum_is_ex_edges(self):
        for k in range(2, 8):
            for s in range(0, 12):
                for n in range(2 * s + 1, 40):
                    best = max(case_bound(n, k, s, b) for b in range(s + 1))
                    self.assertEqual(best, ex_edges(n, k, s).value)

    # CROSSOVER

    def test_gks_crossover_is_first_gks_win(self):
        for k in range(2, 7):
            for s in range(1, 10):
                n0 = gks_crossover(k, s)
                self.assertGreaterEqual(n0, 2 * s + 2)
                self.assertGreater(g_edges(n0, k, s), turan_edges(2 * s + 1, k))
                for n in range(2 * s + 2, n0):
                    self.assertLessEqual(g_edges(n, k, s), turan_edges(2 * s + 1, k))

    def test_gks_crossover_undefined(self):
        self.assertIsNone(gks_crossover(3, 0))
        self.assertIsNone(gks_crossover(1, 4))


if __name__ == '__main__':

    if CONCURRENTTEST:
        suite = unittest.TestLoader().loadTestsFromTestCase(TestFormulas)
        runner = unittest.TextTestRunner()
        concurrent_suite = ConcurrentTestSuite(suite, fork_for_tests(50))
        runner.run(concurrent_suite)
    else:
        unittest.main()
