"""
持久性分析服务测试
"""

import unittest
from dataclasses import replace
from fractions import Fraction
from unittest.mock import patch

from src.core.engine import MultiplicationEngine
from src.core.exceptions import HorizonExhausted, NegativeMultiplier
from src.core.semigroup import SemigroupSpec
from src.services.fixture_service import FixtureService
from src.services.persistence_service import PersistenceEdge, PersistenceService, Return

POSITIVE_FIXTURES = ('fold', 'shift2', 'swap', 'cascade3')


def create_service(spec: SemigroupSpec, horizon: int = 64) -> PersistenceService:
    return PersistenceService(MultiplicationEngine(spec), horizon=horizon)


class TestPersistenceGraph(unittest.TestCase):
    """持久性关系图测试"""

    def setUp(self):
        self.fixture_service = FixtureService()

    def test_fixture_edges(self):
        """每个示例半群的边和乘子与期望一致"""
        for name in POSITIVE_FIXTURES:
            fixture = self.fixture_service.get_fixture(name)
            graph = create_service(fixture.spec).build_persistence_graph()
            self.assertEqual(graph.edge_set(), fixture.expected.edges, name)

    def test_shift2_return(self):
        """shift2 中 a·b = a³，得到 M(b, a) = 2"""
        spec = self.fixture_service.get_fixture('shift2').spec
        service = create_service(spec)
        a, b = spec.generator('a'), spec.generator('b')

        ret = service.find_return(b, a)
        self.assertEqual(ret, Return(b, a, 1, 1, 3))
        self.assertEqual(service.compute_M(ret), Fraction(2))

    def test_no_return_within_bounds(self):
        """swap 中 a^t·b^q 永远落在 ⟨b⟩"""
        spec = self.fixture_service.get_fixture('swap').spec
        service = create_service(spec)
        self.assertIsNone(service.find_return(spec.generator('b'), spec.generator('a')))

    def test_single_generator(self):
        spec = SemigroupSpec.from_products(['a'], [])
        graph = create_service(spec).build_persistence_graph()
        self.assertEqual(graph.edge_set(), {('a', 'a'): Fraction(1)})

    def test_negative_multiplier(self):
        spec = self.fixture_service.get_fixture('fold').spec
        a, b = spec.generator('a'), spec.generator('b')
        with self.assertRaises(NegativeMultiplier):
            PersistenceService.compute_M(Return(b, a, 3, 1, 2))

    def test_zero_multiplier(self):
        """ab = ba = a：b 不改变 ⟨a⟩ 中的指数"""
        spec = SemigroupSpec.from_products(['a', 'b'], [('a', 'b', 'a', 1), ('b', 'a', 'a', 1)])
        graph = create_service(spec).build_persistence_graph()
        self.assertEqual(graph.multiplier(spec.generator('b'), spec.generator('a')), Fraction(0))


class TestTrajectory(unittest.TestCase):
    """轨迹测试"""

    def setUp(self):
        self.spec = FixtureService().get_fixture('shift2').spec
        self.service = create_service(self.spec)

    def test_summary(self):
        """a·b^i = a^{2i+1}"""
        a, b = self.spec.generator('a'), self.spec.generator('b')
        record = self.service.trajectory(self.spec.element('a'), b, 4)

        summary = record.summaries[a]
        self.assertEqual((summary.i0, summary.n0, summary.r, summary.M), (1, 3, 1, Fraction(2)))
        self.assertEqual(summary.hits, (1, 2, 3, 4))
        self.assertEqual((record.period, record.periodic_from), (1, 1))
        self.assertEqual(record.step(4), self.spec.element('a', 9))

    def test_minimum_horizon(self):
        """视界 2 下 fold 的 b·a^i = a^{i+1} 两次命中 a，周期为 1"""
        spec = FixtureService().get_fixture('fold').spec
        record = create_service(spec).trajectory(spec.element('b'), spec.generator('a'), 2)

        summary = record.summaries[spec.generator('a')]
        self.assertEqual((summary.i0, summary.n0, summary.r, summary.M), (1, 2, 1, Fraction(1)))
        self.assertEqual((record.period, record.periodic_from), (1, 1))

    def test_repeated_target_without_period(self):
        """a 重复出现但尾段 a, c 没有周期：轨迹照常返回，require_period 抛出 HorizonExhausted"""
        spec = FixtureService().get_fixture('cascade3').spec
        service = create_service(spec)
        fake_steps = [spec.element('a'), spec.element('b'), spec.element('a'), spec.element('c')]
        with patch.object(service.engine, 'power_trajectory', return_value=iter(fake_steps)):
            record = service.trajectory(spec.element('a'), spec.generator('b'), 4)

        self.assertIsNone(record.period)
        self.assertEqual(record.summaries[spec.generator('a')].hits, (1, 3))
        self.assertEqual(service.verify_trajectory_structure(record), [])
        with self.assertRaises(HorizonExhausted):
            service.require_period(record)

    def test_no_repeated_target(self):
        """轨迹中没有目标出现两次时抛出 HorizonExhausted"""
        spec = FixtureService().get_fixture('cascade3').spec
        service = create_service(spec)
        fake_steps = [spec.element('a'), spec.element('b'), spec.element('c')]
        with patch.object(service.engine, 'power_trajectory', return_value=iter(fake_steps)):
            with self.assertRaises(HorizonExhausted) as context:
                service.trajectory(spec.element('a'), spec.generator('b'), 3)
        self.assertEqual(context.exception.details['horizon'], 3)

    def test_horizon_must_be_at_least_two(self):
        with self.assertRaises(ValueError):
            self.service.trajectory(self.spec.element('a'), self.spec.generator('b'), 1)
        with self.assertRaises(ValueError):
            self.service.trajectory(self.spec.element('a'), self.spec.generator('b'), 0)

    def test_zero_return_bounds(self):
        """t_max = 0 表示不搜索，而不是回退到默认边界"""
        a, b = self.spec.generator('a'), self.spec.generator('b')
        self.assertEqual(list(self.service.enumerate_returns(b, a, t_max=0)), [])
        self.assertIsNone(self.service.find_return(b, a, q_max=0))

    def test_detect_period(self):
        a, b = self.spec.generator('a'), self.spec.generator('b')
        self.assertEqual(PersistenceService._detect_period([a] * 4), (1, 1))
        self.assertEqual(PersistenceService._detect_period([b, a] * 4), (2, 1))
        self.assertEqual(PersistenceService._detect_period([b, b, b, a, a, a, a, a]), (1, 4))
        self.assertEqual(PersistenceService._detect_period([a, b]), (None, None))
        self.assertEqual(PersistenceService._detect_period([a, a]), (1, 1))
        self.assertEqual(PersistenceService._detect_period([b, a, a]), (1, 2))
        self.assertEqual(PersistenceService._detect_period([a]), (None, None))


class TestPersistenceAnalysis(unittest.TestCase):
    """完整持久性分析测试"""

    def setUp(self):
        self.fixture_service = FixtureService()

    def test_fixtures_pass_all_checks(self):
        for name in POSITIVE_FIXTURES:
            analysis = create_service(self.fixture_service.get_fixture(name).spec).analyze()
            self.assertTrue(analysis.ok, f"{name}: {[i.message for i in analysis.all_issues()]}")

    def test_samples_include_generator_products(self):
        spec = self.fixture_service.get_fixture('shift2').spec
        samples = create_service(spec).sample_elements()
        self.assertEqual(samples, [spec.element('a'), spec.element('a', 2), spec.element('a', 3),
                                   spec.element('b'), spec.element('b', 2)])

    def test_wrong_multiplier_detected(self):
        """篡改 M(b, a) 后，乘子一致性和 x 无关性检查都会报告"""
        spec = self.fixture_service.get_fixture('fold').spec
        service = create_service(spec)
        graph = service.build_persistence_graph()
        key = (spec.generator('b'), spec.generator('a'))
        graph.edges[key] = replace(graph.edges[key], M=Fraction(3))

        analysis = service.analyze(graph)
        self.assertFalse(analysis.ok)
        self.assertTrue(analysis.issues['multiplier'])
        self.assertTrue(analysis.issues['x_independence'])
        self.assertEqual(analysis.issues['witness'], [])

    def test_broken_witness_detected(self):
        spec = self.fixture_service.get_fixture('shift2').spec
        service = create_service(spec)
        graph = service.build_persistence_graph()
        key = (spec.generator('b'), spec.generator('a'))
        edge = graph.edges[key]
        graph.edges[key] = replace(edge, witness=replace(edge.witness, s=5))

        issues = service.verify_witnesses(graph)
        self.assertEqual(len(issues), 1)
        self.assertEqual(issues[0].data, {'y': 'b', 'z': 'a'})

    def test_missing_transitive_edge_detected(self):
        """删除 (c, a) 后 (c, b)、(b, a) 无法复合"""
        spec = self.fixture_service.get_fixture('cascade3').spec
        service = create_service(spec)
        graph = service.build_persistence_graph()
        del graph.edges[(spec.generator('c'), spec.generator('a'))]

        issues = service.verify_transitivity(graph)
        self.assertTrue(issues)
        self.assertEqual(issues[0].data, {'x': 'c', 'y': 'b', 'z': 'a'})

    def test_x_independence_on_fixture(self):
        spec = self.fixture_service.get_fixture('cascade3').spec
        service = create_service(spec)
        graph = service.build_persistence_graph()
        self.assertEqual(service.verify_x_independence(graph, service.sample_elements()), [])

    def test_double_hits_both_directions(self):
        """
        图与轨迹双向一致：每条非自反边都能在轨迹中两次命中，
        样本轨迹中两次命中的目标也都有对应的边
        """
        for name in POSITIVE_FIXTURES:
            service = create_service(self.fixture_service.get_fixture(name).spec)
            graph = service.build_persistence_graph()
            self.assertEqual(service.verify_double_hits(graph), [], name)
            self.assertEqual(service.verify_x_independence(graph, service.sample_elements()), [], name)

    def test_edge_without_double_hit_detected(self):
        """swap 中 a·b^i = b^{i+1} 永远不落入 ⟨a⟩，伪造的边 (b, a) 被报告"""
        spec = self.fixture_service.get_fixture('swap').spec
        service = create_service(spec)
        graph = service.build_persistence_graph()
        a, b = spec.generator('a'), spec.generator('b')
        graph.edges[(b, a)] = PersistenceEdge(b, a, Fraction(1), Return(b, a, 1, 1, 2))

        issues = service.verify_double_hits(graph)
        self.assertEqual(len(issues), 1)
        self.assertEqual(issues[0].data, {'y': 'b', 'z': 'a', 't': 1})

        analysis = service.analyze(graph)
        self.assertEqual(len(analysis.issues['double_hit']), 1)
        self.assertTrue(analysis.issues['witness'])

    def test_minimum_horizon_analysis(self):
        """fold 在视界 2 下通过全部检查"""
        service = create_service(self.fixture_service.get_fixture('fold').spec, horizon=2)
        analysis = service.analyze()
        self.assertTrue(analysis.ok, [i.message for i in analysis.all_issues()])


if __name__ == '__main__':
    unittest.main()
