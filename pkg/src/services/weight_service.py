"""
权重服务 - 持久性关系图的强连通分量凝聚、汇类识别与权重函数构造

构造得到的正整数权重 d 满足：对每条持久性边 (y, z) 有 d(y) ≥ d(z)·M(y, z)，
在同一等价类内等号成立。
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

import networkx as nx

from ..core.exceptions import IntraClassInconsistency
from ..core.semigroup import GeneratorId
from ..utils.rational_utils import RationalUtils
from .persistence_service import PersistenceGraph, StructureIssue


@dataclass(frozen=True)
class Condensation:
    """互相可达等价类及其凝聚 DAG"""
    classes: Tuple[Tuple[GeneratorId, ...], ...]
    dag_edges: Tuple[Tuple[int, int], ...]
    sinks: Tuple[int, ...]
    topo_order: Tuple[int, ...]
    class_of: Mapping[GeneratorId, int] = field(compare=False)

    def is_sink(self, class_index: int) -> bool:
        return class_index in self.sinks

    def class_names(self) -> List[List[str]]:
        return [[g.name for g in members] for members in self.classes]


@dataclass(frozen=True)
class WeightAssignment:
    """生成元上的正整数权重"""
    d: Mapping[GeneratorId, int]

    def __getitem__(self, gen: GeneratorId) -> int:
        return self.d[gen]

    def by_name(self) -> Dict[str, int]:
        return {gen.name: weight for gen, weight in sorted(self.d.items())}

    def scaled(self, members, factor: int) -> 'WeightAssignment':
        """把给定生成元的权重乘以 factor，其余不变"""
        members = set(members)
        return WeightAssignment({g: w * factor if g in members else w for g, w in self.d.items()})


class WeightService:
    """权重服务"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def condense(self, graph: PersistenceGraph) -> Condensation:
        """
        计算强连通分量、凝聚 DAG、汇类和逆拓扑序

        Args:
            graph: 已通过传递性验证的持久性关系图

        Returns:
            凝聚结果

        Raises:
            IntraClassInconsistency: 某个类内 M(x,y)·M(y,x) ≠ 1
        """
        digraph = nx.DiGraph()
        digraph.add_nodes_from(graph.alphabet)
        digraph.add_edges_from((e.y, e.z) for e in graph.edge_list() if e.y != e.z)

        classes = tuple(sorted(tuple(sorted(component))
                               for component in nx.strongly_connected_components(digraph)))
        class_of = {gen: index for index, members in enumerate(classes) for gen in members}

        dag = nx.DiGraph()
        dag.add_nodes_from(range(len(classes)))
        dag.add_edges_from({(class_of[y], class_of[z]) for y, z in digraph.edges
                            if class_of[y] != class_of[z]})

        sinks = tuple(i for i in sorted(dag.nodes) if dag.out_degree(i) == 0)
        topo_order = tuple(reversed(list(nx.lexicographical_topological_sort(dag))))

        self._check_intra_class(graph, classes)

        condensation = Condensation(classes, tuple(sorted(dag.edges)), sinks, topo_order, class_of)
        self.logger.info(f"凝聚完成: {len(classes)} 个等价类，汇类 {[classes[i][0].name for i in sinks]}")
        return condensation

    def _check_intra_class(self, graph: PersistenceGraph, classes):
        violations = []
        for members in classes:
            for x in members:
                for y in members:
                    if x >= y:
                        continue
                    if not (graph.has_edge(x, y) and graph.has_edge(y, x)):
                        violations.append(StructureIssue(
                            'intra_class', f"{x} 与 {y} 同类但缺少直接边", {'x': x.name, 'y': y.name}))
                        continue
                    product = graph.multiplier(x, y) * graph.multiplier(y, x)
                    if product != 1:
                        violations.append(StructureIssue(
                            'intra_class', f"M({x},{y})·M({y},{x}) = {product} ≠ 1",
                            {'x': x.name, 'y': y.name, 'product': str(product)}))
        if violations:
            raise IntraClassInconsistency(
                f"等价类内部乘子不一致: {violations[0].message}", violations=violations)

    def synthesize_weights(self, cond: Condensation, graph: PersistenceGraph) -> WeightAssignment:
        """
        按逆拓扑序（汇类优先）构造权重

        类内以字母表顺序最小的成员 a 为基点取 d(b) = M(b, a)，乘以分母最小公倍数化为整数；
        非汇类再整体乘以最小的 λ ≥ 1，使指向已处理类的每条边满足不等式。

        Returns:
            正整数权重
        """
        d: Dict[GeneratorId, int] = {}
        for class_index in cond.topo_order:
            members = cond.classes[class_index]
            base = members[0]
            raw = {b: graph.multiplier(b, base) if b != base else Fraction(1) for b in members}
            common = RationalUtils.lcm_of_denominators(raw.values())
            integral = {b: int(raw[b] * common) for b in members}

            scale = 1
            for y in members:
                for z in graph.successors(y):
                    if cond.class_of[z] == class_index:
                        continue
                    need = RationalUtils.ceil(d[z] * graph.multiplier(y, z) / integral[y])
                    scale = max(scale, need)

            for b in members:
                d[b] = integral[b] * scale
            self.logger.debug(f"类 {[g.name for g in members]}: 基点 {base}，分母公倍数 {common}，缩放 {scale}")

        return WeightAssignment(dict(sorted(d.items())))

    def verify_weights(self, graph: PersistenceGraph, weights: WeightAssignment) -> List[StructureIssue]:
        """
        在每条边上精确复核 d(y) ≥ d(z)·M(y,z)，互相可达的对上复核等式

        Returns:
            问题列表，空列表表示通过
        """
        issues = []
        for gen in graph.alphabet:
            value = weights.d.get(gen)
            if not isinstance(value, int) or value < 1:
                issues.append(StructureIssue('weight', f"d({gen}) 不是正整数: {value!r}", {'gen': gen.name}))
        if issues:
            return issues

        for edge in graph.edge_list():
            y, z = edge.y, edge.z
            bound = weights[z] * edge.M
            data = {'y': y.name, 'z': z.name, 'd_y': weights[y], 'bound': str(bound)}
            if weights[y] < bound:
                issues.append(StructureIssue('weight', f"边 ({y},{z}): d({y})={weights[y]} < d({z})·M={bound}", data))
            elif graph.has_edge(z, y) and weights[y] != bound:
                issues.append(StructureIssue('weight', f"同类边 ({y},{z}): d({y})={weights[y]} ≠ d({z})·M={bound}", data))
        return issues
