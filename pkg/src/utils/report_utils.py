"""
报告序列化工具模块
规格文档的解析与导出，验证报告、分析报告和增长证书的 YAML 文档，以及词球计数表
"""

from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
import yaml

from ..core.exceptions import SpecFormatError
from ..core.semigroup import Element, SemigroupSpec
from .rational_utils import RationalUtils

FORMAT_VERSION = 1
SPEC_KEYS = ('format', 'generators', 'products')
# 示例半群文件额外允许的键
OPTIONAL_SPEC_KEYS = ('description', 'expected')
PRODUCT_KEYS = ('left', 'right', 'result_gen', 'result_exp')
BALL_COLUMNS = ['m', 'count', 'bound']


class ReportUtils:
    """报告序列化工具类"""

    # ------------------------------------------------------------------
    # 规格文档
    # ------------------------------------------------------------------

    @staticmethod
    def parse_spec_document(document: Any) -> SemigroupSpec:
        """
        把规格文档解析为 SemigroupSpec

        Args:
            document: yaml.safe_load 得到的对象

        Returns:
            半群规格

        Raises:
            SpecFormatError: 文档结构不合法
        """
        if not isinstance(document, dict):
            raise SpecFormatError("规格文档必须是映射")

        unknown = set(document) - set(SPEC_KEYS) - set(OPTIONAL_SPEC_KEYS)
        if unknown:
            raise SpecFormatError(f"规格文档包含未知字段: {sorted(unknown)}")
        missing = [key for key in SPEC_KEYS if key not in document]
        if missing:
            raise SpecFormatError(f"规格文档缺少字段: {missing}")
        if document['format'] != FORMAT_VERSION:
            raise SpecFormatError(f"不支持的格式版本: {document['format']!r}")

        generators = document['generators']
        if not isinstance(generators, list) or not generators:
            raise SpecFormatError("generators 必须是非空列表")
        if not all(isinstance(name, str) for name in generators):
            raise SpecFormatError(f"生成元名称必须是字符串: {generators}")

        products = document['products'] or []
        if not isinstance(products, list):
            raise SpecFormatError("products 必须是列表")

        records = []
        for index, entry in enumerate(products):
            if not isinstance(entry, dict) or set(entry) != set(PRODUCT_KEYS):
                raise SpecFormatError(f"第 {index + 1} 条乘积记录必须恰好包含 {list(PRODUCT_KEYS)}")
            names = [entry[key] for key in PRODUCT_KEYS[:3]]
            if not all(isinstance(name, str) for name in names):
                raise SpecFormatError(f"第 {index + 1} 条乘积记录的生成元名称必须是字符串: {names}")
            records.append(tuple(entry[key] for key in PRODUCT_KEYS))

        return SemigroupSpec.from_products(generators, records)

    @staticmethod
    def spec_to_document(spec: SemigroupSpec, description: Optional[str] = None) -> Dict[str, Any]:
        """导出规格文档，键顺序固定"""
        document: Dict[str, Any] = {'format': FORMAT_VERSION}
        if description:
            document['description'] = description
        document['generators'] = [gen.name for gen in spec.alphabet]
        document['products'] = [
            dict(zip(PRODUCT_KEYS, record)) for record in spec.product_records()
        ]
        return document

    # ------------------------------------------------------------------
    # 报告文档
    # ------------------------------------------------------------------

    @staticmethod
    def element_pair(element: Element) -> List[Any]:
        return [element.gen.name, element.exp]

    @staticmethod
    def validation_report_to_document(report, spec_digest: str) -> Dict[str, Any]:
        """验证报告文档"""
        pair = ReportUtils.element_pair
        return {
            'format': FORMAT_VERSION,
            'spec_digest': spec_digest,
            'window': report.window,
            'depth_bound': report.depth_bound,
            'accepted': report.accepted,
            'associativity_violations': [
                {'u': pair(v.u), 'v': pair(v.v), 'w': pair(v.w), 'left': pair(v.left), 'right': pair(v.right)}
                for v in report.associativity_violations
            ],
            'monotonicity_violations': [
                {'x': v.x.name, 'y': v.y.name, 'i': v.i, 'j': v.j, 'k': v.k}
                for v in report.monotonicity_violations
            ],
            'depth_failures': [
                {'check': f.check, 'operands': [pair(o) for o in f.operands], 'reason': f.reason}
                for f in report.depth_failures
            ],
        }

    @staticmethod
    def edges_to_document(graph) -> List[Dict[str, Any]]:
        rows = []
        for edge in graph.edge_list():
            m_num, m_den = RationalUtils.to_pair(edge.M)
            rows.append({
                'y': edge.y.name,
                'z': edge.z.name,
                'm_num': m_num,
                'm_den': m_den,
                'witness': {'t': edge.witness.t, 'q': edge.witness.q, 's': edge.witness.s},
            })
        return rows

    @staticmethod
    def condensation_to_document(condensation) -> Dict[str, Any]:
        names = condensation.class_names()
        return {
            'classes': names,
            'sinks': [names[i] for i in condensation.sinks],
            'order': [names[i] for i in condensation.topo_order],
        }

    @staticmethod
    def analysis_to_document(result, spec_digest: str) -> Dict[str, Any]:
        """分析报告文档：持久性边、凝聚结构与权重"""
        document = {
            'format': FORMAT_VERSION,
            'spec_digest': spec_digest,
            'generators': [gen.name for gen in result.spec.alphabet],
            'edges': ReportUtils.edges_to_document(result.graph),
        }
        document.update(ReportUtils.condensation_to_document(result.condensation))
        document['weights'] = result.weights.by_name()
        return document

    @staticmethod
    def certificate_to_document(certificate, spec_digest: str) -> Dict[str, Any]:
        """增长证书文档；不包含时间戳和线程数，相同输入得到相同字节"""
        L_num, L_den = RationalUtils.to_pair(certificate.L)
        bound_num, bound_den = RationalUtils.to_pair(certificate.bound_coefficient)
        details = certificate.K_details
        document = {
            'format': FORMAT_VERSION,
            'spec_digest': spec_digest,
            'generators': [gen.name for gen in certificate.graph.alphabet],
            'edges': ReportUtils.edges_to_document(certificate.graph),
        }
        document.update(ReportUtils.condensation_to_document(certificate.condensation))
        document.update({
            'weights': certificate.d.by_name(),
            'K': certificate.K,
            'K_details': {
                'max_generator_weight': details.max_generator_weight,
                'defects': [{'x': x.name, 'y': y.name, 'max_defect': value}
                            for (x, y), value in details.defects.items()],
                'target_bounds': [{'y': y.name, 'z': z.name, 'bound': value}
                                  for (y, z), value in details.target_bounds.items()],
            },
            'L_num': L_num,
            'L_den': L_den,
            'bound_num': bound_num,
            'bound_den': bound_den,
            'horizon': certificate.horizon_used,
            'balls': [{'m': row.m, 'count': row.count, 'bound': row.bound} for row in certificate.ball_counts],
            'verdict': certificate.verdict,
        })
        return document

    @staticmethod
    def dump_yaml(document: Dict[str, Any]) -> str:
        return yaml.safe_dump(document, sort_keys=False, allow_unicode=True, default_flow_style=False)

    # ------------------------------------------------------------------
    # 计数表
    # ------------------------------------------------------------------

    @staticmethod
    def ball_table(certificate) -> pd.DataFrame:
        """证书的词球表，列为 m,count,bound"""
        return pd.DataFrame(
            [[row.m, row.count, row.bound] for row in certificate.ball_counts],
            columns=BALL_COLUMNS,
        )

    @staticmethod
    def growth_table(counts: Sequence[int], increments: Sequence[int]) -> pd.DataFrame:
        """纯枚举模式的计数表，列为 m,count,increment；最后一行没有增量"""
        rows = []
        for m, count in enumerate(counts, start=1):
            increment = increments[m - 1] if m - 1 < len(increments) else None
            rows.append([m, count, increment])
        frame = pd.DataFrame(rows, columns=['m', 'count', 'increment'])
        frame['increment'] = frame['increment'].astype('Int64')
        return frame

    @staticmethod
    def table_to_csv(frame: pd.DataFrame) -> str:
        return frame.to_csv(index=False, lineterminator='\n')
