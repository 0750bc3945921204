"""
证书服务 - 串联规格验证、持久性分析、权重构造与线性增长证书
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from ..core.exceptions import SpecRejected, StructureViolation
from ..core.semigroup import SemigroupSpec
from ..core.spec_validator import ValidationReport
from .growth_service import GrowthCertificate
from .persistence_service import PersistenceAnalysis, PersistenceGraph
from .service_factory import ServiceFactory
from .weight_service import Condensation, WeightAssignment


@dataclass
class AnalysisResult:
    """验证与持久性分析、权重构造的结果"""
    spec: SemigroupSpec
    validation: ValidationReport
    analysis: PersistenceAnalysis
    condensation: Condensation
    weights: WeightAssignment

    @property
    def graph(self) -> PersistenceGraph:
        return self.analysis.graph


class CertificationService:
    """证书服务"""

    def __init__(self, factory: Optional[ServiceFactory] = None):
        """
        初始化证书服务

        Args:
            factory: 服务工厂，携带运行配置
        """
        self.factory = factory or ServiceFactory()
        self.config = self.factory.config
        self.logger = logging.getLogger(__name__)

    def validate(self, spec: SemigroupSpec) -> ValidationReport:
        """在配置的窗口内运行结合律与单调性检查"""
        engine = self.factory.create_engine(spec)
        return self.factory.create_spec_validator(engine).validate(self.config.window)

    def require_accepted(self, spec: SemigroupSpec) -> ValidationReport:
        """
        验证关卡：规格未通过验证时不进入分析

        Raises:
            SpecRejected: 报告中存在反例
        """
        report = self.validate(spec)
        if not report.accepted:
            witness = report.first_witness()
            raise SpecRejected(f"规格未通过验证，第一个反例: {witness}", report=report)
        return report

    def analyze(self, spec: SemigroupSpec) -> AnalysisResult:
        """
        验证规格、构造持久性关系图、凝聚并合成权重

        Raises:
            SpecRejected: 规格未通过验证
            HorizonExhausted: 轨迹在视界内无法确认周期
            StructureViolation: 持久性结构或权重验证失败
        """
        result, _ = self._analyze(spec)
        return result

    def _analyze(self, spec: SemigroupSpec) -> Tuple[AnalysisResult, Dict[str, Any]]:
        validation = self.require_accepted(spec)
        services = self.factory.create_services_for_spec(spec)

        analysis = services['persistence_service'].analyze(horizon=self.config.horizon)
        if not analysis.ok:
            issues = analysis.all_issues()
            raise StructureViolation(f"持久性结构验证失败: {issues[0].message}", violations=issues)

        weight_service = services['weight_service']
        condensation = weight_service.condense(analysis.graph)
        weights = weight_service.synthesize_weights(condensation, analysis.graph)
        issues = weight_service.verify_weights(analysis.graph, weights)
        if issues:
            raise StructureViolation(f"权重验证失败: {issues[0].message}", violations=issues)

        self.logger.info(f"分析完成: 权重 {weights.by_name()}")
        return AnalysisResult(spec, validation, analysis, condensation, weights), services

    def certify(self, spec: SemigroupSpec, m_max: Optional[int] = None) -> GrowthCertificate:
        """
        运行完整流水线并生成线性增长证书

        Args:
            spec: 半群规格
            m_max: 词球枚举的最大字长，默认取运行配置

        Returns:
            增长证书

        Raises:
            CertificateViolation: 证书断言失败
        """
        result, services = self._analyze(spec)
        growth_service = services['growth_service']
        horizon = self.config.horizon

        K, details = growth_service.compute_K(result.weights, horizon)
        L = growth_service.compute_L(result.weights)
        return growth_service.certify(
            result.graph, result.condensation, result.weights, K, details, L,
            m_max or self.config.m_max, horizon)
