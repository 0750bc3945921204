"""
半群线性增长证书 - 服务模块
"""

__version__ = "1.0.0"
__author__ = "Semigroup Growth Team"
__description__ = "半群线性增长证书服务模块"

from .persistence_service import PersistenceService, PersistenceGraph, PersistenceAnalysis, TrajectoryRecord
from .weight_service import WeightService, Condensation, WeightAssignment
from .growth_service import GrowthService, GrowthCertificate, BallRow
from .service_factory import ServiceFactory
from .certification_service import CertificationService, AnalysisResult
from .fixture_service import FixtureService, Fixture, FixtureExpectation

__all__ = [
    'PersistenceService',
    'PersistenceGraph',
    'PersistenceAnalysis',
    'TrajectoryRecord',
    'WeightService',
    'Condensation',
    'WeightAssignment',
    'GrowthService',
    'GrowthCertificate',
    'BallRow',
    'ServiceFactory',
    'CertificationService',
    'AnalysisResult',
    'FixtureService',
    'Fixture',
    'FixtureExpectation'
]
