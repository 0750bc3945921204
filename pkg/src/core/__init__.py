"""
半群线性增长证书 - 核心模块
"""

__version__ = "1.0.0"
__author__ = "Semigroup Growth Team"
__description__ = "半群线性增长证书核心模块"

# 导入核心类
from .semigroup import GeneratorId, Element, SemigroupSpec
from .engine import MultiplicationEngine
from .spec_validator import SpecValidator, ValidationReport
from .config_manager import ConfigManager, RunConfig
from .config_validator import ConfigValidator

# 导入异常类
from .exceptions import (
    SemigroupError, SpecFormatError, ConfigError, UnknownFixture,
    DepthExceeded, ExponentOverflow, SpecRejected, NegativeMultiplier,
    StructureViolation, IntraClassInconsistency, HorizonExhausted,
    CertificateViolation, ResourceLimitExceeded
)

__all__ = [
    'GeneratorId',
    'Element',
    'SemigroupSpec',
    'MultiplicationEngine',
    'SpecValidator',
    'ValidationReport',
    'ConfigManager',
    'RunConfig',
    'ConfigValidator',
    'SemigroupError',
    'SpecFormatError',
    'ConfigError',
    'UnknownFixture',
    'DepthExceeded',
    'ExponentOverflow',
    'SpecRejected',
    'NegativeMultiplier',
    'StructureViolation',
    'IntraClassInconsistency',
    'HorizonExhausted',
    'CertificateViolation',
    'ResourceLimitExceeded'
]
