"""
半群线性增长证书 - 任务执行器模块
"""

__version__ = "1.0.0"
__author__ = "Semigroup Growth Team"
__description__ = "半群线性增长证书任务执行器模块"

from .validate_executor import ValidateExecutor
from .analyze_executor import AnalyzeExecutor
from .certify_executor import CertifyExecutor
from .growth_executor import GrowthExecutor
from .search_executor import SearchExecutor

__all__ = [
    'ValidateExecutor',
    'AnalyzeExecutor',
    'CertifyExecutor',
    'GrowthExecutor',
    'SearchExecutor'
]
