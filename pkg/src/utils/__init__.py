"""
通用工具模块
提供项目中常用的工具函数
"""

from .file_utils import FileUtils
from .logging_utils import LoggingUtils
from .rational_utils import RationalUtils
from .report_utils import ReportUtils

__all__ = [
    'FileUtils',
    'LoggingUtils',
    'RationalUtils',
    'ReportUtils'
]
