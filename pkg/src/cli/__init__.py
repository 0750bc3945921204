"""
半群线性增长证书 - CLI命令行接口模块
"""

__version__ = "1.0.0"
__author__ = "Semigroup Growth Team"
__description__ = "半群线性增长证书命令行接口模块"

# CLI模块将在运行时动态导入
__all__ = []
