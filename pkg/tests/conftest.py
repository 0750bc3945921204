"""
测试公共配置：把仓库根目录加入 Python 路径，以 src.* 形式导入
"""

import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))
