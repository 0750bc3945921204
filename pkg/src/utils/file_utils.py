"""
文件操作工具模块
规格文件读取、内容摘要与报告写出
"""

import hashlib
import logging
from pathlib import Path
from typing import Any, Tuple, Union

import yaml

from ..core.exceptions import SpecFormatError
from ..core.semigroup import SemigroupSpec
from .report_utils import ReportUtils

logger = logging.getLogger(__name__)


class FileUtils:
    """文件操作工具类"""

    @staticmethod
    def ensure_directory_exists(directory_path: Union[str, Path]) -> None:
        """
        确保目录存在，如果不存在则创建

        Args:
            directory_path: 目录路径
        """
        Path(directory_path).mkdir(parents=True, exist_ok=True)

    @staticmethod
    def safe_write_file(file_path: Union[str, Path], content: str, encoding: str = 'utf-8') -> None:
        """
        写入文本文件，换行符固定为 \\n

        Args:
            file_path: 文件路径
            content: 文件内容
            encoding: 编码格式
        """
        file_path = Path(file_path)
        FileUtils.ensure_directory_exists(file_path.parent)
        with open(file_path, 'w', encoding=encoding, newline='\n') as f:
            f.write(content)
        logger.debug(f"文件写入成功: {file_path}")

    @staticmethod
    def read_bytes(file_path: Union[str, Path]) -> bytes:
        """
        读取文件原始字节

        Raises:
            SpecFormatError: 文件不存在或不可读
        """
        file_path = Path(file_path)
        try:
            return file_path.read_bytes()
        except OSError as e:
            raise SpecFormatError(f"无法读取规格文件: {file_path}: {e}") from e

    @staticmethod
    def digest(content: bytes) -> str:
        """规格文件内容摘要，形如 sha256:<hex>"""
        return f"sha256:{hashlib.sha256(content).hexdigest()}"

    @staticmethod
    def load_yaml_document(content: bytes, source: str = '<memory>') -> Any:
        try:
            return yaml.safe_load(content.decode('utf-8'))
        except (UnicodeDecodeError, yaml.YAMLError) as e:
            raise SpecFormatError(f"规格文件不是合法的 YAML: {source}: {e}") from e

    @staticmethod
    def load_spec(file_path: Union[str, Path]) -> Tuple[SemigroupSpec, str, Any]:
        """
        读取并解析规格文件

        Args:
            file_path: 规格文件路径

        Returns:
            (规格, 内容摘要, 原始文档)

        Raises:
            SpecFormatError: 文件不可读或格式不合法
        """
        content = FileUtils.read_bytes(file_path)
        document = FileUtils.load_yaml_document(content, str(file_path))
        spec = ReportUtils.parse_spec_document(document)
        logger.debug(f"规格加载成功: {file_path}，{len(spec.alphabet)} 个生成元")
        return spec, FileUtils.digest(content), document
