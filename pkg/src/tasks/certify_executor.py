"""
增长证书任务执行器 - 运行完整流水线，写出证书文档和词球计数表
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.config_manager import RunConfig
from ..core.task_executor import TaskExecutor
from ..services.service_factory import ServiceFactory
from ..utils.file_utils import FileUtils
from ..utils.report_utils import ReportUtils


class CertifyExecutor(TaskExecutor):
    """增长证书任务执行器"""

    task_name = 'certify'

    def __init__(self, spec_path: Union[str, Path], config: Optional[RunConfig] = None,
                 output: Optional[str] = None, csv_path: Optional[str] = None,
                 factory: Optional[ServiceFactory] = None):
        """
        初始化增长证书任务执行器

        Args:
            spec_path: 规格文件路径
            config: 运行配置
            output: 证书输出路径，"-" 表示标准输出
            csv_path: 词球计数表 CSV 路径
            factory: 服务工厂
        """
        super().__init__(config, factory)
        self.spec_path = Path(spec_path)
        self.output = output
        self.csv_path = csv_path

    def _execute_task(self) -> Dict[str, Any]:
        spec, digest, _ = FileUtils.load_spec(self.spec_path)
        certificate = self.certification_service.certify(spec, self.config.m_max)

        document = ReportUtils.certificate_to_document(certificate, digest)
        text = ReportUtils.dump_yaml(document)
        output_file = self._save_output(text, self.output)

        csv_text = ReportUtils.table_to_csv(ReportUtils.ball_table(certificate))
        csv_file = self._save_output(csv_text, self.csv_path)

        return {
            'success': True,
            'exit_code': 0,
            'spec': spec,
            'spec_digest': digest,
            'certificate': certificate,
            'document': document,
            'text': text,
            'csv_text': csv_text,
            'output_file': output_file,
            'csv_file': csv_file,
        }
