"""
自定义异常类 - 定义半群分析系统特定的异常类型
"""


class SemigroupError(Exception):
    """半群分析系统基础异常类"""

    # CLI 退出码，子类覆盖
    exit_code = 2

    def __init__(self, message: str, error_code: str = None, details: dict = None):
        """
        初始化异常

        Args:
            message: 错误消息
            error_code: 错误代码
            details: 错误详情
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.details = details or {}


class SpecFormatError(SemigroupError):
    """规格文件格式错误"""
    exit_code = 1


class ConfigError(SemigroupError):
    """配置相关异常"""
    exit_code = 1


class UnknownFixture(SemigroupError):
    """未知的示例半群"""
    exit_code = 1


class DepthExceeded(SemigroupError):
    """约化深度超过上限，通常意味着乘法表无效或上限不足"""
    exit_code = 2


class ExponentOverflow(SemigroupError):
    """指数超出64位有符号整数范围"""
    exit_code = 2


class SpecRejected(SemigroupError):
    """规格未通过验证"""
    exit_code = 2

    def __init__(self, message: str, report=None, **kwargs):
        super().__init__(message, **kwargs)
        self.report = report


class NegativeMultiplier(SemigroupError):
    """回归方程给出负的乘子 (s < t)"""
    exit_code = 2


class StructureViolation(SemigroupError):
    """结构性验证失败（x无关性、传递性、轨迹结构、权重不等式）"""
    exit_code = 2

    def __init__(self, message: str, violations: list = None, **kwargs):
        super().__init__(message, **kwargs)
        self.violations = violations or []


class IntraClassInconsistency(StructureViolation):
    """等价类内部乘子乘积不为1"""
    pass


class HorizonExhausted(SemigroupError):
    """在给定视界内无法确认周期性，需要增大 --horizon"""
    exit_code = 3


class CertificateViolation(SemigroupError):
    """线性增长证书断言失败"""
    exit_code = 4

    def __init__(self, message: str, m: int = None, witness=None, **kwargs):
        super().__init__(message, **kwargs)
        self.m = m
        self.witness = witness


class ResourceLimitExceeded(SemigroupError):
    """枚举规模超过资源上限"""
    exit_code = 5
