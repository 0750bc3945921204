"""
半群线性增长证书 - CLI命令行接口

退出码：0 成功，1 文件格式错误，2 规格或结构无效，3 视界不足，4 证书断言失败，5 资源上限
"""

import click
import sys
from pathlib import Path

# 添加src目录到Python路径
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.core.config_manager import ConfigManager
from src.core.exceptions import (
    CertificateViolation, ConfigError, HorizonExhausted, SemigroupError, SpecRejected, StructureViolation
)
from src.core.task_executor import STDOUT_PATH
from src.services.fixture_service import (
    DEFAULT_SEARCH_M_MAX, DEFAULT_SEARCH_WINDOW, FIXTURE_NAMES, FixtureService
)
from src.tasks import AnalyzeExecutor, CertifyExecutor, GrowthExecutor, SearchExecutor, ValidateExecutor
from src.utils.logging_utils import LoggingUtils
from src.utils.rational_utils import RationalUtils

# 人类可读输出中最多列出的反例数
MAX_LISTED = 5


def analysis_options(func):
    """分析类命令共用的边界参数，未指定时取配置文件的值"""
    options = [
        click.option('--window', type=int, default=None, help='结合律与单调性检查的指数窗口'),
        click.option('--depth-bound', type=int, default=None, help='每个单字母步的最大约化深度'),
        click.option('--horizon', type=int, default=None, help='轨迹视界'),
        click.option('--t-max', type=int, default=None, help='回归搜索中 t 的上限'),
        click.option('--q-max', type=int, default=None, help='回归搜索中 q 的上限'),
        click.option('--m-max', type=int, default=None, help='词球枚举的最大字长'),
        click.option('--threads', type=int, default=None, help='工作线程数'),
        click.option('--frontier-cap', type=int, default=None, help='前沿与词球的元素数上限'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _build_config(ctx, **overrides):
    try:
        return ctx.obj['config_manager'].build_run_config(**overrides)
    except ConfigError as e:
        click.echo(f"❌ 运行配置无效: {e.message}", err=True)
        sys.exit(e.exit_code)


def _resolve_spec(spec: str) -> Path:
    return FixtureService().resolve_spec_path(spec)


def _report_error(error: SemigroupError):
    """把异常转成人类可读的错误输出"""
    click.echo(f"❌ {error.message}", err=True)
    if isinstance(error, SpecRejected) and error.report is not None:
        _echo_violations(error.report, err=True)
    elif isinstance(error, HorizonExhausted):
        click.echo("💡 请增大 --horizon 后重试", err=True)
    elif isinstance(error, CertificateViolation):
        click.echo(f"📍 m = {error.m}，见证: {error.witness}", err=True)
    elif isinstance(error, StructureViolation):
        for violation in error.violations[:MAX_LISTED]:
            click.echo(f"  - [{violation.check}] {violation.message}", err=True)


def _run_executor(executor):
    try:
        return executor.execute()
    except SemigroupError as e:
        _report_error(e)
        sys.exit(e.exit_code)


def _echo_violations(report, err: bool = False):
    for v in report.associativity_violations[:MAX_LISTED]:
        click.echo(f"  ❌ 结合律: ({v.u}, {v.v}, {v.w}) 左 {v.left}，右 {v.right}", err=err)
    for v in report.monotonicity_violations[:MAX_LISTED]:
        click.echo(f"  ❌ 单调性: {v.x}^{v.i}·{v.y}^{v.j} = {v.x}^{v.k}", err=err)
    for f in report.depth_failures[:MAX_LISTED]:
        click.echo(f"  ❌ 约化失败 [{f.check}]: {', '.join(str(o) for o in f.operands)}: {f.reason}", err=err)


def _echo_edges(graph):
    click.echo("🔗 持久性边:")
    for edge in graph.edge_list():
        w = edge.witness
        click.echo(f"  {edge.y} → {edge.z}: M = {RationalUtils.format(edge.M)}"
                   f"  见证 {w.z}^{w.t}·{w.y}^{w.q} = {w.z}^{w.s}")


def _echo_condensation(condensation, weights):
    names = condensation.class_names()
    click.echo(f"🧩 等价类: {names}")
    click.echo(f"🏁 汇类: {[names[i] for i in condensation.sinks]}")
    click.echo(f"⚖️ 权重: {weights.by_name()}")


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='启用详细日志')
@click.option('--config', '-c', default='./config', help='配置文件目录路径')
@click.option('--log-file', default=None, help='日志文件路径')
@click.pass_context
def cli(ctx, verbose, config, log_file):
    """半群线性增长证书 - 命令行工具"""
    ctx.ensure_object(dict)
    ctx.obj['config_dir'] = config
    ctx.obj['verbose'] = verbose

    try:
        config_manager = ConfigManager(config)
    except ConfigError as e:
        click.echo(f"❌ 配置加载失败: {e.message}", err=True)
        sys.exit(e.exit_code)
    ctx.obj['config_manager'] = config_manager

    level = 'DEBUG' if verbose else config_manager.get_logging_config().get('level', 'WARNING')
    LoggingUtils.setup_logging(level, log_file)


@cli.command()
@click.argument('spec')
@analysis_options
@click.option('--output', '-o', default=None, help='验证报告输出路径，"-" 表示标准输出')
@click.pass_context
def validate(ctx, spec, output, **bounds):
    """验证规格：乘法表完整性、结合律窗口与指数单调性"""
    config = _build_config(ctx, **bounds)
    result = _run_executor(ValidateExecutor(_resolve_spec(spec), config, output))

    if output == STDOUT_PATH:
        click.echo(result['text'], nl=False)
    elif result['success']:
        click.echo(f"✅ 规格通过验证（窗口 {config.window}，深度上限 {config.depth_bound}）")
    else:
        click.echo("❌ 规格未通过验证:")
        _echo_violations(result['report'])
    if result.get('output_file'):
        click.echo(f"📄 报告已写入: {result['output_file']}")
    sys.exit(result['exit_code'])


@cli.command()
@click.argument('spec')
@analysis_options
@click.option('--output', '-o', default=None, help='分析报告输出路径，"-" 表示标准输出')
@click.pass_context
def analyze(ctx, spec, output, **bounds):
    """持久性分析：持久性边、乘子、凝聚结构与权重"""
    config = _build_config(ctx, **bounds)
    result = _run_executor(AnalyzeExecutor(_resolve_spec(spec), config, output))

    if output == STDOUT_PATH:
        click.echo(result['text'], nl=False)
        return
    analysis = result['analysis']
    _echo_edges(analysis.graph)
    _echo_condensation(analysis.condensation, analysis.weights)
    if result.get('output_file'):
        click.echo(f"📄 报告已写入: {result['output_file']}")


@cli.command()
@click.argument('spec')
@analysis_options
@click.option('--output', '-o', default=None, help='证书输出路径，"-" 表示标准输出')
@click.option('--csv', 'csv_path', default=None, help='词球计数表 CSV 路径，"-" 表示标准输出')
@click.pass_context
def certify(ctx, spec, output, csv_path, **bounds):
    """运行完整流水线，生成线性增长证书"""
    config = _build_config(ctx, **bounds)
    result = _run_executor(CertifyExecutor(_resolve_spec(spec), config, output, csv_path))

    if output == STDOUT_PATH:
        click.echo(result['text'], nl=False)
    if csv_path == STDOUT_PATH:
        click.echo(result['csv_text'], nl=False)
    if STDOUT_PATH in (output, csv_path):
        return
    certificate = result['certificate']
    _echo_edges(certificate.graph)
    _echo_condensation(certificate.condensation, certificate.d)
    click.echo(f"📐 K = {certificate.K}")
    click.echo(f"📐 L = {RationalUtils.format(certificate.L)}")
    click.echo(f"📐 L·K = {RationalUtils.format(certificate.bound_coefficient)}")
    click.echo(f"\n{'m':>4} {'|J(m)|':>10} {'⌈L·K·m⌉':>10}")
    for row in certificate.ball_counts:
        click.echo(f"{row.m:>4} {row.count:>10} {row.bound:>10}")
    click.echo(f"\n✅ {certificate.verdict}")
    for key in ('output_file', 'csv_file'):
        if result.get(key):
            click.echo(f"📄 已写入: {result[key]}")


@cli.command()
@click.argument('spec')
@click.option('--max-len', type=int, default=None, help='最大字长')
@click.option('--csv', 'csv_path', default=None, help='计数表 CSV 路径')
@click.option('--threads', type=int, default=None, help='工作线程数')
@click.option('--frontier-cap', type=int, default=None, help='前沿与词球的元素数上限')
@click.option('--window', type=int, default=None, help='验证窗口')
@click.option('--depth-bound', type=int, default=None, help='每个单字母步的最大约化深度')
@click.pass_context
def growth(ctx, spec, max_len, csv_path, **bounds):
    """只做广度优先枚举，输出 |J(1)|..|J(max_len)|"""
    config = _build_config(ctx, **bounds)
    if max_len is not None and max_len < 1:
        click.echo(f"❌ --max-len 必须为正整数: {max_len}", err=True)
        sys.exit(ConfigError.exit_code)
    result = _run_executor(GrowthExecutor(_resolve_spec(spec), config, max_len, csv_path))

    if csv_path == STDOUT_PATH:
        click.echo(result['csv_text'], nl=False)
        return
    click.echo(",".join(str(count) for count in result['counts']))
    if result['increments']:
        click.echo(f"📈 增量: {','.join(str(i) for i in result['increments'])}")
    if result.get('csv_file'):
        click.echo(f"📄 已写入: {result['csv_file']}")


@cli.command()
@click.option('--size', 'alphabet_size', type=click.IntRange(2, 3), default=2, help='生成元个数')
@click.option('--max-exp', 'max_result_exp', type=click.IntRange(1, 3), default=2, help='乘积指数上限')
@click.option('--window', type=int, default=DEFAULT_SEARCH_WINDOW, help='结合律窗口')
@click.option('--m-max', type=int, default=DEFAULT_SEARCH_M_MAX, help='幸存者证书的最大字长')
@click.option('--threads', type=int, default=None, help='工作线程数')
@click.option('--output', '-o', default=None, help='结果输出路径，"-" 表示标准输出')
@click.pass_context
def search(ctx, alphabet_size, max_result_exp, window, m_max, threads, output):
    """穷举小乘法表，输出按重命名和反转去重后的幸存者"""
    config = _build_config(ctx, threads=threads, window=window)
    executor = SearchExecutor(alphabet_size, max_result_exp, config, window, m_max, output)
    result = _run_executor(executor)

    if output == STDOUT_PATH:
        click.echo(result['text'], nl=False)
        return
    survivors = result['survivors']
    click.echo(f"🔍 搜索完成: {len(survivors)} 个幸存者")
    for survivor in survivors:
        products = ", ".join(f"{l}{r}={g}^{e}" for l, r, g, e in survivor.spec.product_records())
        if survivor.certified:
            summary = survivor.summary
            click.echo(f"  ✅ {products}  权重 {summary['weights']}  K={summary['K']}  L={summary['L']}")
        else:
            click.echo(f"  ⚠️ {products}  {survivor.error}")
    if result.get('output_file'):
        click.echo(f"📄 已写入: {result['output_file']}")


@cli.group()
def fixtures():
    """示例半群"""
    pass


@fixtures.command('list')
def list_fixtures():
    """列出全部示例半群"""
    try:
        entries = FixtureService().list_fixtures()
    except SemigroupError as e:
        _report_error(e)
        sys.exit(e.exit_code)
    click.echo("📋 示例半群:")
    for fixture in entries:
        status = "✅" if fixture.expected is None or fixture.expected.accepted else "❌"
        click.echo(f"  {status} {fixture.name:<10} {fixture.description}")


@fixtures.command('show')
@click.argument('name', type=click.Choice(FIXTURE_NAMES))
def show_fixture(name):
    """显示示例半群的规格文件"""
    try:
        fixture = FixtureService().get_fixture(name)
    except SemigroupError as e:
        _report_error(e)
        sys.exit(e.exit_code)
    click.echo(f"# {fixture.path}")
    click.echo(fixture.path.read_text(encoding='utf-8'), nl=False)


if __name__ == '__main__':
    cli()
