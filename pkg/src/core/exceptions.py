"""
异常定义模块
"""


class MultihopError(Exception):
    """所有领域异常的基类"""


class DomainError(MultihopError, ValueError):
    """输入超出定义域（负 SNR、越界节点、非法 δ_t 等）"""


class SingularityError(DomainError):
    """零距离导致信道增益无穷大"""


class NumericalOverflowError(MultihopError, OverflowError):
    """对数域计算后结果仍超出浮点范围"""


class NumericalError(MultihopError, ArithmeticError):
    """数值异常（递推出现负功率、非有限中间值）"""
