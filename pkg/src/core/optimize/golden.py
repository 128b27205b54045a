"""
黄金分割搜索（单峰一维最小化）
"""

import math
from collections.abc import Callable

from ..exceptions import DomainError

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_search(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-6
) -> tuple[float, float]:
    """在 [a, b] 上最小化单峰函数 f，返回 (x, f(x))，区间宽度收缩到 tol 以内"""
    if not tol > 0:
        raise DomainError(f"容差必须 > 0，实际为 {tol}")
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = (a + b) / 2
        return x, f(x)

    steps = math.ceil(math.log(tol / h) / math.log(INV_PHI))
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        h *= INV_PHI
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI * h
            yd = f(d)

    return (c, yc) if yc < yd else (d, yd)
