from typing import Union

from sympy.polys.domains import ZZ_I
from sympy.polys.domains.gaussiandomains import GaussianInteger

# 가우스 정수는 sympy 의 ZZ_I 원소를 그대로 사용
I = ZZ_I(0, 1)


def gaussian(value: Union[GaussianInteger, int]) -> GaussianInteger:
    return ZZ_I.convert(value)


def gaussian_norm(value: GaussianInteger) -> int:
    return int(value.x) ** 2 + int(value.y) ** 2


def format_gaussian(value: GaussianInteger) -> str:
    """1+2i, 3-i, -2i, 5 형식"""
    re, im = int(value.x), int(value.y)
    if not im:
        return str(re)
    imag = {1: "i", -1: "-i"}.get(im, f"{im}i")
    if not re:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{re}{sign}{imag}"
