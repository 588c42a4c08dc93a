class LindMahlerError(Exception):
    """엔진 공통 예외"""


class GroupError(LindMahlerError):
    """잘못된 군 사양"""


class PolynomialParseError(LindMahlerError):
    """다항식 구문 오류 (위치 포함)"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (위치 {position})")
        self.position = position


class NotPGroupError(LindMahlerError):
    """p-군이 아닌 입력"""


class ResourceLimitError(LindMahlerError):
    """설정된 자원 한도 초과"""


class NonIntegralError(LindMahlerError):
    """역변환 결과가 정수가 아님"""


class VerificationError(LindMahlerError):
    """검증 실패 (구현 버그를 의미)"""
